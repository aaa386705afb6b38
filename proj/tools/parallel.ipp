#pragma once

#include <atomic>
#include <exception>
#include <thread>

namespace sbase::cli {

template <class T>
std::vector<T> parallel_map(size_t count, int jobs, const std::function<T(size_t)>& f) {
  std::vector<std::optional<T>> out(count);
  std::vector<std::exception_ptr> err(count);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next++) < count;) {
      try {
        out[i] = f(i);
      } catch (...) {
        err[i] = std::current_exception();
      }
    }
  };
  size_t k = std::max<size_t>(1, std::min<size_t>(jobs < 1 ? 1 : jobs, count));
  std::vector<std::thread> pool;
  for (size_t t = 1; t < k; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<T> res;
  res.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    if (err[i]) std::rethrow_exception(err[i]);
    res.push_back(std::move(*out[i]));
  }
  return res;
}

}  // namespace sbase::cli
