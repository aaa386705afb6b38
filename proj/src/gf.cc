#include "sbase/gf.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace sbase {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void split_prime_power(uint32_t q, uint32_t& p, uint32_t& f) {
  if (q < 2) throw FieldError("field order must be a prime power, got " + std::to_string(q));
  uint32_t d = 2;
  while (q % d) ++d;
  p = d;
  f = 0;
  uint32_t r = q;
  while (r % p == 0) {
    r /= p;
    ++f;
  }
  if (r != 1) throw FieldError("field order must be a prime power, got " + std::to_string(q));
}

std::vector<uint32_t> conway_polynomial(uint32_t p, uint32_t f) {
  static const std::map<std::pair<uint32_t, uint32_t>, std::vector<uint32_t>> table = {
      {{2, 2}, {1, 1, 1}},       {{2, 3}, {1, 1, 0, 1}},  {{3, 2}, {2, 2, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}}, {{5, 2}, {2, 4, 1}},     {{3, 3}, {1, 2, 0, 1}},
      {{7, 2}, {3, 6, 1}},       {{3, 4}, {2, 0, 0, 2, 1}}, {{11, 2}, {2, 7, 1}},
      {{13, 2}, {2, 12, 1}},
  };
  auto it = table.find({p, f});
  if (it == table.end()) return {};
  return it->second;
}

namespace {

// order of x modulo a monic polynomial, 0 if x is not a unit or order exceeds q-1
uint64_t order_of_x(uint32_t p, const std::vector<uint32_t>& m) {
  const size_t f = m.size() - 1;
  if (m[0] % p == 0) return 0;
  uint64_t q = 1;
  for (size_t i = 0; i < f; ++i) q *= p;
  std::vector<uint32_t> cur(f, 0);
  cur[0] = 1;
  for (uint64_t k = 1; k <= q - 1; ++k) {
    uint32_t top = cur[f - 1];
    for (size_t i = f - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (size_t i = 0; i < f; ++i)
      cur[i] = static_cast<uint32_t>((cur[i] + static_cast<uint64_t>(p - m[i] % p) * top) % p);
    bool one = cur[0] == 1;
    for (size_t i = 1; i < f && one; ++i) one = cur[i] == 0;
    if (one) return k;
  }
  return 0;
}

}  // namespace

std::vector<uint32_t> least_primitive_polynomial(uint32_t p, uint32_t f) {
  if (f == 1) return {0, 1};
  // alpha_i = (-1)^i c_{f-i}; enumerate alpha lexicographically
  uint64_t q = 1;
  for (uint32_t i = 0; i < f; ++i) q *= p;
  std::vector<uint32_t> alpha(f + 1, 0);
  for (uint64_t idx = 0; idx < q; ++idx) {
    uint64_t r = idx;
    for (uint32_t i = f; i >= 1; --i) {
      alpha[i] = static_cast<uint32_t>(r % p);
      r /= p;
    }
    if (alpha[f] == 0) continue;
    std::vector<uint32_t> m(f + 1, 0);
    m[f] = 1;
    for (uint32_t i = 1; i <= f; ++i) m[f - i] = (i % 2 == 0) ? alpha[i] : (p - alpha[i]) % p;
    if (order_of_x(p, m) == q - 1) return m;
  }
  throw FieldError("no primitive polynomial found");
}

Field::Field(uint32_t p, uint32_t f) {
  spec_.p = p;
  spec_.f = f;
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
  if (f == 0) throw FieldError("degree must be positive");
  uint64_t q = 1;
  for (uint32_t i = 0; i < f; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw FieldError("field order exceeds 2^16");
  }
  auto c = conway_polynomial(p, f);
  spec_.modulus = c.empty() ? least_primitive_polynomial(p, f) : c;
  build();
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  if (!is_prime(spec_.p)) throw FieldError("characteristic " + std::to_string(spec_.p) + " is not prime");
  if (spec_.f == 0) throw FieldError("degree must be positive");
  uint64_t q = 1;
  for (uint32_t i = 0; i < spec_.f; ++i) {
    q *= spec_.p;
    if (q > kMaxFieldOrder) throw FieldError("field order exceeds 2^16");
  }
  if (spec_.modulus.size() != spec_.f + 1 || spec_.modulus.back() != 1)
    throw FieldError("modulus must be monic of degree f");
  for (auto c : spec_.modulus)
    if (c >= spec_.p) throw FieldError("modulus coefficient out of range");
  if (spec_.f > 1 && order_of_x(spec_.p, spec_.modulus) != q - 1)
    throw FieldError("modulus is not primitive");
  if (spec_.f == 1 && !(spec_.modulus[0] == 0))
    throw FieldError("prime field modulus must be x");
  build();
}

void Field::build() {
  const uint32_t p = spec_.p, f = spec_.f;
  q_ = 1;
  for (uint32_t i = 0; i < f; ++i) q_ *= p;

  neg_.resize(q_);
  for (Elt a = 0; a < q_; ++a) {
    Elt r = 0, pw = 1, t = a;
    for (uint32_t i = 0; i < f; ++i) {
      uint32_t d = t % p;
      t /= p;
      r += ((p - d) % p) * pw;
      pw *= p;
    }
    neg_[a] = static_cast<uint16_t>(r);
  }

  exp_.assign(2 * (q_ - 1) + 1, 0);
  log_.assign(q_, 0);
  if (q_ == 2) {
    exp_[0] = exp_[1] = exp_[2] = 1;
    log_[1] = 0;
    primitive_ = 1;
  } else {
    Elt g;
    if (f == 1) {
      g = 2;
      for (;; ++g) {
        uint64_t x = 1;
        uint32_t k = 1;
        for (; k < q_; ++k) {
          x = x * g % p;
          if (x == 1) break;
        }
        if (k == q_ - 1) break;
      }
    } else {
      g = p;  // x
    }
    std::vector<uint32_t> cur(f, 0);
    cur[0] = 1;
    for (uint32_t k = 0; k < q_ - 1; ++k) {
      Elt code = 0, pw = 1;
      for (uint32_t i = 0; i < f; ++i) {
        code += cur[i] * pw;
        pw *= p;
      }
      exp_[k] = static_cast<uint16_t>(code);
      log_[code] = k;
      if (f == 1) {
        cur[0] = static_cast<uint32_t>(static_cast<uint64_t>(cur[0]) * g % p);
      } else {
        uint32_t top = cur[f - 1];
        for (uint32_t i = f - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        for (uint32_t i = 0; i < f; ++i) cur[i] = (cur[i] + (p - spec_.modulus[i]) * top) % p;
      }
    }
    for (uint32_t k = q_ - 1; k < exp_.size(); ++k) exp_[k] = exp_[k - (q_ - 1)];
    primitive_ = 0;
    for (Elt a = 1; a < q_; ++a)
      if (order(a) == q_ - 1) {
        primitive_ = a;
        break;
      }
  }

  if (q_ <= kAddTableMax) {
    add_.resize(static_cast<size_t>(q_) * q_);
    for (Elt a = 0; a < q_; ++a)
      for (Elt b = 0; b < q_; ++b) {
        Elt r = 0, pw = 1, x = a, y = b;
        for (uint32_t i = 0; i < f; ++i) {
          r += ((x % p + y % p) % p) * pw;
          x /= p;
          y /= p;
          pw *= p;
        }
        add_[static_cast<size_t>(a) * q_ + b] = static_cast<uint16_t>(r);
      }
  }
}

bool Field::same(const Field& o) const {
  return this == &o || (spec_.p == o.spec_.p && spec_.f == o.spec_.f && spec_.modulus == o.spec_.modulus);
}

Elt Field::add(Elt a, Elt b) const {
  if (!add_.empty()) return add_[static_cast<size_t>(a) * q_ + b];
  const uint32_t p = spec_.p;
  if (spec_.f == 1) return (a + b) % p;
  Elt r = 0, pw = 1;
  for (uint32_t i = 0; i < spec_.f; ++i) {
    r += ((a % p + b % p) % p) * pw;
    a /= p;
    b /= p;
    pw *= p;
  }
  return r;
}

Elt Field::neg(Elt a) const { return neg_[a]; }

Elt Field::inv(Elt a) const {
  if (a == 0) throw FieldError("inverse of zero");
  if (q_ == 2) return 1;
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elt Field::pow(Elt a, int64_t e) const {
  if (a == 0) {
    if (e < 0) throw FieldError("inverse of zero");
    return e == 0 ? 1 : 0;
  }
  const int64_t m = q_ - 1;
  int64_t k = (static_cast<int64_t>(log_[a]) * (((e % m) + m) % m)) % m;
  return exp_[k];
}

Elt Field::frobenius(Elt a, int64_t j) const {
  if (a == 0) return 0;
  int64_t f = spec_.f;
  j = ((j % f) + f) % f;
  uint64_t e = 1;
  for (int64_t i = 0; i < j; ++i) e *= spec_.p;
  return pow(a, static_cast<int64_t>(e));
}

uint32_t Field::log(Elt a) const {
  if (a == 0) throw FieldError("log of zero");
  return log_[a];
}

uint32_t Field::order(Elt a) const {
  if (a == 0) throw FieldError("order of zero");
  uint32_t m = q_ - 1;
  if (m == 1) return 1;
  return m / std::gcd(m, log_[a]);
}

bool Field::is_square(Elt a) const {
  if (a == 0 || spec_.p == 2) return true;
  return log_[a] % 2 == 0;
}

Elt Field::from_int(int64_t v) const {
  int64_t p = spec_.p;
  return static_cast<Elt>(((v % p) + p) % p);
}

std::vector<uint32_t> Field::digits(Elt a) const {
  std::vector<uint32_t> d(spec_.f);
  for (uint32_t i = 0; i < spec_.f; ++i) {
    d[i] = a % spec_.p;
    a /= spec_.p;
  }
  return d;
}

Elt Field::from_digits(const std::vector<uint32_t>& d) const {
  Elt r = 0, pw = 1;
  for (uint32_t i = 0; i < spec_.f && i < d.size(); ++i) {
    r += (d[i] % spec_.p) * pw;
    pw *= spec_.p;
  }
  return r;
}

FieldPtr gf(uint32_t p, uint32_t f) {
  static std::mutex mu;
  static std::map<std::pair<uint32_t, uint32_t>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({p, f});
  if (it != cache.end()) return it->second;
  auto F = std::make_shared<const Field>(p, f);
  cache[{p, f}] = F;
  return F;
}

FieldPtr gf(uint32_t q) {
  uint32_t p, f;
  split_prime_power(q, p, f);
  return gf(p, f);
}

FieldElement::FieldElement(FieldPtr F, Elt v) : F_(std::move(F)), v_(v) {
  if (!F_->valid(v)) throw FieldError("element code out of range");
}

void FieldElement::check(const FieldElement& o) const {
  if (!F_->same(*o.F_)) throw FieldError("operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check(o);
  return {F_, F_->add(v_, o.v_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check(o);
  return {F_, F_->sub(v_, o.v_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check(o);
  return {F_, F_->mul(v_, o.v_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check(o);
  return {F_, F_->div(v_, o.v_)};
}
FieldElement FieldElement::operator-() const { return {F_, F_->neg(v_)}; }
FieldElement FieldElement::inverse() const { return {F_, F_->inv(v_)}; }
FieldElement FieldElement::pow(int64_t e) const { return {F_, F_->pow(v_, e)}; }
bool FieldElement::operator==(const FieldElement& o) const {
  check(o);
  return v_ == o.v_;
}

}  // namespace sbase
