#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sbase/basesize.hpp"
#include "sbase/witness.hpp"

namespace sbase::cli {

using json = nlohmann::ordered_json;

enum class Status { verified = 0, refuted = 1, inconclusive = 2 };
const char* status_name(Status s);
Status worst(Status a, Status b);

struct RunOptions {
  uint64_t seed = 1;
  uint64_t trials = 2000;
  uint64_t closure_cap = kDefaultClosureCap;
  uint64_t index_cap = CosetSpace::kMaxIndex;
  uint64_t work_cap = kDefaultWorkCap;
  int jobs = 1;
  bool timings = false;
  // witness scenarios
  int nmax = 6;
  uint32_t qmax = 9;
};

// G and the point stabilizer S, rebuilt from a subgroup tag and its parameters
struct Setup {
  MatGroup G, S;
};
Setup build_setup(const std::string& tag, const json& params);

struct Outcome {
  Status status = Status::verified;
  std::string computed;  // one-line value for tables
  std::vector<std::string> lines;
  std::vector<Certificate> certs;
};

struct Scenario {
  std::string name;
  std::string anchor;  // quoted statement the scenario checks
  std::string expect;  // short form of the expected value
  std::function<Outcome(const RunOptions&)> run;
};

const std::vector<Scenario>& scenarios();
const Scenario* find_scenario(const std::string& name);

// re-checks a certificate against freshly built groups
Outcome verify_certificate(const Certificate& c, const RunOptions& opt);

// one row per case: claimed, computed, match
struct ReproRow {
  std::string id, claimed, computed;
  Status status = Status::verified;
};
std::vector<ReproRow> reproduce(const std::string& table, const RunOptions& opt);
std::vector<std::string> table_ids();

// constructions by tag
struct Construction {
  std::string tag;
  std::vector<std::pair<std::string, std::string>> items;  // name, element text
};
struct ConstructParams {
  int n = 0, m = 0, r = 0, l = 0, dt = 0, j1 = 0;
  uint32_t q = 0;
  std::optional<Elt> a;
  std::vector<int> lambda;
};
Construction construct(const std::string& tag, const ConstructParams& p);
std::vector<std::string> construct_tags();

// runs f(i) for i < count on up to jobs threads; results stay in index order
template <class T>
std::vector<T> parallel_map(size_t count, int jobs, const std::function<T(size_t)>& f);

}  // namespace sbase::cli

#include "parallel.ipp"
