#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sbase/semilinear.hpp"

namespace sbase {

// Right cosets S r of S in G = <gens>; G is never enumerated.
class CosetSpace {
 public:
  // the default index cap is also the hard limit of the 16-bit point tables
  static constexpr uint64_t kMaxIndex = 65535;

  CosetSpace(const MatGroup& G, const MatGroup& S, uint64_t index_cap = kMaxIndex);

  size_t size() const { return reps_.size(); }
  const MatGroup& G() const { return G_; }
  const MatGroup& S() const { return S_; }
  const std::vector<SemiElement>& reps() const { return reps_; }
  // one permutation per generator of G, point p goes to action()[i][p]
  const std::vector<std::vector<uint32_t>>& action() const { return action_; }
  // index of the coset S x
  uint32_t point_of(const SemiElement& x) const;
  std::vector<uint32_t> perm_of(const SemiElement& x) const;

 private:
  std::string bucket_key(const SemiElement& x) const;
  std::optional<uint32_t> lookup(const SemiElement& x, const std::string& key) const;

  MatGroup G_, S_;
  std::vector<SemiElement> reps_;
  std::vector<std::vector<uint32_t>> action_;
  std::vector<std::vector<Elt>> probe_;  // S-invariant vector set used to bucket cosets
  struct Index;
  std::shared_ptr<Index> index_;
};

// The point stabilizer S acting on the cosets, element by element.
class PointAction {
 public:
  explicit PointAction(const CosetSpace& cs, uint64_t cap = kDefaultClosureCap);

  size_t degree() const { return n_; }
  size_t order() const { return elems_.size(); }
  // kernel of the action restricted to S, i.e. the core S_G
  uint64_t kernel_order() const { return kernel_; }
  const SemiElement& element(size_t i) const { return elems_[i]; }
  uint32_t image(size_t e, uint32_t p) const { return perm_[e * n_ + p]; }
  // |G / S_G|
  mpz_class quotient_order() const;

  using Subgroup = std::vector<uint32_t>;  // element indices
  Subgroup all() const;
  Subgroup stabilizer(const Subgroup& H, uint32_t p) const;
  // orbit representatives (least point) and orbit sizes, restricted to points in domain
  std::vector<std::pair<uint32_t, uint32_t>> orbits(const Subgroup& H, const std::vector<bool>* domain = nullptr) const;

 private:
  size_t n_ = 0;
  std::vector<SemiElement> elems_;
  std::vector<uint16_t> perm_;
  uint64_t kernel_ = 0;
  mpz_class gorder_;
};

struct BaseSizeResult {
  // exact value, or empty when every length up to max_c failed
  std::optional<int> value;
  int lower_bound = 0;
  bool capped = false;  // work cap hit: lower_bound only
  uint64_t work = 0;
  std::string str() const;
};

constexpr uint64_t kDefaultWorkCap = 4'000'000'000ull;

// least b such that some b-tuple of cosets has stabilizer S_G
BaseSizeResult base_size_exact(const PointAction& pa, int max_c, uint64_t work_cap = kDefaultWorkCap);

enum class RegMode { full, paper_code };
// regular G-orbits on Omega^k (full) or the coset-code variant drawing later
// coordinates from Omega minus the base point
mpz_class reg_count(const PointAction& pa, int k, RegMode mode, uint64_t work_cap = kDefaultWorkCap);

// all elements of the permutation group generated by gens, sorted
using PermVec = std::vector<uint32_t>;
std::vector<PermVec> perm_closure(const std::vector<PermVec>& gens, uint64_t cap = kDefaultClosureCap);

// ceil(log_d order), exact
int log_lower(const mpz_class& order, const mpz_class& d);

// ---- intersections and certificates

// the first six are properties of an intersection of conjugates; the rest
// record computed invariants of a coset action
enum class ClaimKind { in_Z, in_D, in_RT, in_LT, equals_core, order_is, base_size_eq, base_size_le, reg_ge };
const char* claim_name(ClaimKind k);
ClaimKind parse_claim(const std::string& s);

struct Claim {
  ClaimKind kind = ClaimKind::equals_core;
  uint64_t value = 0;  // order_is, base_size_*, reg_ge
  bool modulo_phi = false;
};

struct Certificate {
  std::string case_name;
  Ambient ambient;
  std::string subgroup_tag;
  std::string params;  // compact JSON of the builder parameters
  std::vector<SemiElement> conjugators;
  Claim claim;
  bool verified = false;
  std::vector<uint64_t> order_trace;  // |S|, |S cap S^a1|, ...
  uint64_t seed = 0;
  std::optional<uint64_t> wall_time_ms;

  std::string to_json() const;
  static Certificate from_json(const std::string& text);
};

// S cap S^a1 cap ... as an element set of S
MatGroup intersect_conjugates(const MatGroup& S, const std::vector<SemiElement>& conjugators,
                              std::vector<uint64_t>* trace = nullptr, uint64_t cap = kDefaultClosureCap);

// evaluates the claim on the intersection; core_order needed for equals_core
bool evaluate_claim(const MatGroup& I, const Claim& c, uint64_t core_order);

Certificate check_intersection(const MatGroup& S, const std::vector<SemiElement>& conjugators, const Claim& claim,
                               uint64_t core_order);

// words of fixed length over the generators, reproducible from a seed
class WordSampler {
 public:
  WordSampler(std::vector<SemiElement> gens, uint64_t seed, int length = 20);
  SemiElement next();

 private:
  std::vector<SemiElement> gens_;
  std::mt19937_64 rng_;
  int length_;
};

uint64_t split_seed(uint64_t seed, uint64_t counter);

struct SearchResult {
  std::optional<Certificate> cert;
  uint64_t trials_used = 0;
};

// tries c - 1 sampled conjugators per trial until the claim holds
SearchResult random_search(const MatGroup& S, const std::vector<SemiElement>& g_gens, int c, const Claim& claim,
                           uint64_t core_order, uint64_t seed, uint64_t trials);

}  // namespace sbase
