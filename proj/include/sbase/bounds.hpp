#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "sbase/basesize.hpp"

namespace sbase {

// A positive real of the form r^(1/k) with r rational. Enough for every bound
// here: q^(n^2/2), q^(9n/4), e^(13/2). Comparisons raise both sides to a
// common power and compare rationals.
class RootRational {
 public:
  RootRational() = default;
  RootRational(const mpq_class& r, unsigned root = 1);
  static RootRational from_int(long v) { return RootRational(mpq_class(v)); }
  // base^(num/den), base > 0
  static RootRational power(const mpq_class& base, long num, unsigned den);

  const mpq_class& radicand() const { return r_; }
  unsigned root() const { return k_; }
  bool is_rational() const { return k_ == 1; }

  RootRational operator*(const RootRational& o) const;
  RootRational operator/(const RootRational& o) const;
  RootRational pow(long e) const;
  // sum is defined only for rationals
  RootRational operator+(const RootRational& o) const;

  int compare(const RootRational& o) const;
  bool operator<(const RootRational& o) const { return compare(o) < 0; }
  bool operator<=(const RootRational& o) const { return compare(o) <= 0; }
  bool operator==(const RootRational& o) const { return compare(o) == 0; }

  // "25/4" or "(2^25/100)^(1/2)" style, exact
  std::string str() const;
  // decimal approximation for display only
  std::string approx(int digits = 6) const;

 private:
  void normalize();
  mpq_class r_ = 1;
  unsigned k_ = 1;
};

mpz_class ipow(const mpz_class& b, unsigned long e);

// ---- class sizes and fpr sums

// (1/2n) q^(ns) for s >= n/2, (1/2n) q^(2s(n-s)) for n/4 <= s < n/2
mpq_class class_size_lower(int n, uint64_t q, int s);
// the s-free floors (1/2n) q^(n^2/2) and (1/2n) q^(3n^2/8)
RootRational class_size_floor_half(int n, uint64_t q);
RootRational class_size_floor_quarter(int n, uint64_t q);

// B (A/B)^c
RootRational qhat_AB(const RootRational& A, const RootRational& B, int c);

// ---- primitive solvable groups

struct PrimitiveSolvableProfile {
  int n = 0;
  uint64_t q = 0;
  int m = 0;
  int e() const { return n / m; }
  // floor(log2 e): the exponent of every prime in e is at most this
  int l() const;
  void validate() const;
};

struct HBound {
  RootRational printed;      // ((q^m-1)/(q-1)) m min{e^(2l+1), e^(13/2)}
  RootRational with_fa;      // same, with |F:A| = e^2 kept in the first term
  mpq_class sp_product;      // ((q^m-1)/(q-1)) m e^2 prod |Sp_(2l_i)(p_i)|
};
HBound primitive_H_bound(const PrimitiveSolvableProfile& p);
mpz_class sp_order(int l, uint64_t p);

// ---- Gluck-Manz

RootRational gluck_manz(int n, uint64_t q);
// |S| < q^(9n/4)/2.8, by comparing 4th powers
bool gluck_manz_holds(const mpz_class& order, int n, uint64_t q);

// ---- threshold scans

struct SinbaseRow {
  int n = 0;
  uint64_t q = 0;
  mpz_class a;           // n(q^n-1)/(q-1)
  mpq_class a_printed;   // n(q^n-1)/(n-1)
  RootRational b;        // (1/2n) q^(n^2/2)
  RootRational ratio, ratio_printed;  // a^2/b
  bool flagged = false, flagged_printed = false;  // ratio >= 1
};
std::vector<uint64_t> prime_powers_upto(uint64_t qmax);
std::vector<SinbaseRow> sinbase_scan(int nmin, int nmax, uint64_t qmax);
std::string sinbase_tsv(const std::vector<SinbaseRow>& rows);

struct ThresholdRow {
  uint64_t q = 0;
  RootRational value;
  bool below_one = false;
};
// n = 5: (25^2 + 500^2 + 624^2) / ((1/10) q^12), and the same over q^(25/2)
std::vector<ThresholdRow> case2_n5(uint64_t qmax, bool exact_exponent);
// n = 4, m = 2: a^2/b with a = 48(q+1), b = (1/8) q^6
std::vector<ThresholdRow> case3_n4(uint64_t qmax);
// least scanned q0 such that every row from q0 on is below one; 0 if none
uint64_t threshold(const std::vector<ThresholdRow>& rows);

// ---- dominance on a coset space

struct PrimeClass {
  uint64_t prime = 0;
  uint64_t size = 0;      // |x^G| in G/S_G
  uint64_t in_H = 0;      // |x^G cap H|, H the point stabilizer
  uint64_t fixed = 0;     // fixed points of a representative
};

struct DominanceReport {
  uint64_t degree = 0;
  mpz_class order;        // |G/S_G|
  std::vector<PrimeClass> classes;
  mpq_class Q;            // exact proportion of non-base c-tuples
  mpq_class qhat;         // sum |x^G| fpr(x)^c, fpr from fixed points
  mpq_class class_sum;    // the same sum with fpr = |x^G cap H| / |x^G|
  RootRational lemma_AB;  // B (A/B)^c with A, B the true totals
  bool q_le_qhat = false, ab_dominates = false;
  std::string str() const;
};

// G acts on Omega by the generator permutations; the kernel is already gone
// when the permutations are used directly
DominanceReport dominance(const std::vector<PermVec>& gens, size_t degree, int c,
                          uint64_t closure_cap = kDefaultClosureCap);
DominanceReport dominance(const CosetSpace& cs, int c, uint64_t closure_cap = kDefaultClosureCap);

}  // namespace sbase
