#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sbase/errors.hpp"

namespace sbase {

// Element of GF(p^f) encoded as sum c_i p^i of its polynomial coefficients.
using Elt = uint32_t;

constexpr uint32_t kMaxFieldOrder = 1u << 16;
constexpr uint32_t kAddTableMax = 1024;

struct FieldSpec {
  uint32_t p = 2;
  uint32_t f = 1;
  std::vector<uint32_t> modulus;  // monic, coefficients low to high
};

bool is_prime(uint64_t n);

// Hardcoded Conway polynomial for q, empty if q is not in the table.
std::vector<uint32_t> conway_polynomial(uint32_t p, uint32_t f);

// Least primitive monic polynomial of degree f over GF(p) in Conway order.
std::vector<uint32_t> least_primitive_polynomial(uint32_t p, uint32_t f);

class Field {
 public:
  Field(uint32_t p, uint32_t f);
  explicit Field(FieldSpec spec);

  uint32_t p() const { return spec_.p; }
  uint32_t f() const { return spec_.f; }
  uint32_t q() const { return q_; }
  const FieldSpec& spec() const { return spec_; }
  const std::vector<uint32_t>& modulus() const { return spec_.modulus; }
  bool same(const Field& o) const;

  bool valid(Elt a) const { return a < q_; }
  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
  Elt neg(Elt a) const;
  Elt mul(Elt a, Elt b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, int64_t e) const;
  // a^(p^j)
  Elt frobenius(Elt a, int64_t j) const;

  // log relative to the table generator (x for f > 1, least primitive root for f = 1)
  uint32_t log(Elt a) const;
  Elt exp(uint64_t e) const { return exp_[e % (q_ - 1)]; }
  uint32_t order(Elt a) const;
  Elt primitive_element() const { return primitive_; }
  bool is_square(Elt a) const;
  Elt from_int(int64_t v) const;  // image of an integer in the prime field

  std::vector<uint32_t> digits(Elt a) const;
  Elt from_digits(const std::vector<uint32_t>& d) const;

 private:
  void build();

  FieldSpec spec_;
  uint32_t q_ = 0;
  Elt primitive_ = 0;
  std::vector<uint16_t> exp_;  // length 2(q-1)
  std::vector<uint32_t> log_;
  std::vector<uint16_t> add_;  // q*q when q <= kAddTableMax
  std::vector<uint16_t> neg_;
};

using FieldPtr = std::shared_ptr<const Field>;

// Shared instance with the default modulus.
FieldPtr gf(uint32_t q);
FieldPtr gf(uint32_t p, uint32_t f);

// Prime-power decomposition; throws FieldError otherwise.
void split_prime_power(uint32_t q, uint32_t& p, uint32_t& f);

// Element bound to its field; operations between distinct fields throw.
class FieldElement {
 public:
  FieldElement(FieldPtr F, Elt v);
  const FieldPtr& field() const { return F_; }
  Elt code() const { return v_; }
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(int64_t e) const;
  bool operator==(const FieldElement& o) const;

 private:
  void check(const FieldElement& o) const;
  FieldPtr F_;
  Elt v_;
};

}  // namespace sbase
