#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sbase/semilinear.hpp"

namespace sbase {

using Vec = std::vector<Elt>;

// Subspace of F^n kept as reduced row echelon rows.
class Subspace {
 public:
  Subspace() = default;
  Subspace(FieldPtr F, int n);

  static Subspace span(FieldPtr F, int n, const std::vector<Vec>& rows);
  // span of the standard vectors with the given 0-based indices
  static Subspace coordinate(FieldPtr F, int n, const std::vector<int>& idx);
  static Subspace whole(FieldPtr F, int n);

  const FieldPtr& field() const { return F_; }
  int ambient_dim() const { return n_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec>& rows() const { return rows_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  // annihilator under the standard dot product
  Subspace perp() const;
  Subspace image(const Matrix& g) const;
  Subspace frob(int j) const;
  Subspace operator+(const Subspace& o) const;

  bool operator==(const Subspace& o) const { return n_ == o.n_ && rows_ == o.rows_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }
  bool operator<(const Subspace& o) const { return rows_ < o.rows_; }
  std::string str() const;

 private:
  void reduce();
  FieldPtr F_;
  int n_ = 0;
  std::vector<Vec> rows_;
};

// Ordered pair (U, W). iota sends it to (W^perp, U^perp); phi and matrices act
// on both parts.
struct SubspacePair {
  Subspace U, W;
  bool operator==(const SubspacePair& o) const { return U == o.U && W == o.W; }
};

Subspace act(const Subspace& U, const SemiElement& x);
SubspacePair act(const SubspacePair& P, const SemiElement& x);

// Elements iota^l phi^j (left * g) with g in the span of basis.
struct LinearFamily {
  int l = 0;
  int j = 0;
  Matrix left;
  std::vector<Matrix> basis;
  std::string label;
};

// src . c must lie in dst, componentwise
struct Containment {
  SubspacePair src, dst;
};

struct FamilyResult {
  LinearFamily family;
  std::vector<Matrix> kernel;  // admissible g form the span of these
  bool enumerated = false;  // members complete, by listing or by singular
  bool singular = false;    // too large to list but provably without invertible members
  std::vector<SemiElement> members;  // invertible solutions when enumerated
  uint64_t count = 0;
};

// Sufficient test that no member of the span is invertible: a common kernel
// vector on either side, or a coordinate subspace every member shrinks.
bool provably_singular(const std::vector<Matrix>& span);

// Exact solve of the containments as linear conditions on g. Solution spaces
// of size at most enum_cap are enumerated.
std::vector<FamilyResult> solve_families(const std::vector<LinearFamily>& fams,
                                         const std::vector<Containment>& cons, uint64_t enum_cap = 1u << 20);

enum class Verdict { holds, fails, inconclusive };
const char* verdict_name(Verdict v);

// every solution satisfies pred
Verdict all_members(const std::vector<FamilyResult>& res, const Predicate& pred);
// no family has an invertible solution
Verdict none_exist(const std::vector<FamilyResult>& res);

// standard spanning sets for common families
std::vector<Matrix> diagonal_basis(FieldPtr F, int n);
// diagonal with the listed 0-based index groups forced equal
std::vector<Matrix> tied_diagonal_basis(FieldPtr F, int n, const std::vector<std::vector<int>>& ties);
// block diagonal with free blocks of the given sizes
std::vector<Matrix> block_basis(FieldPtr F, const std::vector<int>& sizes);
// single matrix units E_rc for the listed positions
std::vector<Matrix> unit_basis(FieldPtr F, int n, const std::vector<std::pair<int, int>>& pos);

}  // namespace sbase
