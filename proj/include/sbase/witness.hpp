#pragma once

#include <string>
#include <vector>

#include "sbase/constructions.hpp"
#include "sbase/subspace.hpp"

namespace sbase {

// Outcome of checking one explicit conjugator family at one parameter point.
// Each check fixes the shape that the preceding conjugates force (diagonal,
// tied diagonal, block diagonal with a few 2x2 blocks, ...) and solves, over
// that whole shape, for the elements that also stabilize the subspaces moved
// by the new conjugator. The shapes are overgroups of the true intersections,
// so "holds" here implies the claim for every subgroup with that shape.
struct WitnessCheck {
  std::string family;
  int n = 0;
  uint32_t q = 0;
  std::string params;
  Verdict verdict = Verdict::inconclusive;
  std::string detail;
  std::string str() const;
};

// x, y, z of the all-1-dimensional-factor case against the full flag stabilizer
WitnessCheck check_ni1(FieldPtr F, int n);

// the five points (S, Sx, Sy, Sxy, Sz_i) are regular and pairwise in
// distinct orbits, given the diagonal (orb) or corner-block (orb2) shape
WitnessCheck check_orbit_witnesses(OrbitScheme s, FieldPtr F, const OrbitParams& p);

// S cap S^x cap S^y cap S^z <= Z for the z of the novelty-with-iota cases
WitnessCheck check_gr(GrVariant v, FieldPtr F, const GrParams& p, PairKind kind);

// every in-range parameter point with n <= nmax, q <= qmax
std::vector<WitnessCheck> sweep_ni1(int nmax, uint32_t qmax);
std::vector<WitnessCheck> sweep_orb(int nmax, uint32_t qmax);
std::vector<WitnessCheck> sweep_orb2(const std::vector<int>& ns, const std::vector<uint32_t>& qs);
std::vector<WitnessCheck> sweep_gr(GrVariant v, int nmax, uint32_t qmax);

Verdict combine(const std::vector<Verdict>& vs);

}  // namespace sbase
