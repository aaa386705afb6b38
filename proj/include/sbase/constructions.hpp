#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sbase/semilinear.hpp"
#include "sbase/subspace.hpp"

namespace sbase {

using Perm = std::vector<int>;

// elementary transvections over a prime-field basis of F, plus diag(theta,1,..)
std::vector<SemiElement> sl_generators(FieldPtr F, int n);
std::vector<SemiElement> gl_generators(FieldPtr F, int n);
// |GL_n(q)|, throws when it does not fit in 64 bits
uint64_t gl_order(int n, uint64_t q);
Matrix elementary(FieldPtr F, int n, int r, int c, Elt a);

// ---- Singer cycles

enum class SingerVariant { gl2_odd, gl2_even, field_model };

struct SingerModel {
  int n = 2;
  FieldPtr F;
  SingerVariant variant = SingerVariant::field_model;
  Elt a = 0;  // gl2 variants only
};

bool singer_parameter_valid(const FieldPtr& F, SingerVariant v, Elt a);
// all valid a for the gl2 variant of F's parity, ascending
std::vector<Elt> singer_parameters(const FieldPtr& F);
// gl2 variant when n = 2 (least valid a unless given), field model otherwise
SingerModel singer_model(FieldPtr F, int n, std::optional<Elt> a = std::nullopt);

// alpha I + beta J for the model's J (gl2 variants)
Matrix singer_matrix(const SingerModel& m, Elt alpha, Elt beta);
Matrix singer_generator(const SingerModel& m);
Matrix singer_normalizing_element(const SingerModel& m);
MatGroup singer(const SingerModel& m);
MatGroup singer_normalizer(const SingerModel& m);
// phi-coset generator of the normalizer in GammaL_2(q)
SemiElement gamma_singer_element(FieldPtr F, Elt a);
MatGroup gamma_singer_normalizer(FieldPtr F, Elt a);
// monic primitive polynomial of degree n over F used by the field model, low to high
std::vector<Elt> singer_polynomial(const FieldPtr& F, int n);

// ---- wreath products and permutation matrices

// X^k extended by block permutations from Y (permutations of 0..k-1)
MatGroup wreath(const MatGroup& X, int k, const std::vector<Perm>& Y);
std::vector<Perm> symmetric_generators(int k);
// Sym(k) as permutation matrices
MatGroup symmetric_matrices(FieldPtr F, int k);

// ---- explicit matrices

// unit upper triangular with entries (-1)^(j-i)
Matrix matrix_A(FieldPtr F, int n);
// swaps the first and last m coordinates
Matrix matrix_a(FieldPtr F, int n, int m);
// diag(sgn s, 1, ..., 1) perm(s), s the reversal of 1..n
Matrix reversal_matrix(FieldPtr F, int n);

struct ConjugatorPair {
  Matrix x, y;
};
// x = diag(x_k, ..., x_1) for blocks given as x_1..x_k; y the signed reversal
ConjugatorPair conjugator_irrtog(const std::vector<Matrix>& x_blocks, int n);
// fixes v_1..v_{n-m}; v_{n-m+i} -> v_1 + ... + v_{n-m} + v_{n-m+i}
Matrix conjugator_diag_z(FieldPtr F, int n, int m);
// diag(x_1, ..., x_k) (I_m (x) A(k))
Matrix conjugator_igrekl(const std::vector<Matrix>& parts, int m, int k);

struct Triple {
  Matrix x, y, z;
};
Triple prop_ni1_xyz(FieldPtr F, int n);

// ---- regular-orbit witnesses

enum class OrbitScheme { orb, orb2 };

struct OrbitParams {
  int n = 0;
  int m = 0;  // dim U; for orb2 derived from l
  int l = 0;  // orb2: the lower 2x2 block sits in rows l, l+1 (1-based)
};

// u_{(i,j)} for i = 1..5, j = 1..m, as coordinate rows
std::vector<std::vector<Vec>> orbit_vectors(OrbitScheme s, FieldPtr F, const OrbitParams& p);
// z_1..z_5 in SL_n with rows n-m+j equal to u_{(i,j)}
std::vector<Matrix> orbit_witnesses(OrbitScheme s, FieldPtr F, const OrbitParams& p);
// rows fixed, remaining rows chosen greedily from standard vectors, then the
// first chosen row rescaled to force det 1
Matrix complete_to_sl(FieldPtr F, int n, const std::vector<std::pair<int, Vec>>& fixed_rows);

// ---- z matrices for the novelty-with-iota case

enum class GrVariant { def1, def2, q23, q23mr, case221, case222 };
const char* gr_variant_name(GrVariant v);
GrVariant parse_gr_variant(const std::string& s);

struct GrParams {
  int n = 0;
  int m = 0;              // def1, def2, q23, case222
  int r = 0;              // def1: tie position (1-based)
  std::vector<int> lambda1;  // q23, q23mr: block starts j_1 < j_2 < ... (1-based)
  int dt = 0;             // q23mr
  int j1 = 0;             // case222
};
Matrix gr_z(GrVariant v, FieldPtr F, const GrParams& p);

// ---- pair stabilizers

enum class PairKind { parabolic, direct_sum };

struct PairStabilizerSpec {
  int n = 0;
  int m = 0;
  PairKind kind = PairKind::parabolic;
  bool include_phi = false;
  bool include_iota = false;
};

// U = last m coordinates; W = last n-m (parabolic) or first n-m (direct sum)
SubspacePair pair_subspaces(FieldPtr F, const PairStabilizerSpec& s);
// the block sizes of the linear part, top to bottom
std::vector<int> pair_blocks(const PairStabilizerSpec& s);
// iota a(n,m) for parabolic, iota for direct sum
SemiElement pair_iota_element(FieldPtr F, const PairStabilizerSpec& s);
Ambient pair_ambient(FieldPtr F, const PairStabilizerSpec& s);
MatGroup pair_stabilizer(FieldPtr F, const PairStabilizerSpec& s);

// ---- assorted named groups

// GL_2(3) . Z(GL_2(9)), optionally extended by phi
MatGroup gl23_in_gl29(bool with_phi);
// x, y of the GL_2(9) chain, omega a root of w^2 - w - 1
ConjugatorPair gl29_chain_xy();

struct Gl32Data {
  Matrix singer;    // displayed Singer generator
  Matrix x;         // displayed conjugator
  Matrix expected;  // generator of the displayed order-3 intersection
};
Gl32Data gl32_data();
MatGroup gl32_singer_normalizer();

// normalizer in GL_2(q) of a quaternion group Q8, q odd prime
MatGroup q8_normalizer(FieldPtr F);
// upper triangular matrices, optionally times <phi>
MatGroup borel(const Ambient& amb);
MatGroup diagonal_group(const Ambient& amb);

}  // namespace sbase
