#include "sbase/constructions.hpp"

#include <algorithm>
#include <map>

namespace sbase {

Matrix elementary(FieldPtr F, int n, int r, int c, Elt a) {
  Matrix m = Matrix::identity(F, n);
  m.at(r, c) = a;
  return m;
}

std::vector<SemiElement> sl_generators(FieldPtr F, int n) {
  std::vector<SemiElement> g;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (uint32_t k = 0; k < F->f(); ++k) g.emplace_back(elementary(F, n, i, j, F->exp(k)));
    }
  return g;
}

std::vector<SemiElement> gl_generators(FieldPtr F, int n) {
  auto g = sl_generators(F, n);
  Matrix d = Matrix::identity(F, n);
  d.at(0, 0) = F->primitive_element();
  g.emplace_back(d);
  return g;
}

uint64_t gl_order(int n, uint64_t q) {
  unsigned __int128 qn = 1, r = 1, qi = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  for (int i = 0; i < n; ++i) {
    r *= qn - qi;
    qi *= q;
    if (r >> 64) throw InvalidArgument("gl_order overflows");
  }
  return static_cast<uint64_t>(r);
}

// ---- polynomials over F, coefficient vectors low to high

namespace {

using Poly = std::vector<Elt>;

Poly poly_mulmod(const Field& F, const Poly& a, const Poly& b, const Poly& mod) {
  const size_t n = mod.size() - 1;
  Poly prod(2 * n, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j]) prod[i + j] = F.add(prod[i + j], F.mul(a[i], b[j]));
  }
  for (size_t d = prod.size(); d-- > n;) {
    Elt c = prod[d];
    if (!c) continue;
    prod[d] = 0;
    for (size_t i = 0; i < n; ++i) prod[d - n + i] = F.sub(prod[d - n + i], F.mul(c, mod[i]));
  }
  prod.resize(n);
  return prod;
}

Poly poly_xpow(const Field& F, uint64_t e, const Poly& mod) {
  const size_t n = mod.size() - 1;
  Poly r(n, 0), b(n, 0);
  r[0] = 1;
  if (n == 1) {
    b[0] = F.neg(mod[0]);
  } else {
    b[1] = 1;
  }
  while (e) {
    if (e & 1) r = poly_mulmod(F, r, b, mod);
    b = poly_mulmod(F, b, b, mod);
    e >>= 1;
  }
  return r;
}

std::vector<uint64_t> prime_factors(uint64_t v) {
  std::vector<uint64_t> out;
  for (uint64_t p = 2; p * p <= v; ++p)
    if (v % p == 0) {
      out.push_back(p);
      while (v % p == 0) v /= p;
    }
  if (v > 1) out.push_back(v);
  return out;
}

bool is_one(const Poly& p) {
  if (p[0] != 1) return false;
  for (size_t i = 1; i < p.size(); ++i)
    if (p[i]) return false;
  return true;
}

uint64_t ipow(uint64_t b, int e) {
  uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > (uint64_t(1) << 62) / b) throw InvalidArgument("power too large");
    r *= b;
  }
  return r;
}

Elt theta(const FieldPtr& F) { return F->primitive_element(); }

}  // namespace

std::vector<Elt> singer_polynomial(const FieldPtr& F, int n) {
  if (n < 1) throw InvalidArgument("singer_polynomial: n >= 1");
  const uint64_t q = F->q();
  const uint64_t N = ipow(q, n) - 1;
  if (N > (uint64_t(1) << 40)) throw InvalidArgument("singer_polynomial: q^n too large");
  auto primes = prime_factors(N);
  const uint64_t count = ipow(q, n);
  for (uint64_t t = 0; t < count; ++t) {
    Poly mod(n + 1);
    uint64_t u = t;
    for (int i = 0; i < n; ++i) {
      mod[i] = static_cast<Elt>(u % q);
      u /= q;
    }
    mod[n] = 1;
    if (!mod[0]) continue;
    if (!is_one(poly_xpow(*F, N, mod))) continue;
    bool ok = true;
    for (uint64_t r : primes)
      if (is_one(poly_xpow(*F, N / r, mod))) {
        ok = false;
        break;
      }
    if (ok) return mod;
  }
  throw InvalidArgument("no primitive polynomial found");
}

// ---- Singer cycles

bool singer_parameter_valid(const FieldPtr& F, SingerVariant v, Elt a) {
  if (!F->valid(a)) return false;
  switch (v) {
    case SingerVariant::gl2_odd:
      return F->p() != 2 && a != 0 && !F->is_square(a);
    case SingerVariant::gl2_even: {
      if (F->p() != 2) return false;
      for (Elt t = 0; t < F->q(); ++t)
        if (F->add(F->add(F->mul(t, t), t), a) == 0) return false;
      return true;
    }
    default:
      return true;
  }
}

std::vector<Elt> singer_parameters(const FieldPtr& F) {
  SingerVariant v = F->p() == 2 ? SingerVariant::gl2_even : SingerVariant::gl2_odd;
  std::vector<Elt> out;
  for (Elt a = 0; a < F->q(); ++a)
    if (singer_parameter_valid(F, v, a)) out.push_back(a);
  return out;
}

SingerModel singer_model(FieldPtr F, int n, std::optional<Elt> a) {
  SingerModel m;
  m.n = n;
  m.F = F;
  if (n == 2) {
    m.variant = F->p() == 2 ? SingerVariant::gl2_even : SingerVariant::gl2_odd;
    if (a) {
      m.a = *a;
    } else {
      auto ps = singer_parameters(F);
      if (ps.empty()) throw InvalidArgument("no valid Singer parameter");
      m.a = ps.front();
    }
    if (!singer_parameter_valid(F, m.variant, m.a)) throw InvalidArgument("invalid Singer parameter a");
  } else {
    if (a) throw InvalidArgument("parameter a only applies to n = 2");
    m.variant = SingerVariant::field_model;
  }
  return m;
}

namespace {
void check_model(const SingerModel& m) {
  if (!m.F) throw InvalidArgument("Singer model without field");
  if (m.variant != SingerVariant::field_model) {
    if (m.n != 2) throw InvalidArgument("gl2 Singer variant needs n = 2");
    if (!singer_parameter_valid(m.F, m.variant, m.a)) throw InvalidArgument("invalid Singer parameter a");
  }
}
}  // namespace

Matrix singer_matrix(const SingerModel& m, Elt alpha, Elt beta) {
  check_model(m);
  const Field& F = *m.F;
  if (m.variant == SingerVariant::gl2_odd)
    return Matrix::from_rows(m.F, {{alpha, beta}, {F.mul(m.a, beta), alpha}});
  if (m.variant == SingerVariant::gl2_even)
    return Matrix::from_rows(m.F, {{alpha, beta}, {F.mul(m.a, beta), F.add(alpha, beta)}});
  throw InvalidArgument("singer_matrix: gl2 variants only");
}

Matrix singer_generator(const SingerModel& m) {
  check_model(m);
  const uint64_t N = ipow(m.F->q(), m.n) - 1;
  if (m.variant == SingerVariant::field_model) {
    Poly mod = singer_polynomial(m.F, m.n);
    Matrix g(m.F, m.n, m.n);
    for (int i = 0; i + 1 < m.n; ++i) g.at(i, i + 1) = 1;
    for (int k = 0; k < m.n; ++k) g.at(m.n - 1, k) = m.F->neg(mod[k]);
    if (m.n == 1) g.at(0, 0) = m.F->neg(mod[0]);
    return g;
  }
  for (Elt beta = 1; beta < m.F->q(); ++beta)
    for (Elt alpha = 0; alpha < m.F->q(); ++alpha) {
      Matrix g = singer_matrix(m, alpha, beta);
      if (element_order(SemiElement(g)) == N) return g;
    }
  throw InvalidArgument("no Singer generator found");
}

Matrix singer_normalizing_element(const SingerModel& m) {
  check_model(m);
  FieldPtr F = m.F;
  if (m.variant == SingerVariant::gl2_odd) return diag(F, {F->neg(1), 1});
  if (m.variant == SingerVariant::gl2_even) return Matrix::from_rows(F, {{1, 0}, {1, 1}});
  // matrix of y -> y^q on the basis 1, lambda, ..., lambda^(n-1)
  Poly mod = singer_polynomial(F, m.n);
  Matrix g(F, m.n, m.n);
  for (int i = 0; i < m.n; ++i) {
    Poly r = poly_xpow(*F, static_cast<uint64_t>(i) * F->q(), mod);
    for (int k = 0; k < m.n; ++k) g.at(i, k) = r[k];
  }
  return g;
}

MatGroup singer(const SingerModel& m) {
  return MatGroup(Ambient(m.n, m.F), {SemiElement(singer_generator(m))}, "Singer");
}

MatGroup singer_normalizer(const SingerModel& m) {
  return MatGroup(Ambient(m.n, m.F), {SemiElement(singer_generator(m)), SemiElement(singer_normalizing_element(m))},
                  "N(Singer)");
}

SemiElement gamma_singer_element(FieldPtr F, Elt a) {
  if (F->f() == 1) throw InvalidArgument("gamma_singer_element needs f > 1");
  if (F->p() != 2) {
    if (!singer_parameter_valid(F, SingerVariant::gl2_odd, a)) throw InvalidArgument("invalid Singer parameter a");
    Elt d = F->pow(F->inv(a), (F->p() - 1) / 2);
    return SemiElement(diag(F, {d, 1}), 1, 0);
  }
  if (!singer_parameter_valid(F, SingerVariant::gl2_even, a)) throw InvalidArgument("invalid Singer parameter a");
  // phi maps J to a root of x^2 + x + a^2; [[1,0],[a,1]] carries it back to aI + J
  return SemiElement(Matrix::from_rows(F, {{1, 0}, {a, 1}}), 1, 0);
}

MatGroup gamma_singer_normalizer(FieldPtr F, Elt a) {
  SemiElement t = gamma_singer_element(F, a);
  SingerModel m = singer_model(F, 2, a);
  return MatGroup(Ambient(2, F, true), {SemiElement(singer_generator(m)), t}, "N_Gamma(Singer)");
}

// ---- wreath products

std::vector<Perm> symmetric_generators(int k) {
  std::vector<Perm> out;
  if (k < 2) return out;
  Perm t(k), c(k);
  for (int i = 0; i < k; ++i) {
    t[i] = i;
    c[i] = (i + 1) % k;
  }
  std::swap(t[0], t[1]);
  out.push_back(t);
  if (k > 2) out.push_back(c);
  return out;
}

MatGroup symmetric_matrices(FieldPtr F, int k) {
  std::vector<SemiElement> g;
  for (auto& s : symmetric_generators(k)) g.emplace_back(perm_matrix(F, s));
  if (g.empty()) g.push_back(SemiElement(Matrix::identity(F, k)));
  return MatGroup(Ambient(k, F), g, "Sym(" + std::to_string(k) + ")");
}

MatGroup wreath(const MatGroup& X, int k, const std::vector<Perm>& Y) {
  const Ambient& ax = X.ambient();
  const int m = ax.n;
  FieldPtr F = ax.F;
  std::vector<SemiElement> gens;
  for (auto& g : X.gens()) {
    if (!g.is_linear()) throw InvalidArgument("wreath: X must be linear");
    for (int b = 0; b < k; ++b) {
      Matrix big = Matrix::identity(F, m * k);
      set_block(big, b * m, b * m, g.g);
      gens.emplace_back(big);
    }
  }
  for (auto& s : Y) {
    if (static_cast<int>(s.size()) != k) throw DimensionError("wreath: permutation degree");
    gens.emplace_back(kron(Matrix::identity(F, m), perm_matrix(F, s)));
  }
  if (gens.empty()) gens.emplace_back(Matrix::identity(F, m * k));
  return MatGroup(Ambient(m * k, F), gens, X.name() + " wr " + std::to_string(k));
}

// ---- explicit matrices

Matrix matrix_A(FieldPtr F, int n) {
  if (n < 1) throw InvalidArgument("matrix_A: n >= 1");
  Matrix A(F, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) A.at(i, j) = ((j - i) % 2) ? F->neg(1) : 1;
  return A;
}

Matrix matrix_a(FieldPtr F, int n, int m) {
  if (m < 1 || 2 * m > n) throw InvalidArgument("matrix_a: need 1 <= m <= n/2");
  Perm s(n);
  for (int i = 0; i < n; ++i) s[i] = i;
  for (int i = 0; i < m; ++i) std::swap(s[i], s[n - m + i]);
  return perm_matrix(F, s);
}

Matrix reversal_matrix(FieldPtr F, int n) {
  Perm s(n);
  for (int i = 0; i < n; ++i) s[i] = n - 1 - i;
  Matrix d = Matrix::identity(F, n);
  if (perm_sign(s) < 0) d.at(0, 0) = F->neg(1);
  return d * perm_matrix(F, s);
}

ConjugatorPair conjugator_irrtog(const std::vector<Matrix>& x_blocks, int n) {
  if (x_blocks.empty()) throw InvalidArgument("conjugator_irrtog: no blocks");
  int total = 0;
  for (auto& b : x_blocks) {
    if (!b.square()) throw DimensionError("conjugator_irrtog: square blocks");
    total += b.rows();
  }
  if (total != n) throw DimensionError("conjugator_irrtog: block sizes must sum to n");
  std::vector<Matrix> rev(x_blocks.rbegin(), x_blocks.rend());
  return {block_diag(rev), reversal_matrix(x_blocks[0].field(), n)};
}

Matrix conjugator_diag_z(FieldPtr F, int n, int m) {
  if (m < 1 || m >= n) throw InvalidArgument("conjugator_diag_z: need 1 <= m < n");
  Matrix z = Matrix::identity(F, n);
  for (int i = n - m; i < n; ++i)
    for (int c = 0; c < n - m; ++c) z.at(i, c) = 1;
  return z;
}

Matrix conjugator_igrekl(const std::vector<Matrix>& parts, int m, int k) {
  if (static_cast<int>(parts.size()) != k || k < 1) throw DimensionError("conjugator_igrekl: need k parts");
  for (auto& p : parts)
    if (p.rows() != m || p.cols() != m) throw DimensionError("conjugator_igrekl: parts must be m x m");
  FieldPtr F = parts[0].field();
  return block_diag(parts) * kron(Matrix::identity(F, m), matrix_A(F, k));
}

Triple prop_ni1_xyz(FieldPtr F, int n) {
  if (n < 2) throw InvalidArgument("prop_ni1_xyz: n >= 2");
  if (n == 2 && (F->q() == 2 || F->q() == 3)) throw InvalidArgument("prop_ni1_xyz: (n,q) excluded");
  Matrix y = Matrix::identity(F, n), z = Matrix::identity(F, n);
  for (int c = 0; c < n; ++c) {
    y.at(n - 1, c) = 1;
    z.at(n - 1, c) = 1;
  }
  z.at(n - 1, 0) = theta(F);
  return {reversal_matrix(F, n), y, z};
}

// ---- regular-orbit witnesses

namespace {

Vec vec_of(const FieldPtr& F, int n, const std::vector<std::pair<int, Elt>>& terms) {
  Vec v(n, 0);
  for (auto [i, c] : terms) v[i - 1] = F->add(v[i - 1], c);
  return v;
}

// support union, first vector wins on overlaps
Vec merge(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i)
    if (!r[i]) r[i] = b[i];
  return r;
}

}  // namespace

std::vector<std::vector<Vec>> orbit_vectors(OrbitScheme s, FieldPtr F, const OrbitParams& p) {
  const int n = p.n;
  const Elt th = theta(F);
  std::vector<std::vector<Vec>> out(5);
  if (s == OrbitScheme::orb) {
    const int m = p.m;
    if (n < 4 || m < 2 || n - m < 2) throw InvalidArgument("orb: need n >= 4, m >= 2, n - m >= 2");
    for (int i = 1; i <= 5; ++i) {
      // lead: theta v1 for i <= 3, v2 for i >= 4
      std::pair<int, Elt> lead = i <= 3 ? std::pair<int, Elt>{1, th} : std::pair<int, Elt>{2, 1};
      Vec u1, u2;
      switch (i) {
        case 1:
          u1 = vec_of(F, n, {{1, th}, {2, 1}});
          u2 = vec_of(F, n, {{1, th}, {3, 1}, {4, 1}});
          break;
        case 2:
          u1 = vec_of(F, n, {{1, th}, {3, 1}});
          u2 = vec_of(F, n, {{1, th}, {2, 1}, {4, 1}});
          break;
        case 3:
          u1 = vec_of(F, n, {{1, th}, {4, 1}});
          u2 = vec_of(F, n, {{1, th}, {2, 1}, {3, 1}});
          break;
        case 4:
          u1 = vec_of(F, n, {{2, 1}, {3, 1}});
          u2 = vec_of(F, n, {{1, th}, {2, 1}, {4, 1}});
          break;
        default:
          u1 = vec_of(F, n, {{2, 1}, {4, 1}});
          u2 = vec_of(F, n, {{1, th}, {2, 1}, {3, 1}});
          break;
      }
      // the last vector collects the coordinates no earlier vector uses; for
      // m = 2 it merges with u_(i,2), which already uses v_4
      std::vector<std::pair<int, Elt>> tail{lead};
      for (int r = std::max(m + 2, 5); r <= n; ++r) tail.emplace_back(r, 1);
      Vec um = vec_of(F, n, tail);
      auto& list = out[i - 1];
      list.push_back(u1);
      if (m == 2) {
        list.push_back(merge(u2, um));
        continue;
      }
      list.push_back(u2);
      for (int r = 1; r <= m - 3; ++r) list.push_back(vec_of(F, n, {lead, {4 + r, 1}}));
      list.push_back(um);
    }
    return out;
  }
  // orb2
  const int l = p.l;
  if (n < 9) throw InvalidArgument("orb2: need n >= 9");
  const bool l_ok = (n % 2 == 0) ? 2 * l > n : 2 * l > n + 1;
  if (!l_ok || l + 1 > n) throw InvalidArgument("orb2: need l > n/2 (even n) or l > (n+1)/2 (odd n)");
  const int sidx = n - l;
  const int m = n - l + 1;
  if (m < 3) throw InvalidArgument("orb2: the displays need m = n - l + 1 >= 3");
  std::vector<int> w;
  for (int i = 1; i <= n; ++i)
    if (i != sidx && i != sidx + 1 && i != l && i != l + 1) w.push_back(i);
  for (int i = 1; i <= 5; ++i) {
    std::vector<int> wi;  // w with w_i removed
    for (int t = 0; t < static_cast<int>(w.size()); ++t)
      if (t != i - 1) wi.push_back(w[t]);
    auto& list = out[i - 1];
    list.push_back(vec_of(F, n, {{sidx, 1}, {l + 1, 1}}));
    list.push_back(vec_of(F, n, {{sidx, 1}, {sidx + 1, 1}, {l, 1}, {w[i - 1], 1}}));
    for (int r = 1; r <= m - 3; ++r) list.push_back(vec_of(F, n, {{sidx + 1, 1}, {wi[r - 1], 1}}));
    std::vector<std::pair<int, Elt>> tail{{sidx + 1, 1}};
    for (int r = m - 2; r <= n - 5; ++r) tail.emplace_back(wi[r - 1], 1);
    list.push_back(vec_of(F, n, tail));
  }
  return out;
}

Matrix complete_to_sl(FieldPtr F, int n, const std::vector<std::pair<int, Vec>>& fixed_rows) {
  std::vector<bool> fixed(n, false);
  std::vector<Vec> chosen;
  Matrix z(F, n, n);
  for (auto& [r, v] : fixed_rows) {
    if (r < 0 || r >= n || fixed[r]) throw InvalidArgument("complete_to_sl: bad row index");
    fixed[r] = true;
    chosen.push_back(v);
    for (int c = 0; c < n; ++c) z.at(r, c) = v[c];
  }
  if (rank_rows(F, chosen, n) != static_cast<int>(chosen.size()))
    throw InvalidArgument("complete_to_sl: prescribed rows are dependent");
  int first_free = -1;
  for (int r = 0; r < n; ++r) {
    if (fixed[r]) continue;
    if (first_free < 0) first_free = r;
    std::vector<int> order{r};
    for (int c = 0; c < n; ++c)
      if (c != r) order.push_back(c);
    bool placed = false;
    for (int c : order) {
      Vec e(n, 0);
      e[c] = 1;
      chosen.push_back(e);
      if (rank_rows(F, chosen, n) == static_cast<int>(chosen.size())) {
        z.at(r, c) = 1;
        placed = true;
        break;
      }
      chosen.pop_back();
    }
    if (!placed) throw InvalidArgument("complete_to_sl: completion failed");
  }
  Elt d = det(z);
  if (d != 1) {
    if (first_free < 0) throw InvalidArgument("complete_to_sl: no free row to fix the determinant");
    Elt s = F->inv(d);
    for (int c = 0; c < n; ++c) z.at(first_free, c) = F->mul(z(first_free, c), s);
  }
  return z;
}

std::vector<Matrix> orbit_witnesses(OrbitScheme s, FieldPtr F, const OrbitParams& p) {
  auto us = orbit_vectors(s, F, p);
  const int m = static_cast<int>(us[0].size());
  std::vector<Matrix> out;
  for (auto& list : us) {
    std::vector<std::pair<int, Vec>> rows;
    for (int j = 0; j < m; ++j) rows.emplace_back(p.n - m + j, list[j]);
    out.push_back(complete_to_sl(F, p.n, rows));
  }
  return out;
}

// ---- z matrices

const char* gr_variant_name(GrVariant v) {
  switch (v) {
    case GrVariant::def1: return "GRzdef1";
    case GrVariant::def2: return "GRzdef2";
    case GrVariant::q23: return "GRzdefq23";
    case GrVariant::q23mr: return "GRzdefq23mr";
    case GrVariant::case221: return "GRzdefcase221";
    default: return "GRzdefcase222";
  }
}

GrVariant parse_gr_variant(const std::string& s) {
  for (GrVariant v : {GrVariant::def1, GrVariant::def2, GrVariant::q23, GrVariant::q23mr, GrVariant::case221,
                      GrVariant::case222})
    if (s == gr_variant_name(v)) return v;
  throw ParseError("unknown z variant: " + s);
}

namespace {

void check_lambda(const std::vector<int>& lam, int hi) {
  if (lam.empty()) throw InvalidArgument("need at least one 2x2 block position");
  for (size_t i = 0; i < lam.size(); ++i) {
    if (lam[i] < 1 || lam[i] + 1 > hi) throw InvalidArgument("block position out of range");
    if (i && lam[i] <= lam[i - 1] + 1) throw InvalidArgument("block positions must be increasing and disjoint");
  }
}

}  // namespace

Matrix gr_z(GrVariant v, FieldPtr F, const GrParams& p) {
  const int n = p.n;
  const Elt th = theta(F);
  Matrix z = Matrix::identity(F, n);
  auto set = [&](int row, int col, Elt val) { z.at(row - 1, col - 1) = val; };
  switch (v) {
    case GrVariant::def1: {
      const int m = p.m;
      if (n < 3 || m < 1 || 2 * m > n) throw InvalidArgument("GRzdef1: need n >= 3, 1 <= m <= n/2");
      if (p.r < 1 || p.r > n - 1) throw InvalidArgument("GRzdef1: need 1 <= r <= n-1");
      const int row = n - m + 1;
      const int tpos = p.r <= n - m ? p.r : n - m;
      for (int i = 1; i <= n - m; ++i) set(row, i, 1);
      set(row, tpos, th);
      for (int i = n - m + 2; i <= n; ++i) set(i, n - m, 1);
      break;
    }
    case GrVariant::def2: {
      const int m = p.m;
      if (n < 4 || 2 * m != n) throw InvalidArgument("GRzdef2: need n >= 4 even and m = n/2");
      set(n - m + 1, n - m, th);
      for (int i = n - m + 2; i <= n; ++i) set(i, n - m, 1);
      break;
    }
    case GrVariant::q23: {
      const int m = p.m;
      if (m < 2 || 2 * m > n) throw InvalidArgument("GRzdefq23: need 2 <= m <= n/2");
      check_lambda(p.lambda1, n);
      const int j1 = p.lambda1[0];
      std::vector<bool> in_l2(n + 2, false);
      for (int j : p.lambda1) in_l2[j + 1] = true;
      for (int i = 1; i <= n - m; ++i) {
        if (i != j1) set(n - m + 1, i, 1);
        if (!in_l2[i]) set(n - m + 2, i, 1);
      }
      for (int r = n - m + 3; r <= n; ++r)
        for (int i = 1; i <= n - m; ++i) set(r, i, 1);
      break;
    }
    case GrVariant::q23mr: {
      const int dt = p.dt;
      if (dt < 3 || dt >= n) throw InvalidArgument("GRzdefq23mr: need 3 <= d_t < n");
      check_lambda(p.lambda1, n);
      const int j1 = p.lambda1[0];
      std::vector<bool> in_l2(n + 2, false);
      for (int j : p.lambda1) in_l2[j + 1] = true;
      for (int i = 1; i <= n - dt; ++i) {
        if (i != j1) set(n - dt + 1, i, 1);
        if (!in_l2[i]) set(n - dt + 2, i, 1);
      }
      for (int i = 1; i <= n; ++i) set(n, i, 1);
      break;
    }
    case GrVariant::case221: {
      if (n < 5) throw InvalidArgument("GRzdefcase221: need n >= 5");
      for (int i = 2; i <= n - 2; ++i) set(n - 1, i, 1);
      set(n, 1, 1);
      for (int i = 3; i <= n - 2; ++i) set(n, i, 1);
      break;
    }
    case GrVariant::case222: {
      const int m = p.m, j1 = p.j1;
      if (m < 1 || m == 2 || 2 * m > n) throw InvalidArgument("GRzdefcase222: need m != 2, 1 <= m <= n/2");
      if (j1 < 3 || j1 + 1 > n - 1) throw InvalidArgument("GRzdefcase222: need 3 <= j1 <= n-2");
      set(j1, 1, 1);
      set(j1 + 1, 2, 1);
      for (int i = 1; i <= n - m; ++i) set(n, i, 1);
      break;
    }
  }
  return z;
}

// ---- pair stabilizers

namespace {
void check_pair_spec(const PairStabilizerSpec& s) {
  if (s.m < 1 || 2 * s.m > s.n) throw InvalidArgument("pair stabilizer: need 1 <= m <= n/2");
}
}  // namespace

SubspacePair pair_subspaces(FieldPtr F, const PairStabilizerSpec& s) {
  check_pair_spec(s);
  std::vector<int> U, W;
  for (int i = s.n - s.m; i < s.n; ++i) U.push_back(i);
  if (s.kind == PairKind::parabolic) {
    for (int i = s.m; i < s.n; ++i) W.push_back(i);
  } else {
    for (int i = 0; i < s.n - s.m; ++i) W.push_back(i);
  }
  return {Subspace::coordinate(F, s.n, U), Subspace::coordinate(F, s.n, W)};
}

std::vector<int> pair_blocks(const PairStabilizerSpec& s) {
  check_pair_spec(s);
  if (s.kind == PairKind::direct_sum) return {s.n - s.m, s.m};
  if (s.n == 2 * s.m) return {s.m, s.m};
  return {s.m, s.n - 2 * s.m, s.m};
}

SemiElement pair_iota_element(FieldPtr F, const PairStabilizerSpec& s) {
  check_pair_spec(s);
  Matrix a = s.kind == PairKind::parabolic ? matrix_a(F, s.n, s.m) : Matrix::identity(F, s.n);
  return SemiElement(a, 0, 1);
}

Ambient pair_ambient(FieldPtr F, const PairStabilizerSpec& s) {
  return Ambient(s.n, F, s.include_phi && F->f() > 1, s.include_iota);
}

MatGroup pair_stabilizer(FieldPtr F, const PairStabilizerSpec& s) {
  Ambient amb = pair_ambient(F, s);
  auto blocks = pair_blocks(s);
  std::vector<int> off{0};
  for (int b : blocks) off.push_back(off.back() + b);
  std::vector<SemiElement> gens;
  for (size_t b = 0; b < blocks.size(); ++b) {
    for (auto& g : gl_generators(F, blocks[b])) {
      Matrix big = Matrix::identity(F, s.n);
      set_block(big, off[b], off[b], g.g);
      gens.emplace_back(big);
    }
  }
  if (s.kind == PairKind::parabolic) {
    for (size_t a = 0; a < blocks.size(); ++a)
      for (size_t b = a + 1; b < blocks.size(); ++b)
        for (int r = off[a]; r < off[a + 1]; ++r)
          for (int c = off[b]; c < off[b + 1]; ++c)
            for (uint32_t k = 0; k < F->f(); ++k) gens.emplace_back(elementary(F, s.n, r, c, F->exp(k)));
  }
  if (amb.allow_phi) gens.push_back(SemiElement::phi(amb));
  if (s.include_iota) gens.push_back(pair_iota_element(F, s));
  SubspacePair P = pair_subspaces(F, s);
  MatGroup closed(amb, gens);
  bool phi_ok = amb.allow_phi, iota_ok = amb.allow_iota;
  Predicate pred = [P, phi_ok, iota_ok](const SemiElement& x) {
    if ((x.j && !phi_ok) || (x.l && !iota_ok)) return false;
    return act(P, x) == P;
  };
  Enumerator en = [closed](const Visitor& v) { closed.for_each(v); };
  std::string name = s.kind == PairKind::parabolic ? "P" : "GLxGL";
  name += "(" + std::to_string(s.m) + "," + std::to_string(s.n - s.m) + ")";
  return MatGroup::structural(amb, gens, pred, en, std::nullopt, name);
}

// ---- assorted groups

MatGroup gl23_in_gl29(bool with_phi) {
  FieldPtr F = gf(9);
  Ambient amb(2, F, with_phi);
  std::vector<SemiElement> gens{SemiElement(Matrix::from_rows(F, {{1, 1}, {0, 1}})),
                                SemiElement(Matrix::from_rows(F, {{1, 0}, {1, 1}})),
                                SemiElement(diag(F, {2, 1})), SemiElement(Matrix::scalar(F, 2, theta(F)))};
  if (with_phi) gens.push_back(SemiElement::phi(amb));
  return MatGroup(amb, gens, with_phi ? "GL2(3)Z:phi" : "GL2(3)Z");
}

ConjugatorPair gl29_chain_xy() {
  FieldPtr F = gf(9);
  const Elt w = 3;
  if (F->sub(F->sub(F->mul(w, w), w), 1) != 0) throw FieldError("GF(9) generator is not a root of w^2-w-1");
  Matrix x = Matrix::from_rows(F, {{F->inv(w), F->mul(w, w)}, {0, w}});
  Matrix y = Matrix::from_rows(F, {{0, F->neg(1)}, {1, 0}});
  return {x, y};
}

Gl32Data gl32_data() {
  FieldPtr F = gf(2);
  return {Matrix::from_rows(F, {{0, 0, 1}, {1, 0, 0}, {0, 1, 1}}),
          Matrix::from_rows(F, {{1, 0, 1}, {1, 1, 1}, {0, 0, 1}}),
          Matrix::from_rows(F, {{1, 1, 1}, {0, 1, 0}, {1, 0, 0}})};
}

MatGroup gl32_singer_normalizer() {
  FieldPtr F = gf(2);
  Ambient amb(3, F);
  MatGroup T(amb, {SemiElement(gl32_data().singer)}, "Singer");
  MatGroup G(amb, gl_generators(F, 3), "GL3(2)");
  return normalizer_in(T, G).named("N(Singer)");
}

MatGroup q8_normalizer(FieldPtr F) {
  if (F->p() == 2) throw InvalidArgument("q8_normalizer: q odd");
  Ambient amb(2, F);
  const Elt m1 = F->neg(1);
  for (Elt a = 0; a < F->q(); ++a)
    for (Elt b = 0; b < F->q(); ++b) {
      if (F->add(F->mul(a, a), F->mul(b, b)) != m1) continue;
      Matrix i = Matrix::from_rows(F, {{0, 1}, {m1, 0}});
      Matrix j = Matrix::from_rows(F, {{a, b}, {b, F->neg(a)}});
      MatGroup Q(amb, {SemiElement(i), SemiElement(j)}, "Q8");
      MatGroup G(amb, gl_generators(F, 2), "GL2");
      return normalizer_in(Q, G).named("N(Q8)");
    }
  throw InvalidArgument("q8_normalizer: no solution of a^2 + b^2 = -1");
}

MatGroup borel(const Ambient& amb) {
  FieldPtr F = amb.F;
  std::vector<SemiElement> gens;
  for (int i = 0; i < amb.n; ++i) {
    Matrix d = Matrix::identity(F, amb.n);
    d.at(i, i) = theta(F);
    gens.emplace_back(d);
    for (int c = i + 1; c < amb.n; ++c)
      for (uint32_t k = 0; k < F->f(); ++k) gens.emplace_back(elementary(F, amb.n, i, c, F->exp(k)));
  }
  if (amb.allow_phi) gens.push_back(SemiElement::phi(amb));
  MatGroup closed(amb, gens);
  bool phi = amb.allow_phi;
  Predicate pred = [phi](const SemiElement& x) { return x.l == 0 && (phi || x.j == 0) && x.g.is_upper_triangular(); };
  Enumerator en = [closed](const Visitor& v) { closed.for_each(v); };
  return MatGroup::structural(amb, gens, pred, en, std::nullopt, phi ? "B:phi" : "B");
}

MatGroup diagonal_group(const Ambient& amb) {
  FieldPtr F = amb.F;
  std::vector<SemiElement> gens;
  for (int i = 0; i < amb.n; ++i) {
    Matrix d = Matrix::identity(F, amb.n);
    d.at(i, i) = theta(F);
    gens.emplace_back(d);
  }
  if (amb.allow_phi) gens.push_back(SemiElement::phi(amb));
  MatGroup closed(amb, gens);
  bool phi = amb.allow_phi;
  Predicate pred = [phi](const SemiElement& x) { return x.l == 0 && (phi || x.j == 0) && x.g.is_diagonal(); };
  Enumerator en = [closed](const Visitor& v) { closed.for_each(v); };
  return MatGroup::structural(amb, gens, pred, en, std::nullopt, phi ? "D:phi" : "D");
}

}  // namespace sbase
