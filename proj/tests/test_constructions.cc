#include <gtest/gtest.h>

#include <random>
#include <set>

#include "sbase/constructions.hpp"

using namespace sbase;

namespace {

Matrix random_in(const MatGroup& G, std::mt19937& rng) {
  const ElementSet& es = G.elements();
  return es.element(rng() % es.size()).g;
}

bool generates_same(const Ambient& amb, const Matrix& a, const Matrix& b) {
  return same_elements(MatGroup(amb, {SemiElement(a)}), MatGroup(amb, {SemiElement(b)}));
}

}  // namespace

TEST(Singer, OrdersOfDisplayedModels) {
  EXPECT_EQ(singer(singer_model(gf(5), 2, 2)).order(), 24u);
  // valid a for GF(4) by direct root check over the four elements
  FieldPtr F4 = gf(4);
  std::vector<Elt> valid;
  for (Elt a = 0; a < 4; ++a) {
    bool root = false;
    for (Elt t = 0; t < 4; ++t) root |= F4->add(F4->add(F4->mul(t, t), t), a) == 0;
    if (!root) valid.push_back(a);
  }
  EXPECT_EQ(singer_parameters(F4), valid);
  EXPECT_EQ(valid.size(), 2u);
  EXPECT_TRUE(std::find(valid.begin(), valid.end(), 2u) != valid.end());
  EXPECT_EQ(singer(singer_model(F4, 2, 2)).order(), 15u);
  EXPECT_THROW(singer_model(gf(5), 2, 4), InvalidArgument);  // 4 = 2^2 is a square
  EXPECT_THROW(singer_model(gf(4), 2, 0), InvalidArgument);
}

TEST(Singer, ScalarsLieInTheCycle) {
  MatGroup S = singer(singer_model(gf(5), 2, 2));
  EXPECT_TRUE(S.contains(SemiElement(diag(gf(5), {2, 2}))));
}

TEST(Singer, CycleUnionZeroIsAField) {
  for (uint32_t q : {3u, 5u, 7u, 9u, 4u, 8u}) {
    FieldPtr F = gf(q);
    for (Elt a : singer_parameters(F)) {
      SingerModel m = singer_model(F, 2, a);
      MatGroup S = singer(m);
      ASSERT_EQ(S.order(), q * q - 1) << q << " " << a;
      std::set<Matrix> with_zero;
      S.for_each([&](const SemiElement& e) { with_zero.insert(e.g); });
      with_zero.insert(Matrix(F, 2, 2));
      for (auto& x : with_zero)
        for (auto& y : with_zero) ASSERT_TRUE(with_zero.count(x + y)) << q << " " << a;
    }
  }
}

TEST(Singer, FieldModelConjugateToDisplayedGl32Cycle) {
  FieldPtr F = gf(2);
  Ambient amb(3, F);
  Matrix t = singer_generator(singer_model(F, 3));
  EXPECT_EQ(element_order(SemiElement(t)), 7u);
  MatGroup target(amb, {SemiElement(gl32_data().singer)});
  MatGroup G(amb, gl_generators(F, 3));
  ASSERT_EQ(G.order(), 168u);
  bool found = false;
  G.for_each([&](const SemiElement& g) {
    if (!found && target.contains(conj(SemiElement(t), g))) found = true;
  });
  EXPECT_TRUE(found);
}

TEST(Singer, NormalizerOrders) {
  EXPECT_EQ(singer_normalizer(singer_model(gf(7), 2, 3)).order(), 96u);
  EXPECT_EQ(singer_normalizer(singer_model(gf(2), 3)).order(), 21u);
  EXPECT_EQ(singer_normalizer(singer_model(gf(5), 2, 2)).order(), 48u);
  struct Case {
    int n;
    uint32_t q;
  };
  for (Case c : {Case{3, 3}, Case{4, 2}, Case{3, 4}, Case{2, 9}, Case{2, 8}, Case{5, 2}}) {
    SingerModel m = singer_model(gf(c.q), c.n);
    uint64_t s = singer(m).order(), ns = singer_normalizer(m).order();
    EXPECT_EQ(ns, s * c.n) << c.n << " " << c.q;
    // the normalizing element conjugates the generator to a power of itself
    SemiElement t(singer_generator(m)), psi(singer_normalizing_element(m));
    EXPECT_TRUE(singer(m).contains(conj(t, psi)));
  }
}

TEST(Singer, FieldModelFrobeniusIsQPower) {
  SingerModel m = singer_model(gf(3), 3);
  SemiElement t(singer_generator(m)), psi(singer_normalizing_element(m));
  EXPECT_EQ(conj(t, psi), power(t, 3));
}

TEST(Singer, NormalizerMatchesBruteForceInSmallGL) {
  FieldPtr F = gf(3);
  Ambient amb(2, F);
  SingerModel m = singer_model(F, 2);
  MatGroup G(amb, gl_generators(F, 2));
  EXPECT_TRUE(same_elements(normalizer_in(singer(m), G), singer_normalizer(m)));
}

TEST(Singer, GammaNormalizers) {
  FieldPtr F9 = gf(9);
  Elt a = F9->primitive_element();
  ASSERT_FALSE(F9->is_square(a));
  MatGroup N9 = gamma_singer_normalizer(F9, a);
  EXPECT_EQ(N9.order(), 320u);
  EXPECT_TRUE(is_subgroup_of(singer(singer_model(F9, 2, a)), N9));
  MatGroup N4 = gamma_singer_normalizer(gf(4), 2);
  EXPECT_EQ(N4.order(), 60u);
  // the phi-coset generators normalize the cycle
  for (auto [F, b] : {std::pair<FieldPtr, Elt>{F9, a}, {gf(4), 2u}, {gf(8), singer_parameters(gf(8))[0]}}) {
    SingerModel m = singer_model(F, 2, b);
    SemiElement t(singer_generator(m));
    MatGroup S = singer(m);
    EXPECT_TRUE(S.contains(conj(t, gamma_singer_element(F, b))));
  }
  EXPECT_THROW(gamma_singer_normalizer(gf(5), 2), InvalidArgument);
}

TEST(Wreath, Orders) {
  FieldPtr F3 = gf(3);
  MatGroup gl13(Ambient(1, F3), gl_generators(F3, 1));
  EXPECT_EQ(wreath(gl13, 2, symmetric_generators(2)).order(), 8u);
  MatGroup gl23(Ambient(2, F3), gl_generators(F3, 2));
  EXPECT_EQ(wreath(gl23, 2, symmetric_generators(2)).order(), 4608u);
  MatGroup s4 = symmetric_matrices(gf(2), 4);
  EXPECT_EQ(wreath(s4, 2, symmetric_generators(2)).order(), 1152u);
  EXPECT_EQ(symmetric_matrices(gf(2), 8).order(), 40320u);
}

TEST(Wreath, SingerNormalizerWreathIsIrreducible) {
  FieldPtr F = gf(5);
  MatGroup N = singer_normalizer(singer_model(F, 2, 2));
  MatGroup W = wreath(N, 2, symmetric_generators(2));
  // no projective point is fixed by all generators
  const int n = 4;
  int fixed_points = 0;
  for (uint32_t code = 1; code < 625; ++code) {
    Vec v(n);
    uint32_t u = code;
    for (int i = 0; i < n; ++i) {
      v[i] = u % 5;
      u /= 5;
    }
    Subspace P = Subspace::span(F, n, {v});
    bool inv = true;
    for (auto& g : W.gens()) inv = inv && act(P, g) == P;
    fixed_points += inv;
  }
  EXPECT_EQ(fixed_points, 0);
}

TEST(Matrices, AAndSmallA) {
  for (uint32_t q : {3u, 5u, 4u}) {
    FieldPtr F = gf(q);
    EXPECT_EQ(matrix_A(F, 1), Matrix::identity(F, 1));
    for (int n = 2; n <= 6; ++n) {
      Matrix inv = Matrix::identity(F, n);
      for (int i = 0; i + 1 < n; ++i) inv.at(i, i + 1) = 1;
      EXPECT_EQ(inverse(matrix_A(F, n)), inv);
    }
  }
  FieldPtr F = gf(7);
  EXPECT_TRUE((matrix_a(F, 4, 2) * matrix_a(F, 4, 2)).is_identity());
  for (int n = 2; n <= 7; ++n)
    for (int m = 1; 2 * m <= n; ++m) EXPECT_TRUE(pow(matrix_a(F, n, m), 2).is_identity());
  EXPECT_THROW(matrix_a(F, 4, 3), InvalidArgument);
  EXPECT_THROW(matrix_a(F, 4, 0), InvalidArgument);
  // conjugation by a(n,m) swaps the outer blocks
  Matrix A = Matrix::from_rows(F, {{1, 2}, {3, 5}}), B = Matrix::scalar(F, 1, 4), C = Matrix::from_rows(F, {{2, 0}, {1, 1}});
  Matrix a = matrix_a(F, 5, 2);
  EXPECT_EQ(inverse(a) * block_diag({A, B, C}) * a, block_diag({C, B, A}));
}

TEST(Matrices, IrrtogConjugators) {
  FieldPtr F = gf(5);
  auto p = conjugator_irrtog({Matrix::identity(F, 2), Matrix::identity(F, 1), Matrix::identity(F, 2)}, 5);
  EXPECT_TRUE(p.x.is_identity());
  EXPECT_EQ(det(p.y), 1u);
  for (int n = 2; n <= 8; ++n) EXPECT_EQ(det(reversal_matrix(F, n)), 1u) << n;
  Matrix y4 = conjugator_irrtog({Matrix::identity(F, 4)}, 4).y;
  Matrix sq = y4 * y4;
  EXPECT_TRUE(sq == Matrix::identity(F, 4) || sq == Matrix::scalar(F, 4, F->neg(1)));
  // block order is reversed on the diagonal
  Matrix b1 = Matrix::scalar(F, 1, 2), b2 = Matrix::from_rows(F, {{1, 1}, {0, 1}});
  EXPECT_EQ(conjugator_irrtog({b1, b2}, 3).x, block_diag({b2, b1}));
  EXPECT_THROW(conjugator_irrtog({b1, b2}, 4), DimensionError);
}

TEST(Matrices, DiagZ) {
  FieldPtr F = gf(5);
  EXPECT_EQ(conjugator_diag_z(F, 2, 1), Matrix::from_rows(F, {{1, 0}, {1, 1}}));
  for (int n = 2; n <= 6; ++n)
    for (int m = 1; m < n; ++m) EXPECT_EQ(det(conjugator_diag_z(F, n, m)), 1u);
  EXPECT_THROW(conjugator_diag_z(F, 3, 3), InvalidArgument);
  Ambient amb(3, F);
  MatGroup D = diagonal_group(amb), B = borel(amb);
  ASSERT_EQ(D.order(), 64u);
  for (int m = 1; m < 3; ++m) {
    MatGroup I = intersect(D, conj_group(B, SemiElement(conjugator_diag_z(F, 3, m))));
    EXPECT_EQ(I.order(), 4u);
    EXPECT_TRUE(is_in_Z(I));
  }
}

TEST(Matrices, IgreklShapeAndDeterminant) {
  FieldPtr F = gf(3);
  Matrix I2 = Matrix::identity(F, 2);
  EXPECT_EQ(conjugator_igrekl({I2, I2}, 2, 2), kron(I2, matrix_A(F, 2)));
  std::mt19937 rng(3);
  MatGroup sl(Ambient(2, F), sl_generators(F, 2));
  for (int t = 0; t < 20; ++t) {
    std::vector<Matrix> parts{random_in(sl, rng), random_in(sl, rng), random_in(sl, rng)};
    EXPECT_EQ(det(conjugator_igrekl(parts, 2, 3)), 1u);
  }
  EXPECT_THROW(conjugator_igrekl({I2}, 2, 2), DimensionError);
}

TEST(Matrices, IgreklBlockPermutationMustBeTrivial) {
  // h = diag(D) s with h^x in X wr Y forces s = 1 and equal conjugated blocks
  struct Case {
    uint32_t q;
    int m, k;
  };
  std::mt19937 rng(17);
  for (Case c : {Case{3, 2, 2}, Case{5, 1, 3}}) {
    FieldPtr F = gf(c.q);
    MatGroup X(Ambient(c.m, F), gl_generators(F, c.m));
    MatGroup W = wreath(X, c.k, symmetric_generators(c.k));
    std::vector<Perm> perms;
    Perm s(c.k);
    for (int i = 0; i < c.k; ++i) s[i] = i;
    do perms.push_back(s);
    while (std::next_permutation(s.begin(), s.end()));
    int kept = 0;
    for (int t = 0; t < 400; ++t) {
      std::vector<Matrix> xs, Ds;
      for (int i = 0; i < c.k; ++i) {
        xs.push_back(random_in(X, rng));
        Ds.push_back(random_in(X, rng));
      }
      // bias half the samples toward the surviving shape
      if (t % 2) {
        for (int i = 1; i < c.k; ++i) Ds[i] = xs[i] * inverse(xs[0]) * Ds[0] * xs[0] * inverse(xs[i]);
      }
      const Perm& sg = perms[t % 3 == 0 ? 0 : rng() % perms.size()];
      Matrix h = block_diag(Ds) * kron(Matrix::identity(F, c.m), perm_matrix(F, sg));
      Matrix x = conjugator_igrekl(xs, c.m, c.k);
      SemiElement hx = conj(SemiElement(h), SemiElement(x));
      if (!W.contains(hx)) continue;
      ++kept;
      for (int i = 0; i < c.k; ++i) ASSERT_EQ(sg[i], i);
      for (int i = 0; i + 1 < c.k; ++i)
        ASSERT_EQ(inverse(xs[i]) * Ds[i] * xs[i], inverse(xs[i + 1]) * Ds[i + 1] * xs[i + 1]);
    }
    EXPECT_GT(kept, 0);
  }
}

TEST(Matrices, Ni1Triple) {
  FieldPtr F = gf(5);
  Triple t = prop_ni1_xyz(F, 2);
  EXPECT_EQ(t.x, Matrix::from_rows(F, {{0, 4}, {1, 0}}));
  EXPECT_EQ(t.y, Matrix::from_rows(F, {{1, 0}, {1, 1}}));
  EXPECT_EQ(t.z, Matrix::from_rows(F, {{1, 0}, {2, 1}}));
  for (uint32_t q : {4u, 5u, 7u, 9u, 2u, 3u})
    for (int n = 2; n <= 6; ++n) {
      if (n == 2 && q <= 3) {
        EXPECT_THROW(prop_ni1_xyz(gf(q), n), InvalidArgument);
        continue;
      }
      Triple u = prop_ni1_xyz(gf(q), n);
      EXPECT_EQ(det(u.x), 1u);
      EXPECT_EQ(det(u.y), 1u);
      EXPECT_EQ(det(u.z), 1u);
    }
}

TEST(OrbitWitnesses, Orb425) {
  FieldPtr F = gf(5);
  OrbitParams p{4, 2, 0};
  auto us = orbit_vectors(OrbitScheme::orb, F, p);
  auto zs = orbit_witnesses(OrbitScheme::orb, F, p);
  ASSERT_EQ(zs.size(), 5u);
  const Elt th = F->primitive_element();
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(det(zs[i]), 1u);
    EXPECT_EQ(rank_rows(F, us[i], 4), 2);
    for (int j = 0; j < 2; ++j)
      for (int c = 0; c < 4; ++c) EXPECT_EQ(zs[i](2 + j, c), us[i][j][c]);
  }
  // theta on v_1 in every u for i <= 3, only in u_{(i,2)} for i >= 4
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 2; ++j) EXPECT_EQ(us[i][j][0], (i < 3 || j == 1) ? th : 0u);
  EXPECT_EQ(us[0][0], (Vec{th, 1, 0, 0}));
  EXPECT_EQ(us[3][0], (Vec{0, 1, 1, 0}));
}

TEST(OrbitWitnesses, DeterminantsAndIndependenceAcrossRange) {
  for (uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u})
    for (int n = 4; n <= 8; ++n)
      for (int m = 2; n - m >= 2; ++m) {
        FieldPtr F = gf(q);
        auto us = orbit_vectors(OrbitScheme::orb, F, {n, m, 0});
        auto zs = orbit_witnesses(OrbitScheme::orb, F, {n, m, 0});
        for (int i = 0; i < 5; ++i) {
          ASSERT_EQ(static_cast<int>(us[i].size()), m);
          ASSERT_EQ(rank_rows(F, us[i], n), m);
          ASSERT_EQ(det(zs[i]), 1u);
        }
      }
  EXPECT_THROW(orbit_witnesses(OrbitScheme::orb, gf(5), {4, 3, 0}), InvalidArgument);
}

TEST(OrbitWitnesses, Orb2Shapes) {
  FieldPtr F = gf(3);
  for (int n = 9; n <= 11; ++n)
    for (int l = n / 2 + 1; l <= n - 2; ++l) {
      bool ok = (n % 2 == 0) ? 2 * l > n : 2 * l > n + 1;
      if (!ok) {
        EXPECT_THROW(orbit_vectors(OrbitScheme::orb2, F, {n, 0, l}), InvalidArgument);
        continue;
      }
      auto us = orbit_vectors(OrbitScheme::orb2, F, {n, 0, l});
      auto zs = orbit_witnesses(OrbitScheme::orb2, F, {n, 0, l});
      const int m = n - l + 1;
      for (int i = 0; i < 5; ++i) {
        ASSERT_EQ(static_cast<int>(us[i].size()), m);
        EXPECT_EQ(rank_rows(F, us[i], n), m);
        EXPECT_EQ(det(zs[i]), 1u);
      }
      // u_{(1,1)} = v_s + v_{l+1}
      Vec u11(n, 0);
      u11[n - l - 1] = 1;
      u11[l] = 1;
      EXPECT_EQ(us[0][0], u11);
    }
  EXPECT_THROW(orbit_vectors(OrbitScheme::orb2, F, {8, 0, 6}), InvalidArgument);
}

TEST(GrZ, Case222Explicit) {
  FieldPtr F = gf(5);
  GrParams p;
  p.n = 5;
  p.m = 1;
  p.j1 = 3;
  Matrix z = gr_z(GrVariant::case222, F, p);
  Matrix expect = Matrix::from_rows(F, {{1, 0, 0, 0, 0},
                                        {0, 1, 0, 0, 0},
                                        {1, 0, 1, 0, 0},
                                        {0, 1, 0, 1, 0},
                                        {1, 1, 1, 1, 1}});
  EXPECT_EQ(z, expect);
}

TEST(GrZ, Def2Explicit) {
  FieldPtr F = gf(7);
  GrParams p;
  p.n = 4;
  p.m = 2;
  Matrix z = gr_z(GrVariant::def2, F, p);
  Elt th = F->primitive_element();
  EXPECT_EQ(z, Matrix::from_rows(F, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, th, 1, 0}, {0, 1, 0, 1}}));
}

TEST(GrZ, Def1Explicit) {
  FieldPtr F = gf(5);
  GrParams p;
  p.n = 5;
  p.m = 2;
  p.r = 1;
  // row 4: theta v1 + v2 + v3 + v4; row 5: v3 + v5
  EXPECT_EQ(gr_z(GrVariant::def1, F, p),
            Matrix::from_rows(F, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {2, 1, 1, 1, 0}, {0, 0, 1, 0, 1}}));
  p.r = 4;
  EXPECT_EQ(gr_z(GrVariant::def1, F, p),
            Matrix::from_rows(F, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {1, 1, 2, 1, 0}, {0, 0, 1, 0, 1}}));
}

TEST(GrZ, DeterminantOneEverywhere) {
  for (uint32_t q : {2u, 3u, 5u, 4u, 9u}) {
    FieldPtr F = gf(q);
    for (int n = 3; n <= 8; ++n) {
      GrParams p;
      p.n = n;
      for (int m = 1; 2 * m <= n; ++m) {
        p.m = m;
        for (int r = 1; r < n; ++r) {
          p.r = r;
          EXPECT_EQ(det(gr_z(GrVariant::def1, F, p)), 1u);
        }
        if (2 * m == n && n >= 4) EXPECT_EQ(det(gr_z(GrVariant::def2, F, p)), 1u);
        if (m >= 2)
          for (int j = 1; j + 1 <= n - m; ++j) {
            p.lambda1 = {j};
            EXPECT_EQ(det(gr_z(GrVariant::q23, F, p)), 1u);
          }
        if (m != 2)
          for (int j = 3; j + 1 <= n - 1; ++j) {
            p.j1 = j;
            EXPECT_EQ(det(gr_z(GrVariant::case222, F, p)), 1u);
          }
      }
      for (int dt = 3; dt < n; ++dt)
        for (int j = 1; j + 1 <= n - dt; ++j) {
          p.dt = dt;
          p.lambda1 = {j};
          EXPECT_EQ(det(gr_z(GrVariant::q23mr, F, p)), 1u);
        }
      if (n >= 5) EXPECT_EQ(det(gr_z(GrVariant::case221, F, p)), 1u);
    }
  }
  EXPECT_EQ(parse_gr_variant("GRzdefq23mr"), GrVariant::q23mr);
  EXPECT_THROW(parse_gr_variant("GRzdef9"), ParseError);
}

TEST(PairStabilizer, ParabolicWithIotaMatchesBruteForce) {
  FieldPtr F = gf(2);
  PairStabilizerSpec s{4, 1, PairKind::parabolic, false, true};
  MatGroup P = pair_stabilizer(F, s);
  SemiElement ia = pair_iota_element(F, s);
  EXPECT_EQ(ia, SemiElement(matrix_a(F, 4, 1), 0, 1));
  EXPECT_TRUE(P.contains(ia));
  // |GL_1|^2 |GL_2| 2^5, doubled by the iota element
  EXPECT_EQ(P.order(), 384u);
  Ambient amb(4, F, false, true);
  auto gens = gl_generators(F, 4);
  gens.push_back(SemiElement::iota(amb));
  MatGroup A(amb, gens);
  ASSERT_EQ(A.order(), 40320u);
  SubspacePair pr = pair_subspaces(F, s);
  uint64_t count = 0;
  A.for_each([&](const SemiElement& x) { count += act(pr, x) == pr; });
  EXPECT_EQ(count, 384u);
  P.for_each([&](const SemiElement& x) { ASSERT_TRUE(act(pr, x) == pr); });
}

TEST(PairStabilizer, DirectSumOrder) {
  FieldPtr F = gf(3);
  PairStabilizerSpec s{3, 1, PairKind::direct_sum, false, false};
  MatGroup P = pair_stabilizer(F, s);
  EXPECT_EQ(P.order(), 2u * 48u);
  MatGroup G(Ambient(3, F), gl_generators(F, 3));
  uint64_t count = 0;
  SubspacePair pr = pair_subspaces(F, s);
  G.for_each([&](const SemiElement& x) { count += act(pr, x) == pr; });
  EXPECT_EQ(count, 96u);
  s.include_iota = true;
  EXPECT_EQ(pair_stabilizer(F, s).order(), 192u);
  EXPECT_THROW(pair_stabilizer(F, {3, 2, PairKind::direct_sum, false, false}), InvalidArgument);
}

TEST(PairStabilizer, PhiExtension) {
  FieldPtr F = gf(4);
  PairStabilizerSpec s{3, 1, PairKind::parabolic, true, true};
  MatGroup P = pair_stabilizer(F, s);
  // (q-1)^3 q^3 upper triangular, times phi and the iota element
  EXPECT_EQ(P.order(), 27u * 64u * 2u * 2u);
}

TEST(NamedGroups, Gl23InGl29) {
  MatGroup S = gl23_in_gl29(false);
  EXPECT_EQ(S.order(), 192u);
  EXPECT_EQ(gl23_in_gl29(true).order(), 384u);
  FieldPtr F = gf(9);
  for (Elt a = 1; a < 9; ++a) EXPECT_TRUE(S.contains(SemiElement(Matrix::scalar(F, 2, a))));
  auto xy = gl29_chain_xy();
  EXPECT_EQ(det(xy.x), 1u);
  EXPECT_EQ(det(xy.y), 1u);
  EXPECT_EQ(xy.x(0, 0), F->inv(3));
  EXPECT_EQ(xy.x(0, 1), F->mul(3, 3));
}

TEST(NamedGroups, Q8NormalizerOrders) {
  EXPECT_EQ(q8_normalizer(gf(5)).order(), 96u);
  EXPECT_EQ(q8_normalizer(gf(7)).order(), 144u);
}

TEST(NamedGroups, Gl32Normalizer) {
  MatGroup N = gl32_singer_normalizer();
  EXPECT_EQ(N.order(), 21u);
  auto d = gl32_data();
  EXPECT_EQ(element_order(SemiElement(d.expected)), 3u);
  EXPECT_EQ(det(d.x), 1u);
}

TEST(NamedGroups, BorelAndDiagonal) {
  Ambient amb(3, gf(3));
  EXPECT_EQ(borel(amb).order(), 8u * 27u);
  EXPECT_EQ(diagonal_group(amb).order(), 8u);
  Ambient amb4(2, gf(4), true);
  EXPECT_EQ(borel(amb4).order(), 9u * 4u * 2u);
}
