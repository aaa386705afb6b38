#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "sbase/linalg.hpp"

using namespace sbase;

namespace {

Matrix random_matrix(FieldPtr F, int n, std::mt19937& rng) {
  Matrix m(F, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = rng() % F->q();
  return m;
}

Matrix random_invertible(FieldPtr F, int n, std::mt19937& rng) {
  for (;;) {
    Matrix m = random_matrix(F, n, rng);
    if (det(m) != 0) return m;
  }
}

// Leibniz expansion, independent of elimination
Elt leibniz_det(const Matrix& m) {
  const Field& F = *m.field();
  int n = m.rows();
  std::vector<int> s(n);
  std::iota(s.begin(), s.end(), 0);
  Elt total = 0;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += s[i] > s[j];
    Elt t = 1;
    for (int i = 0; i < n; ++i) t = F.mul(t, m(i, s[i]));
    total = (inv % 2) ? F.sub(total, t) : F.add(total, t);
  } while (std::next_permutation(s.begin(), s.end()));
  return total;
}

int inversion_sign(const std::vector<int>& s) {
  int inv = 0;
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j) inv += s[i] > s[j];
  return inv % 2 ? -1 : 1;
}

}  // namespace

TEST(Matrix, DeterminantMatchesLeibniz) {
  std::mt19937 rng(11);
  for (uint32_t q : {2u, 3u, 4u, 5u, 8u, 9u, 25u}) {
    FieldPtr F = gf(q);
    for (int n = 1; n <= 4; ++n)
      for (int t = 0; t < 40; ++t) {
        Matrix m = random_matrix(F, n, rng);
        ASSERT_EQ(det(m), leibniz_det(m)) << m.str();
      }
  }
}

TEST(Matrix, InverseAndMultiplicativity) {
  std::mt19937 rng(5);
  for (uint32_t q : {2u, 3u, 4u, 7u, 9u, 16u}) {
    FieldPtr F = gf(q);
    for (int n = 1; n <= 5; ++n)
      for (int t = 0; t < 30; ++t) {
        Matrix a = random_invertible(F, n, rng), b = random_invertible(F, n, rng);
        ASSERT_TRUE((a * inverse(a)).is_identity());
        ASSERT_TRUE((inverse(a) * a).is_identity());
        ASSERT_EQ(det(a * b), F->mul(det(a), det(b)));
        ASSERT_EQ(transpose(a * b), transpose(b) * transpose(a));
        ASSERT_EQ(iota(a * b), iota(a) * iota(b));
      }
  }
}

TEST(Matrix, SingularInverseThrows) {
  FieldPtr F = gf(5);
  Matrix m = Matrix::from_rows(F, {{1, 2}, {2, 4}});
  EXPECT_EQ(det(m), 0u);
  EXPECT_THROW(inverse(m), SingularMatrix);
  EXPECT_EQ(rank(m), 1);
}

TEST(Matrix, PermutationMatricesOverSym4) {
  FieldPtr F = gf(5);
  std::vector<int> s{0, 1, 2, 3};
  int count = 0;
  do {
    Matrix P = perm_matrix(F, s);
    Elt expect = inversion_sign(s) == 1 ? 1 : F->neg(1);
    EXPECT_EQ(det(P), expect);
    EXPECT_EQ(perm_sign(s), inversion_sign(s));
    // e_i P = e_sigma(i)
    for (int i = 0; i < 4; ++i) {
      std::vector<Elt> e(4, 0);
      e[i] = 1;
      auto img = vec_mul(e, P);
      for (int j = 0; j < 4; ++j) EXPECT_EQ(img[j], j == s[i] ? 1u : 0u);
    }
    ++count;
  } while (std::next_permutation(s.begin(), s.end()));
  EXPECT_EQ(count, 24);
}

TEST(Matrix, PermutationComposition) {
  // perm(s) perm(t) = perm(t o s) under the right action
  FieldPtr F = gf(3);
  std::vector<int> s{1, 2, 0, 3}, t{3, 0, 1, 2}, ts(4);
  for (int i = 0; i < 4; ++i) ts[i] = t[s[i]];
  EXPECT_EQ(perm_matrix(F, s) * perm_matrix(F, t), perm_matrix(F, ts));
}

TEST(Matrix, KroneckerBlocks) {
  FieldPtr F = gf(7);
  Matrix g = Matrix::from_rows(F, {{1, 2}, {3, 4}});
  Matrix h = Matrix::from_rows(F, {{0, 5}, {6, 1}});
  Matrix k = kron(g, h);
  ASSERT_EQ(k.rows(), 4);
  for (int bi = 0; bi < 2; ++bi)
    for (int bj = 0; bj < 2; ++bj)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) EXPECT_EQ(k(2 * bi + i, 2 * bj + j), F->mul(h(bi, bj), g(i, j)));
  // mixed product
  Matrix g2 = Matrix::from_rows(F, {{2, 0}, {1, 1}}), h2 = Matrix::from_rows(F, {{1, 1}, {0, 3}});
  EXPECT_EQ(kron(g, h) * kron(g2, h2), kron(g * g2, h * h2));
  // det(g (x) A) for k x k A = det(g)^k det(A)^2
  EXPECT_EQ(det(kron(g, h)), F->mul(F->pow(det(g), 2), F->pow(det(h), 2)));
}

TEST(Matrix, BlockAndDiag) {
  FieldPtr F = gf(5);
  Matrix a = Matrix::from_rows(F, {{1, 2}, {3, 4}});
  Matrix b = Matrix::scalar(F, 1, 3);
  Matrix d = block_diag({a, b});
  EXPECT_EQ(d.str(), "1,2,0;3,4,0;0,0,3");
  EXPECT_EQ(diag(F, {1, 2, 3}).str(), "1,0,0;0,2,0;0,0,3");
  EXPECT_TRUE(diag(F, {1, 2, 3}).is_diagonal());
  EXPECT_FALSE(a.is_upper_triangular());
}

TEST(Matrix, TextFormatRoundTrip) {
  FieldPtr F = gf(9);
  std::mt19937 rng(1);
  for (int t = 0; t < 50; ++t) {
    Matrix m = random_matrix(F, 3, rng);
    EXPECT_EQ(Matrix::parse(F, m.str()), m);
  }
  EXPECT_THROW(Matrix::parse(F, "1,2;3"), ParseError);
  EXPECT_THROW(Matrix::parse(F, "1,x;3,4"), ParseError);
  EXPECT_THROW(Matrix::parse(F, "1,9;3,4"), ParseError);
}

TEST(Matrix, CanonicalKeyOrder) {
  FieldPtr F = gf(3);
  Matrix a = Matrix::from_rows(F, {{0, 1}, {1, 0}}), b = Matrix::from_rows(F, {{1, 0}, {0, 1}});
  EXPECT_TRUE(a < b);
  EXPECT_TRUE(a.key_bytes() < b.key_bytes());
}

TEST(Matrix, FrobeniusEntrywise) {
  FieldPtr F = gf(8);
  std::mt19937 rng(2);
  Matrix a = random_invertible(F, 3, rng), b = random_invertible(F, 3, rng);
  EXPECT_EQ(frob(a * b, 1), frob(a, 1) * frob(b, 1));
  EXPECT_EQ(frob(a, 3), a);
  EXPECT_EQ(frob(frob(a, 1), 2), a);
  EXPECT_EQ(frob(a, -1), frob(a, 2));
}

TEST(Matrix, MixedFieldsRejected) {
  Matrix a = Matrix::identity(gf(5), 2), b = Matrix::identity(gf(7), 2);
  EXPECT_THROW(a * b, FieldError);
}
