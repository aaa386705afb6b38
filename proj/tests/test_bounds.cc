#include <gtest/gtest.h>

#include <set>

#include "sbase/bounds.hpp"
#include "sbase/errors.hpp"

using namespace sbase;

namespace {

mpz_class Z(unsigned long v) { return mpz_class(v); }

// a^2/b >= 1 with b = q^(n^2/2)/(2n), by squaring: (2n a^2)^2 >= q^(n^2)
bool flagged_oracle(int n, unsigned long q) {
  mpz_class a = n * (ipow(Z(q), n) - 1) / (q - 1);
  mpz_class lhs = 2 * n * a * a;
  return lhs * lhs >= ipow(Z(q), n * n);
}

std::vector<PermVec> sym_gens(uint32_t n) {
  PermVec t(n), c(n);
  for (uint32_t i = 0; i < n; ++i) t[i] = i, c[i] = (i + 1) % n;
  std::swap(t[0], t[1]);
  return {t, c};
}

}  // namespace

TEST(RootRational, ArithmeticAndNormalization) {
  EXPECT_EQ(RootRational::power(4, 1, 2), RootRational::from_int(2));
  EXPECT_TRUE(RootRational::power(4, 1, 2).is_rational());
  RootRational r = RootRational::power(2, 25, 2) / RootRational::from_int(10);
  EXPECT_EQ(r.root(), 2u);
  EXPECT_LT(RootRational(mpq_class(4096, 10)), r);
  EXPECT_LT(r, RootRational(mpq_class(8192, 10)));
  EXPECT_EQ(r * r, RootRational(mpq_class(ipow(2, 25), 100)));
  EXPECT_EQ(RootRational::power(3, -2, 1), RootRational(mpq_class(1, 9)));
  EXPECT_THROW(RootRational(mpq_class(0)), InvalidArgument);
  EXPECT_EQ(RootRational::power(2, 1, 2).approx(4), "1.414e0");
}

TEST(ClassSize, DisplayedRegimes) {
  EXPECT_EQ(class_size_lower(2, 5, 1), mpq_class(25, 4));
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(class_size_lower(n, 3, n), mpq_class(ipow(3, n * n), 2 * n));
  // n = 8: s = 2, 3 give 2s(n-s); s = 1 is outside both regimes
  EXPECT_EQ(class_size_lower(8, 2, 2), mpq_class(ipow(2, 24), 16));
  EXPECT_THROW(class_size_lower(8, 2, 1), OutOfRegime);
  EXPECT_THROW(class_size_lower(4, 2, 0), InvalidArgument);
  EXPECT_THROW(class_size_lower(4, 2, 5), InvalidArgument);
}

TEST(ClassSize, MonotoneWithinEachRegime) {
  for (int n = 2; n <= 12; ++n)
    for (uint64_t q : {2u, 3u, 4u, 7u}) {
      mpq_class prev = 0;
      bool upper = false;
      for (int s = (n + 3) / 4; s <= n; ++s) {
        bool u = 2 * s >= n;
        if (u != upper) prev = 0, upper = u;
        mpq_class v = class_size_lower(n, q, s);
        EXPECT_GT(v, prev) << n << " " << q << " " << s;
        prev = v;
      }
    }
}

TEST(ClassSize, FloorBounds) {
  // n = 5, q = 2: (1/10) 2^12.5 sits strictly between the two integer exponents
  RootRational b = class_size_floor_half(5, 2);
  EXPECT_EQ(b.pow(2), RootRational(mpq_class(ipow(2, 25), 100)));
  EXPECT_LT(RootRational(mpq_class(ipow(2, 12), 10)), b);
  EXPECT_EQ(class_size_floor_half(4, 3), RootRational(mpq_class(ipow(3, 8), 8)));
  EXPECT_EQ(class_size_floor_quarter(4, 3), RootRational(mpq_class(ipow(3, 6), 8)));
}

TEST(QhatAB, Values) {
  RootRational B(mpq_class(7, 2));
  EXPECT_EQ(qhat_AB(B, B, 3), B);
  EXPECT_EQ(qhat_AB(RootRational::from_int(6), RootRational::from_int(4), 2), RootRational(mpq_class(9)));
  EXPECT_THROW(qhat_AB(B, B, 0), InvalidArgument);
  EXPECT_THROW(qhat_AB(RootRational(mpq_class(-1)), B, 2), InvalidArgument);
}

TEST(PrimitiveBound, SingerAndSmallE) {
  // e = 1: n (q^n - 1)/(q - 1)
  PrimitiveSolvableProfile s{3, 2, 3};
  EXPECT_EQ(primitive_H_bound(s).printed, RootRational::from_int(21));
  EXPECT_EQ(primitive_H_bound(s).with_fa, RootRational::from_int(21));
  // e = 4, l = 2: min{4^5, 4^6.5} = 4^5
  PrimitiveSolvableProfile e4{4, 5, 1};
  EXPECT_EQ(e4.l(), 2);
  EXPECT_EQ(primitive_H_bound(e4).printed, RootRational::from_int(1024));
  // e = 8 (l = 3): 8^7 against 8^6.5, the second wins
  PrimitiveSolvableProfile e8{8, 3, 1};
  EXPECT_EQ(primitive_H_bound(e8).printed, RootRational::power(8, 13, 2));
  // 2 does not divide 2^1 - 1
  EXPECT_THROW(primitive_H_bound({4, 2, 1}), InvalidArgument);
  EXPECT_THROW(primitive_H_bound({4, 6, 1}), InvalidArgument);
  EXPECT_THROW(primitive_H_bound({5, 3, 2}), InvalidArgument);
}

TEST(PrimitiveBound, FourByFourOverQuadraticExtension) {
  EXPECT_EQ(sp_order(1, 2), Z(6));
  EXPECT_EQ(sp_order(2, 2), Z(720));
  EXPECT_EQ(sp_order(1, 3), Z(24));
  for (unsigned long q : {3ul, 5ul, 7ul, 9ul, 11ul, 13ul}) {
    HBound h = primitive_H_bound({4, q, 2});
    mpq_class a = 48 * (q + 1);
    // the Sp product is exactly 48(q+1)
    EXPECT_EQ(h.sp_product, a);
    EXPECT_LE(RootRational(a), h.with_fa);
    // the printed first term drops |F:A| = e^2 and falls below the group order
    EXPECT_EQ(h.printed, RootRational(mpq_class(16 * (q + 1))));
    EXPECT_LT(h.printed, RootRational(a));
  }
}

TEST(GluckManz, PlugInAndSmallGroups) {
  EXPECT_EQ(gluck_manz(4, 2), RootRational(mpq_class(2560, 14)));
  for (unsigned long q = 2; q <= 64; ++q) {
    EXPECT_TRUE(gluck_manz_holds(Z(q - 1), 1, q));
    // integer oracle
    bool oracle = ipow(Z(q - 1), 4) * ipow(Z(14), 4) < ipow(Z(q), 9) * ipow(Z(5), 4);
    EXPECT_EQ(gluck_manz_holds(Z(q - 1), 1, q), oracle);
  }
  EXPECT_TRUE(gluck_manz_holds(6, 2, 2));
  EXPECT_TRUE(gluck_manz_holds(48, 2, 3));   // 48 < 50.1
  EXPECT_FALSE(gluck_manz_holds(51, 2, 3));
  EXPECT_LT(RootRational::from_int(48), gluck_manz(2, 3));
}

TEST(Sinbase, ExceptionSet) {
  auto rows = sinbase_scan(4, 8, 16);
  std::set<std::pair<int, uint64_t>> flagged;
  for (auto& r : rows) {
    EXPECT_EQ(r.flagged, flagged_oracle(r.n, r.q)) << r.n << " " << r.q;
    if (r.flagged) flagged.insert({r.n, r.q});
  }
  for (auto p : {std::pair<int, uint64_t>{6, 2}, {5, 3}, {5, 2}}) EXPECT_TRUE(flagged.count(p));
  for (uint64_t q : prime_powers_upto(12)) EXPECT_TRUE(flagged.count({4, q})) << q;
  for (auto p : {std::pair<int, uint64_t>{4, 13}, {5, 4}, {6, 3}, {7, 2}}) EXPECT_FALSE(flagged.count(p));
  // nothing beyond the listed cases
  EXPECT_EQ(flagged.size(), 3u + prime_powers_upto(12).size());
}

TEST(Sinbase, PrintedDenominatorColumn) {
  auto rows = sinbase_scan(4, 4, 16);
  for (auto& r : rows) {
    mpq_class ap(4 * (ipow(Z(r.q), 4) - 1), 3);
    ap.canonicalize();
    EXPECT_EQ(r.a_printed, ap);
  }
  // the (n-1) denominator flags every n = 4 row and misses (5,3), (6,2)
  for (auto& r : rows) EXPECT_TRUE(r.flagged_printed) << r.q;
  for (auto& r : sinbase_scan(5, 6, 3))
    if ((r.n == 5 && r.q == 3) || (r.n == 6 && r.q == 2)) EXPECT_FALSE(r.flagged_printed);
  std::string tsv = sinbase_tsv(rows);
  EXPECT_EQ(tsv.substr(0, tsv.find('\n')), "n\tq\ta\tb\tverdict\ta^2/b\ta_(n-1)\tverdict_(n-1)\ta_(n-1)^2/b");
  EXPECT_NE(tsv.find("4\t13\t9520\t"), std::string::npos);
}

TEST(Thresholds, CaseTwoAndThree) {
  // 10 (25^2 + 500^2 + 624^2) = 6400010 sits between 3^12 and 4^12
  auto c2 = case2_n5(32, false);
  EXPECT_EQ(threshold(c2), 4u);
  EXPECT_EQ(c2.front().value, RootRational(mpq_class(6400010, 4096)));
  EXPECT_EQ(threshold(case2_n5(32, true)), 4u);
  // 8 (48 (q+1))^2 < q^6 exactly from q = 13 on
  auto c3 = case3_n4(49);
  EXPECT_EQ(threshold(c3), 13u);
  for (auto& r : c3) EXPECT_EQ(r.below_one, 8 * ipow(Z(48 * (r.q + 1)), 2) < ipow(Z(r.q), 6));
}

TEST(Dominance, SymmetricGroupOnThreePoints) {
  // hand count: the 3 diagonal pairs are the only non-bases; transpositions fix 1 point
  DominanceReport d = dominance(sym_gens(3), 3, 2);
  EXPECT_EQ(d.order, 6);
  EXPECT_EQ(d.Q, mpq_class(1, 3));
  EXPECT_EQ(d.qhat, mpq_class(1, 3));
  EXPECT_EQ(d.class_sum, d.qhat);
  EXPECT_EQ(d.classes.size(), 2u);
  EXPECT_TRUE(d.q_le_qhat);
  EXPECT_TRUE(d.ab_dominates);
}

TEST(Dominance, SymmetricGroupsNatural) {
  for (uint32_t n = 3; n <= 7; ++n)
    for (int c : {1, 2, 3}) {
      DominanceReport d = dominance(sym_gens(n), n, c);
      EXPECT_TRUE(d.q_le_qhat) << n << " " << c << " " << d.str();
      EXPECT_TRUE(d.ab_dominates) << n << " " << c << " " << d.str();
      EXPECT_EQ(d.class_sum, d.qhat);
      // c < n - 1: no c-tuple is a base
      if (c < static_cast<int>(n) - 1) EXPECT_EQ(d.Q, 1);
    }
}

TEST(Dominance, SymEightOnBisections) {
  // Sym(8) on the 35 splittings into two 4-sets
  std::vector<uint32_t> sets;
  for (uint32_t m = 0; m < 256; ++m)
    if (__builtin_popcount(m) == 4 && (m & 1)) sets.push_back(m);
  ASSERT_EQ(sets.size(), 35u);
  auto point = [&](uint32_t m) {
    if (!(m & 1)) m = 255 ^ m;
    return static_cast<uint32_t>(std::find(sets.begin(), sets.end(), m) - sets.begin());
  };
  std::vector<PermVec> gens;
  for (auto& g : sym_gens(8)) {
    PermVec p(35);
    for (uint32_t i = 0; i < 35; ++i) {
      uint32_t img = 0;
      for (uint32_t b = 0; b < 8; ++b)
        if (sets[i] >> b & 1) img |= 1u << g[b];
      p[i] = point(img);
    }
    gens.push_back(p);
  }
  DominanceReport d = dominance(gens, 35, 2);
  EXPECT_EQ(d.order, 40320);
  EXPECT_TRUE(d.q_le_qhat);
  EXPECT_TRUE(d.ab_dominates);
  EXPECT_EQ(d.Q, 1);  // b = 5: no pair is a base
}
