#include <gtest/gtest.h>

#include "bhat/koszul.hpp"

using namespace bhat;

namespace {

AlgebraPtr algebra(int n = 160) {
  return std::make_shared<const TruncatedAlgebra>(PrimeField(), n);
}

struct Fixture {
  AlgebraPtr alg;
  BiFiltration f;
  CoefficientReport rep;
  KoszulEngine engine;

  Fixture(const char* i, const char* j, AlgebraPtr a = algebra())
      : alg(a),
        f(ideal_from_text(a, i), ideal_from_text(a, j)),
        rep(coefficient_report(f)),
        engine(f, sample_joint_reduction(f, 1)) {}
};

}  // namespace

TEST(Koszul, HomologyIdentityOnSmallIndices) {
  Fixture fx("x^2, x*y, y^2", "x^2, y^2");
  const auto e11 = fx.rep.bhattacharya.e11;
  for (int r = 0; r <= 3; ++r) {
    for (int s = 0; s <= 3; ++s) {
      for (int k = 1; k <= 3; ++k) {
        const auto h = fx.engine.homology_lengths(r, s, k, e11);
        EXPECT_EQ(h.h0 - h.h1, h.ab_colength - h.lambda_L) << r << s << k;
        EXPECT_EQ(Rational(h.ab_colength), Rational(k * k) * e11);
        EXPECT_EQ(h.lambda_L, fx.engine.L_length(r, s, k));
        EXPECT_GE(h.h2, 0);
      }
    }
  }
}

TEST(Koszul, RatliffRushChainStabilizes) {
  Fixture fx("x^4, x^3*y, x*y^3, y^4", "x, y");
  const auto rr = fx.engine.ratliff_rush(1, 0);
  EXPECT_EQ(rr.quotient_length, 1);
  EXPECT_TRUE(contains(*rr.closure, parse_poly("x^2*y^2", fx.alg).poly));
  for (int k = rr.stabilized_at; k <= rr.stabilized_at + 3; ++k) {
    EXPECT_TRUE(ideal_eq(fx.engine.rr_member(1, 0, k), *rr.closure)) << k;
  }
  // Powers of m are Ratliff-Rush closed.
  Fixture mm("x, y", "x, y");
  EXPECT_EQ(mm.engine.ratliff_rush(1, 1).quotient_length, 0);
}

TEST(Koszul, AlphaIsIndependentOfS) {
  Fixture fx("x^2, x*y, y^2", "x^2, y^2");
  for (int i = 0; i <= 2; ++i) {
    const auto L = fx.engine.L_length(i, 5, 1);
    for (int s = 6; s <= 8; ++s) EXPECT_EQ(fx.engine.L_length(i, s, 1), L) << i << "," << s;
    const auto al = fx.engine.alpha(i, fx.rep, {5, 6, 7});
    EXPECT_EQ(al.from_fits, Rational(al.from_L));
  }
}

TEST(Koszul, LengthsFollowTheFormulaForLargeK) {
  Fixture fx("x^3, x*y, y^3", "x^2, y^2");
  for (auto [r, s] : {std::pair{0, 0}, {1, 1}, {2, 1}}) {
    const auto rr = fx.engine.ratliff_rush(r, s);
    const auto lf = length_formula(fx.rep, r, s, rr.quotient_length);
    for (int k = 4; k <= 6; ++k) EXPECT_EQ(Rational(fx.engine.L_length(r, s, k)), lf(r, s, k));
  }
}

TEST(Koszul, PowersOfMaximalIdealAreInfiniteAtOrigin) {
  for (int l = 2; l <= 3; ++l) {
    const char* i = l == 2 ? "x^2, x*y, y^2" : "x^3, x^2*y, x*y^2, y^3";
    const char* j = l == 2 ? "x^2, y^2" : "x^3, y^3";
    Fixture fx(i, j);
    const auto c = fx.engine.classify_h2(0, 0, fx.rep);
    EXPECT_EQ(c.verdict, H2Verdict::InfiniteDetected);
    EXPECT_EQ(c.c1, Rational(l * (l - 1) / 2));
    EXPECT_EQ(c.c1, c.expected_slope);
  }
}

TEST(Koszul, ReductionIdentityFailsForSquares) {
  // I = m^2, J = (x^2, y^2): I J^n is never y^2 J^n + x^2 I J^{n-1}.
  auto a = algebra();
  const BiFiltration f(ideal_from_text(a, "x^2, x*y, y^2"), ideal_from_text(a, "x^2, y^2"));
  const Poly x2 = Poly::monomial(2, 0), y2 = Poly::monomial(0, 2);
  const int lvl = a->order();
  for (int n = 1; n <= 4; ++n) {
    std::vector<Poly> gens;
    for (const auto& g : f.product(0, n)->generators()) gens.push_back(mul(y2, g, a->field(), lvl));
    for (const auto& g : f.product(1, n - 1)->generators()) gens.push_back(mul(x2, g, a->field(), lvl));
    EXPECT_FALSE(ideal_eq(ideal_from_gens(a, gens), *f.product(1, n))) << n;
  }
}

TEST(Koszul, DepthZeroExampleIsFiniteZero) {
  Fixture fx("x^4, x^3*y, x*y^3, y^4", "x, y");
  const auto c = fx.engine.classify_h2(0, 0, fx.rep);
  EXPECT_EQ(c.verdict, H2Verdict::Finite);
  EXPECT_EQ(c.c1, Rational(0));
  ASSERT_TRUE(c.closed_form.has_value());
  EXPECT_EQ(c.c0, *c.closed_form);
  EXPECT_EQ(c.c0, Rational(0));
}
