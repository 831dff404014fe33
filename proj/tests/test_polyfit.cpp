#include <gtest/gtest.h>

#include "bhat/errors.hpp"
#include "bhat/polyfit.hpp"

using namespace bhat;

namespace {

AlgebraPtr algebra(int n = 120) {
  return std::make_shared<const TruncatedAlgebra>(PrimeField(), n);
}

Rational R(long long n, long long d = 1) { return Rational(n, d); }

}  // namespace

TEST(Univariate, RecoversPolynomialAndOnset) {
  std::vector<std::int64_t> v;
  for (long long n = 0; n <= 10; ++n) v.push_back(n < 3 ? 100 + n : 3 * n * n - 2 * n + 7);
  const auto fit = fit_univariate(v, 2);
  EXPECT_EQ(fit.onset, 3);
  for (long long n = 3; n <= 14; ++n) EXPECT_EQ(fit(n), R(3 * n * n - 2 * n + 7));
}

TEST(Univariate, ShortOrWildWindowIsUnstable) {
  EXPECT_THROW(fit_univariate({1, 2, 3}, 2), Error);
  std::vector<std::int64_t> cubic;
  for (long long n = 0; n <= 10; ++n) cubic.push_back(n * n * n);
  try {
    fit_univariate(cubic, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FitUnstable);
  }
}

TEST(Hilbert, KnownIdeals) {
  auto a = algebra();
  const auto m = fit_hilbert(maximal_ideal(a));
  EXPECT_EQ(m.e0, R(1));
  EXPECT_EQ(m.e1, R(0));
  const auto m2 = fit_hilbert(ideal_from_text(a, "x^2, x*y, y^2"));
  EXPECT_EQ(m2.e0, R(4));
  EXPECT_EQ(m2.e1, R(1));
  EXPECT_EQ(m2.e2, R(0));
  const auto q = fit_hilbert(ideal_from_text(a, "x^2, y^3"));
  EXPECT_EQ(q.e0, R(6));
  EXPECT_EQ(q.e1, R(0));
  // I^n = m^{4n} for n >= 2 but lambda(R/I) = 11 is off the polynomial.
  const auto d = fit_hilbert(ideal_from_text(a, "x^4, x^3*y, x*y^3, y^4"));
  EXPECT_EQ(d.e0, R(16));
  EXPECT_EQ(d.e1, R(6));
  EXPECT_EQ(d.e2, R(0));
  EXPECT_EQ(d.onset, 2);
}

TEST(Bhattacharya, PowersOfTheMaximalIdeal) {
  // I = m^l, J = (x^l, y^l): e20 = e11 = e02 = l^2, e1(J) = 0 and
  // e01 - e1(J) = C(l, 2).
  for (int l = 2; l <= 3; ++l) {
    auto a = algebra();
    const std::string i = l == 2 ? "x^2, x*y, y^2" : "x^3, x^2*y, x*y^2, y^3";
    const std::string j = l == 2 ? "x^2, y^2" : "x^3, y^3";
    const BiFiltration f(ideal_from_text(a, i), ideal_from_text(a, j));
    const auto rep = coefficient_report(f, 6, 6, 6);
    const auto& b = rep.bhattacharya;
    EXPECT_EQ(b.e20, R(l * l));
    EXPECT_EQ(b.e11, R(l * l));
    EXPECT_EQ(b.e02, R(l * l));
    EXPECT_EQ(rep.J.e1, R(0));
    EXPECT_EQ(b.e01 - rep.J.e1, R(l * (l - 1) / 2));
    EXPECT_TRUE(rep.consistent());
    for (int r = b.r0; r <= 6; ++r) {
      for (int s = b.s0; s <= 6; ++s) EXPECT_EQ(b(r, s), R(rep.table.at(r, s)));
    }
  }
}

TEST(Bhattacharya, IdentitiesHoldOnMixedPair) {
  auto a = algebra();
  const BiFiltration f(ideal_from_text(a, "x^3, x*y, y^3"), ideal_from_text(a, "x^2, y^2"));
  const auto rep = coefficient_report(f, 6, 6, 6);
  ASSERT_FALSE(rep.checks.empty());
  for (const auto& c : rep.checks) EXPECT_TRUE(c.holds) << c.name << ": " << c.detail;
  EXPECT_EQ(rep.bhattacharya.e11, R(4));
  EXPECT_EQ(rep.bhattacharya.e20, R(6));
  EXPECT_EQ(rep.bhattacharya.e02, R(4));
}

TEST(Bhattacharya, ConsistencyDetectsTampering) {
  auto a = algebra();
  const BiFiltration f(ideal_from_text(a, "x^2, x*y, y^2"), ideal_from_text(a, "x^2, y^2"));
  auto rep = coefficient_report(f, 6, 6, 6);
  auto b = rep.bhattacharya;
  b.e01 += 1;
  bool any_false = false;
  for (const auto& c : bhattacharya_consistency(b, rep.I, rep.J, rep.IJ)) any_false |= !c.holds;
  EXPECT_TRUE(any_false);
}
