#pragma once

// Exact fitting of eventually polynomial integer functions in the binomial
// basis: Hilbert-Samuel coefficients, Bhattacharya coefficients and the row
// functions g1, g2 (fixed r, polynomial in s) and h1, h2 (fixed s).
//
// Onsets are facts about the window only; nothing here bounds where a
// function becomes polynomial in general.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "bhat/filtration.hpp"

namespace bhat {

using Rational = boost::rational<long long>;

std::string to_string(const Rational& q);
bool is_integer(const Rational& q);

/// C(n + i - 1, i) for i >= 1 and 1 for i = 0; so degree 2 reads
/// c2*C(n+1,2) + c1*n + c0.
Rational binomial_basis(int i, long long n);

struct UnivariateFit {
  std::vector<Rational> coeffs;  ///< coeffs[i] multiplies binomial_basis(i, n)
  int onset = 0;

  Rational operator()(long long n) const;
};

/// Interpolates the last degree_bound+1 points, requires `band` more points
/// before them to agree, then scans backwards for the onset.
UnivariateFit fit_univariate(const std::vector<std::int64_t>& values, int degree_bound = 2,
                             int band = 2);

struct HilbertCoeffs {
  Rational e0, e1, e2;
  int onset = 0;
  std::vector<std::int64_t> values;  ///< lambda(R/K^n), n = 0..n_max
};

/// lambda(R/K^n) = e0*C(n+1,2) - e1*n + e2.
HilbertCoeffs hilbert_from_values(const std::vector<std::int64_t>& values);
HilbertCoeffs fit_hilbert(const LocalIdeal& k, int n_max = 8);

struct BhattacharyaCoeffs {
  Rational e20, e11, e02, e10, e01, e00;
  int r0 = 0;
  int s0 = 0;

  Rational operator()(long long r, long long s) const;
};

struct ConsistencyCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

/// Six coefficients from the 3x3 corner of the table, verified on the tail
/// rectangle [r0, r_max] x [s0, s_max] with r0 <= r_max - 4, s0 <= s_max - 4.
BhattacharyaCoeffs fit_bhattacharya(const BigradedLengthTable& t);

/// The identities linking the Bhattacharya coefficients with the Hilbert
/// coefficients of I, J and IJ.
std::vector<ConsistencyCheck> bhattacharya_consistency(const BhattacharyaCoeffs& b,
                                                       const HilbertCoeffs& hi,
                                                       const HilbertCoeffs& hj,
                                                       const HilbertCoeffs& hij);

struct RowFits {
  std::vector<Rational> g1, g2, h1, h2;  ///< indexed by r (g) or s (h)
  std::vector<int> g_onset, h_onset;     ///< onset in s (resp. r) of each row fit
  int g1_linear_onset = 0;  ///< g1(r) = -e11*r + e01 for window r >= this
  int h1_linear_onset = 0;
  std::vector<ConsistencyCheck> checks;
};

RowFits fit_rows(const BigradedLengthTable& t, const BhattacharyaCoeffs& b, const HilbertCoeffs& hi,
                 const HilbertCoeffs& hj);

struct CoefficientReport {
  BigradedLengthTable table;
  BhattacharyaCoeffs bhattacharya;
  HilbertCoeffs I, J, IJ;
  RowFits rows;
  std::vector<ConsistencyCheck> checks;

  bool consistent() const;
  std::string to_json() const;
};

/// Table, all fits and all consistency checks; throws ConsistencyFailure
/// naming the first violated identity.
CoefficientReport coefficient_report(const BiFiltration& f, int r_max = 8, int s_max = 8,
                                     int n_max = 8);

}  // namespace bhat
