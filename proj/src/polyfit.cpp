#include "bhat/polyfit.hpp"

#include <algorithm>
#include <optional>

#include "json.hpp"

#include "bhat/errors.hpp"

namespace bhat {

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

bool is_integer(const Rational& q) { return q.denominator() == 1; }

Rational binomial_basis(int i, long long n) {
  if (i == 0) return 1;
  // C(n+i-1, i)
  Rational acc = 1;
  for (int k = 0; k < i; ++k) acc *= Rational(n + k, k + 1);
  return acc;
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Solves an overdetermined but consistent system; nullopt if it is
// inconsistent or underdetermined.
std::optional<std::vector<Rational>> solve_exact(Matrix a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == Rational(0)) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    std::swap(b[p], b[rank]);
    const Rational inv = 1 / a[rank][c];
    for (auto& v : a[rank]) v *= inv;
    b[rank] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == Rational(0)) continue;
      const Rational factor = a[r][c];
      for (std::size_t k = 0; k < cols; ++k) a[r][k] -= factor * a[rank][k];
      b[r] -= factor * b[rank];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  if (rank < cols) return std::nullopt;
  for (std::size_t r = rank; r < rows; ++r) {
    if (b[r] != Rational(0)) return std::nullopt;
  }
  std::vector<Rational> x(cols);
  for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = b[r];
  return x;
}

std::string rat(const Rational& q) { return to_string(q); }

nlohmann::ordered_json rational_json(const Rational& q) {
  if (q.denominator() == 1) return q.numerator();
  return to_string(q);
}

}  // namespace

Rational UnivariateFit::operator()(long long n) const {
  Rational acc = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) acc += coeffs[i] * binomial_basis(int(i), n);
  return acc;
}

UnivariateFit fit_univariate(const std::vector<std::int64_t>& values, int degree_bound, int band) {
  if (degree_bound < 0 || band < 0) throw Error(ErrorKind::InvalidArgument, "bad fit parameters");
  const int len = static_cast<int>(values.size());
  const int npts = degree_bound + 1;
  if (len < npts + band) {
    throw Error(ErrorKind::FitUnstable, "sequence of length " + std::to_string(len) +
                                            " too short for a degree " +
                                            std::to_string(degree_bound) + " fit with band " +
                                            std::to_string(band));
  }
  Matrix a;
  std::vector<Rational> b;
  for (int n = len - npts; n < len; ++n) {
    std::vector<Rational> row;
    for (int i = 0; i < npts; ++i) row.push_back(binomial_basis(i, n));
    a.push_back(std::move(row));
    b.emplace_back(values[n]);
  }
  auto sol = solve_exact(std::move(a), std::move(b));
  if (!sol) throw Error(ErrorKind::InternalIdentityFailure, "singular interpolation system");
  UnivariateFit fit;
  fit.coeffs = std::move(*sol);
  int onset = len - npts;
  while (onset > 0 && fit(onset - 1) == Rational(values[onset - 1])) --onset;
  if (onset > len - npts - band) {
    throw Error(ErrorKind::FitUnstable, "verification band disagrees: polynomial behaviour starts after n = " +
                                            std::to_string(onset - 1) + " in a window of " +
                                            std::to_string(len) + " values");
  }
  fit.onset = onset;
  return fit;
}

HilbertCoeffs hilbert_from_values(const std::vector<std::int64_t>& values) {
  const UnivariateFit fit = fit_univariate(values, 2, 2);
  HilbertCoeffs h;
  h.e0 = fit.coeffs[2];
  h.e1 = -fit.coeffs[1];
  h.e2 = fit.coeffs[0];
  h.onset = fit.onset;
  h.values = values;
  if (h.e0 <= Rational(0)) throw Error(ErrorKind::ConsistencyFailure, "nonpositive multiplicity");
  return h;
}

HilbertCoeffs fit_hilbert(const LocalIdeal& k, int n_max) {
  std::vector<std::int64_t> values{0};
  LocalIdeal power = k;
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) power = mul_ideals(power, k);
    values.push_back(colength(power));
  }
  return hilbert_from_values(values);
}

Rational BhattacharyaCoeffs::operator()(long long r, long long s) const {
  return e20 * binomial_basis(2, r) + e11 * Rational(r * s) + e02 * binomial_basis(2, s) -
         e10 * Rational(r) - e01 * Rational(s) + e00;
}

BhattacharyaCoeffs fit_bhattacharya(const BigradedLengthTable& t) {
  const int rm = t.r_max();
  const int sm = t.s_max();
  if (rm < 5 || sm < 5) {
    throw Error(ErrorKind::FitUnstable, "bivariate fit needs at least a 6x6 window");
  }
  Matrix a;
  std::vector<Rational> b;
  for (int r = rm - 2; r <= rm; ++r) {
    for (int s = sm - 2; s <= sm; ++s) {
      a.push_back({binomial_basis(2, r), Rational(r * s), binomial_basis(2, s), Rational(-r),
                   Rational(-s), Rational(1)});
      b.emplace_back(t.at(r, s));
    }
  }
  auto sol = solve_exact(std::move(a), std::move(b));
  if (!sol) throw Error(ErrorKind::FitUnstable, "table corner is not a polynomial of degree 2");
  BhattacharyaCoeffs c;
  c.e20 = (*sol)[0];
  c.e11 = (*sol)[1];
  c.e02 = (*sol)[2];
  c.e10 = (*sol)[3];
  c.e01 = (*sol)[4];
  c.e00 = (*sol)[5];

  // last_bad[r]: largest s with T(r,s) != P(r,s), or -1.
  std::vector<int> last_bad(rm + 1, -1);
  for (int r = 0; r <= rm; ++r) {
    for (int s = 0; s <= sm; ++s) {
      if (c(r, s) != Rational(t.at(r, s))) last_bad[r] = s;
    }
  }
  int best = -1;
  int suffix = -1;
  for (int r0 = rm; r0 >= 0; --r0) {
    suffix = std::max(suffix, last_bad[r0]);
    const int s0 = suffix + 1;
    if (r0 > rm - 4 || s0 > sm - 4) continue;
    if (best < 0 || r0 + s0 <= best) {
      best = r0 + s0;
      c.r0 = r0;
      c.s0 = s0;
    }
  }
  if (best < 0) {
    throw Error(ErrorKind::FitUnstable,
                "no tail rectangle with a 2-wide verification band agrees with the corner fit");
  }
  return c;
}

std::vector<ConsistencyCheck> bhattacharya_consistency(const BhattacharyaCoeffs& b,
                                                       const HilbertCoeffs& hi,
                                                       const HilbertCoeffs& hj,
                                                       const HilbertCoeffs& hij) {
  std::vector<ConsistencyCheck> out;
  auto add = [&](std::string name, const Rational& lhs, const Rational& rhs) {
    out.push_back({std::move(name), lhs == rhs, rat(lhs) + " vs " + rat(rhs)});
  };
  add("e20 = e0(I)", b.e20, hi.e0);
  add("e02 = e0(J)", b.e02, hj.e0);
  add("2*e11 = e0(IJ) - e0(I) - e0(J)", 2 * b.e11, hij.e0 - hi.e0 - hj.e0);
  add("e00 = e2(IJ)", b.e00, hij.e2);
  add("e1(IJ) = e10 + e01 + e11", hij.e1, b.e10 + b.e01 + b.e11);
  const bool integral = is_integer(b.e20) && is_integer(b.e11) && is_integer(b.e02) &&
                        is_integer(b.e10) && is_integer(b.e01) && is_integer(b.e00);
  out.push_back({"coefficients are integers", integral, ""});
  return out;
}

RowFits fit_rows(const BigradedLengthTable& t, const BhattacharyaCoeffs& b, const HilbertCoeffs& hi,
                 const HilbertCoeffs& hj) {
  RowFits rf;
  const int rm = t.r_max();
  const int sm = t.s_max();
  for (int r = 0; r <= rm; ++r) {
    std::vector<std::int64_t> row(t.values[r].begin(), t.values[r].end());
    const UnivariateFit fit = fit_univariate(row, 2, 2);
    if (fit.coeffs[2] != b.e02) {
      throw Error(ErrorKind::ConsistencyFailure,
                  "row r=" + std::to_string(r) + " has leading coefficient " + rat(fit.coeffs[2]) +
                      ", expected e(J) = " + rat(b.e02));
    }
    rf.g1.push_back(-fit.coeffs[1]);
    rf.g2.push_back(fit.coeffs[0]);
    rf.g_onset.push_back(fit.onset);
  }
  for (int s = 0; s <= sm; ++s) {
    std::vector<std::int64_t> col;
    for (int r = 0; r <= rm; ++r) col.push_back(t.at(r, s));
    const UnivariateFit fit = fit_univariate(col, 2, 2);
    if (fit.coeffs[2] != b.e20) {
      throw Error(ErrorKind::ConsistencyFailure,
                  "column s=" + std::to_string(s) + " has leading coefficient " +
                      rat(fit.coeffs[2]) + ", expected e(I) = " + rat(b.e20));
    }
    rf.h1.push_back(-fit.coeffs[1]);
    rf.h2.push_back(fit.coeffs[0]);
    rf.h_onset.push_back(fit.onset);
  }

  auto add = [&](std::string name, const Rational& lhs, const Rational& rhs) {
    rf.checks.push_back({std::move(name), lhs == rhs, rat(lhs) + " vs " + rat(rhs)});
  };
  add("g1(0) = e1(J)", rf.g1[0], hj.e1);
  add("g2(0) = e2(J)", rf.g2[0], hj.e2);
  add("h1(0) = e1(I)", rf.h1[0], hi.e1);
  add("h2(0) = e2(I)", rf.h2[0], hi.e2);

  auto linear_onset = [&](const std::vector<Rational>& f, const Rational& slope,
                          const Rational& icpt, int band) {
    const int last = static_cast<int>(f.size()) - 1;
    int onset = last + 1;
    while (onset > 0 && f[onset - 1] == -slope * Rational(onset - 1) + icpt) --onset;
    return std::pair{onset, onset <= last + 1 - band};
  };
  const auto [g_on, g_ok] = linear_onset(rf.g1, b.e11, b.e01, 2);
  const auto [h_on, h_ok] = linear_onset(rf.h1, b.e11, b.e10, 2);
  rf.g1_linear_onset = g_on;
  rf.h1_linear_onset = h_on;
  rf.checks.push_back({"g1(r) = -e11*r + e01 on the window tail", g_ok,
                       "from r = " + std::to_string(g_on)});
  rf.checks.push_back({"h1(s) = -e11*s + e10 on the window tail", h_ok,
                       "from s = " + std::to_string(h_on)});
  return rf;
}

bool CoefficientReport::consistent() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds; });
}

CoefficientReport coefficient_report(const BiFiltration& f, int r_max, int s_max, int n_max) {
  CoefficientReport rep;
  rep.table = length_table(f, r_max, s_max);
  rep.bhattacharya = fit_bhattacharya(rep.table);
  rep.I = fit_hilbert(f.I(), n_max);
  rep.J = fit_hilbert(f.J(), n_max);
  rep.IJ = fit_hilbert(*f.product(1, 1), n_max);
  rep.checks = bhattacharya_consistency(rep.bhattacharya, rep.I, rep.J, rep.IJ);
  rep.rows = fit_rows(rep.table, rep.bhattacharya, rep.I, rep.J);
  rep.checks.insert(rep.checks.end(), rep.rows.checks.begin(), rep.rows.checks.end());
  for (const auto& c : rep.checks) {
    if (!c.holds) {
      throw Error(ErrorKind::ConsistencyFailure, "identity " + c.name + " fails: " + c.detail);
    }
  }
  return rep;
}

std::string CoefficientReport::to_json() const {
  using nlohmann::ordered_json;
  ordered_json j;
  j["report_version"] = 1;
  j["provenance"] = {{"prime", table.provenance.prime},
                     {"truncation_order", table.provenance.truncation_order},
                     {"I", table.provenance.I},
                     {"J", table.provenance.J},
                     {"r_max", table.r_max()},
                     {"s_max", table.s_max()}};
  const auto& b = bhattacharya;
  j["bhattacharya"] = {{"e20", rational_json(b.e20)}, {"e11", rational_json(b.e11)},
                       {"e02", rational_json(b.e02)}, {"e10", rational_json(b.e10)},
                       {"e01", rational_json(b.e01)}, {"e00", rational_json(b.e00)},
                       {"onset", {b.r0, b.s0}}};
  auto hil = [](const HilbertCoeffs& h) {
    return ordered_json{{"e0", rational_json(h.e0)},
                        {"e1", rational_json(h.e1)},
                        {"e2", rational_json(h.e2)},
                        {"onset", h.onset}};
  };
  j["hilbert"] = {{"I", hil(I)}, {"J", hil(J)}, {"IJ", hil(IJ)}};
  auto arr = [](const std::vector<Rational>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& q : v) a.push_back(rational_json(q));
    return a;
  };
  j["rows"] = {{"g1", arr(rows.g1)},
               {"g2", arr(rows.g2)},
               {"g_onset", rows.g_onset},
               {"h1", arr(rows.h1)},
               {"h2", arr(rows.h2)},
               {"h_onset", rows.h_onset},
               {"g1_linear_onset", rows.g1_linear_onset},
               {"h1_linear_onset", rows.h1_linear_onset}};
  ordered_json cs = ordered_json::array();
  for (const auto& c : checks) cs.push_back({{"identity", c.name}, {"holds", c.holds}});
  j["consistency"] = cs;
  j["onsets_are_empirical"] = true;
  return j.dump(2) + "\n";
}

}  // namespace bhat
