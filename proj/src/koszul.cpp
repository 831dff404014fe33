#include "bhat/koszul.hpp"

#include <functional>

#include "bhat/errors.hpp"

namespace bhat {

const char* to_string(H2Verdict v) {
  switch (v) {
    case H2Verdict::Finite: return "Finite";
    case H2Verdict::InfiniteDetected: return "InfiniteDetected";
    case H2Verdict::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

KoszulEngine::KoszulEngine(const BiFiltration& f, JointReductionCert cert)
    : f_(f), cert_(std::move(cert)) {
  if (!cert_.mprimary_ab) {
    throw Error(ErrorKind::InvalidArgument, "pair (a, b) is not certified m-primary");
  }
}

const Poly& KoszulEngine::a_power(int k) const {
  std::lock_guard lock(mutex_);
  auto it = a_pow_.find(k);
  if (it == a_pow_.end()) {
    it = a_pow_.emplace(k, pow(cert_.a, k, f_.I().field(), f_.algebra()->order())).first;
  }
  return it->second;
}

const Poly& KoszulEngine::b_power(int k) const {
  std::lock_guard lock(mutex_);
  auto it = b_pow_.find(k);
  if (it == b_pow_.end()) {
    it = b_pow_.emplace(k, pow(cert_.b, k, f_.I().field(), f_.algebra()->order())).first;
  }
  return it->second;
}

const LocalIdeal& KoszulEngine::ab_power_ideal(int k) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = ab_ideal_.find(k); it != ab_ideal_.end()) return *it->second;
  }
  auto ideal = std::make_shared<const LocalIdeal>(
      ideal_from_gens(f_.algebra(), {a_power(k), b_power(k)}));
  std::lock_guard lock(mutex_);
  return *ab_ideal_.try_emplace(k, ideal).first->second;
}

std::int64_t KoszulEngine::L_length(int r, int s, int k) const {
  if (r < 0 || s < 0 || k < 1) throw Error(ErrorKind::InvalidArgument, "L(r,s;k) needs k >= 1");
  {
    std::lock_guard lock(mutex_);
    if (auto it = l_cache_.find({r, s, k}); it != l_cache_.end()) return it->second;
  }
  const LocalIdeal d =
      jr_denominator(f_, a_power(k), b_power(k), *ab_power_ideal(k).adequacy(), r, s, k);
  const std::int64_t len = colength(d) - f_.length(r + k, s + k);
  if (len < 0) throw Error(ErrorKind::InternalIdentityFailure, "denominator not contained in numerator");
  std::lock_guard lock(mutex_);
  l_cache_[{r, s, k}] = len;
  return len;
}

LocalIdeal KoszulEngine::rr_member(int r, int s, int k) const {
  const LocalIdeal ca = colon_by_element(*f_.product(r + k, s), a_power(k));
  const LocalIdeal cb = colon_by_element(*f_.product(r, s + k), b_power(k));
  return intersect_ideals(ca, cb);
}

HomologyLengths KoszulEngine::homology_lengths(int r, int s, int k,
                                               std::optional<Rational> e11) const {
  HomologyLengths h;
  h.r = r;
  h.s = s;
  h.k = k;
  const IdealPtr num = f_.product(r + k, s + k);
  const LocalIdeal& ab = ab_power_ideal(k);
  h.ab_colength = colength(ab);
  h.h0 = colength(sum_ideals(*num, ab));
  const LocalIdeal d = jr_denominator(f_, a_power(k), b_power(k), *ab.adequacy(), r, s, k);
  h.h1 = colength(d) - colength(intersect_ideals(ab, *num));
  h.h2 = f_.length(r, s) - colength(rr_member(r, s, k));
  h.lambda_L = colength(d) - colength(*num);
  if (h.h0 - h.h1 != h.ab_colength - h.lambda_L) {
    throw Error(ErrorKind::InternalIdentityFailure,
                "h0 - h1 = " + std::to_string(h.h0 - h.h1) + " but lambda(R/(a^k,b^k)) - lambda(L) = " +
                    std::to_string(h.ab_colength - h.lambda_L));
  }
  if (e11 && Rational(h.ab_colength) != Rational(k) * Rational(k) * *e11) {
    throw Error(ErrorKind::InternalIdentityFailure,
                "lambda(R/(a^k,b^k)) = " + std::to_string(h.ab_colength) + " differs from k^2 e11");
  }
  return h;
}

RatliffRush KoszulEngine::ratliff_rush(int r, int s, int k_max) const {
  for (int attempt = 0; attempt < 2; ++attempt) {
    const int limit = attempt == 0 ? k_max : 2 * k_max;
    std::vector<LocalIdeal> chain;
    for (int k = 1; k <= limit; ++k) {
      chain.push_back(rr_member(r, s, k));
      const std::size_t n = chain.size();
      if (n >= 3 && ideal_eq(chain[n - 1], chain[n - 2]) && ideal_eq(chain[n - 2], chain[n - 3])) {
        RatliffRush rr;
        rr.closure = std::make_shared<const LocalIdeal>(chain[n - 1]);
        rr.quotient_length = f_.length(r, s) - colength(chain[n - 1]);
        rr.stabilized_at = k - 2;
        rr.k_max = limit;
        return rr;
      }
    }
  }
  throw Error(ErrorKind::StabilizationNotReached,
              "Ratliff-Rush chain at (" + std::to_string(r) + "," + std::to_string(s) +
                  ") not stable within k <= " + std::to_string(2 * k_max));
}

namespace {

AlphaValue alpha_impl(int i, const std::vector<Rational>& fn, const Rational& e11,
                      const std::vector<int>& band, const std::function<std::int64_t(int)>& L,
                      const char* name) {
  if (i < 0 || i + 1 >= static_cast<int>(fn.size())) {
    throw Error(ErrorKind::FitUnstable, std::string(name) + "(" + std::to_string(i) +
                                            ") needs the row fit at index " + std::to_string(i + 1));
  }
  if (band.empty()) throw Error(ErrorKind::InvalidArgument, "empty stabilization band");
  AlphaValue v;
  v.index = i;
  v.band = band;
  v.from_fits = fn[i + 1] - fn[i] + e11;
  v.from_L = L(band.front());
  for (int t : band) {
    if (L(t) != v.from_L) {
      throw Error(ErrorKind::AlphaMismatch, std::string("lambda(L) for ") + name + "(" +
                                                std::to_string(i) + ") is not constant on the band");
    }
  }
  if (Rational(v.from_L) != v.from_fits) {
    throw Error(ErrorKind::AlphaMismatch, std::string(name) + "(" + std::to_string(i) + "): fits give " +
                                              to_string(v.from_fits) + ", L-lengths give " +
                                              std::to_string(v.from_L));
  }
  return v;
}

}  // namespace

AlphaValue KoszulEngine::alpha(int i, const CoefficientReport& rep,
                               const std::vector<int>& band) const {
  return alpha_impl(i, rep.rows.g1, rep.bhattacharya.e11, band,
                    [&](int s) { return L_length(i, s, 1); }, "alpha");
}

AlphaValue KoszulEngine::beta(int j, const CoefficientReport& rep,
                              const std::vector<int>& band) const {
  return alpha_impl(j, rep.rows.h1, rep.bhattacharya.e11, band,
                    [&](int r) { return L_length(r, j, 1); }, "beta");
}

LengthFormula length_formula(const CoefficientReport& rep, int r, int s, std::int64_t rr_quotient) {
  const auto& b = rep.bhattacharya;
  const auto& rows = rep.rows;
  if (r >= static_cast<int>(rows.g1.size()) || s >= static_cast<int>(rows.h1.size())) {
    throw Error(ErrorKind::InvalidArgument, "index outside the fitted window");
  }
  LengthFormula lf;
  lf.A = b.e01 - rows.g1[r] - Rational(r) * b.e11;
  lf.B = b.e10 - rows.h1[s] - Rational(s) * b.e11;
  lf.C = -rep.IJ.e2 + rows.g2[r] + rows.h2[s] - Rational(rep.table.at(r, s)) +
         Rational(r * s) * b.e11 + Rational(rr_quotient);
  return lf;
}

H2Classification KoszulEngine::classify_h2(int r, int s, const CoefficientReport& rep,
                                           KBand band) const {
  if (band.fit_lo < 1 || band.fit_hi < band.fit_lo + 1 || band.verify_hi < band.fit_hi) {
    throw Error(ErrorKind::InvalidArgument, "bad k band");
  }
  H2Classification c;
  c.r = r;
  c.s = s;
  c.band = band;
  for (int k = band.fit_lo; k <= band.verify_hi; ++k) c.lengths[k] = L_length(r, s, k);
  c.rr_quotient = ratliff_rush(r, s).quotient_length;
  const LengthFormula lf = length_formula(rep, r, s, c.rr_quotient);
  c.expected_slope = lf.A + lf.B;

  const int lo = band.fit_lo;
  c.c1 = Rational(c.lengths[lo + 1] - c.lengths[lo]);
  c.c0 = Rational(c.lengths[lo]) - c.c1 * Rational(lo);
  for (int k = lo; k <= band.verify_hi; ++k) {
    if (c.c1 * Rational(k) + c.c0 != Rational(c.lengths[k])) {
      c.verdict = H2Verdict::Inconclusive;
      c.note = "lambda(L(r,s;k)) is not linear in k on [" + std::to_string(lo) + ", " +
               std::to_string(band.verify_hi) + "]";
      return c;
    }
  }
  if (c.c1 < Rational(0)) {
    c.verdict = H2Verdict::Inconclusive;
    c.note = "negative slope";
    return c;
  }
  if (c.c1 != c.expected_slope) {
    throw Error(ErrorKind::CrossCheckFailure,
                "slope " + to_string(c.c1) + " of lambda(L) in k differs from the coefficient formula " +
                    to_string(c.expected_slope));
  }
  if (c.c1 == Rational(0)) {
    c.verdict = H2Verdict::Finite;
    c.closed_form = lf.C + lf.A * Rational(s) + lf.B * Rational(r);
    if (*c.closed_form != c.c0) {
      throw Error(ErrorKind::CrossCheckFailure, "stable length " + to_string(c.c0) +
                                                    " differs from the closed form " +
                                                    to_string(*c.closed_form));
    }
  } else {
    c.verdict = H2Verdict::InfiniteDetected;
  }
  return c;
}

}  // namespace bhat
