#pragma once

// Lengths attached to the modified Koszul complex on (a^k, b^k): the quotients
// L(r,s;k) = I^{r+k}J^{s+k} / (a^k I^r J^{s+k} + b^k I^{r+k} J^s), the three
// homology lengths, Ratliff-Rush closures, alpha/beta and the classification
// of the (r,s) graded piece of the second local cohomology.

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>
#include <string>
#include <vector>

#include "bhat/joint_reduction.hpp"
#include "bhat/polyfit.hpp"

namespace bhat {

struct HomologyLengths {
  int r = 0, s = 0, k = 0;
  std::int64_t h0 = 0, h1 = 0, h2 = 0;
  std::int64_t lambda_L = 0;
  std::int64_t ab_colength = 0;  ///< lambda(R/(a^k, b^k))
};

struct RatliffRush {
  IdealPtr closure;
  std::int64_t quotient_length = 0;  ///< lambda(rr / I^r J^s)
  int stabilized_at = 0;             ///< first k of the constant run
  int k_max = 0;
};

struct AlphaValue {
  int index = 0;
  Rational from_fits;          ///< g1(i+1) - g1(i) + e11 (or the h1 version)
  std::int64_t from_L = 0;     ///< stabilized lambda(L(i, s; 1)) over the band
  std::vector<int> band;       ///< the s (or r) values used
};

struct KBand {
  int fit_lo = 4, fit_hi = 8, verify_hi = 10;
};

enum class H2Verdict { Finite, InfiniteDetected, Inconclusive };
const char* to_string(H2Verdict v);

struct H2Classification {
  int r = 0, s = 0;
  H2Verdict verdict = H2Verdict::Inconclusive;
  Rational c1, c0;  ///< lambda(L(r,s;k)) = c1*k + c0 on the band
  std::map<int, std::int64_t> lengths;  ///< k -> lambda(L(r,s;k))
  Rational expected_slope;              ///< (e01 - g1(r) - r e11) + (e10 - h1(s) - s e11)
  std::optional<Rational> closed_form;  ///< Finite case: the coefficient formula
  std::int64_t rr_quotient = 0;
  KBand band;
  std::string note;
};

/// All computations for one filtration and one certified pair. Powers of a
/// and b, the ideals (a^k, b^k) and computed L-lengths are cached.
class KoszulEngine {
 public:
  KoszulEngine(const BiFiltration& f, JointReductionCert cert);

  const BiFiltration& filtration() const noexcept { return f_; }
  const JointReductionCert& cert() const noexcept { return cert_; }

  std::int64_t L_length(int r, int s, int k) const;
  HomologyLengths homology_lengths(int r, int s, int k, std::optional<Rational> e11 = {}) const;
  RatliffRush ratliff_rush(int r, int s, int k_max = 8) const;
  /// The k-th member (I^{r+k}J^s : a^k) ∩ (I^rJ^{s+k} : b^k) of the chain.
  LocalIdeal rr_member(int r, int s, int k) const;

  /// Requires i + 1 <= r_max of the fitted table; `band` are the s values on
  /// which lambda(L(i,s;1)) must be constant.
  AlphaValue alpha(int i, const CoefficientReport& rep, const std::vector<int>& band) const;
  AlphaValue beta(int j, const CoefficientReport& rep, const std::vector<int>& band) const;

  H2Classification classify_h2(int r, int s, const CoefficientReport& rep, KBand band = {}) const;

  const Poly& a_power(int k) const;
  const Poly& b_power(int k) const;
  const LocalIdeal& ab_power_ideal(int k) const;

 private:
  const BiFiltration& f_;
  JointReductionCert cert_;
  mutable std::mutex mutex_;
  mutable std::map<int, Poly> a_pow_, b_pow_;
  mutable std::map<int, IdealPtr> ab_ideal_;
  mutable std::map<std::tuple<int, int, int>, std::int64_t> l_cache_;
};

/// A(s+k) + B(r+k) + C with the coefficient-formula values of A, B and C.
struct LengthFormula {
  Rational A, B, C;
  Rational operator()(int r, int s, int k) const { return A * (s + k) + B * (r + k) + C; }
};
LengthFormula length_formula(const CoefficientReport& rep, int r, int s, std::int64_t rr_quotient);

}  // namespace bhat
