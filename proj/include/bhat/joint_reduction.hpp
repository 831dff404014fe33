#pragma once

// Joint reductions (a, b) of (I, J), the superficial conditions in colon
// form, joint reduction number zero and the depth G(K) >= 1 test.
//
// A joint-reduction identity verified at a single index (r, s) propagates to
// every (r', s') >= (r, s), so the certificate records the least diagonal
// index where it was seen together with the explicitly checked cells.
// Negative answers of window-bounded checks mean "not observed within the
// window" and nothing more.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bhat/filtration.hpp"

namespace bhat {

struct JointReductionOptions {
  int jr_window = 4;      ///< diagonal indices 0..jr_window are tried
  int sup_r_max = 6;      ///< superficial checks for r <= sup_r_max, s <= sup_s_max
  int sup_s_max = 6;
  int max_attempts = 12;  ///< random candidates before SamplingExhausted
  bool require_superficial = true;
  bool pure_powers_first = true;  ///< try (x^p, y^q) pairs before random ones
};

enum class PairOrigin { Monomial, NewtonVertices, Random, Explicit };
const char* to_string(PairOrigin o);

struct JointReductionCert {
  Poly a, b;
  std::uint64_t seed = 0;
  PairOrigin origin = PairOrigin::Explicit;
  int attempt = 0;  ///< index of the accepted candidate

  bool mprimary_ab = false;
  int ab_adequacy = 0;
  std::int64_t ab_colength = 0;

  int jr_from = -1;  ///< identity holds at (jr_from, jr_from), hence beyond
  int jr_window = 0;
  std::vector<std::pair<int, int>> jr_cells;  ///< cells checked explicitly

  bool superficial_checked = false;
  int sup_r_max = 0, sup_s_max = 0;
  std::vector<int> r0_by_s;  ///< least r0(s) for the condition on a
  std::vector<int> s0_by_r;  ///< least s0(r) for the condition on b
  int sup_r0 = -1, sup_s0 = -1;

  std::string a_text(const PrimeField& f) const { return a.to_string(f); }
  std::string b_text(const PrimeField& f) const { return b.to_string(f); }
  std::string to_json(const PrimeField& f) const;
};

/// a^k I^r J^{s+k} + b^k I^{r+k} J^s.
LocalIdeal jr_denominator(const BiFiltration& f, const Poly& ak, const Poly& bk,
                          int ab_k_adequacy, int r, int s, int k);

/// I^{r+1}J^{s+1} = a I^r J^{s+1} + b I^{r+1} J^s.
bool jr_identity_holds(const BiFiltration& f, const Poly& a, const Poly& b, int ab_adequacy, int r,
                       int s);

/// Certifies an explicit pair; throws InvalidArgument if a is not in I,
/// b not in J, (a, b) not m-primary or the identity is not observed.
JointReductionCert certify_pair(const BiFiltration& f, const Poly& a, const Poly& b,
                                const JointReductionOptions& opt = {});

JointReductionCert sample_joint_reduction(const BiFiltration& f, std::uint64_t seed,
                                          const JointReductionOptions& opt = {});

/// Fills the superficial thresholds; throws SuperficialityNotObserved.
void verify_superficial(JointReductionCert& cert, const BiFiltration& f, int r_max, int s_max);

struct JrZeroResult {
  bool zero = false;
  std::optional<Poly> witness;  ///< element of IJ outside aJ + bI
};

/// IJ = aJ + bI for the certified pair.
JrZeroResult jr_number_zero(const LocalIdeal& i, const LocalIdeal& j, const Poly& a, const Poly& b);
JrZeroResult jr_number_zero(const BiFiltration& f, const JointReductionCert& cert);

struct DepthResult {
  bool positive = false;
  std::optional<Poly> witness;
  int window = 0;
  int candidates_tried = 0;
  std::string note;
};

/// Looks for c in K \ mK with (K^n : c) = K^{n-1} for 1 <= n <= window.
DepthResult depth_G_positive(const LocalIdeal& k, std::uint64_t seed, int window = 4,
                             int random_candidates = 4);

/// Vertices of the Newton polygon of a monomial ideal, as generators.
std::vector<Poly> newton_vertex_generators(const LocalIdeal& k);

/// Uniform nonzero coefficients; the same seed gives the same stream on
/// every platform.
class CoefficientStream {
 public:
  CoefficientStream(std::uint64_t seed, Coeff p) : state_(seed), p_(p) {}
  Coeff next();

 private:
  std::uint64_t state_;
  Coeff p_;
};

Poly random_combination(const std::vector<Poly>& gens, CoefficientStream& rng, const PrimeField& f,
                        int level);

}  // namespace bhat
