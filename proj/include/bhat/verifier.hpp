#pragma once

// Verification reports: each equivalence statement is evaluated by computing
// every condition on its own (Koszul lengths, coefficient arithmetic, direct
// ideal identities) and comparing the answers.
//
// "k >> 0" and "m >> 0" are evaluated on the bands recorded in each block, so
// False means "not observed on the band".

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bhat/koszul.hpp"

namespace bhat {

enum class Truth { True, False, Undecided };
const char* to_string(Truth t);

struct Condition {
  std::string label;
  Truth value = Truth::Undecided;
  std::string detail;
};

struct TheoremBlock {
  std::string name;
  int r = -1, s = -1;
  std::vector<Condition> conditions;
  bool decidable = false;  ///< no condition Undecided
  bool agree = false;      ///< all decided conditions equal
  bool asserted = true;    ///< false when the hypotheses are not met
  std::optional<Rational> length;       ///< stable lambda(L) when finite
  std::optional<Rational> closed_form;  ///< coefficient formula for it
  std::string band;
  std::vector<std::string> notes;

  /// Asserted, decidable and not in agreement.
  bool failed() const { return asserted && decidable && !agree; }
};

struct VerifierOptions {
  int r_max = 8, s_max = 8, n_max = 8;
  KBand band;
  JointReductionOptions jr;
  std::uint64_t seed = 1;
  int grid = 2;         ///< (r, s) in [0, grid]^2
  int m_band_hi = 8;    ///< m <= this for the "m >> 0" identities
  int power_lo = 2, power_hi = 4;  ///< k band for r(I^k | J^k) = 0
  int depth_window = 4;
  int pair_k_hi = 5;    ///< second-pair comparison on k in [band.fit_lo, pair_k_hi]
  bool second_pair = true;
  unsigned threads = 0;
};

struct VerificationReport {
  int prime = 0;
  int truncation_order = 0;
  std::string I, J;
  VerifierOptions options;
  CoefficientReport coefficients;
  JointReductionCert cert;
  std::map<std::pair<int, int>, H2Classification> grid;
  std::vector<TheoremBlock> blocks;

  std::vector<const TheoremBlock*> failures() const;
  std::string to_json() const;
  std::string to_text() const;
};

class Verifier {
 public:
  Verifier(const BiFiltration& f, VerifierOptions opt = {});

  const CoefficientReport& coefficients() const noexcept { return rep_; }
  const JointReductionCert& cert() const noexcept { return engine_->cert(); }
  const KoszulEngine& engine() const noexcept { return *engine_; }
  const VerifierOptions& options() const noexcept { return opt_; }

  const H2Classification& classification(int r, int s) const;

  /// Finiteness at (r, s): Koszul limit, coefficient identities, and the
  /// identities I^iJ^m = aI^{i-1}J^m + bI^iJ^{m-1} for i > r (and the
  /// symmetric ones for i > s) with m large.
  TheoremBlock finite_length_criterion(int r, int s) const;
  /// The (0,0) case stated with e1(I), e1(J), e2(I), e2(J).
  TheoremBlock finite_length_at_origin() const;
  /// Vanishing at (r0, s0).
  TheoremBlock vanishing_criterion(int r0, int s0) const;
  /// Vanishing at (0,0) against r(I^k | J^k) = 0 for large k.
  TheoremBlock vanishing_for_powers() const;
  /// Vanishing at (0,0) against r(I | J) = 0, asserted under positive depth.
  TheoremBlock vanishing_with_depth() const;
  /// Finite at (r, s) implies finite at every (p, q) >= (r, s) in the grid.
  TheoremBlock monotone_finiteness() const;
  /// The alpha/beta sums, non-negativity, the closed form of lambda(L) and
  /// independence of the pair; throws CrossCheckFailure on any violation.
  TheoremBlock coefficient_propositions() const;

  /// Report around the given blocks (classifications computed so far).
  VerificationReport report(std::vector<TheoremBlock> blocks) const;
  VerificationReport run() const;

 private:
  Condition identities_above(int r, int s) const;
  Condition koszul_finite(int r, int s) const;
  Condition koszul_vanishes(int r, int s) const;

  const BiFiltration& f_;
  VerifierOptions opt_;
  CoefficientReport rep_;
  std::unique_ptr<KoszulEngine> engine_;
  mutable std::map<std::pair<int, int>, H2Classification> classified_;
};

}  // namespace bhat
