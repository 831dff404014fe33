#include "bhat/verifier.hpp"

#include <sstream>

#include "bhat/errors.hpp"
#include "json.hpp"

namespace bhat {

const char* to_string(Truth t) {
  switch (t) {
    case Truth::True: return "true";
    case Truth::False: return "false";
    case Truth::Undecided: return "undecided";
  }
  return "undecided";
}

namespace {

Truth truth(bool b) { return b ? Truth::True : Truth::False; }

std::string q(const Rational& v) { return to_string(v); }

std::string range(int lo, int hi) { return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]"; }

void settle(TheoremBlock& b) {
  b.decidable = true;
  std::optional<Truth> seen;
  b.agree = true;
  for (const auto& c : b.conditions) {
    if (c.value == Truth::Undecided) {
      b.decidable = false;
      continue;
    }
    if (seen && *seen != c.value) b.agree = false;
    seen = c.value;
  }
}

Condition all_of(std::string label, std::vector<std::pair<bool, std::string>> parts) {
  Condition c;
  c.label = std::move(label);
  bool ok = true;
  for (auto& [holds, text] : parts) {
    ok = ok && holds;
    if (!c.detail.empty()) c.detail += "; ";
    c.detail += text + (holds ? "" : " (fails)");
  }
  c.value = truth(ok);
  return c;
}

}  // namespace

Verifier::Verifier(const BiFiltration& f, VerifierOptions opt)
    : f_(f), opt_(std::move(opt)), rep_(coefficient_report(f, opt_.r_max, opt_.s_max, opt_.n_max)) {
  if (opt_.grid < 0 || opt_.grid + 1 > opt_.r_max || opt_.grid + 1 > opt_.s_max) {
    throw Error(ErrorKind::InvalidArgument, "grid must lie inside the fitted window");
  }
  engine_ = std::make_unique<KoszulEngine>(f_, sample_joint_reduction(f_, opt_.seed, opt_.jr));
}

const H2Classification& Verifier::classification(int r, int s) const {
  auto it = classified_.find({r, s});
  if (it == classified_.end()) {
    it = classified_.emplace(std::pair{r, s}, engine_->classify_h2(r, s, rep_, opt_.band)).first;
  }
  return it->second;
}

Condition Verifier::koszul_finite(int r, int s) const {
  const H2Classification& c = classification(r, s);
  Condition cond;
  cond.label = "(a) lambda(H2) finite";
  switch (c.verdict) {
    case H2Verdict::Finite:
      cond.value = Truth::True;
      cond.detail = "lambda(L(r,s;k)) constant " + q(c.c0) + " on k in " +
                    range(c.band.fit_lo, c.band.verify_hi);
      break;
    case H2Verdict::InfiniteDetected:
      cond.value = Truth::False;
      cond.detail = "lambda(L(r,s;k)) grows with slope " + q(c.c1);
      break;
    case H2Verdict::Inconclusive:
      cond.value = Truth::Undecided;
      cond.detail = c.note;
      break;
  }
  return cond;
}

Condition Verifier::koszul_vanishes(int r, int s) const {
  const H2Classification& c = classification(r, s);
  Condition cond = koszul_finite(r, s);
  cond.label = "(a) H2 vanishes";
  if (c.verdict == H2Verdict::Finite && c.c0 != Rational(0)) {
    cond.value = Truth::False;
    cond.detail += " (nonzero)";
  }
  return cond;
}

Condition Verifier::identities_above(int r, int s) const {
  const auto& cert = engine_->cert();
  auto first_m = [&](bool i_side) -> std::optional<int> {
    for (int m = 1; m <= opt_.m_band_hi; ++m) {
      const bool holds = i_side ? jr_identity_holds(f_, cert.a, cert.b, cert.ab_adequacy, r, m - 1)
                                : jr_identity_holds(f_, cert.a, cert.b, cert.ab_adequacy, m - 1, s);
      if (holds) return m;
    }
    return std::nullopt;
  };
  const auto mi = first_m(true);
  const auto ms = first_m(false);
  Condition c;
  c.label = "(c) joint reduction identities for i > r, i > s and m large";
  c.value = truth(mi && ms);
  auto part = [&](const std::optional<int>& m, const char* what) {
    return std::string(what) + (m ? " from m = " + std::to_string(*m)
                                  : " not observed for m <= " + std::to_string(opt_.m_band_hi));
  };
  c.detail = part(mi, "I^iJ^m side") + "; " + part(ms, "I^mJ^i side");
  return c;
}

TheoremBlock Verifier::finite_length_criterion(int r, int s) const {
  const auto& b = rep_.bhattacharya;
  const auto& rows = rep_.rows;
  TheoremBlock blk;
  blk.name = "finite_length_criterion";
  blk.r = r;
  blk.s = s;
  blk.band = "k in " + range(opt_.band.fit_lo, opt_.band.verify_hi) + ", m <= " +
             std::to_string(opt_.m_band_hi);
  blk.conditions.push_back(koszul_finite(r, s));

  const Rational g = rows.g1.at(r) + Rational(r) * b.e11;
  const Rational h = rows.h1.at(s) + Rational(s) * b.e11;
  blk.conditions.push_back(all_of("(b) e01 = g1(r) + r e11 and e10 = h1(s) + s e11",
                                  {{b.e01 == g, "e01 = " + q(b.e01) + ", g1(r) + r e11 = " + q(g)},
                                   {b.e10 == h, "e10 = " + q(b.e10) + ", h1(s) + s e11 = " + q(h)}}));
  blk.conditions.push_back(identities_above(r, s));
  settle(blk);

  const H2Classification& c = classification(r, s);
  if (c.verdict == H2Verdict::Finite) {
    blk.length = c.c0;
    const std::int64_t rr = engine_->ratliff_rush(r, s).quotient_length;
    blk.closed_form = -rep_.IJ.e2 + rows.g2.at(r) + rows.h2.at(s) - Rational(rep_.table.at(r, s)) +
                      Rational(r * s) * b.e11 + Rational(rr);
    if (blk.decidable && blk.agree && *blk.length != *blk.closed_form) {
      blk.agree = false;
      blk.notes.push_back("closed form " + q(*blk.closed_form) + " differs from the length " +
                          q(*blk.length));
    }
  }
  return blk;
}

TheoremBlock Verifier::finite_length_at_origin() const {
  const auto& b = rep_.bhattacharya;
  TheoremBlock blk;
  blk.name = "finite_length_at_origin";
  blk.r = blk.s = 0;
  blk.band = "k in " + range(opt_.band.fit_lo, opt_.band.verify_hi) + ", m <= " +
             std::to_string(opt_.m_band_hi);
  blk.conditions.push_back(koszul_finite(0, 0));
  blk.conditions.push_back(all_of("(b) e10 = e1(I) and e01 = e1(J)",
                                  {{b.e10 == rep_.I.e1, "e10 = " + q(b.e10) + ", e1(I) = " + q(rep_.I.e1)},
                                   {b.e01 == rep_.J.e1, "e01 = " + q(b.e01) + ", e1(J) = " + q(rep_.J.e1)}}));
  blk.conditions.push_back(identities_above(0, 0));
  settle(blk);
  const H2Classification& c = classification(0, 0);
  if (c.verdict == H2Verdict::Finite) {
    blk.length = c.c0;
    blk.closed_form = -rep_.IJ.e2 + rep_.I.e2 + rep_.J.e2;
    if (blk.decidable && blk.agree && *blk.length != *blk.closed_form) {
      blk.agree = false;
      blk.notes.push_back("-e2(IJ) + e2(I) + e2(J) = " + q(*blk.closed_form) +
                          " differs from the length " + q(*blk.length));
    }
  }
  return blk;
}

TheoremBlock Verifier::vanishing_criterion(int r0, int s0) const {
  const auto& b = rep_.bhattacharya;
  const auto& rows = rep_.rows;
  TheoremBlock blk;
  blk.name = "vanishing_criterion";
  blk.r = r0;
  blk.s = s0;
  const KBand& kb = opt_.band;
  blk.band = "k in " + range(kb.fit_lo, kb.verify_hi);
  blk.conditions.push_back(koszul_vanishes(r0, s0));

  const std::int64_t rr = engine_->ratliff_rush(r0, s0).quotient_length;
  const Rational g = rows.g1.at(r0) + Rational(r0) * b.e11;
  const Rational h = rows.h1.at(s0) + Rational(s0) * b.e11;
  const Rational e2 = rows.g2.at(r0) + rows.h2.at(s0) - Rational(rep_.table.at(r0, s0)) +
                      Rational(r0 * s0) * b.e11 + Rational(rr);
  blk.conditions.push_back(
      all_of("(b) coefficient identities",
             {{b.e01 == g, "e01 = " + q(b.e01) + ", g1(r0) + r0 e11 = " + q(g)},
              {b.e10 == h, "e10 = " + q(b.e10) + ", h1(s0) + s0 e11 = " + q(h)},
              {rep_.IJ.e2 == e2, "e2(IJ) = " + q(rep_.IJ.e2) + ", formula = " + q(e2)}}));

  Condition c;
  c.label = "(c) I^{r0+k}J^{s0+k} = a^k I^{r0} J^{s0+k} + b^k I^{r0+k} J^{s0} for large k";
  int equal = 0, total = 0;
  std::string failing;
  for (int k = kb.fit_lo; k <= kb.verify_hi; ++k, ++total) {
    const LocalIdeal d = jr_denominator(f_, engine_->a_power(k), engine_->b_power(k),
                                        *engine_->ab_power_ideal(k).adequacy(), r0, s0, k);
    if (ideal_eq(d, *f_.product(r0 + k, s0 + k))) {
      ++equal;
    } else if (failing.empty()) {
      failing = std::to_string(k);
    }
  }
  c.value = equal == total ? Truth::True : equal == 0 ? Truth::False : Truth::Undecided;
  c.detail = std::to_string(equal) + " of " + std::to_string(total) + " k values equal" +
             (failing.empty() ? "" : ", first failing k = " + failing);
  blk.conditions.push_back(c);
  settle(blk);
  return blk;
}

TheoremBlock Verifier::vanishing_for_powers() const {
  const auto& b = rep_.bhattacharya;
  TheoremBlock blk;
  blk.name = "vanishing_for_powers";
  blk.r = blk.s = 0;
  blk.band = "k in " + range(opt_.band.fit_lo, opt_.band.verify_hi) + " for L, k in " +
             range(opt_.power_lo, opt_.power_hi) + " for r(I^k|J^k)";
  blk.conditions.push_back(koszul_vanishes(0, 0));
  const Rational sum = rep_.I.e2 + rep_.J.e2;
  blk.conditions.push_back(
      all_of("(b) e10 = e1(I), e01 = e1(J), e2(IJ) = e2(I) + e2(J)",
             {{b.e10 == rep_.I.e1, "e10 = " + q(b.e10) + ", e1(I) = " + q(rep_.I.e1)},
              {b.e01 == rep_.J.e1, "e01 = " + q(b.e01) + ", e1(J) = " + q(rep_.J.e1)},
              {rep_.IJ.e2 == sum, "e2(IJ) = " + q(rep_.IJ.e2) + ", e2(I) + e2(J) = " + q(sum)}}));

  Condition c;
  c.label = "(c) r(I^k | J^k) = 0 for large k";
  std::vector<bool> zero;
  for (int k = opt_.power_lo; k <= opt_.power_hi; ++k) {
    zero.push_back(jr_number_zero(*f_.power_I(k), *f_.power_J(k), engine_->a_power(k),
                                  engine_->b_power(k))
                       .zero);
  }
  int tail_from = -1;
  for (int i = static_cast<int>(zero.size()) - 1; i >= 0 && zero[i]; --i) tail_from = opt_.power_lo + i;
  bool none = true;
  for (bool z : zero) none = none && !z;
  if (tail_from >= 0) {
    c.value = Truth::True;
    c.detail = "IJ-type identity with (a^k, b^k) holds for k in " + range(tail_from, opt_.power_hi);
  } else {
    c.value = none ? Truth::False : Truth::Undecided;
    c.detail = none ? "fails for every k in the band" : "holds inside the band but not at its top";
  }
  blk.conditions.push_back(c);
  settle(blk);
  return blk;
}

TheoremBlock Verifier::vanishing_with_depth() const {
  TheoremBlock blk = vanishing_for_powers();
  blk.name = "vanishing_with_depth";
  blk.conditions.pop_back();
  const DepthResult di = depth_G_positive(f_.I(), opt_.seed, opt_.depth_window);
  const DepthResult dj = depth_G_positive(f_.J(), opt_.seed, opt_.depth_window);
  const JrZeroResult jr = jr_number_zero(f_, engine_->cert());
  Condition c;
  c.label = "(c) r(I | J) = 0";
  c.value = truth(jr.zero);
  c.detail = jr.zero ? "IJ = aJ + bI"
                     : "witness " + jr.witness->to_string(f_.I().field()) + " outside aJ + bI";
  blk.conditions.push_back(c);
  settle(blk);
  blk.asserted = di.positive && dj.positive;
  blk.band += ", depth window " + std::to_string(opt_.depth_window);
  auto depth_note = [&](const DepthResult& d, const char* which) {
    return std::string("depth G(") + which + ") >= 1: " +
           (d.positive ? "yes, witness " + d.witness->to_string(f_.I().field()) : "not observed (" + d.note + ")");
  };
  blk.notes.push_back(depth_note(di, "I"));
  blk.notes.push_back(depth_note(dj, "J"));
  if (!blk.asserted && blk.decidable && !blk.agree) {
    blk.notes.push_back("hypothesis not met and the conditions differ; equivalence not asserted");
  }
  return blk;
}

TheoremBlock Verifier::monotone_finiteness() const {
  TheoremBlock blk;
  blk.name = "monotone_finiteness";
  blk.band = "(r, s) in " + range(0, opt_.grid) + "^2";
  Condition c;
  c.label = "finite at (r, s) implies finite at all (p, q) >= (r, s)";
  c.value = Truth::True;
  for (int r = 0; r <= opt_.grid; ++r) {
    for (int s = 0; s <= opt_.grid; ++s) {
      if (classification(r, s).verdict != H2Verdict::Finite) continue;
      for (int p = r; p <= opt_.grid; ++p) {
        for (int qq = s; qq <= opt_.grid; ++qq) {
          const H2Verdict v = classification(p, qq).verdict;
          const std::string at = "(" + std::to_string(p) + "," + std::to_string(qq) + ") above (" +
                                 std::to_string(r) + "," + std::to_string(s) + ")";
          if (v == H2Verdict::InfiniteDetected) {
            c.value = Truth::False;
            blk.notes.push_back("infinite at " + at);
          } else if (v == H2Verdict::Inconclusive && c.value == Truth::True) {
            c.value = Truth::Undecided;
            blk.notes.push_back("inconclusive at " + at);
          }
        }
      }
    }
  }
  std::string map;
  for (int r = 0; r <= opt_.grid; ++r) {
    for (int s = 0; s <= opt_.grid; ++s) {
      const H2Verdict v = classification(r, s).verdict;
      map += v == H2Verdict::Finite ? 'F' : v == H2Verdict::InfiniteDetected ? 'I' : '?';
    }
    if (r < opt_.grid) map += '/';
  }
  c.detail = "verdicts by row r: " + map;
  blk.conditions.push_back(c);
  blk.decidable = c.value != Truth::Undecided;
  blk.agree = c.value != Truth::False;
  return blk;
}

TheoremBlock Verifier::coefficient_propositions() const {
  const auto& b = rep_.bhattacharya;
  const auto& rows = rep_.rows;
  TheoremBlock blk;
  blk.name = "coefficient_propositions";
  auto require = [&](Condition c) {
    if (c.value != Truth::True) {
      throw Error(ErrorKind::CrossCheckFailure, c.label + ": " + c.detail);
    }
    blk.conditions.push_back(std::move(c));
  };

  std::vector<int> s_band, r_band;
  for (int t = opt_.s_max - 2; t <= opt_.s_max; ++t) s_band.push_back(t);
  for (int t = opt_.r_max - 2; t <= opt_.r_max; ++t) r_band.push_back(t);
  Rational sum_a = 0, sum_b = 0;
  std::string alphas, betas;
  for (int i = 0; i < opt_.r_max; ++i) {
    const AlphaValue v = engine_->alpha(i, rep_, s_band);
    sum_a += Rational(v.from_L);
    alphas += (i ? "," : "") + std::to_string(v.from_L);
  }
  for (int j = 0; j < opt_.s_max; ++j) {
    const AlphaValue v = engine_->beta(j, rep_, r_band);
    sum_b += Rational(v.from_L);
    betas += (j ? "," : "") + std::to_string(v.from_L);
  }
  require(all_of("e01 = e1(J) + sum alpha(i), e10 = e1(I) + sum beta(j)",
                 {{b.e01 == rep_.J.e1 + sum_a, "alpha = [" + alphas + "], e01 - e1(J) = " +
                                                    q(b.e01 - rep_.J.e1)},
                  {b.e10 == rep_.I.e1 + sum_b,
                   "beta = [" + betas + "], e10 - e1(I) = " + q(b.e10 - rep_.I.e1)}}));
  require(all_of("alpha(i) = 0 and beta(j) = 0 at the end of the window",
                 {{rows.g1_linear_onset < opt_.r_max, "g1 linear from r = " + std::to_string(rows.g1_linear_onset)},
                  {rows.h1_linear_onset < opt_.s_max, "h1 linear from s = " + std::to_string(rows.h1_linear_onset)}}));

  std::vector<std::pair<bool, std::string>> nonneg;
  for (int r = 0; r <= opt_.r_max; ++r) {
    const Rational v = b.e01 - rows.g1[r] - Rational(r) * b.e11;
    if (v < Rational(0)) nonneg.push_back({false, "r = " + std::to_string(r) + ": " + q(v)});
  }
  for (int s = 0; s <= opt_.s_max; ++s) {
    const Rational v = b.e10 - rows.h1[s] - Rational(s) * b.e11;
    if (v < Rational(0)) nonneg.push_back({false, "s = " + std::to_string(s) + ": " + q(v)});
  }
  if (nonneg.empty()) nonneg.push_back({true, "all values >= 0 on the window"});
  require(all_of("e01 - g1(r) - r e11 >= 0 and e10 - h1(s) - s e11 >= 0", nonneg));

  const KBand& kb = opt_.band;
  int cells = 0;
  for (int r = 0; r <= opt_.grid; ++r) {
    for (int s = 0; s <= opt_.grid; ++s) {
      const LengthFormula lf = length_formula(rep_, r, s, engine_->ratliff_rush(r, s).quotient_length);
      for (int k = kb.fit_lo; k <= kb.verify_hi; ++k, ++cells) {
        const std::int64_t len = engine_->L_length(r, s, k);
        if (Rational(len) != lf(r, s, k)) {
          require(all_of("lambda(L(r,s;k)) = A(s+k) + B(r+k) + C",
                         {{false, "at (" + std::to_string(r) + "," + std::to_string(s) + ";" +
                                      std::to_string(k) + "): " + std::to_string(len) + " vs " +
                                      q(lf(r, s, k))}}));
        }
      }
    }
  }
  require(all_of("lambda(L(r,s;k)) = A(s+k) + B(r+k) + C",
                 {{true, std::to_string(cells) + " grid points with k in " + range(kb.fit_lo, kb.verify_hi)}}));

  blk.band = "alpha on s in " + range(s_band.front(), s_band.back()) + ", beta on r in " +
             range(r_band.front(), r_band.back()) + ", closed form on (r, s) in " + range(0, opt_.grid) +
             "^2";

  if (opt_.second_pair) {
    JointReductionOptions jo = opt_.jr;
    jo.pure_powers_first = false;
    try {
      const JointReductionCert other = sample_joint_reduction(f_, opt_.seed + 1, jo);
      const KoszulEngine e2(f_, other);
      std::vector<std::pair<bool, std::string>> parts;
      for (const auto& [r, s] : {std::pair{0, 0}, std::pair{1, 1}}) {
        for (int k = kb.fit_lo; k <= opt_.pair_k_hi; ++k) {
          const auto l1 = engine_->L_length(r, s, k);
          const auto l2 = e2.L_length(r, s, k);
          if (l1 != l2) {
            parts.push_back({false, "(" + std::to_string(r) + "," + std::to_string(s) + ";" +
                                        std::to_string(k) + "): " + std::to_string(l1) + " vs " +
                                        std::to_string(l2)});
          }
        }
      }
      if (parts.empty()) {
        parts.push_back({true, "second pair (" + other.a_text(f_.I().field()) + ", " +
                                   other.b_text(f_.I().field()) + ") gives the same lengths at (0,0), (1,1), k in " +
                                   range(kb.fit_lo, opt_.pair_k_hi)});
      }
      require(all_of("lambda(L(r,s;k)) independent of the pair", parts));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SamplingExhausted) throw;
      Condition c{"lambda(L(r,s;k)) independent of the pair", Truth::Undecided, e.what()};
      blk.conditions.push_back(c);
    }
  }
  settle(blk);
  return blk;
}

VerificationReport Verifier::report(std::vector<TheoremBlock> blocks) const {
  VerificationReport rep;
  const auto& prov = rep_.table.provenance;
  rep.prime = static_cast<int>(prov.prime);
  rep.truncation_order = prov.truncation_order;
  rep.I = prov.I;
  rep.J = prov.J;
  rep.options = opt_;
  rep.coefficients = rep_;
  rep.cert = engine_->cert();
  rep.blocks = std::move(blocks);
  rep.grid = classified_;
  return rep;
}

VerificationReport Verifier::run() const {
  std::vector<TheoremBlock> blocks;
  blocks.push_back(coefficient_propositions());
  for (int r = 0; r <= opt_.grid; ++r) {
    for (int s = 0; s <= opt_.grid; ++s) blocks.push_back(finite_length_criterion(r, s));
  }
  blocks.push_back(finite_length_at_origin());
  blocks.push_back(monotone_finiteness());
  blocks.push_back(vanishing_criterion(0, 0));
  blocks.push_back(vanishing_for_powers());
  blocks.push_back(vanishing_with_depth());
  return report(std::move(blocks));
}

std::vector<const TheoremBlock*> VerificationReport::failures() const {
  std::vector<const TheoremBlock*> out;
  for (const auto& b : blocks) {
    if (b.failed()) out.push_back(&b);
  }
  return out;
}

std::string VerificationReport::to_json() const {
  using nlohmann::ordered_json;
  auto rat = [](const Rational& v) -> ordered_json {
    if (v.denominator() == 1) return v.numerator();
    return to_string(v);
  };
  ordered_json j;
  j["report_version"] = 1;
  j["provenance"] = {{"prime", prime},
                     {"truncation_order", truncation_order},
                     {"I", I},
                     {"J", J},
                     {"seed", options.seed},
                     {"r_max", options.r_max},
                     {"s_max", options.s_max},
                     {"k_band", {options.band.fit_lo, options.band.verify_hi}},
                     {"grid", options.grid}};
  j["coefficients"] = ordered_json::parse(coefficients.to_json());
  const PrimeField field(prime);
  j["joint_reduction"] = ordered_json::parse(cert.to_json(field));
  ordered_json grid_j = ordered_json::array();
  for (const auto& [rs, c] : grid) {
    ordered_json lengths = ordered_json::object();
    for (const auto& [k, v] : c.lengths) lengths[std::to_string(k)] = v;
    grid_j.push_back({{"r", rs.first},
                      {"s", rs.second},
                      {"verdict", to_string(c.verdict)},
                      {"slope", rat(c.c1)},
                      {"intercept", rat(c.c0)},
                      {"rr_quotient", c.rr_quotient},
                      {"lengths", lengths}});
  }
  j["h2"] = grid_j;
  ordered_json blocks_j = ordered_json::array();
  for (const auto& b : blocks) {
    ordered_json conds = ordered_json::array();
    for (const auto& c : b.conditions) {
      conds.push_back({{"label", c.label}, {"value", to_string(c.value)}, {"detail", c.detail}});
    }
    ordered_json bj = {{"name", b.name}};
    if (b.r >= 0) bj["r"] = b.r;
    if (b.s >= 0) bj["s"] = b.s;
    bj["conditions"] = conds;
    bj["decidable"] = b.decidable;
    bj["agree"] = b.agree;
    bj["asserted"] = b.asserted;
    bj["length"] = b.length ? rat(*b.length) : ordered_json(nullptr);
    bj["closed_form"] = b.closed_form ? rat(*b.closed_form) : ordered_json(nullptr);
    bj["band"] = b.band;
    bj["notes"] = b.notes;
    blocks_j.push_back(bj);
  }
  j["blocks"] = blocks_j;
  j["failures"] = failures().size();
  return j.dump(2) + "\n";
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  const auto& b = coefficients.bhattacharya;
  os << "I = " << I << ", J = " << J << ", p = " << prime << ", N = " << truncation_order
     << ", seed = " << options.seed << "\n";
  os << "e20 e11 e02 e10 e01 e00 = " << q(b.e20) << " " << q(b.e11) << " " << q(b.e02) << " "
     << q(b.e10) << " " << q(b.e01) << " " << q(b.e00) << "\n";
  os << "e(I) = " << q(coefficients.I.e0) << ", e1(I) = " << q(coefficients.I.e1)
     << ", e2(I) = " << q(coefficients.I.e2) << "; e1(J) = " << q(coefficients.J.e1)
     << ", e2(J) = " << q(coefficients.J.e2) << "; e2(IJ) = " << q(coefficients.IJ.e2) << "\n";
  const PrimeField field(prime);
  os << "pair (a, b) = (" << cert.a_text(field) << ", " << cert.b_text(field) << ")\n";
  for (const auto& [rs, c] : grid) {
    os << "H2 (" << rs.first << "," << rs.second << "): " << to_string(c.verdict);
    if (c.verdict == H2Verdict::InfiniteDetected) os << "(slope " << q(c.c1) << ")";
    if (c.verdict == H2Verdict::Finite) os << "(" << q(c.c0) << ")";
    os << "\n";
  }
  for (const auto& blk : blocks) {
    os << blk.name;
    if (blk.r >= 0) os << " (" << blk.r << "," << blk.s << ")";
    os << ": " << (!blk.asserted ? "not asserted" : !blk.decidable ? "undecided" : blk.agree ? "agree" : "DISAGREE");
    if (blk.length) os << ", length " << q(*blk.length);
    os << "  [" << blk.band << "]\n";
    for (const auto& c : blk.conditions) {
      os << "  " << c.label << ": " << to_string(c.value) << " -- " << c.detail << "\n";
    }
    for (const auto& n : blk.notes) os << "  note: " << n << "\n";
  }
  return os.str();
}

}  // namespace bhat
