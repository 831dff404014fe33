#include "bhat/joint_reduction.hpp"

#include <algorithm>

#include "json.hpp"

#include "bhat/errors.hpp"

namespace bhat {

const char* to_string(PairOrigin o) {
  switch (o) {
    case PairOrigin::Monomial: return "monomial";
    case PairOrigin::NewtonVertices: return "newton-vertices";
    case PairOrigin::Random: return "random";
    case PairOrigin::Explicit: return "explicit";
  }
  return "unknown";
}

Coeff CoefficientStream::next() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return static_cast<Coeff>(1 + z % (p_ - 1));
}

Poly random_combination(const std::vector<Poly>& gens, CoefficientStream& rng, const PrimeField& f,
                        int level) {
  Poly out;
  for (const auto& g : gens) out = add(out, g.truncated(level).scaled(rng.next(), f), f);
  return out;
}

LocalIdeal jr_denominator(const BiFiltration& f, const Poly& ak, const Poly& bk,
                          int ab_k_adequacy, int r, int s, int k) {
  const IdealPtr p = f.product(r, s + k);
  const IdealPtr q = f.product(r + k, s);
  const IdealPtr num = f.product(r + k, s + k);
  const int guaranteed = ab_k_adequacy + std::max(*p->adequacy(), *q->adequacy());
  const int start = std::min(guaranteed, *num->adequacy() + 2);
  return IdealFactory::sum_of_multiples(f.algebra(), {{ak, p.get()}, {bk, q.get()}}, start,
                                        guaranteed);
}

bool jr_identity_holds(const BiFiltration& f, const Poly& a, const Poly& b, int ab_adequacy, int r,
                       int s) {
  const LocalIdeal d = jr_denominator(f, a, b, ab_adequacy, r, s, 1);
  return colength(d) == f.length(r + 1, s + 1);
}

namespace {

std::optional<LocalIdeal> try_ideal(const AlgebraPtr& alg, const std::vector<Poly>& gens) {
  try {
    return ideal_from_gens(alg, gens);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotMPrimary) return std::nullopt;
    throw;
  }
}

// Least r0 in [1, r_max - 1] with ok(r) for every r0 <= r <= r_max.
template <class Pred>
int least_threshold(int r_max, Pred ok) {
  int r0 = r_max + 1;
  while (r0 > 1 && ok(r0 - 1)) --r0;
  return r0;
}

}  // namespace

void verify_superficial(JointReductionCert& cert, const BiFiltration& f, int r_max, int s_max) {
  if (r_max < 2 || s_max < 2) throw Error(ErrorKind::InvalidArgument, "superficial window too small");
  cert.r0_by_s.clear();
  cert.s0_by_r.clear();
  for (int s = 0; s <= s_max; ++s) {
    const int r0 = least_threshold(r_max, [&](int r) {
      return colon_colength(*f.product(r, s), cert.a) == f.length(r - 1, s);
    });
    if (r0 > r_max - 1) {
      throw Error(ErrorKind::SuperficialityNotObserved,
                  "(I^r J^" + std::to_string(s) + " : a) = I^(r-1) J^" + std::to_string(s) +
                      " not observed for r <= " + std::to_string(r_max));
    }
    cert.r0_by_s.push_back(r0);
  }
  for (int r = 0; r <= r_max; ++r) {
    const int s0 = least_threshold(s_max, [&](int s) {
      return colon_colength(*f.product(r, s), cert.b) == f.length(r, s - 1);
    });
    if (s0 > s_max - 1) {
      throw Error(ErrorKind::SuperficialityNotObserved,
                  "(I^" + std::to_string(r) + " J^s : b) = I^" + std::to_string(r) +
                      " J^(s-1) not observed for s <= " + std::to_string(s_max));
    }
    cert.s0_by_r.push_back(s0);
  }
  cert.sup_r_max = r_max;
  cert.sup_s_max = s_max;
  cert.sup_r0 = *std::max_element(cert.r0_by_s.begin(), cert.r0_by_s.end());
  cert.sup_s0 = *std::max_element(cert.s0_by_r.begin(), cert.s0_by_r.end());
  cert.superficial_checked = true;
}

JointReductionCert certify_pair(const BiFiltration& f, const Poly& a, const Poly& b,
                                const JointReductionOptions& opt) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero element in pair");
  if (!contains(f.I(), a)) throw Error(ErrorKind::InvalidArgument, "a is not in I");
  if (!contains(f.J(), b)) throw Error(ErrorKind::InvalidArgument, "b is not in J");
  auto ab = try_ideal(f.algebra(), {a, b});
  if (!ab) throw Error(ErrorKind::InvalidArgument, "(a, b) is not m-primary");

  JointReductionCert cert;
  cert.a = a;
  cert.b = b;
  cert.mprimary_ab = true;
  cert.ab_adequacy = *ab->adequacy();
  cert.ab_colength = colength(*ab);
  cert.jr_window = opt.jr_window;
  for (int d = 0; d <= opt.jr_window; ++d) {
    if (jr_identity_holds(f, a, b, cert.ab_adequacy, d, d)) {
      cert.jr_from = d;
      break;
    }
  }
  if (cert.jr_from < 0) {
    throw Error(ErrorKind::InvalidArgument, "joint-reduction identity not observed up to index " +
                                                std::to_string(opt.jr_window));
  }
  for (int r = cert.jr_from; r <= opt.jr_window; ++r) {
    for (int s = cert.jr_from; s <= opt.jr_window; ++s) {
      if (!jr_identity_holds(f, a, b, cert.ab_adequacy, r, s)) {
        throw Error(ErrorKind::InternalIdentityFailure,
                    "joint-reduction identity fails at (" + std::to_string(r) + "," +
                        std::to_string(s) + ") above a cell where it holds");
      }
      cert.jr_cells.emplace_back(r, s);
    }
  }
  if (opt.require_superficial) verify_superficial(cert, f, opt.sup_r_max, opt.sup_s_max);
  return cert;
}

std::vector<Poly> newton_vertex_generators(const LocalIdeal& k) {
  if (!k.is_monomial()) throw Error(ErrorKind::InvalidArgument, "not a monomial ideal");
  std::vector<std::pair<int, int>> pts;
  for (const auto& g : k.generators()) pts.push_back(monomial_exponents(g.terms().lead()));
  std::sort(pts.begin(), pts.end());
  std::vector<std::pair<int, int>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& q = hull.back();
      const long cross = static_cast<long>(q.first - o.first) * (p.second - o.second) -
                         static_cast<long>(q.second - o.second) * (p.first - o.first);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(p);
  }
  std::vector<Poly> out;
  for (const auto& [i, j] : hull) out.push_back(Poly::monomial(i, j));
  return out;
}

JointReductionCert sample_joint_reduction(const BiFiltration& f, std::uint64_t seed,
                                          const JointReductionOptions& opt) {
  const PrimeField& field = f.I().field();
  const int n = f.algebra()->order();
  struct Candidate {
    Poly a, b;
    PairOrigin origin;
  };
  int attempt = 0;
  auto attempt_pair = [&](const Candidate& c) -> std::optional<JointReductionCert> {
    ++attempt;
    try {
      JointReductionCert cert = certify_pair(f, c.a, c.b, opt);
      cert.seed = seed;
      cert.origin = c.origin;
      cert.attempt = attempt;
      return cert;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::InvalidArgument ||
          e.kind() == ErrorKind::SuperficialityNotObserved) {
        return std::nullopt;
      }
      throw;
    }
  };

  if (opt.pure_powers_first && f.I().is_monomial() && f.J().is_monomial()) {
    auto pure = [](const LocalIdeal& k, bool x_side) -> std::optional<Poly> {
      for (const auto& g : k.generators()) {
        const auto [i, j] = monomial_exponents(g.terms().lead());
        if (x_side ? j == 0 : i == 0) return g;
      }
      return std::nullopt;
    };
    for (bool x_first : {true, false}) {
      auto a = pure(f.I(), x_first);
      auto b = pure(f.J(), !x_first);
      if (!a || !b) continue;
      if (auto cert = attempt_pair({*a, *b, PairOrigin::Monomial})) return *cert;
    }
  }

  CoefficientStream rng(seed, field.modulus());
  if (f.I().is_monomial() && f.J().is_monomial()) {
    const auto vi = newton_vertex_generators(f.I());
    const auto vj = newton_vertex_generators(f.J());
    for (int t = 0; t < std::max(1, opt.max_attempts / 3); ++t) {
      Poly a = random_combination(vi, rng, field, n);
      Poly b = random_combination(vj, rng, field, n);
      if (auto cert = attempt_pair({a, b, PairOrigin::NewtonVertices})) return *cert;
    }
  }
  for (int t = 0; t < opt.max_attempts; ++t) {
    Poly a = random_combination(f.I().generators(), rng, field, n);
    Poly b = random_combination(f.J().generators(), rng, field, n);
    if (auto cert = attempt_pair({a, b, PairOrigin::Random})) return *cert;
  }
  throw Error(ErrorKind::SamplingExhausted,
              "no joint reduction with superficial conditions found after " +
                  std::to_string(attempt) + " candidates (seed " + std::to_string(seed) + ")");
}

JrZeroResult jr_number_zero(const LocalIdeal& i, const LocalIdeal& j, const Poly& a, const Poly& b) {
  const LocalIdeal ij = mul_ideals(i, j);
  const LocalIdeal ab = ideal_from_gens(i.algebra(), {a, b});
  const int guaranteed = *ab.adequacy() + std::max(*i.adequacy(), *j.adequacy());
  const int start = std::min(guaranteed, *ij.adequacy() + 2);
  const LocalIdeal d =
      IdealFactory::sum_of_multiples(i.algebra(), {{a, &j}, {b, &i}}, start, guaranteed);
  JrZeroResult out;
  out.zero = colength(d) == colength(ij);
  if (!out.zero) {
    const PrimeField& f = i.field();
    for (const auto& g : i.generators()) {
      for (const auto& h : j.generators()) {
        Poly p = mul(g, h, f, i.algebra()->order());
        if (!contains(d, p)) {
          out.witness = std::move(p);
          return out;
        }
      }
    }
    throw Error(ErrorKind::InternalIdentityFailure, "IJ differs from aJ + bI but no witness found");
  }
  return out;
}

JrZeroResult jr_number_zero(const BiFiltration& f, const JointReductionCert& cert) {
  return jr_number_zero(f.I(), f.J(), cert.a, cert.b);
}

DepthResult depth_G_positive(const LocalIdeal& k, std::uint64_t seed, int window,
                             int random_candidates) {
  DepthResult res;
  res.window = window;
  std::vector<LocalIdeal> powers{unit_ideal(k.algebra()), k};
  for (int n = 2; n <= window; ++n) powers.push_back(mul_ideals(powers.back(), k));
  std::vector<std::int64_t> lengths;
  for (const auto& p : powers) lengths.push_back(colength(p));

  std::vector<Poly> candidates = k.generators();
  std::stable_partition(candidates.begin(), candidates.end(),
                        [](const Poly& p) { return p.is_monomial(); });
  CoefficientStream rng(seed, k.field().modulus());
  for (int t = 0; t < random_candidates; ++t) {
    candidates.push_back(random_combination(k.generators(), rng, k.field(), k.algebra()->order()));
  }
  for (const auto& c : candidates) {
    ++res.candidates_tried;
    bool ok = true;
    for (int n = 2; n <= window && ok; ++n) ok = colon_colength(powers[n], c) == lengths[n - 1];
    if (ok) {
      res.positive = true;
      res.witness = c;
      res.note = "(K^n : c) = K^(n-1) for 1 <= n <= " + std::to_string(window);
      return res;
    }
  }
  res.note = "no candidate with (K^n : c) = K^(n-1) for n <= " + std::to_string(window) +
             " among " + std::to_string(res.candidates_tried) + " candidates (not observed)";
  return res;
}

std::string JointReductionCert::to_json(const PrimeField& f) const {
  nlohmann::ordered_json j;
  j["a"] = a_text(f);
  j["b"] = b_text(f);
  j["seed"] = seed;
  j["origin"] = to_string(origin);
  j["attempt"] = attempt;
  j["mprimary_ab"] = mprimary_ab;
  j["ab_colength"] = ab_colength;
  j["jr_from"] = jr_from;
  j["jr_window"] = jr_window;
  j["jr_cells_checked"] = jr_cells.size();
  if (superficial_checked) {
    j["superficial"] = {{"r_max", sup_r_max}, {"s_max", sup_s_max}, {"r0", sup_r0},
                        {"s0", sup_s0},       {"r0_by_s", r0_by_s}, {"s0_by_r", s0_by_r}};
  } else {
    j["superficial"] = nullptr;
  }
  return j.dump();
}

}  // namespace bhat
