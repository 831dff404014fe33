// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "bhat/errors.hpp"
#include "bhat/verifier.hpp"
#include "corpus.hpp"
#include "oracle.hpp"

using namespace bhat;

namespace {

constexpr int kOrder = 250;

AlgebraPtr algebra(int n = kOrder, Coeff p = PrimeField::kDefaultPrime) {
  return std::make_shared<const TruncatedAlgebra>(PrimeField(p), n);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> problems;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      problems.push_back(what);
    }
  }
};

// a*gens(J) + b*gens(I).
LocalIdeal reduction_sum(const LocalIdeal& i, const LocalIdeal& j, const Poly& a, const Poly& b) {
  const auto& alg = i.algebra();
  std::vector<Poly> gens;
  for (const auto& g : j.generators()) gens.push_back(mul(a, g, alg->field(), alg->order()));
  for (const auto& g : i.generators()) gens.push_back(mul(b, g, alg->field(), alg->order()));
  return ideal_from_gens(alg, gens);
}

Poly P(const AlgebraPtr& a, const char* text) { return parse_poly(text, a).poly; }

Outcome power_of_maximal_ideal() {
  Outcome out;
  for (int l = 2; l <= 3; ++l) {
    const auto t0 = std::chrono::steady_clock::now();
    auto a = algebra();
    const std::string i = l == 2 ? "x^2, x*y, y^2" : "x^3, x^2*y, x*y^2, y^3";
    const std::string j = l == 2 ? "x^2, y^2" : "x^3, y^3";
    const BiFiltration f(ideal_from_text(a, i), ideal_from_text(a, j));
    const auto rep = coefficient_report(f);
    const auto& b = rep.bhattacharya;
    const Rational l2(l * l), cl2(l * (l - 1) / 2);
    const std::string tag = "l=" + std::to_string(l) + ": ";
    out.check(b.e01 - rep.J.e1 == cl2, tag + "e01 - e1(J) = " + to_string(b.e01 - rep.J.e1));
    out.check(rep.J.e1 == Rational(0), tag + "e1(J) = " + to_string(rep.J.e1));
    out.check(b.e11 == l2 && b.e20 == l2 && b.e02 == l2, tag + "e11, e20, e02 not l^2");
    const KoszulEngine engine(f, sample_joint_reduction(f, 1));
    const auto c = engine.classify_h2(0, 0, rep);
    out.check(c.verdict == H2Verdict::InfiniteDetected, tag + "verdict " + to_string(c.verdict));
    out.check(c.c1 == cl2, tag + "slope " + to_string(c.c1));
    const double t = seconds_since(t0);
    out.check(t < 60, tag + "took " + std::to_string(t) + " s");
  }
  return out;
}

Outcome depth_zero_example() {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  auto a = algebra();
  const auto i = ideal_from_text(a, "x^4, x^3*y, x*y^3, y^4");
  const auto m = maximal_ideal(a);

  out.check(!depth_G_positive(i, 1).positive, "depth G(I) > 0 observed");
  const auto i2 = power_ideal(i, 2);
  const auto x2y2 = P(a, "x^2*y^2");
  out.check(contains(colon_by_ideal(i2, ideal_from_text(a, "x^4, y^4")), x2y2),
            "x^2y^2 not in I^2 : (x^4, y^4)");
  out.check(!contains(i, x2y2), "x^2y^2 in I");

  const BiFiltration f(i, m);
  const auto cert = sample_joint_reduction(f, 1);
  out.check(!jr_number_zero(f, cert).zero, "r(I | m) = 0");
  const auto x2y3 = P(a, "x^2*y^3");
  out.check(contains(mul_ideals(i, m), x2y3) && !contains(reduction_sum(i, m, cert.a, cert.b), x2y3),
            "x^2y^3 is not a witness");

  const auto m2 = power_ideal(m, 2);
  out.check(jr_number_zero(i2, m2, P(a, "x^8"), P(a, "y^2")).zero, "r(I^2 | m^2) != 0 via (x^8, y^2)");
  const BiFiltration f2(i2, m2);
  try {
    certify_pair(f2, P(a, "x^8"), P(a, "y^2"));
  } catch (const Error& e) {
    out.check(false, std::string("(x^8, y^2) rejected: ") + e.what());
  }

  const auto rep = coefficient_report(f);
  const KoszulEngine engine(f, cert);
  const auto c = engine.classify_h2(0, 0, rep);
  out.check(c.verdict == H2Verdict::Finite && c.c1 == Rational(0) && c.c0 == Rational(0),
            "classification at (0,0) is " + std::string(to_string(c.verdict)) + " " + to_string(c.c0));
  out.check(rep.IJ.e2 == rep.I.e2 + rep.J.e2, "e2(Im) != e2(I) + e2(m)");
  const double t = seconds_since(t0);
  out.check(t < 120, "took " + std::to_string(t) + " s");
  return out;
}

struct CorpusRun {
  std::string name;
  AlgebraPtr alg;
  std::unique_ptr<BiFiltration> f;
  std::unique_ptr<Verifier> verifier;
  VerificationReport report;
};

std::vector<CorpusRun> run_corpus(int order, Coeff p, std::string* error) {
  std::vector<CorpusRun> runs;
  for (const auto& pair : testing::full_corpus()) {
    CorpusRun run;
    run.name = pair.name;
    try {
      run.alg = algebra(order, p);
      run.f = std::make_unique<BiFiltration>(ideal_from_text(run.alg, pair.I), ideal_from_text(run.alg, pair.J));
      run.verifier = std::make_unique<Verifier>(*run.f);
      run.report = run.verifier->run();
    } catch (const std::exception& e) {
      *error += pair.name + ": " + e.what() + "; ";
      continue;
    }
    runs.push_back(std::move(run));
  }
  return runs;
}

Outcome corpus_identities(const std::vector<CorpusRun>& runs, const std::string& error) {
  Outcome out;
  out.check(error.empty(), error);
  out.check(runs.size() >= 10, "corpus has " + std::to_string(runs.size()) + " pairs");
  int random = 0;
  for (const auto& run : runs) {
    random += run.name.rfind("random_", 0) == 0;
    const auto& rep = run.report;
    for (const auto& c : rep.coefficients.checks) out.check(c.holds, run.name + ": " + c.name);
    for (const auto& c : rep.coefficients.rows.checks) out.check(c.holds, run.name + ": " + c.name);
    bool props = false;
    for (const auto& b : rep.blocks) {
      if (b.name == "coefficient_propositions") props = b.decidable && b.agree;
    }
    out.check(props, run.name + ": alpha/beta sums from L-lengths");
    // Sum of alpha from L-lengths over the window.
    const auto& v = *run.verifier;
    const int s_hi = v.options().s_max;
    const std::vector<int> band = {s_hi - 2, s_hi - 1, s_hi};
    Rational sum(0);
    for (int i = 0; i + 1 <= v.options().r_max; ++i) sum += Rational(v.engine().alpha(i, rep.coefficients, band).from_L);
    const auto& b = rep.coefficients.bhattacharya;
    out.check(sum == b.e01 - rep.coefficients.J.e1,
              run.name + ": sum alpha = " + to_string(sum) + " vs e01 - e1(J) = " + to_string(b.e01 - rep.coefficients.J.e1));
  }
  out.check(random >= 5, "only " + std::to_string(random) + " random pairs");
  return out;
}

Outcome koszul_identities(const std::vector<CorpusRun>& runs) {
  Outcome out;
  for (const auto& run : runs) {
    const auto& e = run.verifier->engine();
    const auto& rep = run.report.coefficients;
    try {
      for (int r = 0; r <= 3; ++r) {
        for (int s = 0; s <= 3; ++s) {
          for (int k = 1; k <= 3; ++k) {
            const auto h = e.homology_lengths(r, s, k, rep.bhattacharya.e11);
            out.check(h.h0 - h.h1 == h.ab_colength - h.lambda_L, run.name + ": homology identity");
          }
        }
      }
      for (int r = 0; r <= 2; ++r) {
        for (int s = 0; s <= 2; ++s) {
          const auto rr = e.ratliff_rush(r, s);
          for (int k = rr.stabilized_at; k <= rr.stabilized_at + 2; ++k) {
            out.check(ideal_eq(e.rr_member(r, s, k), *rr.closure), run.name + ": chain moved after stabilizing");
          }
        }
      }
      const int s_hi = run.verifier->options().s_max;
      for (int i = 0; i <= 2; ++i) {
        const auto l0 = e.L_length(i, s_hi - 2, 1);
        for (int s = s_hi - 1; s <= s_hi; ++s) {
          out.check(e.L_length(i, s, 1) == l0, run.name + ": lambda(L(i,s;1)) depends on s");
        }
      }
    } catch (const std::exception& ex) {
      out.check(false, run.name + ": " + ex.what());
    }
  }
  return out;
}

Outcome criteria_agreement(const std::vector<CorpusRun>& runs) {
  Outcome out;
  for (const auto& run : runs) {
    std::map<std::string, int> seen;
    for (const auto& b : run.report.blocks) {
      const bool in_grid = b.name != "finite_length_criterion" || (b.r <= 2 && b.s <= 2);
      if (!in_grid) continue;
      ++seen[b.name];
      if (b.name == "vanishing_with_depth" && !b.asserted) continue;
      out.check(b.decidable && b.agree, run.name + ": " + b.name + " (" + std::to_string(b.r) + "," +
                                            std::to_string(b.s) + ")");
    }
    out.check(seen["finite_length_criterion"] == 9, run.name + ": grid incomplete");
    out.check(seen["vanishing_criterion"] == 1 && seen["monotone_finiteness"] == 1,
              run.name + ": missing block");
  }
  return out;
}

std::string fingerprint(const CorpusRun& run) {
  std::ostringstream os;
  const auto& rep = run.report;
  for (const auto& row : rep.coefficients.table.values) {
    for (auto v : row) os << v << ' ';
  }
  const auto& b = rep.coefficients.bhattacharya;
  os << '|' << b.e20 << b.e11 << b.e02 << b.e10 << b.e01 << b.e00;
  os << '|' << rep.coefficients.I.e1 << rep.coefficients.J.e1 << rep.coefficients.IJ.e2;
  for (const auto& [rs, c] : rep.grid) {
    os << '|' << rs.first << rs.second << to_string(c.verdict) << c.c1 << ',' << c.c0;
    for (const auto& [k, l] : c.lengths) os << ' ' << k << ':' << l;
  }
  for (const auto& blk : rep.blocks) {
    os << '|' << blk.name << blk.r << blk.s << blk.agree << blk.asserted;
    for (const auto& c : blk.conditions) os << to_string(c.value);
  }
  return os.str();
}

Outcome oracle_and_reruns(const std::vector<CorpusRun>& base) {
  Outcome out;
  std::mt19937_64 rng(7);
  auto a = algebra(60);
  auto make = [&](const oracle::Staircase& s) {
    std::vector<Poly> g;
    for (const auto& [i, j] : s.gens) g.push_back(Poly::monomial(i, j));
    return ideal_from_gens(a, g);
  };
  for (int trial = 0; trial < 50; ++trial) {
    const oracle::Staircase sa{testing::random_monomial_gens(rng, 6)};
    const oracle::Staircase sb{testing::random_monomial_gens(rng, 6)};
    const auto ka = make(sa), kb = make(sb);
    const int i = static_cast<int>(rng() % 4), j = static_cast<int>(rng() % 4);
    out.check(colength(ka) == sa.colength(), "colength");
    out.check(colength(mul_ideals(ka, kb)) == oracle::product(sa, sb).colength() &&
                  ideal_eq(mul_ideals(ka, kb), make(oracle::product(sa, sb))),
              "product");
    out.check(ideal_eq(intersect_ideals(ka, kb), make(oracle::intersection(sa, sb))), "intersection");
    out.check(ideal_eq(colon_by_element(ka, Poly::monomial(i, j)), make(oracle::colon(sa, i, j))), "colon");
  }

  std::map<std::string, std::string> prints;
  for (const auto& run : base) prints[run.name] = fingerprint(run);
  const std::pair<int, Coeff> variants[] = {{kOrder + 5, PrimeField::kDefaultPrime}, {kOrder, 65537}};
  for (const auto& [order, p] : variants) {
    std::string error;
    const auto runs = run_corpus(order, p, &error);
    out.check(error.empty(), error);
    for (const auto& run : runs) {
      out.check(fingerprint(run) == prints[run.name],
                run.name + " differs at N=" + std::to_string(order) + ", p=" + std::to_string(p));
    }
  }
  return out;
}

void print(const char* id, const char* what, const Outcome& o, double t) {
  std::cout << id << ' ' << (o.pass ? "PASS" : "FAIL") << "  " << what << " (" << std::fixed;
  std::cout.precision(1);
  std::cout << t << " s)\n";
  for (const auto& p : o.problems) std::cout << "    " << p << "\n";
}

}  // namespace

int main() {
  bool all = true;
  auto timed = [&](const char* id, const char* what, const std::function<Outcome()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.check(false, e.what());
    }
    print(id, what, o, seconds_since(t0));
    all &= o.pass;
  };

  timed("AC1", "powers of the maximal ideal against (x^l, y^l), l = 2, 3", power_of_maximal_ideal);
  timed("AC2", "depth zero example (x^4, x^3y, xy^3, y^4) against m", depth_zero_example);

  std::string error;
  std::vector<CorpusRun> runs;
  const auto t0 = std::chrono::steady_clock::now();
  runs = run_corpus(kOrder, PrimeField::kDefaultPrime, &error);
  const double corpus_time = seconds_since(t0);
  timed("AC3", "corpus coefficient identities and alpha sums",
        [&] { return corpus_identities(runs, error); });
  std::cout << "    corpus verification took " << corpus_time << " s for " << runs.size() << " pairs\n";
  timed("AC4", "homology identity, chain stabilization, s-independence", [&] { return koszul_identities(runs); });
  timed("AC5", "finiteness and vanishing criteria agree", [&] { return criteria_agreement(runs); });
  timed("AC6", "staircase oracle; reruns at N + 5 and p = 65537", [&] { return oracle_and_reruns(runs); });

  return all ? 0 : 1;
}
