#pragma once

// Monomial test pairs: hand-picked ones plus seeded random ones with
// generator degrees <= 5.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace bhat::testing {

struct CorpusPair {
  std::string name;
  std::string I, J;
};

inline std::string monomial_text(int i, int j) {
  std::string out;
  auto var = [&](const char* v, int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += v;
    if (e > 1) out += "^" + std::to_string(e);
  };
  var("x", i);
  var("y", j);
  return out.empty() ? "1" : out;
}

/// x^p, y^q and up to two further monomials below the staircase corner,
/// all of degree <= max_deg.
inline std::vector<std::pair<int, int>> random_monomial_gens(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> pure(1, max_deg);
  const int p = pure(rng), q = pure(rng);
  std::vector<std::pair<int, int>> g = {{p, 0}, {0, q}};
  std::uniform_int_distribution<int> extra(0, 2);
  const int n = extra(rng);
  for (int t = 0; t < n && p > 1 && q > 1; ++t) {
    std::uniform_int_distribution<int> xi(1, p - 1), yj(1, q - 1);
    const int i = xi(rng), j = yj(rng);
    if (i + j <= max_deg) g.push_back({i, j});
  }
  return g;
}

inline std::string gens_text(const std::vector<std::pair<int, int>>& g) {
  std::string out;
  for (const auto& [i, j] : g) out += (out.empty() ? "" : ", ") + monomial_text(i, j);
  return out;
}

inline std::vector<CorpusPair> random_pairs(int count = 5, std::uint64_t seed = 20240601) {
  std::vector<CorpusPair> out;
  for (int k = 0; k < count; ++k) {
    std::mt19937_64 rng(seed + k);
    const auto gi = random_monomial_gens(rng, 5);
    const auto gj = random_monomial_gens(rng, 5);
    out.push_back({"random_" + std::to_string(k), gens_text(gi), gens_text(gj)});
  }
  return out;
}

inline std::vector<CorpusPair> bundled_pairs() {
  return {
      {"maximal", "x, y", "x, y"},
      {"power_l2", "x^2, x*y, y^2", "x^2, y^2"},
      {"power_l3", "x^3, x^2*y, x*y^2, y^3", "x^3, y^3"},
      {"depth_zero", "x^4, x^3*y, x*y^3, y^4", "x, y"},
      {"square_square", "x^2, x*y, y^2", "x^2, x*y, y^2"},
      {"parameter_pair", "x^2, y^3", "x^3, y^2"},
      {"mixed", "x^3, x*y, y^3", "x^2, y^2"},
  };
}

inline std::vector<CorpusPair> full_corpus() {
  auto c = bundled_pairs();
  for (auto& p : random_pairs()) c.push_back(p);
  return c;
}

}  // namespace bhat::testing
