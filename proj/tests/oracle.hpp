#pragma once

// Independent reference implementations used only by tests: monomial ideals
// as integer staircases, and textbook dense Gaussian elimination over F_p.

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace bhat::oracle {

/// Monomial ideal of k[x,y] given by exponent pairs; must contain pure powers
/// of x and y to have finite colength.
struct Staircase {
  std::vector<std::pair<int, int>> gens;

  bool contains(int i, int j) const {
    for (const auto& [a, b] : gens) {
      if (a <= i && b <= j) return true;
    }
    return false;
  }

  int x_bound() const {
    int best = -1;
    for (const auto& [a, b] : gens) {
      if (b == 0 && (best < 0 || a < best)) best = a;
    }
    return best;
  }
  int y_bound() const {
    int best = -1;
    for (const auto& [a, b] : gens) {
      if (a == 0 && (best < 0 || b < best)) best = b;
    }
    return best;
  }

  /// Number of monomials outside the ideal; -1 if infinite.
  long long colength() const {
    const int X = x_bound(), Y = y_bound();
    if (X < 0 || Y < 0) return -1;
    long long n = 0;
    for (int i = 0; i < X; ++i) {
      for (int j = 0; j < Y; ++j) n += contains(i, j) ? 0 : 1;
    }
    return n;
  }

  /// Minimal generators, sorted by x exponent.
  Staircase minimal() const {
    std::set<std::pair<int, int>> uniq(gens.begin(), gens.end());
    std::vector<std::pair<int, int>> out;
    for (const auto& g : uniq) {
      bool redundant = false;
      for (const auto& h : uniq) {
        if (h != g && h.first <= g.first && h.second <= g.second) redundant = true;
      }
      if (!redundant) out.push_back(g);
    }
    return {out};
  }
};

inline Staircase product(const Staircase& a, const Staircase& b) {
  Staircase out;
  for (const auto& [i, j] : a.gens) {
    for (const auto& [k, l] : b.gens) out.gens.push_back({i + k, j + l});
  }
  return out.minimal();
}

inline Staircase sum(const Staircase& a, const Staircase& b) {
  Staircase out = a;
  out.gens.insert(out.gens.end(), b.gens.begin(), b.gens.end());
  return out.minimal();
}

inline Staircase intersection(const Staircase& a, const Staircase& b) {
  Staircase out;
  for (const auto& [i, j] : a.gens) {
    for (const auto& [k, l] : b.gens) out.gens.push_back({std::max(i, k), std::max(j, l)});
  }
  return out.minimal();
}

inline Staircase colon(const Staircase& a, int i, int j) {
  Staircase out;
  for (const auto& [k, l] : a.gens) out.gens.push_back({std::max(k - i, 0), std::max(l - j, 0)});
  return out.minimal();
}

inline Staircase power(const Staircase& a, int n) {
  Staircase out{{{0, 0}}};
  for (int t = 0; t < n; ++t) out = product(out, a);
  return out;
}

/// Rank of a dense matrix over F_p by plain Gaussian elimination.
inline std::size_t naive_rank(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  auto inv = [p](std::uint64_t a) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] % p == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const std::uint64_t s = inv(m[rank][c] % p);
    for (auto& v : m[rank]) v = v % p * s % p;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] % p == 0) continue;
      const std::uint64_t f = m[r][c] % p;
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = (m[r][k] % p + p * p - f * m[rank][k]) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace bhat::oracle
