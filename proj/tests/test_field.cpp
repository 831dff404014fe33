#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "bhat/errors.hpp"
#include "bhat/field.hpp"
#include "oracle.hpp"

using namespace bhat;

namespace {

std::vector<std::vector<Coeff>> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                              Coeff p, double density) {
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<Coeff> c(1, p - 1);
  std::vector<std::vector<Coeff>> m(rows, std::vector<Coeff>(cols, 0));
  for (auto& r : m) {
    for (auto& v : r) v = u(rng) < density ? c(rng) : 0;
  }
  return m;
}

std::vector<std::vector<std::uint64_t>> widen(const std::vector<std::vector<Coeff>>& m) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& r : m) out.emplace_back(r.begin(), r.end());
  return out;
}

}  // namespace

TEST(PrimeField, Arithmetic) {
  PrimeField f(7);
  EXPECT_EQ(f.add(5, 4), 2u);
  EXPECT_EQ(f.sub(2, 5), 4u);
  EXPECT_EQ(f.mul(3, 5), 1u);
  EXPECT_EQ(f.inv(3), 5u);
  EXPECT_EQ(f.from_int(-1), 6u);
  EXPECT_EQ(f.to_signed(6), -1);
  EXPECT_EQ(f.from_decimal("1000000000000000000000"), f.pow(10, 21));
  EXPECT_THROW(PrimeField(15), Error);
  EXPECT_THROW(f.inv(0), Error);
}

TEST(Rref, RankMatchesNaiveElimination) {
  std::mt19937_64 rng(11);
  for (Coeff p : {Coeff{32003}, Coeff{65537}, Coeff{7}}) {
    PrimeField f(p);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
      const auto m = random_matrix(rng, rows, cols, p, 0.4);
      EXPECT_EQ(rref(m, cols, f).dim(), oracle::naive_rank(widen(m), p));
    }
  }
}

TEST(Rref, CanonicalUnderPermutationAndScaling) {
  std::mt19937_64 rng(5);
  PrimeField f;
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 2 + rng() % 8, cols = 3 + rng() % 10;
    auto m = random_matrix(rng, rows, cols, f.modulus(), 0.5);
    const Subspace a = rref(m, cols, f);
    std::shuffle(m.begin(), m.end(), rng);
    for (auto& r : m) {
      const Coeff s = 1 + rng() % (f.modulus() - 1);
      for (auto& v : r) v = f.mul(v, s);
    }
    EXPECT_EQ(rref(m, cols, f), a);
  }
}

TEST(Subspace, DimensionFormulaAndModularLaw) {
  std::mt19937_64 rng(17);
  PrimeField f(101);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 8;
    const Subspace u = rref(random_matrix(rng, 1 + rng() % 5, n, 101, 0.5), n, f);
    const Subspace v = rref(random_matrix(rng, 1 + rng() % 5, n, 101, 0.5), n, f);
    const Subspace w0 = rref(random_matrix(rng, 1 + rng() % 3, n, 101, 0.5), n, f);
    EXPECT_EQ(subspace_sum(u, v).dim() + subspace_intersect(u, v).dim(), u.dim() + v.dim());
    // W inside V: (U + W) ∩ V = (U ∩ V) + W.
    const Subspace w = subspace_intersect(w0, v);
    EXPECT_EQ(subspace_intersect(subspace_sum(u, w), v), subspace_sum(subspace_intersect(u, v), w));
  }
}

TEST(Subspace, MembershipAndKernel) {
  PrimeField f(13);
  const std::vector<std::vector<Coeff>> m = {{1, 2, 0, 0}, {0, 1, 1, 0}, {1, 3, 1, 0}};
  const Subspace s = rref(m, 4, f);
  EXPECT_EQ(s.dim(), 2u);
  const std::vector<Coeff> in = {2, 5, 1, 0}, out = {0, 0, 0, 1};
  EXPECT_TRUE(membership(in, s));
  EXPECT_FALSE(membership(out, s));

  std::vector<SparseVec> rows;
  for (const auto& r : m) rows.push_back(SparseVec::from_dense(r));
  const auto ker = left_kernel(rows, 4, f);
  ASSERT_EQ(ker.size(), 1u);
  std::vector<Coeff> combo(4, 0);
  for (const auto& e : ker[0].entries) {
    for (std::size_t c = 0; c < 4; ++c) combo[c] = f.add(combo[c], f.mul(e.val, m[e.col][c]));
  }
  EXPECT_EQ(combo, std::vector<Coeff>(4, 0));
}

TEST(Subspace, DimensionMismatch) {
  PrimeField f;
  EXPECT_THROW(rref(std::vector<std::vector<Coeff>>{{1, 2}}, 3, f), Error);
  try {
    rref(std::vector<std::vector<Coeff>>{{1, 2}}, 3, f);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(Subspace, LargePrimeUsesExactReduction) {
  // Above the lazy-accumulation threshold the eager path is taken.
  std::mt19937_64 rng(3);
  const Coeff p = 2147483629u;
  PrimeField f(p);
  for (int trial = 0; trial < 10; ++trial) {
    const auto m = random_matrix(rng, 6, 7, p, 0.6);
    EXPECT_EQ(rref(m, 7, f).dim(), oracle::naive_rank(widen(m), p));
  }
}
