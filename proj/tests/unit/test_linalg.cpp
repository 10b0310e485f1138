#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "jvoa/linalg.hpp"
#include "support.hpp"

using namespace jvoa;

namespace {

Rational leibniz(const QMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational prod = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) prod *= a[i][perm[i]];
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

QMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int zero_bias) {
  std::uniform_int_distribution<int> coin(0, zero_bias);
  QMatrix a(rows, std::vector<Rational>(cols));
  for (auto& row : a)
    for (auto& x : row) x = coin(rng) == 0 ? fixtures::random_rational(rng, 4, 3) : Rational(0);
  return a;
}

}  // namespace

TEST(Linalg, DeterminantMatchesLeibniz) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 1 + t % 5;
    auto a = random_matrix(rng, n, n, t % 3);
    EXPECT_EQ(determinant(a), leibniz(a));
  }
}

TEST(Linalg, RankNullityAndKernel) {
  std::mt19937_64 rng(52);
  for (int t = 0; t < 80; ++t) {
    std::size_t rows = 1 + t % 4, cols = 1 + (t / 4) % 6;
    auto a = random_matrix(rng, rows, cols, 2);
    auto ker = kernel(a);
    EXPECT_EQ(rank(a) + ker.size(), cols);
    for (const auto& x : ker)
      for (const auto& row : a) {
        Rational s = 0;
        for (std::size_t j = 0; j < cols; ++j) s += row[j] * x[j];
        EXPECT_EQ(s, 0);
      }
  }
}

TEST(Linalg, Solve) {
  QMatrix a{{1, 1}, {-1, -2}};
  auto x = solve(a, {3, -5});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], 1);
  EXPECT_EQ((*x)[1], 2);
  EXPECT_FALSE(solve(QMatrix{{1, 2}, {2, 4}}, {1, 2}).has_value());
}

TEST(Linalg, BareissMatchesPointEvaluation) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 1 + t % 5;
    PMatrix m(n, std::vector<RPoly>(n));
    std::uniform_int_distribution<int> coin(0, 2);
    for (auto& row : m)
      for (auto& p : row) p = coin(rng) ? fixtures::random_poly(rng, 2) : RPoly();
    auto det = bareiss_determinant(m);
    EXPECT_EQ(block_determinant(m), det);
    for (long x = -3; x <= 3; ++x) EXPECT_EQ(det.evaluate_at(x), leibniz(evaluate_at(m, x)));
  }
}

TEST(Linalg, BlocksSplitDiagonalPattern) {
  PMatrix m{{RPoly::r(), RPoly(), RPoly(1)}, {RPoly(), RPoly(2), RPoly()}, {RPoly(1), RPoly(), RPoly::r()}};
  auto blocks = connected_blocks(m);
  EXPECT_EQ(blocks.size(), 2u);
  EXPECT_EQ(block_determinant(m), (RPoly::r() * RPoly::r() - RPoly(1)) * RPoly(2));
}

TEST(Linalg, EchelonBasis) {
  EchelonBasis<int> e;
  EXPECT_TRUE(e.insert({{1, 1}, {2, 1}}));
  EXPECT_TRUE(e.insert({{2, 1}, {3, 1}}));
  EXPECT_FALSE(e.insert({{1, 2}, {2, 4}, {3, 2}, {2, -2}}));
  EXPECT_TRUE(e.contains({{1, 1}, {3, -1}}));
  EXPECT_FALSE(e.contains({{3, 1}}));
  EXPECT_EQ(e.rank(), 2u);
  EXPECT_FALSE(e.insert({}));
}
