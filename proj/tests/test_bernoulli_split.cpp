#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "mec/bernoulli_split.hpp"
#include "mec/majorization.hpp"
#include "mec/pmf.hpp"

namespace mec {
namespace {

// Sticks and assignment bits below were traced by hand through the greedy
// loop (c = 1, 0.4, 0.175, 0.075, 0.025 at the start of each step).
TEST(BernoulliSplitting, FourLawTrace) {
  const std::vector<double> rhos{0.175, 0.35, 0.6, 0.925};
  const BernoulliSplit s = bernoulli_splitting(rhos);
  const std::vector<double> sticks{0.6, 0.225, 0.1, 0.05, 0.025};
  ASSERT_EQ(s.num_sticks(), 5u);
  for (std::size_t x = 0; x < 5; ++x) EXPECT_NEAR(s.sticks()[x], sticks[x], 1e-12);
  const std::vector<std::vector<int>> bits{
      {0, 0, 1, 1, 1}, {0, 1, 1, 0, 1}, {1, 0, 0, 0, 0}, {1, 1, 1, 0, 0}};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t x = 0; x < 5; ++x) EXPECT_EQ(s.uses(i, x), bits[i][x] == 1) << i << x;
    EXPECT_NEAR(s.realized(i), rhos[i], 1e-12);
  }
  EXPECT_TRUE(majorizes(s.sticks(), capped_geometric(0.5, 5).masses()));
}

TEST(BernoulliSplitting, SmallCases) {
  BernoulliSplit s = bernoulli_splitting(std::vector<double>{0.3});
  ASSERT_EQ(s.num_sticks(), 2u);
  EXPECT_NEAR(s.sticks()[0], 0.7, 1e-15);
  EXPECT_NEAR(s.sticks()[1], 0.3, 1e-15);
  EXPECT_FALSE(s.uses(0, 0));
  EXPECT_TRUE(s.uses(0, 1));

  s = bernoulli_splitting(std::vector<double>{0.0, 0.0, 0.0});
  ASSERT_EQ(s.num_sticks(), 1u);
  EXPECT_EQ(s.sticks()[0], 1.0);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_FALSE(s.uses(i, 0));

  s = bernoulli_splitting(std::vector<double>{1.0, 0.0});
  ASSERT_EQ(s.num_sticks(), 1u);
  EXPECT_TRUE(s.uses(0, 0));
  EXPECT_FALSE(s.uses(1, 0));

  s = bernoulli_splitting(std::vector<double>{});
  EXPECT_EQ(s.num_sticks(), 1u);
}

TEST(BernoulliSplitting, RejectsBadProbabilities) {
  EXPECT_THROW(bernoulli_splitting(std::vector<double>{1.1}), Error);
  EXPECT_THROW(bernoulli_splitting(std::vector<double>{-0.01}), Error);
  EXPECT_NO_THROW(bernoulli_splitting(std::vector<double>{1.0 + 1e-13, -1e-13}));
  SplitLimits zero;
  zero.max_steps = 0;
  EXPECT_THROW(bernoulli_splitting(std::vector<double>{0.5}, zero), Error);
}

TEST(BernoulliSplitting, RandomInvariants) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t m = 1 + rng() % 16;
    std::vector<double> rhos(m);
    for (double& r : rhos) {
      const double u = unif(rng);
      r = u < 0.1 ? 0.0 : u > 0.9 ? 1.0 : unif(rng);
    }
    std::vector<std::size_t> settled;
    SplitLimits limits;
    limits.settled_trace = &settled;
    const BernoulliSplit s = bernoulli_splitting(rhos, limits);

    EXPECT_LE(s.num_sticks(), m + 1);
    EXPECT_LE(s.iterations, m + 1);
    for (std::size_t i = 0; i < m; ++i) EXPECT_NEAR(s.realized(i), rhos[i], 1e-9);

    // Non-increasing sticks with prefix sums at least 1 - 2^-x.
    double prefix = 0.0;
    for (std::size_t x = 0; x < s.num_sticks(); ++x) {
      if (x > 0) {
        EXPECT_LE(s.sticks()[x], s.sticks()[x - 1] + 1e-15);
      }
      prefix += s.sticks()[x];
      EXPECT_GE(prefix, 1.0 - std::ldexp(1.0, -static_cast<int>(x + 1)) - 1e-12);
    }
    std::vector<double> padded = s.sticks();
    padded.resize(m + 1, 0.0);
    EXPECT_TRUE(majorizes(padded, capped_geometric(0.5, m + 1).masses()));

    // Each step settles at least one more law at 0 or c.
    std::size_t initial = 0;
    for (double r : rhos) initial += (r == 0.0 || r == 1.0);
    std::size_t prev = initial;
    for (std::size_t k = 0; k + 1 < settled.size(); ++k) {
      EXPECT_GT(settled[k], prev) << "step " << k;
      prev = settled[k];
    }
  }
}

TEST(BernoulliSplitting, ResidualHalvesEachStep) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> rhos(1 + rng() % 16);
    for (double& r : rhos) r = unif(rng);
    const BernoulliSplit s = bernoulli_splitting(rhos);
    double c = 1.0;
    for (double stick : s.sticks()) {
      const double next = c - stick;
      EXPECT_LE(next, 0.5 * c + 1e-12);
      c = next;
    }
    for (std::size_t L = 1; L < s.num_sticks(); ++L) {
      double tail = 0.0;
      for (std::size_t x = L; x < s.num_sticks(); ++x) tail += s.sticks()[x];
      EXPECT_LE(tail, std::ldexp(1.0, -static_cast<int>(L)) + 1e-15);
    }
  }
}

TEST(BernoulliSplitting, TruncatedModeErrorBound) {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (std::size_t L : {1u, 2u, 3u, 5u, 8u}) {
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<double> rhos(1 + rng() % 16);
      for (double& r : rhos) r = unif(rng);
      SplitLimits limits;
      limits.max_steps = L;
      const BernoulliSplit s = bernoulli_splitting(rhos, limits);
      EXPECT_LE(s.num_sticks(), L);
      EXPECT_LE(s.residual, std::ldexp(1.0, -static_cast<int>(L)));
      EXPECT_NEAR(compensated_sum(s.sticks()), 1.0, 1e-15);
      for (std::size_t i = 0; i < rhos.size(); ++i) {
        EXPECT_LE(std::abs(s.realized(i) - rhos[i]), std::ldexp(1.0, -static_cast<int>(L)) + 1e-9);
      }
    }
  }
}

TEST(BernoulliSplitting, EpsilonStopsEarly) {
  SplitLimits limits;
  limits.epsilon = 0.1;
  const BernoulliSplit s = bernoulli_splitting(std::vector<double>{0.175, 0.35, 0.6, 0.925}, limits);
  EXPECT_EQ(s.num_sticks(), 3u);  // c = 0.075 <= 0.1 after three sticks
  EXPECT_NEAR(s.residual, 0.075, 1e-12);
  EXPECT_NEAR(compensated_sum(s.sticks()), 1.0, 1e-15);
}

}  // namespace
}  // namespace mec
