#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "mec/majorization.hpp"
#include "test_support.hpp"

namespace mec {
namespace {

using testing::random_collection;
using testing::random_majorized;
using testing::random_masses;
using testing::random_sparse_masses;

const std::vector<double> kGoldenP{0.37, 0.36, 0.25, 0.02, 0.0};
const std::vector<double> kGoldenQ{0.3, 0.3, 0.2, 0.1, 0.1};

TEST(Majorizes, Examples) {
  EXPECT_TRUE(majorizes(make_pmf(kGoldenP), make_pmf(kGoldenQ)));
  EXPECT_FALSE(majorizes(make_pmf(kGoldenQ), make_pmf(kGoldenP)));
  EXPECT_TRUE(majorizes(make_pmf(kGoldenP), make_pmf(kGoldenP)));
  const Pmf uniform4 = make_pmf(std::vector<double>{0.25, 0.25, 0.25, 0.25});
  const Pmf pair = make_pmf(std::vector<double>{0.5, 0.5});
  EXPECT_FALSE(majorizes(uniform4, pair));
  EXPECT_TRUE(majorizes(pair, uniform4));
}

TEST(Majorizes, SlackAndViolationIndex) {
  const std::vector<double> p{0.5, 0.5};
  const std::vector<double> q_tiny_over{0.5 + 5e-13, 0.5 - 5e-13};
  EXPECT_TRUE(majorizes(p, q_tiny_over));
  const std::vector<double> q_over{0.5 + 1e-9, 0.5 - 1e-9};
  EXPECT_FALSE(majorizes(p, q_over));
  EXPECT_EQ(majorization_violation(p, q_over), std::optional<std::size_t>{0});
  EXPECT_EQ(majorization_violation(kGoldenQ, kGoldenP), std::optional<std::size_t>{0});
}

TEST(Majorizes, PartialOrderOnRandomTriples) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 10;
    const std::vector<double> a = testing::sorted_desc(random_sparse_masses(rng, n));
    const std::vector<double> b = random_majorized(rng, a);
    const std::vector<double> c = random_majorized(rng, b);
    EXPECT_TRUE(majorizes(a, a));
    EXPECT_TRUE(majorizes(a, b));
    EXPECT_TRUE(majorizes(b, c));
    EXPECT_TRUE(majorizes(a, c));  // transitivity
  }
}

TEST(GreatestLowerBound, Examples) {
  std::vector<Pmf> two{make_pmf(std::vector<double>{0.5, 0.5}),
                       make_pmf(std::vector<double>{0.75, 0.25})};
  GlbResult r = greatest_lower_bound(two);
  EXPECT_NEAR(r.glb[0], 0.5, 1e-15);
  EXPECT_NEAR(r.glb[1], 0.5, 1e-15);
  EXPECT_NEAR(r.prefix[0], 0.5, 1e-15);
  EXPECT_NEAR(r.prefix[1], 1.0, 1e-15);

  const Pmf p = make_pmf(std::vector<double>{0.2, 0.5, 0.3});
  r = greatest_lower_bound(std::vector<Pmf>{p});
  const std::vector<double> sorted = sort_descending(p).masses;
  for (std::size_t k = 0; k < 3; ++k) EXPECT_NEAR(r.glb[k], sorted[k], 1e-15);

  std::vector<Pmf> table{make_pmf(kGoldenP), make_pmf(kGoldenQ)};
  r = greatest_lower_bound(table);
  for (std::size_t k = 0; k < 5; ++k) EXPECT_NEAR(r.glb[k], kGoldenQ[k], 1e-12);

  EXPECT_THROW(greatest_lower_bound(std::vector<Pmf>{}), Error);
}

TEST(GreatestLowerBound, PadsDifferentLengths) {
  std::vector<Pmf> ps{make_pmf(std::vector<double>{1.0}),
                      make_pmf(std::vector<double>{0.25, 0.25, 0.25, 0.25})};
  const GlbResult r = greatest_lower_bound(ps);
  ASSERT_EQ(r.glb.size(), 4u);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(r.glb[k], 0.25, 1e-15);
}

TEST(GreatestLowerBound, LatticeProperties) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 1 + rng() % 6;
    const std::size_t n = 1 + rng() % 30;
    const auto ps = random_collection(rng, m, n, trial % 2 == 0);
    const GlbResult r = greatest_lower_bound(ps);
    // Non-increasing masses, concave non-decreasing prefix ending at 1.
    for (std::size_t k = 1; k < r.glb.size(); ++k) {
      EXPECT_LE(r.glb[k], r.glb[k - 1] + 1e-15);
      EXPECT_GE(r.prefix[k], r.prefix[k - 1]);
    }
    EXPECT_NEAR(r.prefix.back(), 1.0, 1e-12);
    // Below every member.
    for (const Pmf& p : ps) EXPECT_TRUE(majorizes(p, r.glb));
    // Greatest: any common lower bound sits below it.
    const std::vector<double> uniform(n, 1.0 / static_cast<double>(n));
    EXPECT_TRUE(majorizes(r.glb.masses(), uniform));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double lambda = unif(rng);
    std::vector<double> mix(n);
    for (std::size_t k = 0; k < n; ++k) mix[k] = lambda * r.glb[k] + (1.0 - lambda) * uniform[k];
    for (const Pmf& p : ps) ASSERT_TRUE(majorizes(p.masses(), mix));
    EXPECT_TRUE(majorizes(r.glb.masses(), mix));
  }
}

TEST(GlbOracle, Examples) {
  std::vector<Pmf> two{make_pmf(std::vector<double>{0.5, 0.5}),
                       make_pmf(std::vector<double>{0.75, 0.25})};
  const Pmf g = glb_oracle(two);
  EXPECT_NEAR(g[0], 0.5, 1e-15);
  EXPECT_NEAR(g[1], 0.5, 1e-15);
  EXPECT_EQ(glb_oracle(std::vector<Pmf>{make_pmf(std::vector<double>{1.0})})[0], 1.0);
  std::vector<double> big(15, 1.0 / 15.0);
  EXPECT_THROW(glb_oracle(std::vector<Pmf>{make_pmf(big)}), Error);
}

TEST(GlbOracle, AgreesWithPrefixMethod) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + rng() % 4;
    const std::size_t n = 1 + rng() % 12;
    const auto ps = random_collection(rng, m, n, trial % 3 == 0);
    const Pmf fast = greatest_lower_bound(ps).glb;
    const Pmf slow = glb_oracle(ps);
    ASSERT_EQ(fast.size(), slow.size());
    for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(fast[k], slow[k], 1e-12);
  }
  // One more fixed-size draw: three pmfs over six labels.
  const auto ps = random_collection(rng, 3, 6);
  const Pmf fast = greatest_lower_bound(ps).glb;
  const Pmf slow = glb_oracle(ps);
  for (std::size_t k = 0; k < 6; ++k) EXPECT_NEAR(fast[k], slow[k], 1e-12);
}

TEST(GlbOracle, TestSideSubsetHelperAgrees) {
  // Cross-check the oracle's own enumeration with the test helper.
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const std::vector<double> p = random_masses(rng, n);
    const Pmf g = glb_oracle(std::vector<Pmf>{Pmf(p)});
    double prefix = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      prefix += g[k];
      EXPECT_NEAR(prefix, testing::best_subset_mass(p, k + 1), 1e-12);
    }
  }
}

// Product property: same p_X, conditionals ordered pointwise => joints
// ordered.
TEST(Majorizes, JointInheritsConditionalOrder) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t nx = 1 + rng() % 5;
    const std::size_t ny = 1 + rng() % 6;
    const std::vector<double> px = random_masses(rng, nx);
    std::vector<double> joint;
    std::vector<double> joint_tilde;
    for (std::size_t x = 0; x < nx; ++x) {
      const std::vector<double> upper = testing::sorted_desc(random_sparse_masses(rng, ny));
      std::vector<double> lower = random_majorized(rng, upper);
      std::shuffle(lower.begin(), lower.end(), rng);
      for (std::size_t y = 0; y < ny; ++y) {
        joint.push_back(px[x] * lower[y]);
        joint_tilde.push_back(px[x] * upper[y]);
      }
    }
    EXPECT_TRUE(majorizes(joint_tilde, joint));
  }
}

}  // namespace
}  // namespace mec
