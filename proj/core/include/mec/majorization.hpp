#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mec/pmf.hpp"

namespace mec {

/// Slack on prefix-sum comparisons: a deficit up to this still counts.
inline constexpr double kMajorizationSlack = 1e-12;

/// True iff q is majorized by p: every k-largest-mass sum of q is at most the
/// corresponding sum of p. Inputs need not be sorted or the same length.
bool majorizes(std::span<const double> p, std::span<const double> q,
               double slack = kMajorizationSlack);
bool majorizes(const Pmf& p, const Pmf& q, double slack = kMajorizationSlack);

/// First (0-based) k whose (k+1)-largest sum of q exceeds that of p by more
/// than slack, or nullopt when q is majorized by p.
std::optional<std::size_t> majorization_violation(std::span<const double> p,
                                                  std::span<const double> q,
                                                  double slack = kMajorizationSlack);

/// Compensated prefix sums of the masses sorted in descending order.
std::vector<double> sorted_prefix_sums(std::span<const double> masses);

struct GlbResult {
  /// Descending; label k is the rank k, not any input's original label.
  Pmf glb;
  /// prefix[k] = min over inputs of the (k+1)-largest-mass sum.
  std::vector<double> prefix;
};

/// Greatest lower bound of a finite collection under majorization.
/// Inputs are zero-padded to a common length. O(m n log n).
/// Throws kEmptyCollection.
GlbResult greatest_lower_bound(std::span<const Pmf> ps);

/// Brute-force counterpart of greatest_lower_bound: evaluates the best
/// k-subset mass of each input by enumerating every subset of its support.
/// Throws kTooLarge when a support exceeds kOracleMaxSupport.
inline constexpr std::size_t kOracleMaxSupport = 14;
Pmf glb_oracle(std::span<const Pmf> ps);

}  // namespace mec
