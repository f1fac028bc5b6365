#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mec {

/// A pmf over sticks 0..k-1 shared by m Bernoulli laws: law i puts mass
/// rho_i on the union of the sticks with uses(i, x) set.
class BernoulliSplit {
 public:
  BernoulliSplit(std::size_t m, std::vector<double> sticks, std::vector<std::uint8_t> bits);

  [[nodiscard]] std::size_t num_laws() const noexcept { return m_; }
  [[nodiscard]] std::size_t num_sticks() const noexcept { return sticks_.size(); }
  [[nodiscard]] const std::vector<double>& sticks() const noexcept { return sticks_; }
  [[nodiscard]] bool uses(std::size_t i, std::size_t x) const {
    return bits_[i * sticks_.size() + x] != 0;
  }
  /// Sum of the sticks used by law i.
  [[nodiscard]] double realized(std::size_t i) const;

  /// Loop iterations performed while building.
  std::size_t iterations = 0;
  /// Mass left over when a step or residual cap stopped the loop; it was
  /// folded into the last stick.
  double residual = 0.0;

 private:
  std::size_t m_;
  std::vector<double> sticks_;
  std::vector<std::uint8_t> bits_;  // row-major m x k
};

struct SplitLimits {
  /// Stop after this many sticks.
  std::optional<std::size_t> max_steps;
  /// Stop once the unassigned length drops to this value.
  double epsilon = 1e-12;
  /// When set, receives after each step how many laws have rho in {0, c}.
  std::vector<std::size_t>* settled_trace = nullptr;
};

/// Greedy stick construction: each step emits the longest stick compatible
/// with every remaining rho_i, gamma = min_i max(rho_i, c - rho_i), and
/// assigns it to the laws with rho_i >= c/2. Sticks come out non-increasing.
/// Throws kBadProbability if a rho lies outside [0, 1] by more than 1e-12.
BernoulliSplit bernoulli_splitting(std::span<const double> rhos, SplitLimits limits = {});

}  // namespace mec
