#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "mec/pmf.hpp"

namespace mec {

/// Marker for "no alias target" (rank 0 never transfers).
inline constexpr std::size_t kNoAlias = std::numeric_limits<std::size_t>::max();

/// Excess-transfer decomposition relating a majorized pair q ⪯ p, both in
/// descending order. Position x keeps q[x] - r[x] and moves r[x] down to the
/// larger position alias[x] < x, so that
///   p[x] = q[x] - r[x] + sum_{y : alias[y] == x} r[y].
/// All indices are 0-based ranks.
struct AliasDecomposition {
  std::vector<double> p;
  std::vector<double> q;
  std::vector<std::size_t> alias;  // alias[0] == kNoAlias
  std::vector<double> excess;      // excess[0] == 0

  /// Number of times the absorb step ran; never exceeds size().
  std::size_t absorb_steps = 0;

  [[nodiscard]] std::size_t size() const noexcept { return q.size(); }
  /// excess[x] / q[x], or 0 when q[x] == 0.
  [[nodiscard]] double ratio(std::size_t x) const noexcept;
  /// Rebuilds p from q, excess and alias.
  [[nodiscard]] std::vector<double> reconstruct() const;
};

/// Linear-time generalized alias construction. The shorter input is
/// zero-padded. Throws kNotSorted if either input is not descending (1e-12
/// tolerance) and kNotMajorized, naming the first violating prefix, unless
/// q ⪯ p.
AliasDecomposition majorized_alias(const SortedPmf& p, const SortedPmf& q);

/// One row of the row-stochastic transition matrix M with q M = p.
/// Each row has weight `stay` on its own column and `move` on column
/// `target` (at most one off-diagonal entry, target < row).
struct TransitionRow {
  std::size_t target = kNoAlias;
  double stay = 1.0;
  double move = 0.0;
};

/// Sparse lower-triangular form of a decomposition. Rows with q[x] == 0
/// become self-loops.
class AliasTransition {
 public:
  explicit AliasTransition(const AliasDecomposition& dec);

  [[nodiscard]] std::size_t size() const noexcept { return rows_.size(); }
  [[nodiscard]] const TransitionRow& row(std::size_t x) const { return rows_[x]; }
  /// Dense entry M[x][y].
  [[nodiscard]] double at(std::size_t x, std::size_t y) const;
  /// Row vector product v M.
  [[nodiscard]] std::vector<double> apply(std::span<const double> v) const;

 private:
  std::vector<TransitionRow> rows_;
};

AliasTransition as_transition(const AliasDecomposition& dec);

}  // namespace mec
