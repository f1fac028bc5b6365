#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mec/majorization.hpp"
#include "mec/pmf.hpp"

namespace mec {

/// Which GLB rank and which Bernoulli stick produced a coupling cell.
struct CellOrigin {
  std::size_t rank;
  std::size_t stick;

  friend bool operator==(const CellOrigin&, const CellOrigin&) = default;
};

struct CouplingOptions {
  /// Cap on Bernoulli steps per rank. Unset means exact mode.
  std::optional<std::size_t> truncation;
  /// Residual at which a Bernoulli split stops.
  double epsilon = kBuildTolerance;
};

/// Underlying pmf q over cells plus one aggregation map per input: drawing a
/// cell Z ~ q and emitting maps[i][Z] yields a sample of input i.
/// Labels in maps are the inputs' original (0-based) labels. Cells are
/// ordered by (rank, stick).
struct Coupling {
  Pmf q{std::vector<double>{1.0}};
  std::vector<std::vector<std::size_t>> maps;
  std::vector<CellOrigin> origin;
  std::size_t n = 0;
  std::optional<std::size_t> truncation;

  /// Largest, over ranks x >= 1, of min_i r_{i,x}. Zero up to rounding.
  double max_min_excess = 0.0;

  [[nodiscard]] std::size_t num_inputs() const noexcept { return maps.size(); }
  [[nodiscard]] std::size_t num_cells() const noexcept { return q.size(); }
  /// Law of input i's label under q; length n.
  [[nodiscard]] std::vector<double> pushforward(std::size_t i) const;
};

/// Glues the GLB, one majorized alias decomposition per input and one
/// Bernoulli split per rank into a coupling with at most m(n-1)+1 cells whose
/// entropy is within 2 - 2^(2-m) bits of H(glb).
/// Throws kEmptyCollection.
Coupling compute_coupling(std::span<const Pmf> ps, const CouplingOptions& options = {});

/// Upper bound on the entropy gap, 2 - 2^(2-m) bits.
double entropy_gap_bound(std::size_t m);

struct CouplingReport {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t support = 0;
  std::size_t support_bound = 0;
  std::vector<double> marginal_tv;
  double tv_tolerance = kVerifyTolerance;
  double entropy = 0.0;          // H(q)
  double glb_entropy = 0.0;      // H(glb)
  double gap = 0.0;
  double gap_bound = 0.0;
  RenyiOrder order;
  double renyi_entropy = 0.0;        // H_alpha(q)
  double renyi_upper = 0.0;          // H_alpha(glb) + H_alpha(CGeom(1/2, m))
  bool marginals_ok = false;
  bool support_ok = false;
  bool entropy_ok = false;
  bool renyi_ok = false;
  bool majorization_ok = false;
  bool shape_ok = false;
  std::vector<std::string> failures;

  [[nodiscard]] bool passed() const noexcept { return failures.empty(); }
};

/// Checks a coupling against its inputs. Never throws on a bad coupling;
/// every failed check is listed in `failures`.
CouplingReport verify_coupling(const Coupling& c, std::span<const Pmf> ps,
                               RenyiOrder order = RenyiOrder::infinity());

/// Joint table: rows index X, columns index Y.
using JointTable = std::vector<std::vector<double>>;

/// H(glb of the conditionals p_{Y|X=x}): within 2 bits of the least noise
/// entropy H(Z) over functional representations Y = g(X, Z).
/// Throws kZeroRow, kNegativeMass, kNotNormalized, kBadParameter.
double glb_entropy_score(const JointTable& joint);

struct CausalScores {
  double forward;   // H(X) + glb_entropy_score(joint)
  double backward;  // H(Y) + glb_entropy_score(transpose)
  /// +1: X -> Y preferred, -1: Y -> X preferred, 0: tie within tolerance.
  int direction;
};

/// Throws kZeroRow or kZeroColumn for an all-zero row or column.
CausalScores causal_scores(const JointTable& joint, double tie_tolerance = kVerifyTolerance);

}  // namespace mec
