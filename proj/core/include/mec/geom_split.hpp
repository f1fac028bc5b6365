#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mec/alias.hpp"
#include "mec/majorization.hpp"
#include "mec/pmf.hpp"

namespace mec {

/// Levels evaluated exactly by default; beyond ~60 the truncation error is
/// below double resolution.
inline constexpr std::size_t kDefaultGeomLevels = 60;
inline constexpr std::size_t kMaxGeomLevels = 1000;

/// True iff the i-th binary digit (i >= 1) after the point of rho is 1,
/// i.e. floor(2^i rho) is odd. Exact for every double rho in [0, 1).
bool binary_digit(double rho, std::size_t i);

/// Aggregation map realizing q x Geom(1/2) -> p for q ⪯ p (both sorted).
///
/// Cell (x, i) with geometric level i >= 1 maps to x when the i-th binary
/// digit of rho_x = r_x / q(x) is 0, and to the alias target a_x when it is 1.
/// Levels above the cap map to x. rho_x == 1 maps every level to a_x.
class GeomSplitMap {
 public:
  GeomSplitMap(AliasDecomposition dec, std::size_t levels);

  [[nodiscard]] std::size_t size() const noexcept { return dec_.size(); }
  [[nodiscard]] std::size_t levels() const noexcept { return levels_; }
  [[nodiscard]] const AliasDecomposition& decomposition() const noexcept { return dec_; }
  [[nodiscard]] bool is_full_transfer(std::size_t x) const { return full_[x] != 0; }

  /// Target rank of cell (x, level); level is 1-based and may exceed levels().
  [[nodiscard]] std::size_t operator()(std::size_t x, std::size_t level) const;

  /// Sum over levels i <= levels() of 2^-i [map(x, i) == a_x].
  [[nodiscard]] double transferred_fraction(std::size_t x) const;

 private:
  AliasDecomposition dec_;
  std::size_t levels_;
  std::vector<std::uint8_t> full_;
};

/// Throws kNotMajorized, kNotSorted, or kBadParameter (levels == 0 or above
/// kMaxGeomLevels).
GeomSplitMap geom_split(const SortedPmf& p, const SortedPmf& q,
                        std::size_t levels = kDefaultGeomLevels);

/// Cells of q x CGeom(1/2, L+1): levels 1..L carry q(x) 2^-i and level L+1
/// carries the folded tail q(x) 2^-L. Rows with q(x) == 0 emit nothing.
struct GeomCell {
  std::size_t rank;
  std::size_t level;
  double mass;
};
std::vector<GeomCell> geom_cells(std::span<const double> q, std::size_t levels);

/// Law of map(X, min(Z, L+1)) with X ~ q and Z ~ Geom(1/2), summed cell by
/// cell. Differs from p by at most 2^-L in total variation.
Pmf truncated_pushforward(const GeomSplitMap& map);

/// Coupling of a collection through (glb) x CGeom(1/2, L+1).
struct GeometricCoupling {
  GlbResult glb;
  std::size_t levels = 0;
  std::vector<GeomCell> cells;
  std::vector<SortedPmf> sorted;     // per input, for label translation
  std::vector<GeomSplitMap> maps;    // per input, in rank space

  /// maps[i] evaluated on every cell, translated to original labels.
  [[nodiscard]] std::vector<std::size_t> labels(std::size_t i) const;
  /// Law of input i's label under the underlying cells (original labels).
  [[nodiscard]] std::vector<double> pushforward(std::size_t i) const;
  /// Shannon entropy of the underlying cell masses.
  [[nodiscard]] double underlying_entropy() const;
};

/// Throws kEmptyCollection.
GeometricCoupling couple_geometric(std::span<const Pmf> ps,
                                   std::size_t levels = kDefaultGeomLevels);

}  // namespace mec
