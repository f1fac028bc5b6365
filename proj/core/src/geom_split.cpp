#include "mec/geom_split.hpp"

#include <cmath>

namespace mec {

bool binary_digit(double rho, std::size_t i) {
  // ldexp and floor are exact, so this reads the digit straight off the
  // double without accumulating doubling error.
  const double scaled = std::floor(std::ldexp(rho, static_cast<int>(i)));
  return std::fmod(scaled, 2.0) >= 1.0;
}

GeomSplitMap::GeomSplitMap(AliasDecomposition dec, std::size_t levels)
    : dec_(std::move(dec)), levels_(levels), full_(dec_.size(), 0) {
  if (levels_ == 0 || levels_ > kMaxGeomLevels) {
    throw Error(ErrorCode::kBadParameter, "geometric level cap must be in [1, 1000]");
  }
  for (std::size_t x = 1; x < dec_.size(); ++x) {
    full_[x] = dec_.q[x] > 0.0 && dec_.ratio(x) >= 1.0;
  }
}

std::size_t GeomSplitMap::operator()(std::size_t x, std::size_t level) const {
  if (x == 0 || dec_.alias[x] == kNoAlias) return x;
  if (full_[x]) return dec_.alias[x];
  if (level > levels_) return x;
  return binary_digit(dec_.ratio(x), level) ? dec_.alias[x] : x;
}

double GeomSplitMap::transferred_fraction(std::size_t x) const {
  double sum = 0.0;
  for (std::size_t i = 1; i <= levels_; ++i) {
    if (x > 0 && (*this)(x, i) == dec_.alias[x] && dec_.alias[x] != x) {
      sum += std::ldexp(1.0, -static_cast<int>(i));
    }
  }
  return sum;
}

GeomSplitMap geom_split(const SortedPmf& p, const SortedPmf& q, std::size_t levels) {
  return GeomSplitMap(majorized_alias(p, q), levels);
}

std::vector<GeomCell> geom_cells(std::span<const double> q, std::size_t levels) {
  std::vector<GeomCell> cells;
  cells.reserve(q.size() * (levels + 1));
  for (std::size_t x = 0; x < q.size(); ++x) {
    if (q[x] <= 0.0) continue;
    for (std::size_t i = 1; i <= levels; ++i) {
      cells.push_back({x, i, std::ldexp(q[x], -static_cast<int>(i))});
    }
    cells.push_back({x, levels + 1, std::ldexp(q[x], -static_cast<int>(levels))});
  }
  return cells;
}

Pmf truncated_pushforward(const GeomSplitMap& map) {
  std::vector<double> out(map.size(), 0.0);
  for (const GeomCell& cell : geom_cells(map.decomposition().q, map.levels())) {
    out[map(cell.rank, cell.level)] += cell.mass;
  }
  return Pmf(std::move(out));
}

std::vector<std::size_t> GeometricCoupling::labels(std::size_t i) const {
  std::vector<std::size_t> out;
  out.reserve(cells.size());
  for (const GeomCell& cell : cells) {
    out.push_back(sorted[i].perm[maps[i](cell.rank, cell.level)]);
  }
  return out;
}

std::vector<double> GeometricCoupling::pushforward(std::size_t i) const {
  std::vector<double> out(sorted[i].size(), 0.0);
  const std::vector<std::size_t> lab = labels(i);
  for (std::size_t c = 0; c < cells.size(); ++c) out[lab[c]] += cells[c].mass;
  return out;
}

double GeometricCoupling::underlying_entropy() const {
  std::vector<double> masses;
  masses.reserve(cells.size());
  for (const GeomCell& cell : cells) masses.push_back(cell.mass);
  return entropy(masses);
}

GeometricCoupling couple_geometric(std::span<const Pmf> ps, std::size_t levels) {
  GeometricCoupling out{greatest_lower_bound(ps), levels, {}, {}, {}};
  const std::size_t n = out.glb.glb.size();
  const SortedPmf glb_sorted = as_sorted(out.glb.glb.masses());
  out.cells = geom_cells(out.glb.glb.masses(), levels);
  for (const Pmf& p : ps) {
    out.sorted.push_back(sort_descending(p.padded(n)));
    out.maps.push_back(geom_split(out.sorted.back(), glb_sorted, levels));
  }
  return out;
}

}  // namespace mec
