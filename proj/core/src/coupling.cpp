#include "mec/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mec/alias.hpp"
#include "mec/bernoulli_split.hpp"

namespace mec {

namespace {

// Excess masses at or below this are treated as zero before forming r / q.
// At ranks where q is tiny the ratio would otherwise turn a one-ulp residue
// into a visible Bernoulli parameter and an extra cell.
constexpr double kExcessFloor = 1e-14;

}  // namespace

std::vector<double> Coupling::pushforward(std::size_t i) const {
  std::vector<double> out(n, 0.0);
  for (std::size_t z = 0; z < q.size(); ++z) out[maps[i][z]] += q[z];
  return out;
}

double entropy_gap_bound(std::size_t m) {
  return 2.0 - std::exp2(2.0 - static_cast<double>(m));
}

Coupling compute_coupling(std::span<const Pmf> ps, const CouplingOptions& options) {
  if (ps.empty()) {
    throw Error(ErrorCode::kEmptyCollection, "cannot couple an empty collection");
  }
  if (options.truncation && *options.truncation == 0) {
    throw Error(ErrorCode::kBadParameter, "truncation must be at least 1");
  }
  const std::size_t m = ps.size();
  const GlbResult glb = greatest_lower_bound(ps);
  const std::size_t n = glb.glb.size();
  const SortedPmf glb_sorted = as_sorted(glb.glb.masses());

  std::vector<SortedPmf> sorted;
  std::vector<AliasDecomposition> decs;
  sorted.reserve(m);
  decs.reserve(m);
  for (const Pmf& p : ps) {
    sorted.push_back(sort_descending(p.padded(n)));
    decs.push_back(majorized_alias(sorted.back(), glb_sorted));
  }

  SplitLimits limits;
  limits.max_steps = options.truncation;
  limits.epsilon = options.epsilon;

  std::vector<double> masses;
  std::vector<CellOrigin> origin;
  std::vector<std::vector<std::size_t>> maps(m);
  double max_min_excess = 0.0;
  std::vector<double> rhos(m);

  for (std::size_t x = 0; x < n; ++x) {
    const double base = glb_sorted.masses[x];
    if (base <= 0.0) continue;
    double min_excess = kInfinity;
    for (std::size_t i = 0; i < m; ++i) {
      const double r = decs[i].excess[x];
      min_excess = std::min(min_excess, r);
      rhos[i] = r <= kExcessFloor ? 0.0 : decs[i].ratio(x);
    }
    if (x > 0) max_min_excess = std::max(max_min_excess, min_excess);

    const BernoulliSplit split = bernoulli_splitting(rhos, limits);
    for (std::size_t y = 0; y < split.num_sticks(); ++y) {
      const double mass = base * split.sticks()[y];
      if (mass <= 0.0) continue;
      masses.push_back(mass);
      origin.push_back({x, y});
      for (std::size_t i = 0; i < m; ++i) {
        const std::size_t rank = split.uses(i, y) ? decs[i].alias[x] : x;
        maps[i].push_back(sorted[i].perm[rank]);
      }
    }
  }

  Coupling c;
  c.q = Pmf(std::move(masses));
  c.maps = std::move(maps);
  c.origin = std::move(origin);
  c.n = n;
  c.truncation = options.truncation;
  c.max_min_excess = max_min_excess;
  return c;
}

CouplingReport verify_coupling(const Coupling& c, std::span<const Pmf> ps, RenyiOrder order) {
  CouplingReport rep;
  rep.order = order;
  rep.m = ps.size();
  auto fail = [&rep](const std::string& msg) { rep.failures.push_back(msg); };

  if (ps.empty()) {
    fail("no input distributions");
    return rep;
  }
  std::size_t n = c.n;
  for (const Pmf& p : ps) n = std::max(n, p.size());
  rep.n = n;
  rep.support = c.q.support_size();
  rep.support_bound = rep.m * (n - 1) + 1;

  rep.shape_ok = c.maps.size() == rep.m && c.origin.size() == c.q.size();
  for (const auto& map : c.maps) {
    if (map.size() != c.q.size()) rep.shape_ok = false;
    for (std::size_t label : map) {
      if (label >= n) rep.shape_ok = false;
    }
  }
  if (!rep.shape_ok) {
    std::ostringstream os;
    os << "coupling shape mismatch: expected " << rep.m << " maps over " << c.q.size()
       << " cells with labels below " << n;
    fail(os.str());
    return rep;
  }

  if (c.truncation) {
    rep.tv_tolerance = std::ldexp(1.0, -static_cast<int>(*c.truncation)) + kVerifyTolerance;
  }
  std::vector<Pmf> realized;
  rep.marginals_ok = true;
  for (std::size_t i = 0; i < rep.m; ++i) {
    std::vector<double> push(n, 0.0);
    for (std::size_t z = 0; z < c.q.size(); ++z) push[c.maps[i][z]] += c.q[z];
    const double tv = total_variation(push, ps[i].masses());
    rep.marginal_tv.push_back(tv);
    if (!(tv <= rep.tv_tolerance)) {
      rep.marginals_ok = false;
      std::ostringstream os;
      os.precision(17);
      os << "marginal " << (i + 1) << ": total variation " << tv << " exceeds "
         << rep.tv_tolerance;
      fail(os.str());
    }
    realized.push_back(Pmf(std::move(push)));
  }

  rep.support_ok = rep.support <= rep.support_bound;
  if (!rep.support_ok) {
    std::ostringstream os;
    os << "support " << rep.support << " exceeds m(n-1)+1 = " << rep.support_bound;
    fail(os.str());
  }

  const GlbResult glb = greatest_lower_bound(ps);
  rep.entropy = entropy(c.q);
  rep.glb_entropy = entropy(glb.glb);
  rep.gap = rep.entropy - rep.glb_entropy;
  rep.gap_bound = entropy_gap_bound(rep.m);
  // A truncated coupling couples its realized marginals, so the lower bound
  // is taken against their GLB.
  const double lower = c.truncation ? entropy(greatest_lower_bound(realized).glb)
                                    : rep.glb_entropy;
  rep.entropy_ok = rep.entropy >= lower - kVerifyTolerance &&
                   rep.gap <= rep.gap_bound + kVerifyTolerance;
  if (!rep.entropy_ok) {
    std::ostringstream os;
    os.precision(17);
    os << "entropy " << rep.entropy << " outside [" << lower << ", "
       << rep.glb_entropy + rep.gap_bound << "]";
    fail(os.str());
  }

  const Pmf cgeom = capped_geometric(0.5, rep.m);
  rep.renyi_entropy = entropy(c.q, order);
  rep.renyi_upper = entropy(glb.glb, order) + entropy(cgeom, order);
  rep.renyi_ok = rep.renyi_entropy <= rep.renyi_upper + kVerifyTolerance;
  if (!rep.renyi_ok) {
    std::ostringstream os;
    os.precision(17);
    os << "Renyi entropy " << rep.renyi_entropy << " exceeds " << rep.renyi_upper;
    fail(os.str());
  }

  std::vector<double> product;
  product.reserve(glb.glb.size() * cgeom.size());
  for (double a : glb.glb.masses()) {
    for (double b : cgeom.masses()) product.push_back(a * b);
  }
  rep.majorization_ok = majorizes(c.q.masses(), product, kVerifyTolerance);
  if (!rep.majorization_ok) fail("q does not majorize glb x CGeom(1/2, m)");
  return rep;
}

double glb_entropy_score(const JointTable& joint) {
  if (joint.empty()) throw Error(ErrorCode::kEmpty, "joint table has no rows");
  double total = 0.0;
  std::vector<Pmf> conditionals;
  conditionals.reserve(joint.size());
  for (std::size_t x = 0; x < joint.size(); ++x) {
    const auto& row = joint[x];
    double row_sum = 0.0;
    for (std::size_t y = 0; y < row.size(); ++y) {
      if (row[y] < -kNegativeClamp) {
        std::ostringstream os;
        os << "negative joint mass at row " << x << ", column " << y;
        throw Error(ErrorCode::kNegativeMass, os.str());
      }
      row_sum += std::max(row[y], 0.0);
    }
    if (!(row_sum > 0.0)) {
      std::ostringstream os;
      os << "row " << x << " has zero mass; its conditional is undefined";
      throw Error(ErrorCode::kZeroRow, os.str());
    }
    total += row_sum;
    std::vector<double> cond(row.size());
    for (std::size_t y = 0; y < row.size(); ++y) cond[y] = std::max(row[y], 0.0) / row_sum;
    conditionals.emplace_back(std::move(cond));
  }
  if (std::abs(total - 1.0) > kNormTolerance) {
    throw Error(ErrorCode::kNotNormalized, "joint masses do not sum to 1");
  }
  return entropy(greatest_lower_bound(conditionals).glb);
}

CausalScores causal_scores(const JointTable& joint, double tie_tolerance) {
  if (joint.empty()) throw Error(ErrorCode::kEmpty, "joint table has no rows");
  const std::size_t cols = joint.front().size();
  for (const auto& row : joint) {
    if (row.size() != cols) throw Error(ErrorCode::kBadParameter, "ragged joint table");
  }
  JointTable transposed(cols, std::vector<double>(joint.size()));
  std::vector<double> px(joint.size(), 0.0);
  std::vector<double> py(cols, 0.0);
  for (std::size_t x = 0; x < joint.size(); ++x) {
    for (std::size_t y = 0; y < cols; ++y) {
      transposed[y][x] = joint[x][y];
      px[x] += joint[x][y];
      py[y] += joint[x][y];
    }
  }
  for (std::size_t y = 0; y < cols; ++y) {
    if (!(py[y] > 0.0)) {
      std::ostringstream os;
      os << "column " << y << " has zero mass; its conditional is undefined";
      throw Error(ErrorCode::kZeroColumn, os.str());
    }
  }
  CausalScores s{};
  s.forward = entropy(px) + glb_entropy_score(joint);
  s.backward = entropy(py) + glb_entropy_score(transposed);
  if (std::abs(s.forward - s.backward) <= tie_tolerance) {
    s.direction = 0;
  } else {
    s.direction = s.forward < s.backward ? 1 : -1;
  }
  return s;
}

}  // namespace mec
