#include "mec/majorization.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <sstream>

namespace mec {

std::vector<double> sorted_prefix_sums(std::span<const double> masses) {
  std::vector<double> sorted(masses.begin(), masses.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::vector<double> prefix(sorted.size());
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    const double v = sorted[k];
    const double t = sum + v;
    comp += sum >= v ? (sum - t) + v : (v - t) + sum;
    sum = t;
    prefix[k] = sum + comp;
  }
  return prefix;
}

std::optional<std::size_t> majorization_violation(std::span<const double> p,
                                                  std::span<const double> q,
                                                  double slack) {
  const std::vector<double> pp = sorted_prefix_sums(p);
  const std::vector<double> qp = sorted_prefix_sums(q);
  const std::size_t n = std::max(pp.size(), qp.size());
  for (std::size_t k = 0; k < n; ++k) {
    const double pk = pp.empty() ? 0.0 : pp[std::min(k, pp.size() - 1)];
    const double qk = qp.empty() ? 0.0 : qp[std::min(k, qp.size() - 1)];
    if (qk > pk + slack) return k;
  }
  return std::nullopt;
}

bool majorizes(std::span<const double> p, std::span<const double> q, double slack) {
  return !majorization_violation(p, q, slack).has_value();
}

bool majorizes(const Pmf& p, const Pmf& q, double slack) {
  return majorizes(p.masses(), q.masses(), slack);
}

namespace {

std::size_t common_length(std::span<const Pmf> ps) {
  std::size_t n = 0;
  for (const Pmf& p : ps) n = std::max(n, p.size());
  return n;
}

}  // namespace

GlbResult greatest_lower_bound(std::span<const Pmf> ps) {
  if (ps.empty()) {
    throw Error(ErrorCode::kEmptyCollection, "greatest lower bound of an empty collection");
  }
  const std::size_t n = common_length(ps);
  std::vector<double> prefix(n, kInfinity);
  for (const Pmf& p : ps) {
    const std::vector<double> pp = sorted_prefix_sums(p.masses());
    for (std::size_t k = 0; k < n; ++k) {
      const double v = pp[std::min(k, pp.size() - 1)];
      prefix[k] = std::min(prefix[k], v);
    }
  }
  std::vector<double> glb(n);
  for (std::size_t k = 0; k < n; ++k) {
    glb[k] = k == 0 ? prefix[0] : std::max(prefix[k] - prefix[k - 1], 0.0);
  }
  return {Pmf(std::move(glb)), std::move(prefix)};
}

Pmf glb_oracle(std::span<const Pmf> ps) {
  if (ps.empty()) {
    throw Error(ErrorCode::kEmptyCollection, "greatest lower bound of an empty collection");
  }
  const std::size_t n = common_length(ps);
  std::vector<double> best_of_size(n, kInfinity);
  for (std::size_t which = 0; which < ps.size(); ++which) {
    const std::vector<std::size_t> support = ps[which].support();
    const std::size_t s = support.size();
    if (s > kOracleMaxSupport) {
      std::ostringstream os;
      os << "support of input " << which << " has " << s << " atoms; oracle limit is "
         << kOracleMaxSupport;
      throw Error(ErrorCode::kTooLarge, os.str());
    }
    // exact[j] = max mass of a subset with exactly j atoms
    std::vector<double> exact(s + 1, 0.0);
    for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
      double mass = 0.0;
      for (std::size_t b = 0; b < s; ++b) {
        if (mask & (1u << b)) mass += ps[which][support[b]];
      }
      const auto j = static_cast<std::size_t>(std::popcount(mask));
      exact[j] = std::max(exact[j], mass);
    }
    double at_most = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      at_most = std::max(at_most, exact[std::min(k + 1, s)]);
      best_of_size[k] = std::min(best_of_size[k], at_most);
    }
  }
  std::vector<double> glb(n);
  for (std::size_t k = 0; k < n; ++k) {
    glb[k] = k == 0 ? best_of_size[0] : std::max(best_of_size[k] - best_of_size[k - 1], 0.0);
  }
  return Pmf(std::move(glb));
}

}  // namespace mec
