#include "mec/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace mec {

double compensated_sum(std::span<const double> values) {
  double sum = 0.0;
  double comp = 0.0;
  for (double v : values) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

Pmf::Pmf(std::vector<double> masses, Rescale rescale) : masses_(std::move(masses)) {
  if (masses_.empty()) {
    throw Error(ErrorCode::kEmpty, "pmf has no entries");
  }
  for (std::size_t i = 0; i < masses_.size(); ++i) {
    double& m = masses_[i];
    if (!std::isfinite(m)) {
      std::ostringstream os;
      os << "mass at index " << i << " is not finite";
      throw Error(ErrorCode::kNotNormalized, os.str());
    }
    if (m < 0.0) {
      if (m < -kNegativeClamp) {
        std::ostringstream os;
        os << "mass at index " << i << " is negative (" << m << ")";
        throw Error(ErrorCode::kNegativeMass, os.str());
      }
      m = 0.0;
    }
  }
  const double total = compensated_sum(masses_);
  if (std::abs(total - 1.0) > kNormTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "masses sum to " << total << ", not 1";
    throw Error(ErrorCode::kNotNormalized, os.str());
  }
  if (rescale == Rescale::kYes && total != 1.0) {
    for (double& m : masses_) m /= total;
  }
}

std::vector<std::size_t> Pmf::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < masses_.size(); ++i) {
    if (masses_[i] > 0.0) out.push_back(i);
  }
  return out;
}

std::size_t Pmf::support_size() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(masses_.begin(), masses_.end(), [](double m) { return m > 0.0; }));
}

Pmf Pmf::padded(std::size_t n) const {
  if (n <= masses_.size()) return *this;
  Pmf out = *this;
  out.masses_.resize(n, 0.0);
  return out;
}

Pmf make_pmf(std::span<const double> masses) {
  return Pmf(std::vector<double>(masses.begin(), masses.end()));
}

std::vector<double> SortedPmf::unsorted() const {
  std::vector<double> out(masses.size(), 0.0);
  for (std::size_t k = 0; k < masses.size(); ++k) out[perm[k]] = masses[k];
  return out;
}

SortedPmf sort_descending(const Pmf& p) {
  SortedPmf s;
  s.perm.resize(p.size());
  std::iota(s.perm.begin(), s.perm.end(), std::size_t{0});
  std::stable_sort(s.perm.begin(), s.perm.end(),
                   [&](std::size_t a, std::size_t b) { return p[a] > p[b]; });
  s.masses.reserve(p.size());
  for (std::size_t label : s.perm) s.masses.push_back(p[label]);
  return s;
}

SortedPmf as_sorted(std::span<const double> descending, double tol) {
  for (std::size_t k = 1; k < descending.size(); ++k) {
    if (descending[k] > descending[k - 1] + tol) {
      std::ostringstream os;
      os << "masses not descending at position " << k;
      throw Error(ErrorCode::kNotSorted, os.str());
    }
  }
  SortedPmf s;
  s.masses.assign(descending.begin(), descending.end());
  s.perm.resize(descending.size());
  std::iota(s.perm.begin(), s.perm.end(), std::size_t{0});
  return s;
}

RenyiOrder::RenyiOrder(double alpha) : alpha_(alpha) {
  if (std::isnan(alpha) || alpha < 0.0) {
    throw Error(ErrorCode::kBadParameter, "Renyi order must lie in [0, inf]");
  }
}

bool RenyiOrder::is_shannon() const noexcept { return std::abs(alpha_ - 1.0) < 1e-6; }

bool RenyiOrder::is_infinite() const noexcept { return std::isinf(alpha_); }

double entropy(std::span<const double> masses, RenyiOrder order) {
  if (order.is_infinite()) {
    const double top = *std::max_element(masses.begin(), masses.end());
    return top >= 1.0 ? 0.0 : -std::log2(top);
  }
  if (order.alpha() == 0.0) {
    const auto count = std::count_if(masses.begin(), masses.end(),
                                     [](double m) { return m > 0.0; });
    return std::log2(static_cast<double>(count));
  }
  if (order.is_shannon()) {
    double h = 0.0;
    for (double m : masses) {
      if (m > 0.0) h -= m * std::log2(m);
    }
    return std::max(h, 0.0);
  }
  const double alpha = order.alpha();
  std::vector<double> powers;
  powers.reserve(masses.size());
  for (double m : masses) {
    if (m > 0.0) powers.push_back(std::pow(m, alpha));
  }
  return std::max(std::log2(compensated_sum(powers)) / (1.0 - alpha), 0.0);
}

double entropy(const Pmf& p, RenyiOrder order) { return entropy(p.masses(), order); }

Pmf capped_geometric(double gamma, std::size_t k) {
  if (!(gamma > 0.0 && gamma <= 1.0) || k == 0) {
    throw Error(ErrorCode::kBadParameter, "capped_geometric needs 0 < gamma <= 1 and k >= 1");
  }
  std::vector<double> masses(k);
  double tail = 1.0;  // (1-gamma)^(x-1)
  for (std::size_t x = 0; x + 1 < k; ++x) {
    masses[x] = gamma * tail;
    tail *= 1.0 - gamma;
  }
  masses[k - 1] = tail;
  return Pmf(std::move(masses));
}

double geometric_entropy(RenyiOrder order) {
  if (order.is_infinite()) return 1.0;
  if (order.alpha() == 0.0) return kInfinity;
  if (order.is_shannon()) return 2.0;
  const double a = order.alpha();
  return (-a - std::log2(1.0 - std::exp2(-a))) / (1.0 - a);
}

double total_variation(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = std::max(a.size(), b.size());
  std::vector<double> diffs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = i < a.size() ? a[i] : 0.0;
    const double y = i < b.size() ? b[i] : 0.0;
    diffs[i] = std::abs(x - y);
  }
  return 0.5 * compensated_sum(diffs);
}

}  // namespace mec
