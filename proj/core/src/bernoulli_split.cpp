#include "mec/bernoulli_split.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mec/error.hpp"
#include "mec/pmf.hpp"

namespace mec {

BernoulliSplit::BernoulliSplit(std::size_t m, std::vector<double> sticks,
                               std::vector<std::uint8_t> bits)
    : m_(m), sticks_(std::move(sticks)), bits_(std::move(bits)) {}

double BernoulliSplit::realized(std::size_t i) const {
  double sum = 0.0;
  for (std::size_t x = 0; x < sticks_.size(); ++x) {
    if (uses(i, x)) sum += sticks_[x];
  }
  return sum;
}

BernoulliSplit bernoulli_splitting(std::span<const double> rhos, SplitLimits limits) {
  const std::size_t m = rhos.size();
  std::vector<double> rho(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double v = rhos[i];
    if (!(v >= -kBuildTolerance && v <= 1.0 + kBuildTolerance)) {
      std::ostringstream os;
      os << "rho[" << i << "] = " << v << " is not a probability";
      throw Error(ErrorCode::kBadProbability, os.str());
    }
    rho[i] = std::clamp(v, 0.0, 1.0);
  }
  if (limits.max_steps && *limits.max_steps == 0) {
    throw Error(ErrorCode::kBadParameter, "bernoulli_splitting needs at least one step");
  }

  std::vector<double> sticks;
  std::vector<std::vector<std::uint8_t>> columns;
  double c = 1.0;
  std::size_t iterations = 0;

  while (c > limits.epsilon && (!limits.max_steps || iterations < *limits.max_steps)) {
    double gamma = c;
    for (double r : rho) gamma = std::min(gamma, std::max(r, c - r));

    const double half = 0.5 * c - kBuildTolerance;
    std::vector<std::uint8_t> column(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (rho[i] >= half) {
        column[i] = 1;
        rho[i] -= gamma;
      }
    }
    c -= gamma;
    if (c < 0.0) c = 0.0;

    std::size_t settled = 0;
    for (double& r : rho) {
      if (r <= kBuildTolerance) {
        r = 0.0;
      } else if (r >= c - kBuildTolerance) {
        r = c;
      }
      if (r == 0.0 || r == c) ++settled;
    }
    if (limits.settled_trace) limits.settled_trace->push_back(settled);

    sticks.push_back(gamma);
    columns.push_back(std::move(column));
    ++iterations;
  }

  double residual = 0.0;
  if (c > 0.0) {
    residual = c;
    sticks.back() += c;
  }
  const double total = compensated_sum(sticks);
  if (total != 1.0) {
    for (double& s : sticks) s /= total;
  }

  const std::size_t k = sticks.size();
  std::vector<std::uint8_t> bits(m * k);
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t i = 0; i < m; ++i) bits[i * k + x] = columns[x][i];
  }
  BernoulliSplit out(m, std::move(sticks), std::move(bits));
  out.iterations = iterations;
  out.residual = residual;
  return out;
}

}  // namespace mec
