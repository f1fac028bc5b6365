#include "mec/alias.hpp"

#include <algorithm>
#include <sstream>

#include "mec/majorization.hpp"

namespace mec {

namespace {

// Differences below this are rounding noise from the prefix-sum GLB. Keeping
// them out of the absorb loop stops spurious one-ulp transfers from creating
// extra coupling cells.
constexpr double kNoiseFloor = 1e-15;

void require_descending(const std::vector<double>& v, const char* name) {
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (v[k] > v[k - 1] + kBuildTolerance) {
      std::ostringstream os;
      os << name << " is not descending at rank " << k;
      throw Error(ErrorCode::kNotSorted, os.str());
    }
  }
}

}  // namespace

double AliasDecomposition::ratio(std::size_t x) const noexcept {
  if (q[x] <= 0.0) return 0.0;
  return std::min(excess[x] / q[x], 1.0);
}

std::vector<double> AliasDecomposition::reconstruct() const {
  std::vector<double> out(size(), 0.0);
  for (std::size_t x = 0; x < size(); ++x) {
    out[x] += q[x] - excess[x];
    if (alias[x] != kNoAlias) out[alias[x]] += excess[x];
  }
  return out;
}

AliasDecomposition majorized_alias(const SortedPmf& p, const SortedPmf& q) {
  const std::size_t n = std::max(p.size(), q.size());
  AliasDecomposition dec;
  dec.p = p.masses;
  dec.q = q.masses;
  dec.p.resize(n, 0.0);
  dec.q.resize(n, 0.0);
  require_descending(dec.p, "p");
  require_descending(dec.q, "q");
  if (auto bad = majorization_violation(dec.p, dec.q)) {
    std::ostringstream os;
    os << "q is not majorized by p: prefix of length " << (*bad + 1) << " of q is larger";
    throw Error(ErrorCode::kNotMajorized, os.str());
  }

  dec.alias.assign(n, 0);
  dec.excess.assign(n, 0.0);
  if (n == 0) return dec;
  dec.alias[0] = kNoAlias;

  std::size_t b = n - 1;
  for (std::size_t x = n - 1; x >= 1; --x) {
    double r = dec.q[x] - dec.p[x];
    while (r < -kNoiseFloor && b > x) {
      r += dec.excess[b];
      dec.alias[b] = x;
      --b;
      ++dec.absorb_steps;
    }
    if (r < -kVerifyTolerance) {
      std::ostringstream os;
      os << "excess at rank " << x << " went negative (" << r << ")";
      throw Error(ErrorCode::kNotMajorized, os.str());
    }
    dec.excess[x] = std::clamp(r, 0.0, dec.q[x]);
  }
  // Cells 1..b were never claimed; their excess flows to rank 0.
  return dec;
}

AliasTransition::AliasTransition(const AliasDecomposition& dec) : rows_(dec.size()) {
  for (std::size_t x = 0; x < dec.size(); ++x) {
    TransitionRow& row = rows_[x];
    const double rho = dec.ratio(x);
    if (dec.q[x] <= 0.0 || rho <= 0.0 || dec.alias[x] == kNoAlias) continue;
    row.target = dec.alias[x];
    row.move = rho;
    row.stay = 1.0 - rho;
  }
}

double AliasTransition::at(std::size_t x, std::size_t y) const {
  const TransitionRow& row = rows_[x];
  if (y == x) return row.stay;
  return y == row.target ? row.move : 0.0;
}

std::vector<double> AliasTransition::apply(std::span<const double> v) const {
  std::vector<double> out(rows_.size(), 0.0);
  for (std::size_t x = 0; x < rows_.size() && x < v.size(); ++x) {
    out[x] += v[x] * rows_[x].stay;
    if (rows_[x].target != kNoAlias) out[rows_[x].target] += v[x] * rows_[x].move;
  }
  return out;
}

AliasTransition as_transition(const AliasDecomposition& dec) { return AliasTransition(dec); }

}  // namespace mec
