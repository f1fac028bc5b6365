#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <vector>

#include "mec/alias.hpp"
#include "mec/coupling.hpp"

namespace mec {

/// Counter-based 64-bit generator: the k-th output is a fixed mixing
/// function of seed + k * golden-gamma (the SplitMix64 finalizer). Output
/// depends only on (seed, k), so streams are reproducible on every platform.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept { return at(counter_++); }
  /// Output number k, without advancing.
  [[nodiscard]] result_type at(std::uint64_t k) const noexcept;
  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform() noexcept;

  /// Independent generator for sub-stream `stream`.
  [[nodiscard]] CounterRng split(std::uint64_t stream) const noexcept;

  [[nodiscard]] std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

/// Inverse-CDF sampler over a fixed weight vector (binary search per draw).
class CdfSampler {
 public:
  explicit CdfSampler(std::span<const double> weights);
  [[nodiscard]] std::size_t operator()(CounterRng& rng) const;
  [[nodiscard]] std::size_t size() const noexcept { return cdf_.size(); }

 private:
  std::vector<double> cdf_;
  std::size_t last_positive_ = 0;
};

/// Draws from a coupling: one cell per draw, and every input's label.
class CouplingSampler {
 public:
  explicit CouplingSampler(const Coupling& c);
  [[nodiscard]] std::size_t draw_cell(CounterRng& rng) const { return cells_(rng); }

 private:
  CdfSampler cells_;
};

struct CouplingSample {
  std::size_t m = 0;
  std::vector<std::size_t> cells;
  std::vector<std::size_t> labels;  // row-major count x m, original labels

  [[nodiscard]] std::size_t size() const noexcept { return cells.size(); }
  [[nodiscard]] std::size_t label(std::size_t draw, std::size_t i) const {
    return labels[draw * m + i];
  }
};

CouplingSample sample_coupling(const Coupling& c, std::uint64_t seed, std::size_t count);

/// Generalized alias sampling: y ~ q, then a_y with probability r_y / q(y),
/// else y. Returns ranks.
std::vector<std::size_t> sample_alias(const AliasDecomposition& dec, std::uint64_t seed,
                                      std::size_t count);

enum class SampleLayout { kCells, kLabels, kBoth };

/// Writes `count` draws as TSV lines (1-based cell index and/or labels).
void write_samples(std::ostream& out, const Coupling& c, std::uint64_t seed, std::size_t count,
                   SampleLayout layout = SampleLayout::kBoth);

}  // namespace mec
