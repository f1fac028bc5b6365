#include "mec/sampler.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace mec {

namespace {

constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

CounterRng::result_type CounterRng::at(std::uint64_t k) const noexcept {
  return mix64(seed_ + (k + 1) * kGoldenGamma);
}

double CounterRng::uniform() noexcept {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

CounterRng CounterRng::split(std::uint64_t stream) const noexcept {
  return CounterRng(mix64(seed_ ^ mix64(stream + kGoldenGamma)));
}

CdfSampler::CdfSampler(std::span<const double> weights) : cdf_(weights.size()) {
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double w = weights[i];
    const double t = sum + w;
    comp += sum >= w ? (sum - t) + w : (w - t) + sum;
    sum = t;
    cdf_[i] = sum + comp;
    if (w > 0.0) last_positive_ = i;
  }
}

std::size_t CdfSampler::operator()(CounterRng& rng) const {
  if (cdf_.empty()) return 0;
  const double u = rng.uniform() * cdf_.back();
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  const auto idx = static_cast<std::size_t>(it - cdf_.begin());
  return std::min(idx, last_positive_);
}

CouplingSampler::CouplingSampler(const Coupling& c) : cells_(c.q.masses()) {}

CouplingSample sample_coupling(const Coupling& c, std::uint64_t seed, std::size_t count) {
  CouplingSample out;
  out.m = c.num_inputs();
  out.cells.reserve(count);
  out.labels.reserve(count * out.m);
  const CouplingSampler sampler(c);
  CounterRng rng(seed);
  for (std::size_t d = 0; d < count; ++d) {
    const std::size_t z = sampler.draw_cell(rng);
    out.cells.push_back(z);
    for (const auto& map : c.maps) out.labels.push_back(map[z]);
  }
  return out;
}

std::vector<std::size_t> sample_alias(const AliasDecomposition& dec, std::uint64_t seed,
                                      std::size_t count) {
  std::vector<std::size_t> out;
  out.reserve(count);
  const CdfSampler base(dec.q);
  std::vector<double> cutoff(dec.size());
  for (std::size_t y = 0; y < dec.size(); ++y) cutoff[y] = dec.ratio(y);
  CounterRng rng(seed);
  for (std::size_t d = 0; d < count; ++d) {
    const std::size_t y = base(rng);
    const double z = rng.uniform();
    out.push_back(z < cutoff[y] && dec.alias[y] != kNoAlias ? dec.alias[y] : y);
  }
  return out;
}

void write_samples(std::ostream& out, const Coupling& c, std::uint64_t seed, std::size_t count,
                   SampleLayout layout) {
  const CouplingSampler sampler(c);
  CounterRng rng(seed);
  std::string line;
  for (std::size_t d = 0; d < count; ++d) {
    const std::size_t z = sampler.draw_cell(rng);
    line.clear();
    if (layout != SampleLayout::kLabels) line += std::to_string(z + 1);
    if (layout != SampleLayout::kCells) {
      for (const auto& map : c.maps) {
        if (!line.empty()) line += '\t';
        line += std::to_string(map[z] + 1);
      }
    }
    line += '\n';
    out << line;
  }
}

}  // namespace mec
