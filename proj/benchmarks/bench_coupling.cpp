#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "mec/mec.hpp"

namespace {

std::vector<mec::Pmf> dense_collection(std::size_t m, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  std::vector<mec::Pmf> ps;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> v(n);
    double total = 0.0;
    for (double& x : v) total += (x = expo(rng));
    for (double& x : v) x /= total;
    ps.emplace_back(std::move(v));
  }
  return ps;
}

void BM_Glb(benchmark::State& state) {
  const auto ps = dense_collection(state.range(0), state.range(1), 1);
  for (auto _ : state) benchmark::DoNotOptimize(mec::greatest_lower_bound(ps));
  state.SetComplexityN(state.range(0) * state.range(1));
}
BENCHMARK(BM_Glb)->ArgsProduct({{2, 16}, {1 << 10, 1 << 14, 100000}})->Unit(benchmark::kMillisecond);

void BM_CoupleExact(benchmark::State& state) {
  const auto ps = dense_collection(state.range(0), state.range(1), 2);
  for (auto _ : state) benchmark::DoNotOptimize(mec::compute_coupling(ps));
}
BENCHMARK(BM_CoupleExact)
    ->ArgsProduct({{2, 4, 16}, {1 << 10, 1 << 14, 100000}})
    ->Unit(benchmark::kMillisecond);

void BM_CoupleTruncated(benchmark::State& state) {
  const auto ps = dense_collection(16, state.range(1), 3);
  mec::CouplingOptions opt;
  opt.truncation = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mec::compute_coupling(ps, opt));
}
BENCHMARK(BM_CoupleTruncated)->ArgsProduct({{5, 20, 60}, {1 << 14, 100000}})->Unit(benchmark::kMillisecond);

void BM_BernoulliSplit(benchmark::State& state) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> rhos(state.range(0));
  for (double& r : rhos) r = unif(rng);
  for (auto _ : state) benchmark::DoNotOptimize(mec::bernoulli_splitting(rhos));
}
BENCHMARK(BM_BernoulliSplit)->RangeMultiplier(2)->Range(2, 64);

void BM_Sample(benchmark::State& state) {
  const auto c = mec::compute_coupling(dense_collection(8, state.range(0), 5));
  for (auto _ : state) benchmark::DoNotOptimize(mec::sample_coupling(c, 7, 10000));
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_Sample)->Arg(64)->Arg(1 << 14);

}  // namespace

BENCHMARK_MAIN();
