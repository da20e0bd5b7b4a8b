#include <benchmark/benchmark.h>

#include <random>

#include "miht/baselines.hpp"

namespace {

miht::MultivariateSeries random_series(std::size_t length, std::size_t dims, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise;
  std::vector<double> v(length * dims);
  for (auto& x : v) x = noise(rng);
  return miht::MultivariateSeries(std::move(v), length, dims, 0);
}

void BM_DtwDistance(benchmark::State& state) {
  const auto length = static_cast<std::size_t>(state.range(0));
  const auto a = random_series(length, 4, 1);
  const auto b = random_series(length, 4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(miht::dtw_distance(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DtwDistance)->RangeMultiplier(2)->Range(16, 512)->Complexity(benchmark::oNSquared);

}  // namespace
