#include <benchmark/benchmark.h>

#include "miht/bagging.hpp"
#include "support/planted.hpp"

namespace {

void BM_BuildBags(benchmark::State& state) {
  const auto data = miht::testing::make_planted(
      {.n_series = 100, .length = static_cast<std::size_t>(state.range(0)), .dims = 3});
  const auto params = miht::resolve_params(data, miht::TrainConfig{});
  for (auto _ : state) {
    auto bags = miht::build_bags(data, params);
    benchmark::DoNotOptimize(bags);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(data.size()));
}
BENCHMARK(BM_BuildBags)->Arg(100)->Arg(400)->Arg(1600);

}  // namespace
