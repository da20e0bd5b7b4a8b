#include <benchmark/benchmark.h>

#include <random>

#include "miht/hoeffding_tree.hpp"
#include "miht/trainer.hpp"
#include "support/planted.hpp"

namespace {

std::vector<std::vector<double>> random_stream(std::size_t n, std::size_t n_attributes) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> noise;
  std::vector<std::vector<double>> stream(n, std::vector<double>(n_attributes));
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& v : stream[i]) v = noise(rng);
    stream[i][0] += (i % 2) * 2.0;
  }
  return stream;
}

void BM_TreeLearn(benchmark::State& state) {
  const auto n_attributes = static_cast<std::size_t>(state.range(0));
  const auto stream = random_stream(4096, n_attributes);
  miht::TreeOptions options;
  options.n_attributes = n_attributes;
  options.grace_period = 200;
  for (auto _ : state) {
    miht::HoeffdingTree tree(options);
    for (std::size_t i = 0; i < stream.size(); ++i) tree.learn(stream[i], i % 2);
    benchmark::DoNotOptimize(tree.node_count());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(stream.size()));
}
BENCHMARK(BM_TreeLearn)->Arg(10)->Arg(42)->Arg(252);

void BM_TreeClassify(benchmark::State& state) {
  const auto n_attributes = static_cast<std::size_t>(state.range(0));
  const auto stream = random_stream(4096, n_attributes);
  miht::TreeOptions options;
  options.n_attributes = n_attributes;
  options.grace_period = 200;
  miht::HoeffdingTree tree(options);
  for (std::size_t i = 0; i < stream.size(); ++i) tree.learn(stream[i], i % 2);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tree.classify(stream[i++ % stream.size()]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_TreeClassify)->Arg(10)->Arg(42)->Arg(252);

void BM_FitPlanted(benchmark::State& state) {
  const auto train = miht::testing::make_planted({.n_series = static_cast<std::size_t>(state.range(0))});
  for (auto _ : state) {
    auto result = miht::fit(train, miht::TrainConfig{});
    benchmark::DoNotOptimize(result.report.iterations);
  }
}
BENCHMARK(BM_FitPlanted)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
