#include <benchmark/benchmark.h>

#include "crjet/experiments.hpp"

namespace crjet {
namespace {

void BM_JetPullback(benchmark::State& state) {
  ExperimentConfig config;
  config.signature = {1, 1, 1, 2, static_cast<unsigned>(state.range(0))};
  config.seed = 5;
  const MapJet map = sample_map(config);
  const AlgebraicModel model = sample_model(config);
  for (auto _ : state) benchmark::DoNotOptimize(jet_pullback(map, model));
}
BENCHMARK(BM_JetPullback)->Arg(4)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_JetPullbackCodim2(benchmark::State& state) {
  ExperimentConfig config;
  config.signature = {1, 2, 1, 3, static_cast<unsigned>(state.range(0))};
  config.seed = 6;
  const MapJet map = sample_map(config);
  const AlgebraicModel model = sample_model(config);
  for (auto _ : state) benchmark::DoNotOptimize(jet_pullback(map, model));
}
BENCHMARK(BM_JetPullbackCodim2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace crjet
BENCHMARK_MAIN();
