#include <benchmark/benchmark.h>

#include "crjet/experiments.hpp"
#include "crjet/series_ops.hpp"

namespace crjet {
namespace {

ExactSeries dense(const SpacePtr& space, unsigned order, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<ExactSeries::Term> terms;
  for (const auto& index : enumerate_monomials(space->size(), 0, order)) {
    terms.push_back({index, GaussianRational(rng.rational(5), rng.rational(5))});
  }
  return ExactSeries::from_terms(space, order, std::move(terms));
}

void BM_Multiply(benchmark::State& state) {
  const auto order = static_cast<unsigned>(state.range(0));
  const auto space = VariableSpace::full("source", 1, 1);
  const ExactSeries a = dense(space, order, 1);
  const ExactSeries b = dense(space, order, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Multiply)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Realify(benchmark::State& state) {
  const auto order = static_cast<unsigned>(state.range(0));
  const ExactSeries a = dense(VariableSpace::full("source", 1, 1), order, 3);
  for (auto _ : state) benchmark::DoNotOptimize(realify(a));
}
BENCHMARK(BM_Realify)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace crjet
