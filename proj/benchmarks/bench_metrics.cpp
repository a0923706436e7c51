#include <benchmark/benchmark.h>

#include "mism/metrics.hpp"
#include "mism/sweep.hpp"

static void BM_EvaluateAll(benchmark::State& state) {
  const mism::ConfusionMatrix m{40, 10, 945, 5};
  const mism::MetricConfig cfg;
  const auto selection = mism::MetricSelection::all();
  for (auto _ : state) benchmark::DoNotOptimize(mism::evaluate_all(m, cfg, selection));
}
BENCHMARK(BM_EvaluateAll);

static void BM_DefaultSweep(benchmark::State& state) {
  const mism::SweepSpec spec;
  for (auto _ : state) benchmark::DoNotOptimize(mism::run_sweep(spec));
}
BENCHMARK(BM_DefaultSweep);
BENCHMARK_MAIN();
