#include <benchmark/benchmark.h>

#include <random>

#include "mism/confusion.hpp"

namespace {

mism::BinaryMask random_mask(std::size_t side, std::uint64_t seed, double density) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution fg(density);
  std::vector<mism::Label> labels(side * side);
  for (auto& l : labels) l = fg(rng) ? mism::Label::Foreground : mism::Label::Background;
  return mism::BinaryMask(side, side, std::move(labels));
}

// Four-way branch per pixel, for comparison with the library kernel.
mism::ConfusionMatrix branchy(const mism::BinaryMask& gt, const mism::BinaryMask& pred) {
  mism::ConfusionMatrix m;
  const auto g = gt.labels();
  const auto p = pred.labels();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const bool a = g[i] == mism::Label::Foreground;
    const bool b = p[i] == mism::Label::Foreground;
    if (a && b) ++m.tp;
    else if (b) ++m.fp;
    else if (a) ++m.fn;
    else ++m.tn;
  }
  return m;
}

void BM_ConfusionKernel(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  const auto gt = random_mask(side, 1, 0.3);
  const auto pred = random_mask(side, 2, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(mism::confusion_matrix(gt, pred));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(side * side));
}
BENCHMARK(BM_ConfusionKernel)->RangeMultiplier(4)->Range(64, 4096);

void BM_ConfusionBranchy(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  const auto gt = random_mask(side, 1, 0.3);
  const auto pred = random_mask(side, 2, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(branchy(gt, pred));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(side * side));
}
BENCHMARK(BM_ConfusionBranchy)->RangeMultiplier(4)->Range(64, 4096);

}  // namespace
