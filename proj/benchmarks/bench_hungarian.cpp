#include <benchmark/benchmark.h>

#include <random>

#include "pedfuse/metrics.hpp"

namespace {

void BM_HungarianMatch(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const int n = static_cast<int>(state.range(0));
  std::vector<Eigen::Vector2d> detections, annotations;
  auto draw = [&rng](double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  for (int i = 0; i < n; ++i) {
    detections.emplace_back(draw(0, 12), draw(0, 36));
    annotations.emplace_back(draw(0, 12), draw(0, 36));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(pedfuse::hungarian_match(detections, annotations, 0.5));
  }
}
BENCHMARK(BM_HungarianMatch)->Arg(25)->Arg(60)->Arg(120);

}  // namespace
