#include <benchmark/benchmark.h>

#include <random>

#include "pedfuse/fusion.hpp"

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<pedfuse::WorldGroundPoint> make_points(int n, int cameras, int descriptor_dim) {
  std::mt19937_64 rng(99);
  std::vector<pedfuse::WorldGroundPoint> points;
  for (int i = 0; i < n; ++i) {
    pedfuse::WorldGroundPoint p;
    p.X = uniform(rng, 0.0, 12.0);
    p.Y = uniform(rng, 0.0, 36.0);
    p.camera_id = 1 + i % cameras;
    p.detection_id = i;
    if (descriptor_dim > 0) {
      p.descriptor.resize(descriptor_dim);
      for (double& v : p.descriptor) {
        v = uniform(rng, -1.0, 1.0);
      }
    }
    points.push_back(std::move(p));
  }
  return points;
}

void BM_BuildFusionGraph(benchmark::State& state) {
  const auto points = make_points(static_cast<int>(state.range(0)), 7, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pedfuse::build_fusion_graph(points, 0.7));
  }
}
BENCHMARK(BM_BuildFusionGraph)->Arg(50)->Arg(175)->Arg(400);

void BM_CliqueCover(benchmark::State& state) {
  const auto points = make_points(static_cast<int>(state.range(0)), 7, 0);
  const auto graph = pedfuse::build_fusion_graph(points, 0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pedfuse::clique_cover(graph));
  }
}
BENCHMARK(BM_CliqueCover)->Arg(50)->Arg(175)->Arg(400);

void BM_CliqueCoverWithDescriptors(benchmark::State& state) {
  const auto points = make_points(static_cast<int>(state.range(0)), 7, 256);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pedfuse::clique_cover(points, 0.7, 1.0));
  }
}
BENCHMARK(BM_CliqueCoverWithDescriptors)->Arg(175);

// One crowded frame: range(0) pedestrians, each seen by all 7 cameras with
// ~10 cm projection scatter.
void BM_CliqueCoverCrowdedFrame(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::vector<pedfuse::WorldGroundPoint> points;
  const int pedestrians = static_cast<int>(state.range(0));
  for (int person = 0; person < pedestrians; ++person) {
    const double x = uniform(rng, 0.0, 12.0);
    const double y = uniform(rng, 0.0, 36.0);
    for (int camera = 1; camera <= 7; ++camera) {
      pedfuse::WorldGroundPoint p;
      p.X = x + uniform(rng, -0.1, 0.1);
      p.Y = y + uniform(rng, -0.1, 0.1);
      p.camera_id = camera;
      p.detection_id = static_cast<int>(points.size());
      points.push_back(std::move(p));
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(pedfuse::clique_cover(points, 0.7));
  }
}
BENCHMARK(BM_CliqueCoverCrowdedFrame)->Arg(25)->Arg(50);

}  // namespace
