#include <benchmark/benchmark.h>

#include "pedfuse/geometry.hpp"

namespace {

pedfuse::CameraCalibration bench_camera() {
  pedfuse::CameraCalibration calib;
  calib.camera_id = 1;
  calib.K << 1000, 0, 960, 0, 1000, 540, 0, 0, 1;
  // Mild tilt around x so the homography is not axis-aligned.
  const double c = std::cos(0.9), s = std::sin(0.9);
  calib.R << 1, 0, 0, 0, c, -s, 0, s, c;
  calib.t = Eigen::Vector3d(0.5, -2.0, 14.0);
  return calib;
}

void BM_ComputeHomography(benchmark::State& state) {
  const auto calib = bench_camera();
  for (auto _ : state) {
    benchmark::DoNotOptimize(pedfuse::compute_homography(calib));
  }
}
BENCHMARK(BM_ComputeHomography);

void BM_ProjectToGround(benchmark::State& state) {
  const auto homography = pedfuse::compute_homography(bench_camera());
  const pedfuse::ImagePoint p{812.25, 690.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(pedfuse::project_to_ground(homography, p));
  }
}
BENCHMARK(BM_ProjectToGround);

}  // namespace

BENCHMARK_MAIN();
