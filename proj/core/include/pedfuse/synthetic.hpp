#pragma once

#include <cstdint>
#include <vector>

#include "pedfuse/geometry.hpp"
#include "pedfuse/metrics.hpp"
#include "pedfuse/pipeline.hpp"

namespace pedfuse {

/// Noise model for synthetic detections. Keypoint jitter is uniform in
/// [-keypoint_jitter_px, +keypoint_jitter_px] per coordinate (bounded, so
/// world-plane error bounds can be derived from it); miss_rate drops a
/// camera view of a pedestrian with the given probability; descriptor_noise
/// perturbs each descriptor component before re-normalization.
struct SyntheticNoise {
  double keypoint_jitter_px = 0.0;
  double miss_rate = 0.0;
  double descriptor_noise = 0.0;
};

struct SyntheticSceneParams {
  std::uint64_t seed = 1;
  int n_cameras = 7;
  int n_pedestrians = 20;
  int n_frames = 10;
  SyntheticNoise noise;
  /// Dimension of per-person appearance descriptors; 0 disables them.
  int descriptor_dim = 0;
  AreaOfInterest aoi{0.0, 0.0, 12.0, 36.0};
  /// Minimum pairwise spacing between pedestrians, meters. Positions are
  /// rejection-sampled until all pairs are strictly farther apart than this.
  double min_spacing = 1.4;
  int image_width = 1920;
  int image_height = 1080;
};

/// A generated multi-camera scene: calibrations for a virtual rig, per-frame
/// detection bundles, and the true positions as ground truth.
struct SyntheticScene {
  std::vector<CameraCalibration> calibrations;
  std::vector<FrameBundle> frames;
  std::vector<GroundTruthFrame> ground_truth;
};

/// Generates a deterministic synthetic scene. Cameras ring the AOI looking
/// inward; every pedestrian is visible to at least two cameras before noise;
/// ankle keypoints and the bbox bottom edge are constructed so the pose-based
/// ground-point estimate reprojects onto the true position at zero noise.
/// Throws PlacementFailure when the spacing constraint cannot be satisfied.
SyntheticScene generate_synthetic_scene(const SyntheticSceneParams& params);

/// Writes calibration.json, detections.json and ground_truth.json under
/// `directory` (created if missing).
void write_synthetic_scene(const SyntheticScene& scene, const std::string& directory);

}  // namespace pedfuse
