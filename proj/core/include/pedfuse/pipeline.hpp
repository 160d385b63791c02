#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pedfuse/config.hpp"
#include "pedfuse/fusion.hpp"
#include "pedfuse/ground_point.hpp"
#include "pedfuse/metrics.hpp"

namespace pedfuse {

/// All detections of one camera in one frame.
struct CameraDetections {
  int camera_id = -1;
  std::vector<PoseDetection> detections;
};

/// Synchronized multi-camera detections for one frame, with optional
/// ground-truth annotations attached by the caller.
struct FrameBundle {
  int frame_id = -1;
  std::vector<CameraDetections> cameras;
  std::optional<std::vector<Annotation>> ground_truth;
};

/// Fused output for one frame.
struct FusedFrame {
  int frame_id = -1;
  std::vector<FusedDetection> detections;
};

struct PipelineResult {
  std::vector<FusedFrame> frames;
  std::optional<MetricsReport> metrics;
  /// Image points that mapped to the horizon line and were skipped.
  int points_at_infinity = 0;
  /// Human-readable notes accumulated during the run (threshold
  /// interpretations, per-frame anomalies).
  std::vector<std::string> notes;
};

/// Runs ground-point estimation, homography projection, AOI filtering and
/// fusion for every frame; computes metrics when every frame carries ground
/// truth. Frames are processed by `config.workers` threads and re-ordered by
/// frame_id before returning, so the result is independent of the worker
/// count. Throws on calibration/schema errors; per-point projection errors
/// are counted, not thrown.
PipelineResult run_pipeline(const PipelineConfig& config,
                            const std::vector<CameraCalibration>& calibrations,
                            const std::vector<FrameBundle>& frames);

}  // namespace pedfuse
