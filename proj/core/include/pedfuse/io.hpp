#pragma once

#include <string>
#include <vector>

#include "pedfuse/geometry.hpp"
#include "pedfuse/metrics.hpp"
#include "pedfuse/pipeline.hpp"

namespace pedfuse {

/// Loads and validates a calibration file (JSON array of per-camera records
/// with row-major K and R and a metric t). Records declaring nonzero lens
/// distortion are rejected: the pipeline expects undistorted frames.
/// Throws SchemaError or CalibrationError.
std::vector<CameraCalibration> load_calibrations(const std::string& path);

/// Loads a detection file (frames -> cameras -> detections). Every detection
/// is validated. Throws SchemaError.
std::vector<FrameBundle> load_detections(const std::string& path);

/// Loads a ground-truth file (frames -> annotations). Throws SchemaError.
std::vector<GroundTruthFrame> load_ground_truth(const std::string& path);

/// Attaches ground-truth annotations to matching frame bundles by frame_id.
/// Throws SchemaError when a ground-truth frame has no detection frame.
void attach_ground_truth(std::vector<FrameBundle>& frames,
                         const std::vector<GroundTruthFrame>& ground_truth);

/// Fused detections round trip, used by the fuse/eval/plot subcommands.
void save_fused_frames(const std::vector<FusedFrame>& frames, const AreaOfInterest& aoi,
                       const std::string& path);
std::vector<FusedFrame> load_fused_frames(const std::string& path);

void save_metrics(const MetricsReport& report, const std::string& path);

std::string metrics_to_string(const MetricsReport& report);

void save_calibrations(const std::vector<CameraCalibration>& calibrations,
                       const std::string& path);
void save_detections(const std::vector<FrameBundle>& frames, const std::string& path);
void save_ground_truth(const std::vector<GroundTruthFrame>& ground_truth,
                       const std::string& path);

}  // namespace pedfuse
