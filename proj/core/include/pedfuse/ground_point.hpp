#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pedfuse/geometry.hpp"

namespace pedfuse {

/// MSCOCO 17-keypoint convention: ankles are the last two landmarks.
inline constexpr int kNumKeypoints = 17;
inline constexpr int kLeftAnkle = 15;
inline constexpr int kRightAnkle = 16;

struct Keypoint {
  double x = 0.0;
  double y = 0.0;
  double score = 0.0;
};

struct BoundingBox {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;
};

/// One monocular pedestrian detection: full-body box, MSCOCO pose and an
/// optional re-ID descriptor. Detections are ingested from files; no
/// detector runs inside this library.
struct PoseDetection {
  int detection_id = -1;
  int camera_id = -1;
  int frame_id = -1;
  BoundingBox bbox;
  std::array<Keypoint, kNumKeypoints> keypoints{};
  std::vector<double> descriptor;

  /// Throws SchemaError unless the box is non-degenerate and every keypoint
  /// score lies in [0, 1].
  void validate() const;
};

/// Estimated standing location of a detection, in image pixels.
struct GroundPointEstimate {
  ImagePoint point;
  int detection_id = -1;
  int camera_id = -1;
  int frame_id = -1;
};

/// Ankle/offset heuristic: the ground point is the ankle midpoint pushed down
/// by the gap between the lower ankle and the bbox bottom edge, which closes
/// to (mean ankle x, bbox.y_max - |la_y - ra_y| / 2). Returns nothing when
/// either ankle score fails the strict gate (score > score_threshold).
std::optional<GroundPointEstimate> estimate_ground_point(const PoseDetection& det,
                                                         double score_threshold);

/// Baseline estimator: center of the bounding-box bottom edge.
GroundPointEstimate estimate_ground_point_bbox(const PoseDetection& det);

}  // namespace pedfuse
