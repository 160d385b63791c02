#include "pedfuse/ground_point.hpp"

#include <cmath>
#include <string>

namespace pedfuse {

void PoseDetection::validate() const {
  if (!(bbox.x_min < bbox.x_max) || !(bbox.y_min < bbox.y_max)) {
    throw SchemaError("detection " + std::to_string(detection_id) + " on camera " +
                      std::to_string(camera_id) + ": degenerate bounding box");
  }
  for (const auto& kp : keypoints) {
    if (!(kp.score >= 0.0 && kp.score <= 1.0)) {
      throw SchemaError("detection " + std::to_string(detection_id) + " on camera " +
                        std::to_string(camera_id) + ": keypoint score outside [0, 1]");
    }
    if (!std::isfinite(kp.x) || !std::isfinite(kp.y)) {
      throw SchemaError("detection " + std::to_string(detection_id) + " on camera " +
                        std::to_string(camera_id) + ": non-finite keypoint");
    }
  }
}

std::optional<GroundPointEstimate> estimate_ground_point(const PoseDetection& det,
                                                         double score_threshold) {
  const Keypoint& la = det.keypoints[kLeftAnkle];
  const Keypoint& ra = det.keypoints[kRightAnkle];
  if (!(la.score > score_threshold) || !(ra.score > score_threshold)) {
    return std::nullopt;
  }
  GroundPointEstimate est;
  est.point.x = (la.x + ra.x) / 2.0;
  // Closed form of midpoint-y plus the ankle-to-box-bottom offset.
  est.point.y = det.bbox.y_max - std::abs(la.y - ra.y) / 2.0;
  est.detection_id = det.detection_id;
  est.camera_id = det.camera_id;
  est.frame_id = det.frame_id;
  return est;
}

GroundPointEstimate estimate_ground_point_bbox(const PoseDetection& det) {
  GroundPointEstimate est;
  est.point.x = (det.bbox.x_min + det.bbox.x_max) / 2.0;
  est.point.y = det.bbox.y_max;
  est.detection_id = det.detection_id;
  est.camera_id = det.camera_id;
  est.frame_id = det.frame_id;
  return est;
}

}  // namespace pedfuse
