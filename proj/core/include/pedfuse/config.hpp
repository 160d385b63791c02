#pragma once

#include <map>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "pedfuse/geometry.hpp"
#include "pedfuse/heatmap.hpp"

namespace pedfuse {

enum class FusionMethod { clique_cover, average_heatmap };
enum class GroundPointMethod { pose_bbox, bbox_only };

/// Pipeline configuration. Defaults are the empirical thresholds the fusion
/// stage was tuned with: keypoint score 0.4, ground distance 0.7 m,
/// descriptor distance 1.0 when re-ID gating is enabled, match gate 0.5 m.
struct PipelineConfig {
  double score_threshold = 0.4;              // t_s
  double distance_threshold = 0.7;           // t_g, meters
  std::optional<double> descriptor_threshold;  // t_d, disabled by default
  double match_gate = 0.5;                   // meters
  AreaOfInterest aoi{0.0, 0.0, 12.0, 36.0};
  FusionMethod fusion_method = FusionMethod::clique_cover;
  GroundPointMethod groundpoint_method = GroundPointMethod::pose_bbox;
  AverageHeatmapParams heatmap;
  int workers = 1;

  /// Optional per-camera visibility polygons in world ground-plane
  /// coordinates; projected points outside a camera's polygon are dropped.
  /// Empty map disables the check.
  std::map<int, std::vector<Eigen::Vector2d>> visibility;

  void validate() const;
};

inline constexpr double kDefaultDescriptorThreshold = 1.0;

}  // namespace pedfuse
