#pragma once

#include <vector>

#include "pedfuse/fusion.hpp"
#include "pedfuse/geometry.hpp"

namespace pedfuse {

/// Parameters of the average-heatmap baseline fuser. `sigma` is expressed in
/// grid cells (sigma * resolution meters); the Gaussian kernel is truncated
/// at `kernel_radius` meters. Peaks are kept if they reach `min_value` and
/// survive non-maximum suppression at `min_distance` meters.
struct AverageHeatmapParams {
  double resolution = 0.025;
  double kernel_radius = 0.8;
  double sigma = 10.1;
  double min_distance = 0.5;
  double min_value = 0.3;
};

/// Baseline fuser: rasterizes one ground-plane heatmap per camera
/// (max-combining kernels within a camera), averages the maps over
/// `camera_count`, and reads detections off the local maxima. Returned
/// detections carry no clique membership (member_count = 0).
/// Throws EmptyGrid when the AOI/resolution combination yields no cells.
std::vector<FusedDetection> average_heatmap_fuse(const std::vector<WorldGroundPoint>& points,
                                                 const AreaOfInterest& aoi,
                                                 const AverageHeatmapParams& params,
                                                 int camera_count);

}  // namespace pedfuse
