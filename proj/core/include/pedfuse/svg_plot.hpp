#pragma once

#include <string>
#include <vector>

#include "pedfuse/fusion.hpp"
#include "pedfuse/geometry.hpp"
#include "pedfuse/metrics.hpp"

namespace pedfuse {

/// Writes a ground-plane scatter of fused detections (circles) and
/// ground-truth annotations (crosses) over the AOI rectangle as an SVG file.
void emit_plot(const std::vector<FusedDetection>& detections,
               const std::vector<Annotation>& ground_truth, const AreaOfInterest& aoi,
               const std::string& path);

}  // namespace pedfuse
