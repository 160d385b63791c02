#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pedfuse/geometry.hpp"
#include "pedfuse/graph.hpp"

namespace pedfuse {

/// Fusibility graph over world ground points. An edge means the two points
/// may belong to the same pedestrian: different cameras, ground distance
/// below the distance threshold, and (when enabled) descriptor distance
/// below the descriptor threshold. All comparisons are strict.
struct FusionGraph {
  std::vector<WorldGroundPoint> points;
  DenseGraph adjacency;
};

/// Disjoint partition of the graph vertices into cliques.
struct CliqueCover {
  std::vector<std::vector<int>> cliques;
};

/// A fused 3D pedestrian detection on the ground plane. `contributing` lists
/// (camera_id, detection_id) pairs; member_count is 0 for detections produced
/// by the average-heatmap baseline, which has no clique membership.
struct FusedDetection {
  double X = 0.0;
  double Y = 0.0;
  int member_count = 0;
  std::vector<std::pair<int, int>> contributing;
};

/// Cosine distance 1 - a.b / (|a||b|), clamped to [0, 2].
/// Throws LengthMismatch on unequal dimensions and ZeroVector when either
/// norm falls below 1e-12.
double descriptor_distance(std::span<const double> a, std::span<const double> b);

/// Builds the fusibility graph. Throws MissingDescriptor when
/// descriptor_threshold is set but some point carries no descriptor.
FusionGraph build_fusion_graph(std::vector<WorldGroundPoint> points, double distance_threshold,
                               std::optional<double> descriptor_threshold = std::nullopt);

/// Partitions the fusion graph into cliques by greedy coloring of the
/// complement graph under a smallest-last ordering with color interchange.
/// Every returned set is re-verified to be a clique of the input graph.
CliqueCover clique_cover(const FusionGraph& graph);

/// Convenience overload that builds the graph first.
CliqueCover clique_cover(std::vector<WorldGroundPoint> points, double distance_threshold,
                         std::optional<double> descriptor_threshold = std::nullopt);

/// Averages each clique with at least two members into one detection;
/// singleton cliques are discarded.
std::vector<FusedDetection> fuse(const CliqueCover& cover,
                                 const std::vector<WorldGroundPoint>& points);

}  // namespace pedfuse
