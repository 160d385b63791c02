#include "pedfuse/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pedfuse/coloring.hpp"

namespace pedfuse {

double descriptor_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw LengthMismatch("descriptor dimensions differ: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
  double dot = 0.0;
  double norm_a = 0.0;
  double norm_b = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    norm_a += a[i] * a[i];
    norm_b += b[i] * b[i];
  }
  norm_a = std::sqrt(norm_a);
  norm_b = std::sqrt(norm_b);
  if (norm_a < 1e-12 || norm_b < 1e-12) {
    throw ZeroVector("cosine distance undefined for zero-norm descriptor");
  }
  const double distance = 1.0 - dot / (norm_a * norm_b);
  return std::clamp(distance, 0.0, 2.0);
}

FusionGraph build_fusion_graph(std::vector<WorldGroundPoint> points, double distance_threshold,
                               std::optional<double> descriptor_threshold) {
  if (!(distance_threshold > 0.0)) {
    throw std::invalid_argument("distance threshold must be positive");
  }
  if (descriptor_threshold) {
    for (const auto& p : points) {
      if (!p.has_descriptor()) {
        throw MissingDescriptor("descriptor gating enabled but detection " +
                                std::to_string(p.detection_id) + " on camera " +
                                std::to_string(p.camera_id) + " has no descriptor");
      }
    }
  }

  const int n = static_cast<int>(points.size());
  FusionGraph graph{std::move(points), DenseGraph(n)};
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const auto& a = graph.points[u];
      const auto& b = graph.points[v];
      if (a.camera_id == b.camera_id) {
        continue;
      }
      const double dist = std::hypot(a.X - b.X, a.Y - b.Y);
      if (!(dist < distance_threshold)) {
        continue;
      }
      if (descriptor_threshold &&
          !(descriptor_distance(a.descriptor, b.descriptor) < *descriptor_threshold)) {
        continue;
      }
      graph.adjacency.add_edge(u, v);
    }
  }
  return graph;
}

CliqueCover clique_cover(const FusionGraph& graph) {
  const DenseGraph complement = graph.adjacency.complement();
  const std::vector<int> ordering = smallest_last_ordering(complement);
  const std::vector<int> colors = greedy_color_with_interchange(complement, ordering);

  CliqueCover cover;
  cover.cliques.resize(color_count(colors));
  for (int v = 0; v < static_cast<int>(colors.size()); ++v) {
    cover.cliques[colors[v]].push_back(v);
  }

  // Color classes of the complement must be cliques of the original graph.
  for (const auto& clique : cover.cliques) {
    for (std::size_t i = 0; i < clique.size(); ++i) {
      for (std::size_t j = i + 1; j < clique.size(); ++j) {
        if (!graph.adjacency.has_edge(clique[i], clique[j])) {
          throw std::logic_error("clique cover produced a non-clique color class");
        }
      }
    }
  }
  return cover;
}

CliqueCover clique_cover(std::vector<WorldGroundPoint> points, double distance_threshold,
                         std::optional<double> descriptor_threshold) {
  return clique_cover(
      build_fusion_graph(std::move(points), distance_threshold, descriptor_threshold));
}

std::vector<FusedDetection> fuse(const CliqueCover& cover,
                                 const std::vector<WorldGroundPoint>& points) {
  std::vector<FusedDetection> detections;
  for (const auto& clique : cover.cliques) {
    if (clique.size() < 2) {
      continue;  // singleton cliques are discarded
    }
    FusedDetection det;
    det.member_count = static_cast<int>(clique.size());
    for (int v : clique) {
      det.X += points[v].X;
      det.Y += points[v].Y;
      det.contributing.emplace_back(points[v].camera_id, points[v].detection_id);
    }
    det.X /= static_cast<double>(clique.size());
    det.Y /= static_cast<double>(clique.size());
    std::sort(det.contributing.begin(), det.contributing.end());
    detections.push_back(std::move(det));
  }
  return detections;
}

}  // namespace pedfuse
