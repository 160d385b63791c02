#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "pedfuse/errors.hpp"

namespace pedfuse {

/// One ground-truth pedestrian position on the world ground plane.
struct Annotation {
  int person_id = -1;
  double X = 0.0;
  double Y = 0.0;
};

struct GroundTruthFrame {
  int frame_id = -1;
  std::vector<Annotation> annotations;
};

/// Result of gated Hungarian matching for one frame. Matched pairs always
/// satisfy distance < gate; indices appear at most once.
struct MatchResult {
  struct Pair {
    int detection = -1;
    int annotation = -1;
    double distance = 0.0;
  };
  std::vector<Pair> pairs;
  std::vector<int> unmatched_detections;
  std::vector<int> unmatched_annotations;
};

/// Aggregate error counts over a dataset.
struct DetectionCounts {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;
  std::int64_t gt = 0;
};

/// MODA/MODP bundle, micro-averaged over frames. MODP is the mean of
/// (1 - distance / gate) over matched pairs, 0 when nothing matched or when
/// the report was built from counts alone.
struct MetricsReport {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;
  std::int64_t gt = 0;
  double moda = 0.0;
  double modp = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f_score = 0.0;
};

inline constexpr double kDefaultMatchGate = 0.5;

/// Matches detections to annotations, maximizing the number of pairs closer
/// than `gate` and, among maximum-cardinality matchings, minimizing the total
/// matched distance.
MatchResult hungarian_match(const std::vector<Eigen::Vector2d>& detections,
                            const std::vector<Eigen::Vector2d>& annotations,
                            double gate = kDefaultMatchGate);

/// Aggregates per-frame match results into a MetricsReport. `gt_counts` gives
/// the number of ground-truth annotations per frame (same length as
/// `matches`). Throws ZeroGroundTruth when the counts sum to zero.
MetricsReport compute_metrics(std::span<const MatchResult> matches,
                              std::span<const int> gt_counts, double gate = kDefaultMatchGate);

/// Computes the formula bundle from raw counts (MODP unavailable, set to 0).
MetricsReport compute_metrics(const DetectionCounts& counts);

}  // namespace pedfuse
