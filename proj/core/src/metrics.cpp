#include "pedfuse/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pedfuse/hungarian.hpp"

namespace pedfuse {

MatchResult hungarian_match(const std::vector<Eigen::Vector2d>& detections,
                            const std::vector<Eigen::Vector2d>& annotations, double gate) {
  if (!(gate > 0.0)) {
    throw std::invalid_argument("matching gate must be positive");
  }
  const int nd = static_cast<int>(detections.size());
  const int na = static_cast<int>(annotations.size());
  MatchResult result;
  if (nd == 0 || na == 0) {
    for (int i = 0; i < nd; ++i) result.unmatched_detections.push_back(i);
    for (int j = 0; j < na; ++j) result.unmatched_annotations.push_back(j);
    return result;
  }

  // Square matrix padded with a prohibitive cost. Any cell that cannot become
  // a kept pair (gated or dummy) costs `big`, so minimizing the total first
  // maximizes the number of kept pairs, then their summed distance.
  const int n = std::max(nd, na);
  const double big = (static_cast<double>(std::min(nd, na)) + 1.0) * gate * 2.0;
  std::vector<double> cost(static_cast<std::size_t>(n) * n, big);
  for (int i = 0; i < nd; ++i) {
    for (int j = 0; j < na; ++j) {
      const double d = (detections[i] - annotations[j]).norm();
      if (d < gate) {
        cost[static_cast<std::size_t>(i) * n + j] = d;
      }
    }
  }

  const std::vector<int> assignment = solve_assignment(cost, n);
  std::vector<char> annotation_matched(na, 0);
  for (int i = 0; i < nd; ++i) {
    const int j = assignment[i];
    if (j < na) {
      const double d = (detections[i] - annotations[j]).norm();
      if (d < gate) {
        result.pairs.push_back({i, j, d});
        annotation_matched[j] = 1;
        continue;
      }
    }
    result.unmatched_detections.push_back(i);
  }
  for (int j = 0; j < na; ++j) {
    if (!annotation_matched[j]) {
      result.unmatched_annotations.push_back(j);
    }
  }
  return result;
}

namespace {

MetricsReport finalize(std::int64_t tp, std::int64_t fp, std::int64_t fn, std::int64_t gt,
                       double modp_sum) {
  if (gt == 0) {
    throw ZeroGroundTruth("metrics undefined over zero ground-truth annotations");
  }
  if (tp + fn != gt) {
    throw std::invalid_argument("inconsistent counts: tp + fn must equal gt");
  }
  MetricsReport report;
  report.tp = tp;
  report.fp = fp;
  report.fn = fn;
  report.gt = gt;
  report.moda = 1.0 - static_cast<double>(fp + fn) / static_cast<double>(gt);
  report.modp = tp > 0 ? modp_sum / static_cast<double>(tp) : 0.0;
  report.precision = (tp + fp) > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
  report.recall = static_cast<double>(tp) / static_cast<double>(gt);
  const double pr = report.precision + report.recall;
  report.f_score = pr > 0.0 ? 2.0 * report.precision * report.recall / pr : 0.0;
  return report;
}

}  // namespace

MetricsReport compute_metrics(std::span<const MatchResult> matches,
                              std::span<const int> gt_counts, double gate) {
  if (matches.empty()) {
    throw std::invalid_argument("compute_metrics requires at least one frame");
  }
  if (matches.size() != gt_counts.size()) {
    throw std::invalid_argument("matches and gt_counts must have the same length");
  }
  std::int64_t tp = 0, fp = 0, fn = 0, gt = 0;
  double modp_sum = 0.0;
  for (std::size_t f = 0; f < matches.size(); ++f) {
    const MatchResult& m = matches[f];
    const auto frame_annotations =
        static_cast<std::int64_t>(m.pairs.size() + m.unmatched_annotations.size());
    if (frame_annotations != gt_counts[f]) {
      throw std::invalid_argument("frame ground-truth count disagrees with its match result");
    }
    tp += static_cast<std::int64_t>(m.pairs.size());
    fp += static_cast<std::int64_t>(m.unmatched_detections.size());
    fn += static_cast<std::int64_t>(m.unmatched_annotations.size());
    gt += gt_counts[f];
    for (const auto& pair : m.pairs) {
      modp_sum += 1.0 - pair.distance / gate;
    }
  }
  return finalize(tp, fp, fn, gt, modp_sum);
}

MetricsReport compute_metrics(const DetectionCounts& counts) {
  return finalize(counts.tp, counts.fp, counts.fn, counts.gt, 0.0);
}

}  // namespace pedfuse
