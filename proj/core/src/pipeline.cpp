#include "pedfuse/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>

namespace pedfuse {

void PipelineConfig::validate() const {
  if (!(score_threshold >= 0.0 && score_threshold <= 1.0)) {
    throw std::invalid_argument("score threshold must lie in [0, 1]");
  }
  if (!(distance_threshold > 0.0)) {
    throw std::invalid_argument("distance threshold must be positive");
  }
  if (descriptor_threshold && !(*descriptor_threshold > 0.0)) {
    throw std::invalid_argument("descriptor threshold must be positive");
  }
  if (!(match_gate > 0.0)) {
    throw std::invalid_argument("match gate must be positive");
  }
  if (workers < 1) {
    throw std::invalid_argument("worker count must be at least 1");
  }
  aoi.validate();
}

namespace {

struct FrameOutcome {
  FusedFrame fused;
  std::optional<MatchResult> match;
  int gt_count = 0;
  int points_at_infinity = 0;
};

FrameOutcome process_frame(const PipelineConfig& config,
                           const std::map<int, GroundHomography>& homographies,
                           int camera_count, const FrameBundle& frame) {
  FrameOutcome outcome;
  outcome.fused.frame_id = frame.frame_id;

  std::vector<WorldGroundPoint> points;
  for (const auto& camera : frame.cameras) {
    const auto it = homographies.find(camera.camera_id);
    if (it == homographies.end()) {
      throw CalibrationError("frame " + std::to_string(frame.frame_id) +
                             " references camera " + std::to_string(camera.camera_id) +
                             " with no calibration");
    }
    const GroundHomography& homography = it->second;
    const auto visibility_it = config.visibility.find(camera.camera_id);

    for (const auto& det : camera.detections) {
      std::optional<GroundPointEstimate> estimate;
      if (config.groundpoint_method == GroundPointMethod::pose_bbox) {
        estimate = estimate_ground_point(det, config.score_threshold);
      } else {
        estimate = estimate_ground_point_bbox(det);
      }
      if (!estimate) {
        continue;
      }
      Eigen::Vector2d world;
      try {
        world = project_to_ground(homography, estimate->point);
      } catch (const PointAtInfinity&) {
        ++outcome.points_at_infinity;
        continue;
      }
      if (visibility_it != config.visibility.end() &&
          !point_in_polygon(world.x(), world.y(), visibility_it->second)) {
        continue;
      }
      WorldGroundPoint point;
      point.X = world.x();
      point.Y = world.y();
      point.camera_id = camera.camera_id;
      point.detection_id = det.detection_id;
      point.descriptor = det.descriptor;
      points.push_back(std::move(point));
    }
  }

  points = filter_aoi(points, config.aoi);

  if (config.fusion_method == FusionMethod::clique_cover) {
    const CliqueCover cover = clique_cover(points, config.distance_threshold,
                                           config.descriptor_threshold);
    outcome.fused.detections = fuse(cover, points);
  } else {
    outcome.fused.detections =
        average_heatmap_fuse(points, config.aoi, config.heatmap, camera_count);
  }

  if (frame.ground_truth) {
    std::vector<Eigen::Vector2d> det_points;
    det_points.reserve(outcome.fused.detections.size());
    for (const auto& det : outcome.fused.detections) {
      det_points.emplace_back(det.X, det.Y);
    }
    std::vector<Eigen::Vector2d> ann_points;
    ann_points.reserve(frame.ground_truth->size());
    for (const auto& ann : *frame.ground_truth) {
      ann_points.emplace_back(ann.X, ann.Y);
    }
    outcome.match = hungarian_match(det_points, ann_points, config.match_gate);
    outcome.gt_count = static_cast<int>(ann_points.size());
  }
  return outcome;
}

}  // namespace

PipelineResult run_pipeline(const PipelineConfig& config,
                            const std::vector<CameraCalibration>& calibrations,
                            const std::vector<FrameBundle>& frames) {
  config.validate();

  std::map<int, GroundHomography> homographies;
  for (const auto& calib : calibrations) {
    calib.validate();
    if (!homographies.emplace(calib.camera_id, compute_homography(calib)).second) {
      throw CalibrationError("duplicate calibration for camera " +
                             std::to_string(calib.camera_id));
    }
  }

  std::vector<FrameOutcome> outcomes(frames.size());
  std::exception_ptr first_error;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};

  const int worker_count = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(config.workers),
                            std::max<std::size_t>(frames.size(), std::size_t{1})));
  auto worker = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      const std::size_t f = next.fetch_add(1);
      if (f >= frames.size()) {
        break;
      }
      try {
        outcomes[f] =
            process_frame(config, homographies, static_cast<int>(calibrations.size()), frames[f]);
      } catch (...) {
        bool expected = false;
        if (failed.compare_exchange_strong(expected, true)) {
          first_error = std::current_exception();
        }
        break;
      }
    }
  };

  if (worker_count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(worker_count));
    for (int i = 0; i < worker_count; ++i) {
      pool.emplace_back(worker);
    }
    for (auto& thread : pool) {
      thread.join();
    }
  }
  if (first_error) {
    std::rethrow_exception(first_error);
  }

  PipelineResult result;
  result.frames.reserve(frames.size());
  std::vector<MatchResult> matches;
  std::vector<int> gt_counts;
  bool all_frames_have_gt = !frames.empty();
  for (auto& outcome : outcomes) {
    result.points_at_infinity += outcome.points_at_infinity;
    if (outcome.match) {
      matches.push_back(std::move(*outcome.match));
      gt_counts.push_back(outcome.gt_count);
    } else {
      all_frames_have_gt = false;
    }
    result.frames.push_back(std::move(outcome.fused));
  }
  std::stable_sort(result.frames.begin(), result.frames.end(),
                   [](const FusedFrame& a, const FusedFrame& b) { return a.frame_id < b.frame_id; });

  if (result.points_at_infinity > 0) {
    result.notes.push_back("skipped " + std::to_string(result.points_at_infinity) +
                           " ground point(s) that mapped to the horizon line");
  }
  if (all_frames_have_gt) {
    result.metrics = compute_metrics(matches, gt_counts, config.match_gate);
  }
  return result;
}

}  // namespace pedfuse
