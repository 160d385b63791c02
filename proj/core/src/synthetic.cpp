#include "pedfuse/synthetic.hpp"

#include <cmath>
#include <filesystem>
#include <random>
#include <stdexcept>

#include "pedfuse/io.hpp"

namespace pedfuse {

namespace {

// Explicit draw helpers keep the byte stream independent of the standard
// library's distribution implementations.
double uniform(std::mt19937_64& rng, double lo, double hi) {
  const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

double gaussian(std::mt19937_64& rng) {
  const double u1 = std::max(uniform(rng, 0.0, 1.0), 1e-300);
  const double u2 = uniform(rng, 0.0, 1.0);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

struct Pedestrian {
  double X = 0.0;
  double Y = 0.0;
  double height = 1.7;
  std::vector<double> descriptor;
};

CameraCalibration make_camera(int camera_id, double angle, double radius, double height,
                              double focal, const Eigen::Vector2d& center,
                              const Eigen::Vector2d& target_xy, int image_width,
                              int image_height, std::mt19937_64& rng) {
  CameraCalibration calib;
  calib.camera_id = camera_id;

  calib.K = Eigen::Matrix3d::Identity();
  calib.K(0, 0) = focal;
  calib.K(1, 1) = focal;
  calib.K(0, 2) = image_width / 2.0 + uniform(rng, -30.0, 30.0);
  calib.K(1, 2) = image_height / 2.0 + uniform(rng, -20.0, 20.0);

  const Eigen::Vector3d position(center.x() + radius * std::cos(angle),
                                 center.y() + radius * std::sin(angle), height);
  const Eigen::Vector3d target(target_xy.x(), target_xy.y(), 0.0);

  const Eigen::Vector3d forward = (target - position).normalized();
  Eigen::Vector3d right(forward.y(), -forward.x(), 0.0);
  right.normalize();
  const Eigen::Vector3d down = forward.cross(right);

  calib.R.row(0) = right;
  calib.R.row(1) = down;
  calib.R.row(2) = forward;
  calib.t = -calib.R * position;
  return calib;
}

bool camera_sees(const CameraCalibration& calib, double X, double Y, double height,
                 int image_width, int image_height, double margin) {
  const auto foot = project_world_point(calib, {X, Y, 0.0});
  const auto head = project_world_point(calib, {X, Y, height});
  if (!foot || !head) {
    return false;
  }
  for (const ImagePoint& p : {*foot, *head}) {
    if (p.x < margin || p.x > image_width - margin || p.y < margin ||
        p.y > image_height - margin) {
      return false;
    }
  }
  return true;
}

int visible_camera_count(const std::vector<CameraCalibration>& cameras, double X, double Y,
                         double height, int image_width, int image_height) {
  int count = 0;
  for (const auto& calib : cameras) {
    if (camera_sees(calib, X, Y, height, image_width, image_height, 60.0)) {
      ++count;
    }
  }
  return count;
}

// COCO landmark layout as (height fraction above ground, lateral offset as a
// fraction of the projected body height). Ankles are rebuilt exactly below.
struct LandmarkSpec {
  double frac;
  double lateral;
};
constexpr LandmarkSpec kLandmarks[kNumKeypoints] = {
    {0.93, 0.00},   // nose
    {0.94, 0.03},   // left eye
    {0.94, -0.03},  // right eye
    {0.93, 0.06},   // left ear
    {0.93, -0.06},  // right ear
    {0.82, 0.11},   // left shoulder
    {0.82, -0.11},  // right shoulder
    {0.62, 0.13},   // left elbow
    {0.62, -0.13},  // right elbow
    {0.44, 0.14},   // left wrist
    {0.44, -0.14},  // right wrist
    {0.51, 0.07},   // left hip
    {0.51, -0.07},  // right hip
    {0.27, 0.06},   // left knee
    {0.27, -0.06},  // right knee
    {0.05, 0.05},   // left ankle
    {0.05, -0.05},  // right ankle
};

PoseDetection synthesize_detection(const CameraCalibration& calib, const Pedestrian& ped,
                                   int detection_id, int frame_id,
                                   const SyntheticNoise& noise, std::mt19937_64& rng) {
  const ImagePoint foot = image_from_ground(calib, ped.X, ped.Y);
  const auto head_opt = project_world_point(calib, {ped.X, ped.Y, ped.height});
  const ImagePoint head = *head_opt;
  const double body_px = foot.y - head.y;

  PoseDetection det;
  det.detection_id = detection_id;
  det.camera_id = calib.camera_id;
  det.frame_id = frame_id;

  for (int k = 0; k < kNumKeypoints; ++k) {
    const LandmarkSpec& spec = kLandmarks[k];
    Keypoint kp;
    kp.x = foot.x + (head.x - foot.x) * spec.frac + spec.lateral * body_px;
    kp.y = foot.y + (head.y - foot.y) * spec.frac;
    kp.score = 0.55 + 0.4 * uniform(rng, 0.0, 1.0);
    det.keypoints[k] = kp;
  }

  // Rebuild the ankles and the box bottom so that the pose-based estimate
  // lands exactly on the projected ground point: with ankle ys split by
  // 2 * asym, y_max - |la_y - ra_y| / 2 == foot.y requires y_max = foot.y + asym.
  const double ankle_height = 0.05 * body_px;
  const double ankle_half_width = 0.05 * body_px;
  const double asym = uniform(rng, 0.0, 3.0);
  det.keypoints[kLeftAnkle].x = foot.x - ankle_half_width;
  det.keypoints[kLeftAnkle].y = foot.y - ankle_height - asym;
  det.keypoints[kRightAnkle].x = foot.x + ankle_half_width;
  det.keypoints[kRightAnkle].y = foot.y - ankle_height + asym;

  double x_min = det.keypoints[0].x, x_max = det.keypoints[0].x;
  for (const auto& kp : det.keypoints) {
    x_min = std::min(x_min, kp.x);
    x_max = std::max(x_max, kp.x);
  }
  const double margin = 0.06 * body_px;
  det.bbox.x_min = x_min - margin;
  det.bbox.x_max = x_max + margin;
  det.bbox.y_min = head.y - 0.04 * body_px;
  det.bbox.y_max = foot.y + asym;

  if (noise.keypoint_jitter_px > 0.0) {
    const double j = noise.keypoint_jitter_px;
    for (auto& kp : det.keypoints) {
      kp.x += uniform(rng, -j, j);
      kp.y += uniform(rng, -j, j);
    }
    det.bbox.x_min += uniform(rng, -j, j);
    det.bbox.x_max += uniform(rng, -j, j);
    det.bbox.y_min += uniform(rng, -j, j);
    det.bbox.y_max += uniform(rng, -j, j);
  }

  if (!ped.descriptor.empty()) {
    det.descriptor = ped.descriptor;
    if (noise.descriptor_noise > 0.0) {
      double norm = 0.0;
      for (double& v : det.descriptor) {
        v += noise.descriptor_noise * gaussian(rng);
        norm += v * v;
      }
      norm = std::sqrt(norm);
      if (norm > 1e-12) {
        for (double& v : det.descriptor) {
          v /= norm;
        }
      }
    }
  }
  return det;
}

}  // namespace

SyntheticScene generate_synthetic_scene(const SyntheticSceneParams& params) {
  if (params.n_cameras < 2) {
    throw std::invalid_argument("synthetic scene needs at least 2 cameras");
  }
  if (params.n_pedestrians < 0 || params.n_frames < 0) {
    throw std::invalid_argument("pedestrian and frame counts must be non-negative");
  }
  params.aoi.validate();

  std::mt19937_64 rng(params.seed);
  SyntheticScene scene;

  const Eigen::Vector2d center((params.aoi.x_min + params.aoi.x_max) / 2.0,
                               (params.aoi.y_min + params.aoi.y_max) / 2.0);
  const double ex = (params.aoi.x_max - params.aoi.x_min) / 2.0;
  const double ey = (params.aoi.y_max - params.aoi.y_min) / 2.0;
  const double half_diag = std::hypot(ex, ey);

  for (int c = 0; c < params.n_cameras; ++c) {
    const double angle =
        2.0 * M_PI * c / params.n_cameras + uniform(rng, -0.06, 0.06) + M_PI / 7.0;
    const double radius = half_diag * uniform(rng, 1.15, 1.35);
    const double height = uniform(rng, 4.5, 7.0);
    const double focal = uniform(rng, 950.0, 1250.0);
    const Eigen::Vector2d target = center + Eigen::Vector2d(uniform(rng, -0.1, 0.1) * ex,
                                                            uniform(rng, -0.1, 0.1) * ey);
    scene.calibrations.push_back(make_camera(c + 1, angle, radius, height, focal, center,
                                             target, params.image_width, params.image_height,
                                             rng));
    scene.calibrations.back().validate();
  }

  // Interior margin keeps true positions away from the AOI boundary so that
  // bounded noise cannot push a projected point outside of it.
  const double border = 0.5;
  const AreaOfInterest interior{params.aoi.x_min + border, params.aoi.y_min + border,
                                params.aoi.x_max - border, params.aoi.y_max - border};
  if (!(interior.x_min < interior.x_max) || !(interior.y_min < interior.y_max)) {
    throw PlacementFailure("area of interest too small for the placement margin");
  }

  std::vector<Pedestrian> pedestrians(static_cast<std::size_t>(params.n_pedestrians));
  for (auto& ped : pedestrians) {
    ped.height = uniform(rng, 1.6, 1.9);
    if (params.descriptor_dim > 0) {
      ped.descriptor.resize(static_cast<std::size_t>(params.descriptor_dim));
      double norm = 0.0;
      for (double& v : ped.descriptor) {
        v = gaussian(rng);
        norm += v * v;
      }
      norm = std::sqrt(norm);
      for (double& v : ped.descriptor) {
        v /= norm;
      }
    }
  }

  auto placement_ok = [&](double X, double Y, int self,
                          const std::vector<Pedestrian>& placed, int placed_count) {
    if (!interior.contains(X, Y)) {
      return false;
    }
    for (int other = 0; other < placed_count; ++other) {
      if (other == self) {
        continue;
      }
      if (std::hypot(X - placed[other].X, Y - placed[other].Y) <= params.min_spacing) {
        return false;
      }
    }
    return visible_camera_count(scene.calibrations, X, Y, 1.9, params.image_width,
                                params.image_height) >= 2;
  };

  for (int i = 0; i < params.n_pedestrians; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < 2000 && !placed; ++attempt) {
      const double X = uniform(rng, interior.x_min, interior.x_max);
      const double Y = uniform(rng, interior.y_min, interior.y_max);
      if (placement_ok(X, Y, i, pedestrians, i)) {
        pedestrians[i].X = X;
        pedestrians[i].Y = Y;
        placed = true;
      }
    }
    if (!placed) {
      throw PlacementFailure("could not place pedestrian " + std::to_string(i) +
                             " with spacing " + std::to_string(params.min_spacing) +
                             " m inside the area of interest");
    }
  }

  for (int f = 0; f < params.n_frames; ++f) {
    if (f > 0) {
      // Small random walk; a pedestrian stays put when no valid step is found.
      for (int i = 0; i < params.n_pedestrians; ++i) {
        for (int attempt = 0; attempt < 20; ++attempt) {
          const double step_angle = uniform(rng, 0.0, 2.0 * M_PI);
          const double step_len = uniform(rng, 0.0, 0.25);
          const double X = pedestrians[i].X + step_len * std::cos(step_angle);
          const double Y = pedestrians[i].Y + step_len * std::sin(step_angle);
          if (placement_ok(X, Y, i, pedestrians, params.n_pedestrians)) {
            pedestrians[i].X = X;
            pedestrians[i].Y = Y;
            break;
          }
        }
      }
    }

    FrameBundle frame;
    frame.frame_id = f;
    GroundTruthFrame gt;
    gt.frame_id = f;
    for (int i = 0; i < params.n_pedestrians; ++i) {
      gt.annotations.push_back({i, pedestrians[i].X, pedestrians[i].Y});
    }

    for (const auto& calib : scene.calibrations) {
      CameraDetections camera;
      camera.camera_id = calib.camera_id;
      for (int i = 0; i < params.n_pedestrians; ++i) {
        const Pedestrian& ped = pedestrians[i];
        if (!camera_sees(calib, ped.X, ped.Y, ped.height, params.image_width,
                         params.image_height, 60.0)) {
          continue;
        }
        if (params.noise.miss_rate > 0.0 &&
            uniform(rng, 0.0, 1.0) < params.noise.miss_rate) {
          continue;
        }
        camera.detections.push_back(
            synthesize_detection(calib, ped, static_cast<int>(camera.detections.size()), f,
                                 params.noise, rng));
      }
      frame.cameras.push_back(std::move(camera));
    }
    scene.frames.push_back(std::move(frame));
    scene.ground_truth.push_back(std::move(gt));
  }
  return scene;
}

void write_synthetic_scene(const SyntheticScene& scene, const std::string& directory) {
  std::filesystem::create_directories(directory);
  const std::filesystem::path dir(directory);
  save_calibrations(scene.calibrations, (dir / "calibration.json").string());
  save_detections(scene.frames, (dir / "detections.json").string());
  save_ground_truth(scene.ground_truth, (dir / "ground_truth.json").string());
}

}  // namespace pedfuse
