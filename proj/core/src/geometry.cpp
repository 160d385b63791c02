#include "pedfuse/geometry.hpp"

#include <cmath>

namespace pedfuse {

namespace {

Eigen::Matrix3d ground_projection_matrix(const CameraCalibration& calib) {
  Eigen::Matrix3d P;
  P.col(0) = calib.R.col(0);
  P.col(1) = calib.R.col(1);
  P.col(2) = calib.t;
  return calib.K * P;
}

}  // namespace

void CameraCalibration::validate() const {
  if (!K.allFinite() || !R.allFinite() || !t.allFinite()) {
    throw CalibrationError("camera " + std::to_string(camera_id) + ": non-finite calibration");
  }
  const Eigen::Matrix3d rtr = R.transpose() * R;
  if ((rtr - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() > 1e-6 ||
      std::abs(R.determinant() - 1.0) > 1e-6) {
    throw CalibrationError("camera " + std::to_string(camera_id) +
                           ": R is not a proper rotation matrix");
  }
  if (K(1, 0) != 0.0 || K(2, 0) != 0.0 || K(2, 1) != 0.0) {
    throw CalibrationError("camera " + std::to_string(camera_id) + ": K is not upper triangular");
  }
  if (K(0, 0) <= 0.0 || K(1, 1) <= 0.0 || K(2, 2) <= 0.0) {
    throw CalibrationError("camera " + std::to_string(camera_id) +
                           ": K diagonal must be positive");
  }
}

void AreaOfInterest::validate() const {
  if (!(x_min < x_max) || !(y_min < y_max)) {
    throw SchemaError("area of interest must satisfy x_min < x_max and y_min < y_max");
  }
}

GroundHomography compute_homography(const CameraCalibration& calib) {
  const Eigen::Matrix3d A = ground_projection_matrix(calib);

  // Hadamard bound as the matrix scale: |det A| <= prod of column norms.
  const double scale = A.col(0).norm() * A.col(1).norm() * A.col(2).norm();
  const double det = A.determinant();
  if (scale <= 0.0 || std::abs(det) < kSingularDetTolerance * scale) {
    throw SingularCalibration("camera " + std::to_string(calib.camera_id) +
                              ": K[R1 R2 t] is numerically singular");
  }

  GroundHomography result;
  result.camera_id = calib.camera_id;
  result.H = A.partialPivLu().inverse();

  const double residual = (result.H * A - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
  const double residual_scale =
      std::max(1.0, A.cwiseAbs().maxCoeff() * result.H.cwiseAbs().maxCoeff());
  if (!(residual <= 1e-9 * residual_scale)) {
    throw SingularCalibration("camera " + std::to_string(calib.camera_id) +
                              ": homography residual check failed (ill-conditioned calibration)");
  }
  return result;
}

Eigen::Vector2d project_to_ground(const GroundHomography& homography, const ImagePoint& p) {
  const Eigen::Vector3d v = homography.H * Eigen::Vector3d(p.x, p.y, 1.0);
  if (std::abs(v.z()) < 1e-9 * v.norm()) {
    throw PointAtInfinity("image point (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                          ") lies on the horizon line of camera " +
                          std::to_string(homography.camera_id));
  }
  return {v.x() / v.z(), v.y() / v.z()};
}

ImagePoint image_from_ground(const CameraCalibration& calib, double X, double Y) {
  const Eigen::Vector3d v = ground_projection_matrix(calib) * Eigen::Vector3d(X, Y, 1.0);
  if (std::abs(v.z()) < 1e-9 * v.norm()) {
    throw PointAtInfinity("world point (" + std::to_string(X) + ", " + std::to_string(Y) +
                          ") projects to infinity in camera " + std::to_string(calib.camera_id));
  }
  return {v.x() / v.z(), v.y() / v.z()};
}

std::optional<ImagePoint> project_world_point(const CameraCalibration& calib,
                                              const Eigen::Vector3d& world) {
  const Eigen::Vector3d cam = calib.R * world + calib.t;
  if (cam.z() <= 0.0) {
    return std::nullopt;
  }
  const Eigen::Vector3d v = calib.K * cam;
  return ImagePoint{v.x() / v.z(), v.y() / v.z()};
}

std::vector<WorldGroundPoint> filter_aoi(const std::vector<WorldGroundPoint>& points,
                                         const AreaOfInterest& aoi) {
  std::vector<WorldGroundPoint> kept;
  kept.reserve(points.size());
  for (const auto& p : points) {
    if (aoi.contains(p.X, p.Y)) {
      kept.push_back(p);
    }
  }
  return kept;
}

bool point_in_polygon(double X, double Y, const std::vector<Eigen::Vector2d>& polygon) {
  const std::size_t n = polygon.size();
  if (n < 3) {
    return false;
  }
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const auto& a = polygon[j];
    const auto& b = polygon[i];
    // Edge hit counts as inside.
    const double cross = (b.x() - a.x()) * (Y - a.y()) - (b.y() - a.y()) * (X - a.x());
    if (cross == 0.0 && X >= std::min(a.x(), b.x()) && X <= std::max(a.x(), b.x()) &&
        Y >= std::min(a.y(), b.y()) && Y <= std::max(a.y(), b.y())) {
      return true;
    }
    if ((b.y() > Y) != (a.y() > Y)) {
      const double x_at_y = a.x() + (b.x() - a.x()) * (Y - a.y()) / (b.y() - a.y());
      if (X < x_at_y) {
        inside = !inside;
      }
    }
  }
  return inside;
}

}  // namespace pedfuse
