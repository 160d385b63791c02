#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "pedfuse/errors.hpp"

namespace pedfuse {

/// Pinhole calibration of one camera. The world ground plane is Z = 0;
/// t is expressed in meters, K in pixels.
struct CameraCalibration {
  int camera_id = -1;
  Eigen::Matrix3d K = Eigen::Matrix3d::Identity();
  Eigen::Matrix3d R = Eigen::Matrix3d::Identity();
  Eigen::Vector3d t = Eigen::Vector3d::Zero();

  /// Throws CalibrationError unless R is a proper rotation (orthonormal,
  /// det = 1 within 1e-6) and K is upper triangular with positive diagonal.
  void validate() const;
};

/// Homography mapping homogeneous image coordinates onto the world ground
/// plane, i.e. the inverse of K [R1 R2 t].
struct GroundHomography {
  int camera_id = -1;
  Eigen::Matrix3d H = Eigen::Matrix3d::Identity();
};

/// A point in pixel coordinates.
struct ImagePoint {
  double x = 0.0;
  double y = 0.0;
};

/// A pedestrian location on the world ground plane (Z = 0 implied), tagged
/// with the camera and detection it came from. An empty descriptor means
/// no appearance information is attached.
struct WorldGroundPoint {
  double X = 0.0;
  double Y = 0.0;
  int camera_id = -1;
  int detection_id = -1;
  std::vector<double> descriptor;

  bool has_descriptor() const { return !descriptor.empty(); }
};

/// Axis-aligned rectangle on the world ground plane, in meters.
/// Membership is decided on closed intervals: boundary points are inside.
struct AreaOfInterest {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;

  bool contains(double X, double Y) const {
    return X >= x_min && X <= x_max && Y >= y_min && Y <= y_max;
  }

  /// Throws SchemaError unless x_min < x_max and y_min < y_max.
  void validate() const;
};

/// Relative determinant threshold below which K [R1 R2 t] is treated as
/// singular (scaled by the product of its column norms).
inline constexpr double kSingularDetTolerance = 1e-12;

/// Computes the image-to-ground homography H = (K [R1 R2 t])^-1.
/// Throws SingularCalibration when the matrix is numerically singular or the
/// inverse fails the residual check |H * K[R1 R2 t] - I| <= 1e-9 (relative).
GroundHomography compute_homography(const CameraCalibration& calib);

/// Maps an image point onto the world ground plane. Throws PointAtInfinity
/// when the homogeneous w component vanishes relative to the result norm.
Eigen::Vector2d project_to_ground(const GroundHomography& homography, const ImagePoint& p);

/// Projects a world ground-plane point (X, Y, 0) into the image of `calib`.
ImagePoint image_from_ground(const CameraCalibration& calib, double X, double Y);

/// Projects an arbitrary world point; returns nothing when the point lies
/// behind the camera (non-positive depth).
std::optional<ImagePoint> project_world_point(const CameraCalibration& calib,
                                              const Eigen::Vector3d& world);

/// Keeps exactly the points inside the closed AOI rectangle, preserving order.
std::vector<WorldGroundPoint> filter_aoi(const std::vector<WorldGroundPoint>& points,
                                         const AreaOfInterest& aoi);

/// Even-odd test for an optional per-camera visibility region on the ground
/// plane. Points on an edge count as inside.
bool point_in_polygon(double X, double Y, const std::vector<Eigen::Vector2d>& polygon);

}  // namespace pedfuse
