#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "pedfuse/geometry.hpp"
#include "oracles.hpp"

using namespace pedfuse;

namespace {

// Camera on a ring around the AOI looking at a target on the ground.
CameraCalibration look_at_camera(int id, const Eigen::Vector3d& position,
                                 const Eigen::Vector3d& target, double focal, double cx,
                                 double cy) {
  CameraCalibration calib;
  calib.camera_id = id;
  calib.K << focal, 0, cx, 0, focal, cy, 0, 0, 1;
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

CameraCalibration random_camera(std::mt19937_64& rng) {
  const double angle = oracles::uniform(rng, 0.0, 2.0 * M_PI);
  const double radius = oracles::uniform(rng, 10.0, 30.0);
  const Eigen::Vector3d position(6.0 + radius * std::cos(angle),
                                 18.0 + radius * std::sin(angle),
                                 oracles::uniform(rng, 3.0, 9.0));
  const Eigen::Vector3d target(oracles::uniform(rng, 4.0, 8.0),
                               oracles::uniform(rng, 14.0, 22.0), 0.0);
  return look_at_camera(0, position, target, oracles::uniform(rng, 600.0, 1800.0),
                        oracles::uniform(rng, 900.0, 1020.0),
                        oracles::uniform(rng, 500.0, 580.0));
}

}  // namespace

TEST_CASE("identity calibration yields the identity homography") {
  CameraCalibration calib;
  calib.camera_id = 1;
  calib.t = Eigen::Vector3d(0, 0, 1);
  const GroundHomography h = compute_homography(calib);
  CHECK((h.H - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("f=1000 calibration inverts K[R1 R2 t]") {
  CameraCalibration calib;
  calib.camera_id = 2;
  calib.K << 1000, 0, 960, 0, 1000, 540, 0, 0, 1;
  calib.t = Eigen::Vector3d(0, 0, 5);
  const GroundHomography h = compute_homography(calib);

  Eigen::Matrix3d a;
  a << 1000, 0, 4800, 0, 1000, 2700, 0, 0, 5;
  CHECK((h.H * a - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-9);
  CHECK((a * h.H - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-9);

  // World (2, 3) -> homogeneous (6800, 5700, 5) -> image (1360, 1140).
  const ImagePoint image = image_from_ground(calib, 2.0, 3.0);
  CHECK(image.x == doctest::Approx(1360.0).epsilon(1e-12));
  CHECK(image.y == doctest::Approx(1140.0).epsilon(1e-12));

  const Eigen::Vector2d world = project_to_ground(h, {1360.0, 1140.0});
  CHECK(std::abs(world.x() - 2.0) < 1e-6);
  CHECK(std::abs(world.y() - 3.0) < 1e-6);
}

TEST_CASE("rank-deficient K[R1 R2 t] is rejected") {
  CameraCalibration calib;
  calib.camera_id = 3;
  calib.t = Eigen::Vector3d(1, 0, 0);  // t equals the first rotation column
  CHECK_THROWS_AS(compute_homography(calib), SingularCalibration);
}

TEST_CASE("identity homography is a no-op projection") {
  GroundHomography h;
  const Eigen::Vector2d world = project_to_ground(h, {3.5, 7.0});
  CHECK(world.x() == 3.5);
  CHECK(world.y() == 7.0);
}

TEST_CASE("points on the horizon line raise PointAtInfinity") {
  std::mt19937_64 rng(7);
  const CameraCalibration calib = random_camera(rng);
  const GroundHomography h = compute_homography(calib);
  // Solve row3 . (x, y, 1) = 0 for y at x = 1000: a point exactly on the
  // horizon of this tilted camera.
  const Eigen::RowVector3d row = h.H.row(2);
  REQUIRE(std::abs(row(1)) > 1e-12);
  const double x = 1000.0;
  const double y = -(row(0) * x + row(2)) / row(1);
  CHECK_THROWS_AS(project_to_ground(h, {x, y}), PointAtInfinity);
}

TEST_CASE("round trip image -> world -> image stays under 1e-6 px") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    const CameraCalibration calib = random_camera(rng);
    const GroundHomography h = compute_homography(calib);
    const double X = oracles::uniform(rng, 0.0, 12.0);
    const double Y = oracles::uniform(rng, 0.0, 36.0);
    const ImagePoint image = image_from_ground(calib, X, Y);
    const Eigen::Vector2d world = project_to_ground(h, image);
    const ImagePoint back = image_from_ground(calib, world.x(), world.y());
    CHECK(std::hypot(back.x - image.x, back.y - image.y) < 1e-6);
  }
}

TEST_CASE("homography times K[R1 R2 t] is the identity for random rigs") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 1000; ++trial) {
    const CameraCalibration calib = random_camera(rng);
    calib.validate();
    const GroundHomography h = compute_homography(calib);
    Eigen::Matrix3d a;
    a.col(0) = calib.K * calib.R.col(0);
    a.col(1) = calib.K * calib.R.col(1);
    a.col(2) = calib.K * calib.t;
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff() * h.H.cwiseAbs().maxCoeff());
    CHECK((h.H * a - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() <= 1e-9 * scale);
  }
}

TEST_CASE("calibration invariants are enforced") {
  CameraCalibration calib;
  calib.camera_id = 9;
  calib.t = Eigen::Vector3d(0, 0, 1);
  CHECK_NOTHROW(calib.validate());

  SUBCASE("non-orthonormal R") {
    calib.R(0, 0) = 2.0;
    CHECK_THROWS_AS(calib.validate(), CalibrationError);
  }
  SUBCASE("reflection R") {
    calib.R = Eigen::Matrix3d::Identity();
    calib.R(2, 2) = -1.0;
    CHECK_THROWS_AS(calib.validate(), CalibrationError);
  }
  SUBCASE("lower-triangular K entry") {
    calib.K(1, 0) = 0.5;
    CHECK_THROWS_AS(calib.validate(), CalibrationError);
  }
  SUBCASE("non-positive K diagonal") {
    calib.K(0, 0) = -10.0;
    CHECK_THROWS_AS(calib.validate(), CalibrationError);
  }
}

TEST_CASE("AOI filtering is a closed-interval subsequence") {
  const AreaOfInterest aoi{0.0, 0.0, 12.0, 36.0};

  SUBCASE("WILDTRACK-extent example") {
    std::vector<WorldGroundPoint> points(2);
    points[0].X = 1.0;
    points[0].Y = 1.0;
    points[1].X = 50.0;
    points[1].Y = 1.0;
    const auto kept = filter_aoi(points, aoi);
    REQUIRE(kept.size() == 1);
    CHECK(kept[0].X == 1.0);
  }
  SUBCASE("empty input") {
    CHECK(filter_aoi({}, aoi).empty());
  }
  SUBCASE("boundary point is kept") {
    std::vector<WorldGroundPoint> points(1);
    points[0].X = 12.0;
    points[0].Y = 36.0;
    CHECK(filter_aoi(points, aoi).size() == 1);
  }
  SUBCASE("order-preserving subsequence with valid members") {
    std::mt19937_64 rng(11);
    std::vector<WorldGroundPoint> points(200);
    for (int i = 0; i < 200; ++i) {
      points[i].X = oracles::uniform(rng, -5.0, 17.0);
      points[i].Y = oracles::uniform(rng, -5.0, 41.0);
      points[i].detection_id = i;
    }
    const auto kept = filter_aoi(points, aoi);
    int previous_id = -1;
    for (const auto& p : kept) {
      CHECK(aoi.contains(p.X, p.Y));
      CHECK(p.detection_id > previous_id);
      previous_id = p.detection_id;
    }
    for (const auto& p : points) {
      if (aoi.contains(p.X, p.Y)) {
        const bool found = std::any_of(kept.begin(), kept.end(), [&](const WorldGroundPoint& q) {
          return q.detection_id == p.detection_id;
        });
        CHECK(found);
      }
    }
  }
}

TEST_CASE("point_in_polygon handles boundaries and interiors") {
  const std::vector<Eigen::Vector2d> square = {{0, 0}, {4, 0}, {4, 4}, {0, 4}};
  CHECK(point_in_polygon(2, 2, square));
  CHECK(point_in_polygon(0, 2, square));   // edge
  CHECK(point_in_polygon(4, 4, square));   // corner
  CHECK(!point_in_polygon(5, 2, square));
  CHECK(!point_in_polygon(-1, -1, square));
}
