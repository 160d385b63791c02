#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pedfuse/io.hpp"
#include "pedfuse/svg_plot.hpp"
#include "pedfuse/synthetic.hpp"

using namespace pedfuse;

namespace {

std::filesystem::path temp_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "pedfuse_io_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
  const auto path = temp_dir() / name;
  std::ofstream out(path);
  out << content;
  return path.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("calibration files round trip") {
  SyntheticSceneParams params;
  params.n_cameras = 3;
  params.n_pedestrians = 0;
  params.n_frames = 0;
  const auto scene = generate_synthetic_scene(params);

  const auto path = (temp_dir() / "calib.json").string();
  save_calibrations(scene.calibrations, path);
  const auto loaded = load_calibrations(path);
  REQUIRE(loaded.size() == scene.calibrations.size());
  for (std::size_t i = 0; i < loaded.size(); ++i) {
    CHECK(loaded[i].camera_id == scene.calibrations[i].camera_id);
    CHECK((loaded[i].K - scene.calibrations[i].K).cwiseAbs().maxCoeff() == 0.0);
    CHECK((loaded[i].R - scene.calibrations[i].R).cwiseAbs().maxCoeff() == 0.0);
    CHECK((loaded[i].t - scene.calibrations[i].t).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("calibration schema violations are reported") {
  SUBCASE("not an array") {
    const auto path = write_file("bad1.json", "{}");
    CHECK_THROWS_AS(load_calibrations(path), SchemaError);
  }
  SUBCASE("missing K") {
    const auto path = write_file(
        "bad2.json", R"([{"camera_id": 1, "R": [1,0,0,0,1,0,0,0,1], "t": [0,0,1]}])");
    CHECK_THROWS_AS(load_calibrations(path), SchemaError);
  }
  SUBCASE("K with wrong arity") {
    const auto path = write_file(
        "bad3.json",
        R"([{"camera_id": 1, "K": [1,0,0], "R": [1,0,0,0,1,0,0,0,1], "t": [0,0,1]}])");
    CHECK_THROWS_AS(load_calibrations(path), SchemaError);
  }
  SUBCASE("invalid rotation") {
    const auto path = write_file(
        "bad4.json",
        R"([{"camera_id": 1, "K": [1,0,0,0,1,0,0,0,1], "R": [2,0,0,0,1,0,0,0,1], "t": [0,0,1]}])");
    CHECK_THROWS_AS(load_calibrations(path), CalibrationError);
  }
  SUBCASE("unparseable JSON") {
    const auto path = write_file("bad5.json", "[{");
    CHECK_THROWS_AS(load_calibrations(path), SchemaError);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(load_calibrations((temp_dir() / "nope.json").string()), SchemaError);
  }
  SUBCASE("singular rig is rejected at load time") {
    // t equal to the first rotation column makes K[R1 R2 t] rank deficient.
    const auto path = write_file(
        "bad6.json",
        R"([{"camera_id": 1, "K": [1,0,0,0,1,0,0,0,1], "R": [1,0,0,0,1,0,0,0,1], "t": [1,0,0]}])");
    CHECK_THROWS_AS(load_calibrations(path), SingularCalibration);
  }
}

TEST_CASE("nonzero declared distortion is rejected") {
  const auto zero = write_file(
      "dist0.json",
      R"([{"camera_id": 1, "K": [1,0,0,0,1,0,0,0,1], "R": [1,0,0,0,1,0,0,0,1], "t": [0,0,1],
           "distortion": [0, 0, 0, 0, 0]}])");
  CHECK(load_calibrations(zero).size() == 1);

  const auto nonzero = write_file(
      "dist1.json",
      R"([{"camera_id": 1, "K": [1,0,0,0,1,0,0,0,1], "R": [1,0,0,0,1,0,0,0,1], "t": [0,0,1],
           "distortion": [-0.3, 0.1, 0, 0, 0]}])");
  CHECK_THROWS_AS(load_calibrations(nonzero), CalibrationError);
}

TEST_CASE("detection files round trip with and without descriptors") {
  SyntheticSceneParams params;
  params.n_cameras = 3;
  params.n_pedestrians = 4;
  params.n_frames = 2;
  params.descriptor_dim = 8;
  params.aoi = {0, 0, 10, 10};
  const auto scene = generate_synthetic_scene(params);

  const auto path = (temp_dir() / "detections.json").string();
  save_detections(scene.frames, path);
  const auto loaded = load_detections(path);
  REQUIRE(loaded.size() == scene.frames.size());
  for (std::size_t f = 0; f < loaded.size(); ++f) {
    CHECK(loaded[f].frame_id == scene.frames[f].frame_id);
    REQUIRE(loaded[f].cameras.size() == scene.frames[f].cameras.size());
    for (std::size_t c = 0; c < loaded[f].cameras.size(); ++c) {
      const auto& got = loaded[f].cameras[c];
      const auto& expected = scene.frames[f].cameras[c];
      CHECK(got.camera_id == expected.camera_id);
      REQUIRE(got.detections.size() == expected.detections.size());
      for (std::size_t d = 0; d < got.detections.size(); ++d) {
        CHECK(got.detections[d].bbox.y_max == expected.detections[d].bbox.y_max);
        CHECK(got.detections[d].descriptor == expected.detections[d].descriptor);
        for (int k = 0; k < kNumKeypoints; ++k) {
          CHECK(got.detections[d].keypoints[k].x == expected.detections[d].keypoints[k].x);
          CHECK(got.detections[d].keypoints[k].score ==
                expected.detections[d].keypoints[k].score);
        }
      }
    }
  }
}

TEST_CASE("detection schema violations are reported") {
  SUBCASE("wrong keypoint count") {
    const auto path = write_file("det1.json", R"({"frames": [{"frame_id": 0, "cameras": [
        {"camera_id": 1, "detections": [{"detection_id": 0, "bbox": [0,0,10,10],
         "keypoints": [[1,2,0.5]]}]}]}]})");
    CHECK_THROWS_AS(load_detections(path), SchemaError);
  }
  SUBCASE("score out of range") {
    std::string keypoints = "[";
    for (int k = 0; k < 17; ++k) {
      keypoints += k == 0 ? "[1,2,1.5]" : ",[1,2,0.5]";
    }
    keypoints += "]";
    const auto path = write_file("det2.json", R"({"frames": [{"frame_id": 0, "cameras": [
        {"camera_id": 1, "detections": [{"detection_id": 0, "bbox": [0,0,10,10],
         "keypoints": )" + keypoints + "}]}]}]}");
    CHECK_THROWS_AS(load_detections(path), SchemaError);
  }
  SUBCASE("frames not an array") {
    const auto path = write_file("det3.json", R"({"frames": 3})");
    CHECK_THROWS_AS(load_detections(path), SchemaError);
  }
  SUBCASE("frame ids must increase") {
    const auto path = write_file("det4.json", R"({"frames": [
        {"frame_id": 5, "cameras": []}, {"frame_id": 4, "cameras": []}]})");
    CHECK_THROWS_AS(load_detections(path), SchemaError);
  }
}

TEST_CASE("ground truth round trips and rejects duplicate ids") {
  std::vector<GroundTruthFrame> frames(2);
  frames[0].frame_id = 0;
  frames[0].annotations = {{0, 1.25, 2.5}, {1, 3.0, 4.0}};
  frames[1].frame_id = 1;
  frames[1].annotations = {{0, 1.5, 2.75}};
  const auto path = (temp_dir() / "gt.json").string();
  save_ground_truth(frames, path);
  const auto loaded = load_ground_truth(path);
  REQUIRE(loaded.size() == 2);
  CHECK(loaded[0].annotations.size() == 2);
  CHECK(loaded[0].annotations[0].X == 1.25);
  CHECK(loaded[1].annotations[0].Y == 2.75);

  const auto dup = write_file("gt_dup.json", R"({"frames": [{"frame_id": 0, "annotations": [
      {"person_id": 3, "X": 1, "Y": 2}, {"person_id": 3, "X": 4, "Y": 5}]}]})");
  CHECK_THROWS_AS(load_ground_truth(dup), SchemaError);
}

TEST_CASE("attach_ground_truth pairs frames by id") {
  std::vector<FrameBundle> frames(2);
  frames[0].frame_id = 10;
  frames[1].frame_id = 11;
  std::vector<GroundTruthFrame> gt(1);
  gt[0].frame_id = 11;
  gt[0].annotations = {{0, 1.0, 2.0}};
  attach_ground_truth(frames, gt);
  CHECK(!frames[0].ground_truth.has_value());
  REQUIRE(frames[1].ground_truth.has_value());
  CHECK(frames[1].ground_truth->size() == 1);

  std::vector<GroundTruthFrame> orphan(1);
  orphan[0].frame_id = 99;
  CHECK_THROWS_AS(attach_ground_truth(frames, orphan), SchemaError);
}

TEST_CASE("fused detections round trip") {
  std::vector<FusedFrame> frames(1);
  frames[0].frame_id = 7;
  FusedDetection det;
  det.X = 1.5;
  det.Y = 2.25;
  det.member_count = 2;
  det.contributing = {{1, 0}, {3, 4}};
  frames[0].detections.push_back(det);

  const auto path = (temp_dir() / "fused.json").string();
  save_fused_frames(frames, {0, 0, 12, 36}, path);
  const auto loaded = load_fused_frames(path);
  REQUIRE(loaded.size() == 1);
  REQUIRE(loaded[0].detections.size() == 1);
  CHECK(loaded[0].frame_id == 7);
  CHECK(loaded[0].detections[0].X == 1.5);
  CHECK(loaded[0].detections[0].Y == 2.25);
  CHECK(loaded[0].detections[0].member_count == 2);
  CHECK(loaded[0].detections[0].contributing == det.contributing);
}

TEST_CASE("metrics files carry every field") {
  const auto report = compute_metrics(DetectionCounts{8, 2, 2, 10});
  const auto path = (temp_dir() / "metrics.json").string();
  save_metrics(report, path);
  const std::string text = read_file(path);
  for (const char* key : {"\"tp\"", "\"fp\"", "\"fn\"", "\"gt\"", "\"moda\"", "\"modp\"",
                          "\"precision\"", "\"recall\"", "\"f_score\""}) {
    CHECK(text.find(key) != std::string::npos);
  }
  CHECK(metrics_to_string(report).find("MODA") != std::string::npos);
}

TEST_CASE("plots are well-formed SVG") {
  const AreaOfInterest aoi{0, 0, 12, 36};
  const auto path = (temp_dir() / "plot.svg").string();

  SUBCASE("empty inputs still draw the AOI rectangle") {
    emit_plot({}, {}, aoi, path);
    const std::string text = read_file(path);
    CHECK(text.find("<svg") != std::string::npos);
    CHECK(text.find("<rect") != std::string::npos);
    CHECK(text.find("</svg>") != std::string::npos);
    CHECK(text.find("<circle") == std::string::npos);
  }
  SUBCASE("coincident detection and annotation overlap") {
    FusedDetection det;
    det.X = 6.0;
    det.Y = 18.0;
    emit_plot({det}, {{0, 6.0, 18.0}}, aoi, path);
    const std::string text = read_file(path);
    CHECK(text.find("<circle") != std::string::npos);
    CHECK(text.find("<path") != std::string::npos);
  }
}
