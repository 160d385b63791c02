#include "pedfuse/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>

#include <json.hpp>

namespace pedfuse {

using nlohmann::json;

namespace {

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw SchemaError("cannot open " + path);
  }
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
  return doc;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot open " + path + " for writing");
  }
  out << text;
  if (!out) {
    throw Error("failed writing " + path);
  }
}

double require_number(const json& obj, const char* key, const std::string& context) {
  if (!obj.contains(key) || !obj[key].is_number()) {
    throw SchemaError(context + ": missing numeric field '" + key + "'");
  }
  return obj[key].get<double>();
}

int require_int(const json& obj, const char* key, const std::string& context) {
  if (!obj.contains(key) || !obj[key].is_number_integer()) {
    throw SchemaError(context + ": missing integer field '" + key + "'");
  }
  return obj[key].get<int>();
}

std::vector<double> require_number_array(const json& obj, const char* key, std::size_t count,
                                         const std::string& context) {
  if (!obj.contains(key) || !obj[key].is_array() || obj[key].size() != count) {
    throw SchemaError(context + ": field '" + key + "' must be an array of " +
                      std::to_string(count) + " numbers");
  }
  std::vector<double> values;
  values.reserve(count);
  for (const auto& v : obj[key]) {
    if (!v.is_number()) {
      throw SchemaError(context + ": field '" + key + "' must contain only numbers");
    }
    values.push_back(v.get<double>());
  }
  return values;
}

}  // namespace

std::vector<CameraCalibration> load_calibrations(const std::string& path) {
  const json doc = read_json(path);
  if (!doc.is_array()) {
    throw SchemaError(path + ": calibration file must be a JSON array of camera records");
  }
  std::vector<CameraCalibration> calibrations;
  for (const auto& record : doc) {
    const std::string context = path + " camera record " + std::to_string(calibrations.size());
    CameraCalibration calib;
    calib.camera_id = require_int(record, "camera_id", context);
    const auto k = require_number_array(record, "K", 9, context);
    const auto r = require_number_array(record, "R", 9, context);
    const auto t = require_number_array(record, "t", 3, context);
    for (int row = 0; row < 3; ++row) {
      for (int col = 0; col < 3; ++col) {
        calib.K(row, col) = k[row * 3 + col];
        calib.R(row, col) = r[row * 3 + col];
      }
      calib.t(row) = t[row];
    }
    if (record.contains("distortion")) {
      if (!record["distortion"].is_array()) {
        throw SchemaError(context + ": 'distortion' must be an array of coefficients");
      }
      for (const auto& coefficient : record["distortion"]) {
        if (!coefficient.is_number() || coefficient.get<double>() != 0.0) {
          throw CalibrationError(context +
                                 ": nonzero lens distortion declared; frames must be undistorted"
                                 " before ingestion");
        }
      }
    }
    calib.validate();
    compute_homography(calib);  // singular rigs are rejected at load time
    calibrations.push_back(std::move(calib));
  }
  return calibrations;
}

std::vector<FrameBundle> load_detections(const std::string& path) {
  const json doc = read_json(path);
  if (!doc.is_object() || !doc.contains("frames") || !doc["frames"].is_array()) {
    throw SchemaError(path + ": detection file must be an object with a 'frames' array");
  }
  std::vector<FrameBundle> frames;
  for (const auto& frame_json : doc["frames"]) {
    FrameBundle frame;
    frame.frame_id = require_int(frame_json, "frame_id", path);
    if (!frames.empty() && frame.frame_id <= frames.back().frame_id) {
      throw SchemaError(path + ": frame ids must be strictly increasing (frame " +
                        std::to_string(frame.frame_id) + " after " +
                        std::to_string(frames.back().frame_id) + ")");
    }
    if (!frame_json.contains("cameras") || !frame_json["cameras"].is_array()) {
      throw SchemaError(path + ": frame " + std::to_string(frame.frame_id) +
                        " must contain a 'cameras' array");
    }
    for (const auto& camera_json : frame_json["cameras"]) {
      CameraDetections camera;
      camera.camera_id = require_int(camera_json, "camera_id", path);
      const std::string context = path + " frame " + std::to_string(frame.frame_id) +
                                  " camera " + std::to_string(camera.camera_id);
      if (!camera_json.contains("detections") || !camera_json["detections"].is_array()) {
        throw SchemaError(context + ": missing 'detections' array");
      }
      for (const auto& det_json : camera_json["detections"]) {
        PoseDetection det;
        det.detection_id = require_int(det_json, "detection_id", context);
        det.camera_id = camera.camera_id;
        det.frame_id = frame.frame_id;
        const auto bbox = require_number_array(det_json, "bbox", 4, context);
        det.bbox = {bbox[0], bbox[1], bbox[2], bbox[3]};
        if (!det_json.contains("keypoints") || !det_json["keypoints"].is_array() ||
            det_json["keypoints"].size() != kNumKeypoints) {
          throw SchemaError(context + ": 'keypoints' must be an array of " +
                            std::to_string(kNumKeypoints) + " [x, y, score] triples");
        }
        for (int k = 0; k < kNumKeypoints; ++k) {
          const auto& kp = det_json["keypoints"][k];
          if (!kp.is_array() || kp.size() != 3 || !kp[0].is_number() || !kp[1].is_number() ||
              !kp[2].is_number()) {
            throw SchemaError(context + ": keypoint " + std::to_string(k) +
                              " must be an [x, y, score] triple");
          }
          det.keypoints[k] = {kp[0].get<double>(), kp[1].get<double>(), kp[2].get<double>()};
        }
        if (det_json.contains("descriptor")) {
          if (!det_json["descriptor"].is_array()) {
            throw SchemaError(context + ": 'descriptor' must be an array of numbers");
          }
          for (const auto& v : det_json["descriptor"]) {
            if (!v.is_number()) {
              throw SchemaError(context + ": 'descriptor' must contain only numbers");
            }
            det.descriptor.push_back(v.get<double>());
          }
        }
        det.validate();
        camera.detections.push_back(std::move(det));
      }
      frame.cameras.push_back(std::move(camera));
    }
    frames.push_back(std::move(frame));
  }
  return frames;
}

std::vector<GroundTruthFrame> load_ground_truth(const std::string& path) {
  const json doc = read_json(path);
  if (!doc.is_object() || !doc.contains("frames") || !doc["frames"].is_array()) {
    throw SchemaError(path + ": ground-truth file must be an object with a 'frames' array");
  }
  std::vector<GroundTruthFrame> frames;
  for (const auto& frame_json : doc["frames"]) {
    GroundTruthFrame frame;
    frame.frame_id = require_int(frame_json, "frame_id", path);
    const std::string context = path + " frame " + std::to_string(frame.frame_id);
    if (!frame_json.contains("annotations") || !frame_json["annotations"].is_array()) {
      throw SchemaError(context + ": missing 'annotations' array");
    }
    for (const auto& ann_json : frame_json["annotations"]) {
      Annotation ann;
      ann.person_id = require_int(ann_json, "person_id", context);
      ann.X = require_number(ann_json, "X", context);
      ann.Y = require_number(ann_json, "Y", context);
      for (const auto& existing : frame.annotations) {
        if (existing.person_id == ann.person_id) {
          throw SchemaError(context + ": duplicate person_id " + std::to_string(ann.person_id));
        }
      }
      frame.annotations.push_back(ann);
    }
    frames.push_back(std::move(frame));
  }
  return frames;
}

void attach_ground_truth(std::vector<FrameBundle>& frames,
                         const std::vector<GroundTruthFrame>& ground_truth) {
  std::map<int, const GroundTruthFrame*> by_frame;
  for (const auto& gt : ground_truth) {
    by_frame[gt.frame_id] = &gt;
  }
  for (auto& frame : frames) {
    const auto it = by_frame.find(frame.frame_id);
    if (it != by_frame.end()) {
      frame.ground_truth = it->second->annotations;
      by_frame.erase(it);
    }
  }
  if (!by_frame.empty()) {
    throw SchemaError("ground-truth frame " + std::to_string(by_frame.begin()->first) +
                      " has no matching detection frame");
  }
}

void save_fused_frames(const std::vector<FusedFrame>& frames, const AreaOfInterest& aoi,
                       const std::string& path) {
  json doc;
  doc["aoi"] = {aoi.x_min, aoi.y_min, aoi.x_max, aoi.y_max};
  doc["frames"] = json::array();
  for (const auto& frame : frames) {
    json frame_json;
    frame_json["frame_id"] = frame.frame_id;
    frame_json["detections"] = json::array();
    for (const auto& det : frame.detections) {
      json det_json;
      det_json["X"] = det.X;
      det_json["Y"] = det.Y;
      det_json["member_count"] = det.member_count;
      det_json["contributing"] = json::array();
      for (const auto& [camera_id, detection_id] : det.contributing) {
        det_json["contributing"].push_back({camera_id, detection_id});
      }
      frame_json["detections"].push_back(std::move(det_json));
    }
    doc["frames"].push_back(std::move(frame_json));
  }
  write_text(path, doc.dump(2) + "\n");
}

std::vector<FusedFrame> load_fused_frames(const std::string& path) {
  const json doc = read_json(path);
  if (!doc.is_object() || !doc.contains("frames") || !doc["frames"].is_array()) {
    throw SchemaError(path + ": fused detection file must be an object with a 'frames' array");
  }
  std::vector<FusedFrame> frames;
  for (const auto& frame_json : doc["frames"]) {
    FusedFrame frame;
    frame.frame_id = require_int(frame_json, "frame_id", path);
    const std::string context = path + " frame " + std::to_string(frame.frame_id);
    if (!frame_json.contains("detections") || !frame_json["detections"].is_array()) {
      throw SchemaError(context + ": missing 'detections' array");
    }
    for (const auto& det_json : frame_json["detections"]) {
      FusedDetection det;
      det.X = require_number(det_json, "X", context);
      det.Y = require_number(det_json, "Y", context);
      if (det_json.contains("member_count")) {
        det.member_count = require_int(det_json, "member_count", context);
      }
      if (det_json.contains("contributing")) {
        for (const auto& pair : det_json["contributing"]) {
          if (!pair.is_array() || pair.size() != 2) {
            throw SchemaError(context + ": 'contributing' entries must be [camera, detection]");
          }
          det.contributing.emplace_back(pair[0].get<int>(), pair[1].get<int>());
        }
      }
      frame.detections.push_back(std::move(det));
    }
    frames.push_back(std::move(frame));
  }
  return frames;
}

void save_metrics(const MetricsReport& report, const std::string& path) {
  json doc;
  doc["tp"] = report.tp;
  doc["fp"] = report.fp;
  doc["fn"] = report.fn;
  doc["gt"] = report.gt;
  doc["moda"] = report.moda;
  doc["modp"] = report.modp;
  doc["precision"] = report.precision;
  doc["recall"] = report.recall;
  doc["f_score"] = report.f_score;
  write_text(path, doc.dump(2) + "\n");
}

std::string metrics_to_string(const MetricsReport& report) {
  char buffer[256];
  std::snprintf(buffer, sizeof(buffer),
                "TP %lld  FP %lld  FN %lld  GT %lld\n"
                "MODA %.3f  MODP %.3f  precision %.3f  recall %.3f  F-score %.3f",
                static_cast<long long>(report.tp), static_cast<long long>(report.fp),
                static_cast<long long>(report.fn), static_cast<long long>(report.gt),
                report.moda, report.modp, report.precision, report.recall, report.f_score);
  return buffer;
}

void save_calibrations(const std::vector<CameraCalibration>& calibrations,
                       const std::string& path) {
  json doc = json::array();
  for (const auto& calib : calibrations) {
    json record;
    record["camera_id"] = calib.camera_id;
    json k = json::array(), r = json::array(), t = json::array();
    for (int row = 0; row < 3; ++row) {
      for (int col = 0; col < 3; ++col) {
        k.push_back(calib.K(row, col));
        r.push_back(calib.R(row, col));
      }
      t.push_back(calib.t(row));
    }
    record["K"] = std::move(k);
    record["R"] = std::move(r);
    record["t"] = std::move(t);
    doc.push_back(std::move(record));
  }
  write_text(path, doc.dump(2) + "\n");
}

void save_detections(const std::vector<FrameBundle>& frames, const std::string& path) {
  json doc;
  doc["frames"] = json::array();
  for (const auto& frame : frames) {
    json frame_json;
    frame_json["frame_id"] = frame.frame_id;
    frame_json["cameras"] = json::array();
    for (const auto& camera : frame.cameras) {
      json camera_json;
      camera_json["camera_id"] = camera.camera_id;
      camera_json["detections"] = json::array();
      for (const auto& det : camera.detections) {
        json det_json;
        det_json["detection_id"] = det.detection_id;
        det_json["bbox"] = {det.bbox.x_min, det.bbox.y_min, det.bbox.x_max, det.bbox.y_max};
        det_json["keypoints"] = json::array();
        for (const auto& kp : det.keypoints) {
          det_json["keypoints"].push_back({kp.x, kp.y, kp.score});
        }
        if (!det.descriptor.empty()) {
          det_json["descriptor"] = det.descriptor;
        }
        camera_json["detections"].push_back(std::move(det_json));
      }
      frame_json["cameras"].push_back(std::move(camera_json));
    }
    doc["frames"].push_back(std::move(frame_json));
  }
  write_text(path, doc.dump(2) + "\n");
}

void save_ground_truth(const std::vector<GroundTruthFrame>& ground_truth,
                       const std::string& path) {
  json doc;
  doc["frames"] = json::array();
  for (const auto& frame : ground_truth) {
    json frame_json;
    frame_json["frame_id"] = frame.frame_id;
    frame_json["annotations"] = json::array();
    for (const auto& ann : frame.annotations) {
      json ann_json;
      ann_json["person_id"] = ann.person_id;
      ann_json["X"] = ann.X;
      ann_json["Y"] = ann.Y;
      frame_json["annotations"].push_back(std::move(ann_json));
    }
    doc["frames"].push_back(std::move(frame_json));
  }
  write_text(path, doc.dump(2) + "\n");
}

}  // namespace pedfuse
