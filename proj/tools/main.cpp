// pedfuse command line: fuse multi-camera pedestrian detections into 3D
// ground-plane locations, evaluate them against ground truth, generate
// synthetic scenes and plot results.

#include <CLI11.hpp>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pedfuse/io.hpp"
#include "pedfuse/pipeline.hpp"
#include "pedfuse/svg_plot.hpp"
#include "pedfuse/synthetic.hpp"

namespace {

pedfuse::AreaOfInterest parse_aoi(const std::string& text) {
  pedfuse::AreaOfInterest aoi;
  if (std::sscanf(text.c_str(), "%lf,%lf,%lf,%lf", &aoi.x_min, &aoi.y_min, &aoi.x_max,
                  &aoi.y_max) != 4) {
    throw pedfuse::SchemaError("--aoi expects \"x_min,y_min,x_max,y_max\"");
  }
  aoi.validate();
  return aoi;
}

int run_fuse(const std::string& calib_path, const std::string& detections_path,
             const std::string& aoi_text, const std::string& out_path,
             pedfuse::PipelineConfig config, const std::string& fusion,
             const std::string& groundpoint, double td, bool td_set) {
  config.aoi = parse_aoi(aoi_text);
  if (td_set) {
    config.descriptor_threshold = td;
  }
  if (fusion == "cc") {
    config.fusion_method = pedfuse::FusionMethod::clique_cover;
  } else if (fusion == "ah") {
    config.fusion_method = pedfuse::FusionMethod::average_heatmap;
    std::cerr << "note: average-heatmap sigma " << config.heatmap.sigma
              << " is interpreted in grid cells (" << config.heatmap.sigma * config.heatmap.resolution
              << " m at " << config.heatmap.resolution << " m/cell)\n";
  } else {
    throw pedfuse::SchemaError("--fusion must be cc or ah");
  }
  if (groundpoint == "pose") {
    config.groundpoint_method = pedfuse::GroundPointMethod::pose_bbox;
  } else if (groundpoint == "bbox") {
    config.groundpoint_method = pedfuse::GroundPointMethod::bbox_only;
  } else {
    throw pedfuse::SchemaError("--groundpoint must be pose or bbox");
  }

  const auto calibrations = pedfuse::load_calibrations(calib_path);
  const auto frames = pedfuse::load_detections(detections_path);
  const auto result = pedfuse::run_pipeline(config, calibrations, frames);
  for (const auto& note : result.notes) {
    std::cerr << "note: " << note << "\n";
  }
  pedfuse::save_fused_frames(result.frames, config.aoi, out_path);

  std::size_t total = 0;
  for (const auto& frame : result.frames) {
    total += frame.detections.size();
  }
  std::cout << "fused " << total << " detection(s) over " << result.frames.size()
            << " frame(s) -> " << out_path << "\n";
  return 0;
}

int run_eval(const std::string& detections_path, const std::string& gt_path, double gate,
             const std::string& out_path) {
  const auto fused = pedfuse::load_fused_frames(detections_path);
  const auto ground_truth = pedfuse::load_ground_truth(gt_path);

  std::map<int, const pedfuse::FusedFrame*> fused_by_id;
  for (const auto& frame : fused) {
    fused_by_id[frame.frame_id] = &frame;
  }
  std::vector<pedfuse::MatchResult> matches;
  std::vector<int> gt_counts;
  for (const auto& gt_frame : ground_truth) {
    std::vector<Eigen::Vector2d> det_points;
    const auto it = fused_by_id.find(gt_frame.frame_id);
    if (it != fused_by_id.end()) {
      for (const auto& det : it->second->detections) {
        det_points.emplace_back(det.X, det.Y);
      }
    }
    std::vector<Eigen::Vector2d> ann_points;
    for (const auto& ann : gt_frame.annotations) {
      ann_points.emplace_back(ann.X, ann.Y);
    }
    matches.push_back(pedfuse::hungarian_match(det_points, ann_points, gate));
    gt_counts.push_back(static_cast<int>(ann_points.size()));
  }

  std::cerr << "note: MODP is the mean of (1 - distance/gate) over matched pairs\n";
  const auto report = pedfuse::compute_metrics(matches, gt_counts, gate);
  std::cout << pedfuse::metrics_to_string(report) << "\n";
  if (!out_path.empty()) {
    pedfuse::save_metrics(report, out_path);
  }
  return 0;
}

int run_synth(std::uint64_t seed, int cameras, int pedestrians, int frames, double noise_px,
              double miss_rate, double desc_noise, int desc_dim, const std::string& aoi_text,
              const std::string& out_dir) {
  pedfuse::SyntheticSceneParams params;
  params.seed = seed;
  params.n_cameras = cameras;
  params.n_pedestrians = pedestrians;
  params.n_frames = frames;
  params.noise.keypoint_jitter_px = noise_px;
  params.noise.miss_rate = miss_rate;
  params.noise.descriptor_noise = desc_noise;
  params.descriptor_dim = desc_dim;
  params.aoi = parse_aoi(aoi_text);
  const auto scene = pedfuse::generate_synthetic_scene(params);
  pedfuse::write_synthetic_scene(scene, out_dir);
  std::cout << "wrote calibration.json, detections.json, ground_truth.json to " << out_dir
            << " (aoi " << aoi_text << ")\n";
  return 0;
}

int run_plot(const std::string& detections_path, const std::string& gt_path, int frame_id,
             const std::string& aoi_text, const std::string& out_path) {
  const auto fused = pedfuse::load_fused_frames(detections_path);
  std::vector<pedfuse::FusedDetection> detections;
  for (const auto& frame : fused) {
    if (frame.frame_id == frame_id) {
      detections = frame.detections;
    }
  }
  std::vector<pedfuse::Annotation> annotations;
  if (!gt_path.empty()) {
    for (const auto& frame : pedfuse::load_ground_truth(gt_path)) {
      if (frame.frame_id == frame_id) {
        annotations = frame.annotations;
      }
    }
  }
  pedfuse::emit_plot(detections, annotations, parse_aoi(aoi_text), out_path);
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-camera 3D pedestrian localization on the ground plane"};
  app.require_subcommand(1);

  pedfuse::PipelineConfig defaults;

  // fuse
  auto* fuse_cmd = app.add_subcommand("fuse", "Fuse per-camera detections into 3D locations");
  std::string calib_path, detections_path, out_path = "fused.json";
  std::string aoi_text = "0,0,12,36";
  std::string fusion = "cc", groundpoint = "pose";
  double td = pedfuse::kDefaultDescriptorThreshold;
  pedfuse::PipelineConfig config;
  fuse_cmd->add_option("--calib", calib_path, "Calibration file")->required();
  fuse_cmd->add_option("--detections", detections_path, "Detection file")->required();
  fuse_cmd->add_option("--aoi", aoi_text, "Area of interest x_min,y_min,x_max,y_max (meters)");
  fuse_cmd->add_option("--ts", config.score_threshold, "Ankle keypoint score threshold");
  fuse_cmd->add_option("--tg", config.distance_threshold, "Ground distance threshold (meters)");
  auto* td_opt = fuse_cmd->add_option("--td", td, "Descriptor distance threshold (enables re-ID gating)");
  fuse_cmd->add_option("--fusion", fusion, "Fusion method: cc | ah");
  fuse_cmd->add_option("--groundpoint", groundpoint, "Ground point estimator: pose | bbox");
  fuse_cmd->add_option("--out", out_path, "Output detections file");
  fuse_cmd->add_option("--workers", config.workers, "Worker threads for frame processing");
  fuse_cmd->add_option("--ah-resolution", config.heatmap.resolution, "Heatmap cell size (meters)");
  fuse_cmd->add_option("--ah-radius", config.heatmap.kernel_radius, "Kernel truncation radius (meters)");
  fuse_cmd->add_option("--ah-sigma", config.heatmap.sigma, "Kernel sigma (grid cells)");
  fuse_cmd->add_option("--ah-min-distance", config.heatmap.min_distance, "Peak suppression distance (meters)");
  fuse_cmd->add_option("--ah-min-value", config.heatmap.min_value, "Minimum peak value");

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "Score fused detections against ground truth");
  std::string eval_detections, gt_path, metrics_out;
  double gate = defaults.match_gate;
  eval_cmd->add_option("--detections", eval_detections, "Fused detections file")->required();
  eval_cmd->add_option("--gt", gt_path, "Ground-truth file")->required();
  eval_cmd->add_option("--gate", gate, "Match gate (meters)");
  eval_cmd->add_option("--out", metrics_out, "Metrics output file");

  // synth
  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic multi-camera scene");
  std::uint64_t seed = 1;
  int cameras = 7, pedestrians = 20, n_frames = 10, desc_dim = 0;
  double noise_px = 0.0, miss_rate = 0.0, desc_noise = 0.0;
  std::string synth_aoi = "0,0,12,36", out_dir = "synthetic";
  synth_cmd->add_option("--seed", seed, "Random seed");
  synth_cmd->add_option("--cameras", cameras, "Number of cameras (>= 2)");
  synth_cmd->add_option("--pedestrians", pedestrians, "Number of pedestrians");
  synth_cmd->add_option("--frames", n_frames, "Number of frames");
  synth_cmd->add_option("--noise-px", noise_px, "Keypoint jitter bound (pixels)");
  synth_cmd->add_option("--miss-rate", miss_rate, "Per-view missed detection probability");
  synth_cmd->add_option("--desc-noise", desc_noise, "Descriptor perturbation scale");
  synth_cmd->add_option("--desc-dim", desc_dim, "Descriptor dimension (0 disables)");
  synth_cmd->add_option("--aoi", synth_aoi, "Area of interest x_min,y_min,x_max,y_max (meters)");
  synth_cmd->add_option("--out-dir", out_dir, "Output directory");

  // plot
  auto* plot_cmd = app.add_subcommand("plot", "Plot one frame on the ground plane as SVG");
  std::string plot_detections, plot_gt, plot_out = "plot.svg", plot_aoi = "0,0,12,36";
  int plot_frame = 0;
  plot_cmd->add_option("--detections", plot_detections, "Fused detections file")->required();
  plot_cmd->add_option("--gt", plot_gt, "Ground-truth file (optional)");
  plot_cmd->add_option("--frame", plot_frame, "Frame id to plot");
  plot_cmd->add_option("--aoi", plot_aoi, "Area of interest x_min,y_min,x_max,y_max (meters)");
  plot_cmd->add_option("--out", plot_out, "Output SVG file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (fuse_cmd->parsed()) {
      return run_fuse(calib_path, detections_path, aoi_text, out_path, config, fusion,
                      groundpoint, td, td_opt->count() > 0);
    }
    if (eval_cmd->parsed()) {
      return run_eval(eval_detections, gt_path, gate, metrics_out);
    }
    if (synth_cmd->parsed()) {
      return run_synth(seed, cameras, pedestrians, n_frames, noise_px, miss_rate, desc_noise,
                       desc_dim, synth_aoi, out_dir);
    }
    if (plot_cmd->parsed()) {
      return run_plot(plot_detections, plot_gt, plot_frame, plot_aoi, plot_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
