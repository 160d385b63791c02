#include "pedfuse/svg_plot.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace pedfuse {

namespace {

std::string fmt(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", v);
  return buffer;
}

}  // namespace

void emit_plot(const std::vector<FusedDetection>& detections,
               const std::vector<Annotation>& ground_truth, const AreaOfInterest& aoi,
               const std::string& path) {
  aoi.validate();
  const double scale = 24.0;  // pixels per meter
  const double pad = 20.0;
  const double width = (aoi.x_max - aoi.x_min) * scale + 2.0 * pad;
  const double height = (aoi.y_max - aoi.y_min) * scale + 2.0 * pad;
  // SVG y grows downward; flip so +Y points up in the figure.
  const auto px = [&](double X) { return pad + (X - aoi.x_min) * scale; };
  const auto py = [&](double Y) { return height - pad - (Y - aoi.y_min) * scale; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
      << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
  svg << "  <rect x=\"" << fmt(px(aoi.x_min)) << "\" y=\"" << fmt(py(aoi.y_max)) << "\" width=\""
      << fmt((aoi.x_max - aoi.x_min) * scale) << "\" height=\""
      << fmt((aoi.y_max - aoi.y_min) * scale)
      << "\" fill=\"#f7f7f7\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  for (const auto& ann : ground_truth) {
    const double x = px(ann.X);
    const double y = py(ann.Y);
    const double r = 4.0;
    svg << "  <path d=\"M " << fmt(x - r) << " " << fmt(y - r) << " L " << fmt(x + r) << " "
        << fmt(y + r) << " M " << fmt(x - r) << " " << fmt(y + r) << " L " << fmt(x + r) << " "
        << fmt(y - r) << "\" stroke=\"#2a9d2a\" stroke-width=\"1.5\" fill=\"none\"/>\n";
  }
  for (const auto& det : detections) {
    svg << "  <circle cx=\"" << fmt(px(det.X)) << "\" cy=\"" << fmt(py(det.Y))
        << "\" r=\"4\" fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"1.5\"/>\n";
  }
  svg << "</svg>\n";

  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot open " + path + " for writing");
  }
  out << svg.str();
  if (!out) {
    throw Error("failed writing " + path);
  }
}

}  // namespace pedfuse
