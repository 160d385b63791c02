#include "pedfuse/heatmap.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace pedfuse {

namespace {

struct Grid {
  int nx = 0;
  int ny = 0;
  double x0 = 0.0;
  double y0 = 0.0;
  double res = 0.0;

  double cell_x(int ix) const { return x0 + (ix + 0.5) * res; }
  double cell_y(int iy) const { return y0 + (iy + 0.5) * res; }
  std::size_t index(int ix, int iy) const {
    return static_cast<std::size_t>(iy) * nx + ix;
  }
};

struct Peak {
  double value;
  int ix;
  int iy;
};

}  // namespace

std::vector<FusedDetection> average_heatmap_fuse(const std::vector<WorldGroundPoint>& points,
                                                 const AreaOfInterest& aoi,
                                                 const AverageHeatmapParams& params,
                                                 int camera_count) {
  if (camera_count <= 0) {
    throw std::invalid_argument("camera_count must be positive");
  }
  Grid grid;
  grid.res = params.resolution;
  grid.x0 = aoi.x_min;
  grid.y0 = aoi.y_min;
  if (grid.res > 0.0) {
    grid.nx = static_cast<int>(std::ceil((aoi.x_max - aoi.x_min) / grid.res));
    grid.ny = static_cast<int>(std::ceil((aoi.y_max - aoi.y_min) / grid.res));
  }
  if (grid.nx <= 0 || grid.ny <= 0) {
    throw EmptyGrid("heatmap grid over the area of interest has no cells");
  }
  const std::size_t cells = static_cast<std::size_t>(grid.nx) * grid.ny;
  const double sigma_cells = params.sigma;
  const double radius_cells = params.kernel_radius / grid.res;

  // One map per camera that contributed points; kernels from the same camera
  // are max-combined so a single camera never exceeds 1 anywhere.
  std::map<int, std::vector<double>> per_camera;
  for (const auto& p : points) {
    auto [it, inserted] = per_camera.try_emplace(p.camera_id);
    if (inserted) {
      it->second.assign(cells, 0.0);
    }
    std::vector<double>& map = it->second;

    const int ix_lo = std::max(0, static_cast<int>(std::floor((p.X - params.kernel_radius - grid.x0) / grid.res)));
    const int ix_hi = std::min(grid.nx - 1, static_cast<int>(std::ceil((p.X + params.kernel_radius - grid.x0) / grid.res)));
    const int iy_lo = std::max(0, static_cast<int>(std::floor((p.Y - params.kernel_radius - grid.y0) / grid.res)));
    const int iy_hi = std::min(grid.ny - 1, static_cast<int>(std::ceil((p.Y + params.kernel_radius - grid.y0) / grid.res)));
    for (int iy = iy_lo; iy <= iy_hi; ++iy) {
      for (int ix = ix_lo; ix <= ix_hi; ++ix) {
        const double dx = (grid.cell_x(ix) - p.X) / grid.res;
        const double dy = (grid.cell_y(iy) - p.Y) / grid.res;
        const double d_cells = std::hypot(dx, dy);
        if (d_cells > radius_cells) {
          continue;  // truncated kernel
        }
        const double value = std::exp(-(d_cells * d_cells) / (2.0 * sigma_cells * sigma_cells));
        double& cell = map[grid.index(ix, iy)];
        cell = std::max(cell, value);
      }
    }
  }

  std::vector<double> average(cells, 0.0);
  for (const auto& [camera_id, map] : per_camera) {
    for (std::size_t i = 0; i < cells; ++i) {
      average[i] += map[i];
    }
  }
  for (double& v : average) {
    v /= static_cast<double>(camera_count);
  }

  // Local maxima over the 8-neighborhood, then greedy suppression by distance.
  std::vector<Peak> peaks;
  for (int iy = 0; iy < grid.ny; ++iy) {
    for (int ix = 0; ix < grid.nx; ++ix) {
      const double v = average[grid.index(ix, iy)];
      if (v < params.min_value) {
        continue;
      }
      bool is_max = true;
      for (int dy = -1; dy <= 1 && is_max; ++dy) {
        for (int dx = -1; dx <= 1 && is_max; ++dx) {
          if (dx == 0 && dy == 0) {
            continue;
          }
          const int jx = ix + dx;
          const int jy = iy + dy;
          if (jx < 0 || jx >= grid.nx || jy < 0 || jy >= grid.ny) {
            continue;
          }
          if (average[grid.index(jx, jy)] > v) {
            is_max = false;
          }
        }
      }
      if (is_max) {
        peaks.push_back({v, ix, iy});
      }
    }
  }
  std::sort(peaks.begin(), peaks.end(), [](const Peak& a, const Peak& b) {
    if (a.value != b.value) return a.value > b.value;
    if (a.iy != b.iy) return a.iy < b.iy;
    return a.ix < b.ix;
  });

  std::vector<FusedDetection> detections;
  for (const Peak& peak : peaks) {
    const double X = grid.cell_x(peak.ix);
    const double Y = grid.cell_y(peak.iy);
    bool suppressed = false;
    for (const auto& kept : detections) {
      if (std::hypot(kept.X - X, kept.Y - Y) < params.min_distance) {
        suppressed = true;
        break;
      }
    }
    if (!suppressed) {
      FusedDetection det;
      det.X = X;
      det.Y = Y;
      det.member_count = 0;
      detections.push_back(std::move(det));
    }
  }
  return detections;
}

}  // namespace pedfuse
