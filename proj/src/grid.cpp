#include "riskfield/grid.hpp"

#include <algorithm>
#include <cmath>

namespace riskfield {

std::optional<CellIndex> world_to_cell(Vec2 point, const GridSpec& spec) {
  const double fx = std::floor((point.x - spec.origin.x) / spec.cell_size);
  const double fy = std::floor((point.y - spec.origin.y) / spec.cell_size);
  if (fx < 0.0 || fy < 0.0 || fx >= spec.cols || fy >= spec.rows) {
    return std::nullopt;
  }
  return CellIndex{static_cast<int>(fy), static_cast<int>(fx)};
}

double GridField::max_value() const {
  double best = 0.0;
  for (double v : values) best = std::max(best, v);
  return best;
}

GridSpec default_grid(Vec2 center, double cell_size) {
  constexpr double kLateralHalf = 15.0;
  constexpr double kLongitudinalHalf = 50.0;
  GridSpec spec;
  spec.origin = {center.x - kLateralHalf, center.y - kLongitudinalHalf};
  spec.cell_size = cell_size;
  spec.cols = static_cast<int>(std::lround(2.0 * kLateralHalf / cell_size));
  spec.rows = static_cast<int>(std::lround(2.0 * kLongitudinalHalf / cell_size));
  return spec;
}

double sample_bilinear(const GridField& field, Vec2 point) {
  const GridSpec& spec = field.spec;
  // Continuous cell coordinates with (0, 0) at the center of cell (0, 0).
  const double cx = (point.x - spec.origin.x) / spec.cell_size - 0.5;
  const double cy = (point.y - spec.origin.y) / spec.cell_size - 0.5;
  const double fx = std::clamp(cx, 0.0, static_cast<double>(spec.cols - 1));
  const double fy = std::clamp(cy, 0.0, static_cast<double>(spec.rows - 1));
  const int c0 = std::min(static_cast<int>(fx), spec.cols - 2 >= 0 ? spec.cols - 2 : 0);
  const int r0 = std::min(static_cast<int>(fy), spec.rows - 2 >= 0 ? spec.rows - 2 : 0);
  const int c1 = std::min(c0 + 1, spec.cols - 1);
  const int r1 = std::min(r0 + 1, spec.rows - 1);
  const double tx = fx - c0;
  const double ty = fy - r0;
  const double top = field.at(r0, c0) * (1.0 - tx) + field.at(r0, c1) * tx;
  const double bot = field.at(r1, c0) * (1.0 - tx) + field.at(r1, c1) * tx;
  return top * (1.0 - ty) + bot * ty;
}

}  // namespace riskfield
