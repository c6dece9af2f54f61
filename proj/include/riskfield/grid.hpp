// Rectangular world-aligned scalar field grid and world<->cell mapping.
//
// Conventions, fixed across the whole library:
//   - world x is lateral (across lanes), world y is longitudinal (along road);
//   - `origin` is the world position of the minimum corner of cell (0, 0);
//   - row index follows y, column index follows x;
//   - values are stored row-major: values[row * cols + col].
#ifndef RISKFIELD_GRID_HPP_
#define RISKFIELD_GRID_HPP_

#include <optional>
#include <vector>

#include "riskfield/geometry.hpp"

namespace riskfield {

struct CellIndex {
  int row = 0;
  int col = 0;
  friend bool operator==(const CellIndex&, const CellIndex&) = default;
};

struct GridSpec {
  Vec2 origin;             // world coordinates of the min corner of cell (0,0)
  double cell_size = 0.25; // meters per cell edge, square cells
  int rows = 0;
  int cols = 0;

  bool valid() const { return cell_size > 0.0 && rows > 0 && cols > 0; }
  Vec2 cell_center(int row, int col) const {
    return {origin.x + (col + 0.5) * cell_size, origin.y + (row + 0.5) * cell_size};
  }
  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

// Cell containing `point`, or nullopt when the point lies outside the grid.
std::optional<CellIndex> world_to_cell(Vec2 point, const GridSpec& spec);

struct GridField {
  GridSpec spec;
  std::vector<double> values;  // rows * cols, row-major

  GridField() = default;
  explicit GridField(const GridSpec& s)
      : spec(s), values(static_cast<size_t>(s.rows) * s.cols, 0.0) {}

  double& at(int row, int col) { return values[static_cast<size_t>(row) * spec.cols + col]; }
  double at(int row, int col) const {
    return values[static_cast<size_t>(row) * spec.cols + col];
  }
  double max_value() const;
};

// Default evaluation window: +/-15 m lateral by +/-50 m longitudinal around a
// center point (normally the ego position), at the requested resolution.
GridSpec default_grid(Vec2 center, double cell_size = 0.25);

// Bilinear interpolation of the field at a world point, treating each stored
// value as the sample at its cell center. Points outside the cell-center hull
// clamp to the border sample.
double sample_bilinear(const GridField& field, Vec2 point);

}  // namespace riskfield

#endif  // RISKFIELD_GRID_HPP_
