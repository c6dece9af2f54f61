#include "riskfield/road_field.hpp"

#include <algorithm>
#include <cmath>

#include "riskfield/parallel.hpp"

namespace riskfield {

double boundary_risk_at(double dis_b, const BoundarySpec& spec) {
  return spec.amp * (std::exp(std::abs(dis_b - spec.threshold) / spec.rate) - 1.0);
}

RotatedBoundaryParams convert_rotated(double dis_b, double t_b, const RoadSegment& segment) {
  const double c = std::cos(segment.rotation);
  const double cos2 = c * c;
  const double base = segment.start_y + segment.width;
  return {base - dis_b * cos2, base - t_b * cos2};
}

double rotated_boundary_risk_at(const RotatedBoundaryParams& params, const BoundarySpec& spec) {
  return spec.amp * (std::exp(std::abs(params.dis_bm - params.t_bm) / spec.rate) - 1.0);
}

double marking_line_risk_at(double dis_l, const std::vector<MarkingLineSpec>& lines) {
  double total = 0.0;
  for (const MarkingLineSpec& line : lines) {
    const double d = dis_l - line.position;
    total += line.amp * std::exp(-d * d / line.rate);
  }
  return total;
}

namespace {

// Index of the segment containing longitudinal coordinate y, or -1 when y
// lies before the first segment. Segments are taken in ascending start_y
// order; the last one extends to +infinity.
int segment_index(const std::vector<const RoadSegment*>& ordered, double y) {
  int found = -1;
  for (size_t i = 0; i < ordered.size(); ++i) {
    if (y >= ordered[i]->start_y) found = static_cast<int>(i);
  }
  return found;
}

}  // namespace

GridField road_field(const RoadGeometry& road, const GridSpec& grid) {
  GridField field(grid);

  std::vector<const RoadSegment*> ordered;
  ordered.reserve(road.segments.size());
  for (const RoadSegment& s : road.segments) ordered.push_back(&s);
  std::sort(ordered.begin(), ordered.end(),
            [](const RoadSegment* a, const RoadSegment* b) { return a->start_y < b->start_y; });

  for_row_blocks(grid.rows, max_workers(), [&](int row_begin, int row_end) {
    for (int row = row_begin; row < row_end; ++row) {
      const double y = grid.cell_center(row, 0).y;
      const RoadSegment* segment = nullptr;
      bool covered = true;
      if (!ordered.empty()) {
        const int idx = segment_index(ordered, y);
        if (idx < 0) {
          covered = false;  // before the first segment: no road, zero risk
        } else {
          segment = ordered[static_cast<size_t>(idx)];
        }
      }
      for (int col = 0; col < grid.cols; ++col) {
        if (!covered) continue;
        const double x = grid.cell_center(row, col).x;
        double e_b = 0.0;
        for (const BoundarySpec& b : road.boundaries) {
          const double dis_b = std::abs(x - b.position);
          if (segment != nullptr && segment->rotation != 0.0) {
            e_b += rotated_boundary_risk_at(convert_rotated(dis_b, b.threshold, *segment), b);
          } else {
            e_b += boundary_risk_at(dis_b, b);
          }
        }
        field.at(row, col) = e_b + marking_line_risk_at(x, road.marking_lines);
      }
    }
  });
  return field;
}

}  // namespace riskfield
