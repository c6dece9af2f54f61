// Road risk component: exponential boundary risk plus Gaussian marking-line
// risk, with support for rotated road segments.
#ifndef RISKFIELD_ROAD_FIELD_HPP_
#define RISKFIELD_ROAD_FIELD_HPP_

#include <vector>

#include "riskfield/grid.hpp"
#include "riskfield/scenario.hpp"

namespace riskfield {

// Boundary parameters after conversion into a rotated segment's frame.
struct RotatedBoundaryParams {
  double dis_bm = 0.0;  // converted distance, m
  double t_bm = 0.0;    // converted threshold, m
};

// Amp_b * (e^{|dis_b - t_b| / k_b} - 1). dis_b is the unsigned lateral
// distance from the evaluation point to the boundary line; risk is exactly 0
// at the threshold distance and grows exponentially away from it.
double boundary_risk_at(double dis_b, const BoundarySpec& spec);

// Distance/threshold conversion for a rotated segment:
//   dis_bm = R_y + R_w - dis_b * cos^2(theta1)
//   t_bm   = R_y + R_w - t_b  * cos^2(theta1)
RotatedBoundaryParams convert_rotated(double dis_b, double t_b, const RoadSegment& segment);

// Boundary risk evaluated on converted parameters:
// Amp_b * (e^{|dis_bm - t_bm| / k_b} - 1).
double rotated_boundary_risk_at(const RotatedBoundaryParams& params, const BoundarySpec& spec);

// Sum over lines of Amp_l * e^{-(dis_l - l_pos)^2 / k_l} at lateral
// coordinate dis_l.
double marking_line_risk_at(double dis_l, const std::vector<MarkingLineSpec>& lines);

// Full road component over the grid. When the road has segments, each cell
// uses the segment containing its y coordinate (rotated conversion applied);
// cells below the first segment get 0. Without segments the whole grid is
// treated as one unrotated road.
GridField road_field(const RoadGeometry& road, const GridSpec& grid);

}  // namespace riskfield

#endif  // RISKFIELD_ROAD_FIELD_HPP_
