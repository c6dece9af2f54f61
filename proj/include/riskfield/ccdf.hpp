// CCDF risk metric: exceedance curves over a windowed field and their
// trapezoidal curve area.
#ifndef RISKFIELD_CCDF_HPP_
#define RISKFIELD_CCDF_HPP_

#include <vector>

#include "riskfield/grid.hpp"
#include "riskfield/scenario.hpp"

namespace riskfield {

constexpr double kDefaultWindowMargin = 5.0;  // m
constexpr int kDefaultThresholdCount = 64;

struct CCDFCurve {
  std::vector<double> thresholds;     // strictly ascending
  std::vector<double> probabilities;  // P(X > a), monotone non-increasing
};

// Half-open row/col bounds of the sub-grid used for the metric.
struct MetricWindow {
  int row_begin = 0;
  int row_end = 0;
  int col_begin = 0;
  int col_end = 0;

  int cell_count() const { return (row_end - row_begin) * (col_end - col_begin); }
};

MetricWindow full_window(const GridSpec& spec);

// P(X > a) for each threshold, counting cells inside the window. Thresholds
// must be ascending and the window nonempty and inside the grid; violations
// throw std::invalid_argument.
CCDFCurve empirical_ccdf(const GridField& field, const MetricWindow& window,
                         const std::vector<double>& thresholds);

// Trapezoidal integral of probability over thresholds.
double curve_area(const CCDFCurve& curve);

// Axis-aligned window covering the ego and obstacle positions, padded by
// `margin` meters and clipped to the grid. Both positions must be inside the
// grid extent.
MetricWindow default_window(const GridField& field, const VehicleState& obstacle,
                            const VehicleState& ego, double margin = kDefaultWindowMargin);

// `count` uniform thresholds from 0 to the window maximum. A window of all
// zeros degenerates to the single threshold {0}.
std::vector<double> default_thresholds(const GridField& field, const MetricWindow& window,
                                       int count = kDefaultThresholdCount);

// Maximum field value inside the window.
double window_max(const GridField& field, const MetricWindow& window);

}  // namespace riskfield

#endif  // RISKFIELD_CCDF_HPP_
