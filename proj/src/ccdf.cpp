#include "riskfield/ccdf.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace riskfield {
namespace {

void require_window(const MetricWindow& w, const GridSpec& spec) {
  if (w.row_begin < 0 || w.col_begin < 0 || w.row_end > spec.rows || w.col_end > spec.cols ||
      w.row_begin >= w.row_end || w.col_begin >= w.col_end) {
    std::ostringstream msg;
    msg << "metric window [" << w.row_begin << "," << w.row_end << ")x[" << w.col_begin
        << "," << w.col_end << ") invalid for a " << spec.rows << "x" << spec.cols << " grid";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

MetricWindow full_window(const GridSpec& spec) { return {0, spec.rows, 0, spec.cols}; }

CCDFCurve empirical_ccdf(const GridField& field, const MetricWindow& window,
                         const std::vector<double>& thresholds) {
  require_window(window, field.spec);
  for (size_t i = 1; i < thresholds.size(); ++i) {
    if (!(thresholds[i] > thresholds[i - 1])) {
      throw std::invalid_argument("ccdf thresholds must be strictly ascending");
    }
  }

  std::vector<double> cells;
  cells.reserve(static_cast<size_t>(window.cell_count()));
  for (int row = window.row_begin; row < window.row_end; ++row) {
    for (int col = window.col_begin; col < window.col_end; ++col) {
      cells.push_back(field.at(row, col));
    }
  }
  std::sort(cells.begin(), cells.end());

  CCDFCurve curve;
  curve.thresholds = thresholds;
  curve.probabilities.reserve(thresholds.size());
  const double total = static_cast<double>(cells.size());
  for (double a : thresholds) {
    // Count of cells with value > a via the first position after `a`.
    const auto it = std::upper_bound(cells.begin(), cells.end(), a);
    curve.probabilities.push_back(static_cast<double>(cells.end() - it) / total);
  }
  return curve;
}

double curve_area(const CCDFCurve& curve) {
  double area = 0.0;
  for (size_t i = 1; i < curve.thresholds.size(); ++i) {
    const double width = curve.thresholds[i] - curve.thresholds[i - 1];
    area += width * 0.5 * (curve.probabilities[i] + curve.probabilities[i - 1]);
  }
  return area;
}

MetricWindow default_window(const GridField& field, const VehicleState& obstacle,
                            const VehicleState& ego, double margin) {
  const GridSpec& spec = field.spec;
  if (!world_to_cell(ego.position(), spec) || !world_to_cell(obstacle.position(), spec)) {
    throw std::invalid_argument(
        "default_window: ego and obstacle must lie inside the grid extent");
  }
  const double x_lo = std::min(ego.x, obstacle.x) - margin;
  const double x_hi = std::max(ego.x, obstacle.x) + margin;
  const double y_lo = std::min(ego.y, obstacle.y) - margin;
  const double y_hi = std::max(ego.y, obstacle.y) + margin;

  auto to_cell = [&](double v, double origin) {
    return static_cast<int>(std::floor((v - origin) / spec.cell_size));
  };
  MetricWindow w;
  w.row_begin = std::clamp(to_cell(y_lo, spec.origin.y), 0, spec.rows - 1);
  w.row_end = std::clamp(to_cell(y_hi, spec.origin.y) + 1, w.row_begin + 1, spec.rows);
  w.col_begin = std::clamp(to_cell(x_lo, spec.origin.x), 0, spec.cols - 1);
  w.col_end = std::clamp(to_cell(x_hi, spec.origin.x) + 1, w.col_begin + 1, spec.cols);
  return w;
}

double window_max(const GridField& field, const MetricWindow& window) {
  require_window(window, field.spec);
  double best = 0.0;
  for (int row = window.row_begin; row < window.row_end; ++row) {
    for (int col = window.col_begin; col < window.col_end; ++col) {
      best = std::max(best, field.at(row, col));
    }
  }
  return best;
}

std::vector<double> default_thresholds(const GridField& field, const MetricWindow& window,
                                       int count) {
  const double max = window_max(field, window);
  if (!(max > 0.0) || count < 2) return {0.0};
  std::vector<double> thresholds(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    thresholds[static_cast<size_t>(i)] = max * i / (count - 1);
  }
  return thresholds;
}

}  // namespace riskfield
