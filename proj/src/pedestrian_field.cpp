#include "riskfield/pedestrian_field.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "riskfield/parallel.hpp"

namespace riskfield {
namespace {

double pearson_base(double v, double s, const PearsonParams& p) {
  const double a = (v - p.mu_v) / p.delta_v;
  const double b = (s - p.mu_s) / p.delta_s;
  return p.beta + a * a + b * b - 2.0 * p.rho * a * b;
}

}  // namespace

std::array<double, 8> to_array(const PearsonParams& p) {
  return {p.mu_v, p.mu_s, p.delta_v, p.delta_s, p.rho, p.gamma, p.beta, p.b};
}

PearsonParams pearson_from_array(const std::array<double, 8>& a) {
  return {a[0], a[1], a[2], a[3], a[4], a[5], a[6], a[7]};
}

double pearson_intensity(double v, double s, const PearsonParams& p) {
  const double base = pearson_base(v, s, p);
  if (!(base > 0.0)) {
    std::ostringstream msg;
    msg << "pearson intensity undefined at v=" << v << ", s=" << s
        << ": quadratic-form base " << base << " is not positive";
    throw std::domain_error(msg.str());
  }
  return p.gamma * std::pow(base, -p.b);
}

double ttc(double s, double v, double ttc_max) {
  if (s < 0.0) {
    std::ostringstream msg;
    msg << "ttc: distance must be non-negative, got " << s;
    throw std::invalid_argument(msg.str());
  }
  if (v <= kMinTtcSpeed) return ttc_max;
  return s / v;
}

double pedestrian_risk(double v, double s, const PedestrianRiskParams& params) {
  const double lambda = std::min(pearson_intensity(v, s, params.pearson), kLambdaCap);
  return params.eta1 * std::exp(lambda) + params.eta2 * std::exp(-ttc(s, v));
}

PedestrianSurface pedestrian_surface(AxisRange v_range, AxisRange s_range,
                                     const PedestrianRiskParams& params) {
  PedestrianSurface surface;
  surface.v_range = v_range;
  surface.s_range = s_range;
  surface.values.assign(static_cast<size_t>(v_range.n) * s_range.n, 0.0);
  for (int iv = 0; iv < v_range.n; ++iv) {
    const double v = v_range.value(iv);
    for (int is = 0; is < s_range.n; ++is) {
      const double s = s_range.value(is);
      // The surface is total over the lattice: a non-positive quadratic-form
      // base is the blow-up region of the intensity, so it takes the clamp.
      double lambda = kLambdaCap;
      if (pearson_base(v, s, params.pearson) > 0.0) {
        lambda = std::min(pearson_intensity(v, s, params.pearson), kLambdaCap);
      }
      surface.values[static_cast<size_t>(iv) * s_range.n + is] =
          params.eta1 * std::exp(lambda) + params.eta2 * std::exp(-ttc(s, v));
    }
  }
  return surface;
}

GridField pedestrian_grid_field(const VehicleState& ego,
                                const std::vector<PedestrianState>& pedestrians,
                                const GridSpec& grid, const PedestrianRiskParams& params) {
  GridField field(grid);
  const double two_sigma_sq = 2.0 * params.footprint_sigma * params.footprint_sigma;
  for (const PedestrianState& ped : pedestrians) {
    if (!world_to_cell(ped.position(), grid).has_value()) continue;
    const double s = norm(ego.position() - ped.position());
    const double risk = pedestrian_risk(ego.v, s, params);
    for_row_blocks(grid.rows, max_workers(), [&](int row_begin, int row_end) {
      for (int row = row_begin; row < row_end; ++row) {
        for (int col = 0; col < grid.cols; ++col) {
          const Vec2 d = grid.cell_center(row, col) - ped.position();
          field.at(row, col) += risk * std::exp(-(d.x * d.x + d.y * d.y) / two_sigma_sq);
        }
      }
    });
  }
  return field;
}

}  // namespace riskfield
