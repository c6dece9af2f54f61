// Pedestrian risk component: near-accident event intensity (Pearson-family
// surface) combined with a TTC term, plus the grid deposit used to attach
// point risks to world space.
#ifndef RISKFIELD_PEDESTRIAN_FIELD_HPP_
#define RISKFIELD_PEDESTRIAN_FIELD_HPP_

#include <array>
#include <vector>

#include "riskfield/grid.hpp"
#include "riskfield/scenario.hpp"

namespace riskfield {

constexpr double kTtcCap = 100.0;    // s, returned when the ego is near-stationary
constexpr double kMinTtcSpeed = 0.1; // m/s
constexpr double kLambdaCap = 10.0;  // intensity clamp before exponentiation

struct PearsonParams {
  double mu_v = 4.0;     // m/s
  double mu_s = 10.0;    // m
  double delta_v = 2.0;  // m/s
  double delta_s = 5.0;  // m
  double rho = 0.3;
  double gamma = 2.0;
  double beta = 1.0;
  double b = 2.0;
};

// Parameter order used by scenario files ("pearson_params" key).
std::array<double, 8> to_array(const PearsonParams& p);
PearsonParams pearson_from_array(const std::array<double, 8>& a);

struct PedestrianRiskParams {
  double eta1 = 0.5;  // intensity-term weight; eta1 + eta2 = 1
  double eta2 = 0.5;  // TTC-term weight
  PearsonParams pearson;
  double footprint_sigma = 0.5;  // m, Gaussian deposit width on the grid
};

// lambda = gamma * (beta + A^2 + B^2 - 2*rho*A*B)^{-b} with A = (v-mu_v)/delta_v
// and B = (s-mu_s)/delta_s. Throws std::domain_error (naming v and s) when the
// base is not positive, which can happen for |rho| >= 1.
double pearson_intensity(double v, double s, const PearsonParams& p);

// s / v, capped at ttc_max when v <= kMinTtcSpeed. Negative distance throws
// std::invalid_argument.
double ttc(double s, double v, double ttc_max = kTtcCap);

// E_P = eta1 * e^{min(lambda, kLambdaCap)} + eta2 * e^{-TTC}.
double pedestrian_risk(double v, double s, const PedestrianRiskParams& params);

struct AxisRange {
  double lo = 0.0;
  double hi = 1.0;
  int n = 2;  // sample count, >= 2

  double value(int i) const { return lo + (hi - lo) * i / (n - 1); }
};

struct PedestrianSurface {
  AxisRange v_range;
  AxisRange s_range;
  std::vector<double> values;  // v-major: values[iv * s_range.n + is]

  double at(int iv, int is) const { return values[static_cast<size_t>(iv) * s_range.n + is]; }
};

// E_P over the (ego speed, distance) lattice. Total over the domain: points
// where the intensity base is non-positive take the clamped maximum intensity
// (the base->0+ limit direction).
PedestrianSurface pedestrian_surface(AxisRange v_range, AxisRange s_range,
                                     const PedestrianRiskParams& params);

// For each pedestrian inside the grid, deposits E_P(ego_v, |ego - ped|) as an
// isotropic Gaussian footprint centered on the pedestrian; contributions sum
// across pedestrians. A pedestrian outside the grid contributes nothing.
GridField pedestrian_grid_field(const VehicleState& ego,
                                const std::vector<PedestrianState>& pedestrians,
                                const GridSpec& grid, const PedestrianRiskParams& params);

}  // namespace riskfield

#endif  // RISKFIELD_PEDESTRIAN_FIELD_HPP_
