// Obstacle-vehicle risk component: anisotropic virtual-distance ellipse,
// motion-tendency coefficient, and Monte-Carlo acceleration sampling.
#ifndef RISKFIELD_VEHICLE_FIELD_HPP_
#define RISKFIELD_VEHICLE_FIELD_HPP_

#include <vector>

#include "riskfield/grid.hpp"
#include "riskfield/rng.hpp"
#include "riskfield/scenario.hpp"

namespace riskfield {

// Virtual distances below this floor are clamped before division so the
// field peak stays finite at the obstacle center.
constexpr double kMinVirtualDistance = 1e-3;
// Speed floor for the leaving-branch ratio when the ego is (near) stationary.
constexpr double kMinEgoSpeed = 0.1;  // m/s
// |re_yaw| below this counts as "no relative heading" in the tendency logic.
constexpr double kYawZeroEps = 1e-9;  // rad

enum class Tendency { kApproaching, kLeaving };

struct RelativeMotion {
  Vec2 d_v;                  // ego - obstacle position difference, m
  Vec2 yaw_v;                // (cos re_yaw, sin re_yaw)
  double re_v = 0.0;         // obs_v - ego_v, m/s
  double re_yaw = 0.0;       // obs_yaw - ego_yaw, rad
  double similarity = 0.0;   // cosine similarity of d_v and yaw_v, in [-1, 1]
  double re_v_adjusted = 0.0;  // re_v after the same-lane sign correction
  Tendency tendency = Tendency::kApproaching;
};

struct TendencyCoefficient {
  double k = 1.0;  // > 0
};

struct VehicleFieldParams {
  double delta = 0.05;   // exponent scale coefficient
  double horizon = 0.1;  // prediction horizon t, s
  AccelSampler sampler;  // mean is overridden per obstacle with its current a
};

// (u . w) / (|u||w|); returns 0 when either vector has zero norm.
double cosine_similarity(Vec2 u, Vec2 w);

// Relative kinematics plus the approaching/leaving classification.
//
// Same lane: an oncoming obstacle (similarity > 0 and cos(re_yaw) < 0) is
// always approaching; otherwise a nonzero relative heading, or a positive
// sign-corrected relative speed (pulling away), means leaving, and the rest
// approach. Different lane: approaching when sign(d_v.y) == sign(re_yaw).
RelativeMotion relative_motion(const VehicleState& ego, const VehicleState& obs);

// Tendency coefficient:
//   approaching: k = 1 + log2(1 + max(re_v_adjusted, 0))
//   leaving:     k = (1 + e^{-re_v_adjusted / max(ego_v, 0.1)}) * (obs_w / obs_l)
TendencyCoefficient compute_k(const RelativeMotion& rm, const VehicleState& ego,
                              const VehicleState& obs);

// Rotates `point` about `center` counterclockwise by theta2.
Vec2 rotate_about(Vec2 point, Vec2 center, double theta2);

// Ellipse-metric distance: the point is rotated about the obstacle center by
// the obstacle yaw, then
//   sqrt(dx^2 / (obs_l * k)^2 + dy^2 / obs_w^2)
// over the rotated offset. Zero exactly at the center.
double virtual_distance(Vec2 point, const VehicleState& obs, const TendencyCoefficient& k);

// Reachable distance over the horizon: max(v*t + a*t^2/2, 0).
double reach_distance(double obs_v, double a, double t);

// Field evaluation with the motion context (k, similarity, acceleration
// samples) already fixed. Per sample: virtual distances beyond the sample's
// reach distance are inflated to e^{dis}, then
//   E = e^{delta * S * a * cos(theta3)} / max(dis, kMinVirtualDistance)
// with theta3 the angle between the obstacle heading and the cell offset.
// Sample fields are averaged, then scaled so the maximum is exactly 1
// (an identically zero field stays zero).
GridField vehicle_field_kernel(const VehicleState& obs, double k, double similarity,
                               const std::vector<double>& accel_samples, double delta,
                               double horizon, const GridSpec& grid);

// Single-obstacle field: classifies the relative motion, derives k, draws
// acceleration samples around obs.a, and runs the kernel.
GridField vehicle_field_single(const VehicleState& ego, const VehicleState& obs,
                               const GridSpec& grid, const VehicleFieldParams& params);

struct VehicleFieldResult {
  GridField combined;                 // cellwise max of the per-obstacle fields
  std::vector<GridField> per_obstacle;  // normalized fields, one per obstacle
};

// Multi-obstacle field. Each obstacle gets an independent seed derived from
// params.sampler.seed and its index, so evaluation order cannot change
// results. Per-obstacle fields are kept for the CCDF metric; the combined
// field takes the cellwise maximum (each input is already normalized to 1).
VehicleFieldResult vehicle_field(const VehicleState& ego,
                                 const std::vector<VehicleState>& obstacles,
                                 const GridSpec& grid, const VehicleFieldParams& params);

}  // namespace riskfield

#endif  // RISKFIELD_VEHICLE_FIELD_HPP_
