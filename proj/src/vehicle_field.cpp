#include "riskfield/vehicle_field.hpp"

#include <algorithm>
#include <cmath>

#include "riskfield/parallel.hpp"

namespace riskfield {

double cosine_similarity(Vec2 u, Vec2 w) {
  const double nu = norm(u);
  const double nw = norm(w);
  if (nu == 0.0 || nw == 0.0) return 0.0;
  return dot(u, w) / (nu * nw);
}

RelativeMotion relative_motion(const VehicleState& ego, const VehicleState& obs) {
  RelativeMotion rm;
  rm.d_v = {ego.x - obs.x, ego.y - obs.y};
  rm.re_v = obs.v - ego.v;
  rm.re_yaw = obs.yaw - ego.yaw;
  rm.yaw_v = {std::cos(rm.re_yaw), std::sin(rm.re_yaw)};
  rm.similarity = cosine_similarity(rm.d_v, rm.yaw_v);
  rm.re_v_adjusted = rm.re_v;

  if (ego.lane_id == obs.lane_id) {
    const bool aligned = std::abs(rm.re_yaw) < kYawZeroEps;
    rm.re_v_adjusted = rm.similarity >= 0.0 ? rm.re_v : -rm.re_v;
    if (rm.similarity > 0.0 && std::cos(rm.re_yaw) < 0.0) {
      // Oncoming in the same lane: always a closing threat.
      rm.tendency = Tendency::kApproaching;
    } else if (!aligned || rm.re_v_adjusted > 0.0) {
      // Obstacle turning out of the lane, or pulling away.
      rm.tendency = Tendency::kLeaving;
    } else {
      rm.tendency = Tendency::kApproaching;
    }
  } else {
    const bool ahead = rm.d_v.y >= 0.0;
    const bool yaw_positive = rm.re_yaw >= 0.0;
    rm.tendency = (ahead == yaw_positive) ? Tendency::kApproaching : Tendency::kLeaving;
  }
  return rm;
}

TendencyCoefficient compute_k(const RelativeMotion& rm, const VehicleState& ego,
                              const VehicleState& obs) {
  if (rm.tendency == Tendency::kApproaching) {
    const double re_v_pos = std::max(rm.re_v_adjusted, 0.0);
    return {1.0 + std::log2(1.0 + re_v_pos)};
  }
  const double ego_v = std::max(ego.v, kMinEgoSpeed);
  return {(1.0 + std::exp(-rm.re_v_adjusted / ego_v)) * (obs.width / obs.length)};
}

Vec2 rotate_about(Vec2 point, Vec2 center, double theta2) {
  return center + rotated_ccw(point - center, theta2);
}

double virtual_distance(Vec2 point, const VehicleState& obs, const TendencyCoefficient& k) {
  const Vec2 center = obs.position();
  const Vec2 convt = rotate_about(point, center, obs.yaw);
  const double dx = (center.x - convt.x) / (obs.length * k.k);
  const double dy = (center.y - convt.y) / obs.width;
  return std::sqrt(dx * dx + dy * dy);
}

double reach_distance(double obs_v, double a, double t) {
  return std::max(obs_v * t + 0.5 * a * t * t, 0.0);
}

GridField vehicle_field_kernel(const VehicleState& obs, double k, double similarity,
                               const std::vector<double>& accel_samples, double delta,
                               double horizon, const GridSpec& grid) {
  GridField field(grid);
  if (accel_samples.empty()) return field;

  const size_t num = accel_samples.size();
  std::vector<double> reach(num);
  std::vector<double> exponent_scale(num);  // delta * S * a_i, per sample
  for (size_t i = 0; i < num; ++i) {
    reach[i] = reach_distance(obs.v, accel_samples[i], horizon);
    exponent_scale[i] = delta * similarity * accel_samples[i];
  }

  const Vec2 center = obs.position();
  const Vec2 heading = heading_vector(obs.yaw);
  const TendencyCoefficient tk{k};

  for_row_blocks(grid.rows, max_workers(), [&](int row_begin, int row_end) {
    for (int row = row_begin; row < row_end; ++row) {
      for (int col = 0; col < grid.cols; ++col) {
        const Vec2 p = grid.cell_center(row, col);
        const double dis = virtual_distance(p, obs, tk);
        const Vec2 offset = p - center;
        const double offset_norm = norm(offset);
        // cos(theta3): angle between the obstacle motion direction and the
        // cell offset; a cell on the center has no direction, use 0.
        const double cos_theta3 =
            offset_norm > 0.0 ? dot(heading, offset) / offset_norm : 0.0;
        double acc = 0.0;
        for (size_t i = 0; i < num; ++i) {
          // Range control: beyond the reachable distance the virtual
          // distance is inflated exponentially, suppressing the risk.
          const double dvi = dis > reach[i] ? std::exp(dis) : dis;
          acc += std::exp(exponent_scale[i] * cos_theta3) /
                 std::max(dvi, kMinVirtualDistance);
        }
        field.at(row, col) = acc / static_cast<double>(num);
      }
    }
  });

  const double max = field.max_value();
  if (max > 0.0) {
    for (double& v : field.values) v /= max;
  }
  return field;
}

GridField vehicle_field_single(const VehicleState& ego, const VehicleState& obs,
                               const GridSpec& grid, const VehicleFieldParams& params) {
  const RelativeMotion rm = relative_motion(ego, obs);
  const TendencyCoefficient k = compute_k(rm, ego, obs);
  AccelSampler sampler = params.sampler;
  sampler.mean = obs.a;
  const std::vector<double> samples = sample_accelerations(sampler);
  return vehicle_field_kernel(obs, k.k, rm.similarity, samples, params.delta,
                              params.horizon, grid);
}

VehicleFieldResult vehicle_field(const VehicleState& ego,
                                 const std::vector<VehicleState>& obstacles,
                                 const GridSpec& grid, const VehicleFieldParams& params) {
  VehicleFieldResult result;
  result.combined = GridField(grid);
  result.per_obstacle.reserve(obstacles.size());
  for (size_t i = 0; i < obstacles.size(); ++i) {
    VehicleFieldParams per = params;
    per.sampler.seed = derive_seed(params.sampler.seed, i);
    GridField single = vehicle_field_single(ego, obstacles[i], grid, per);
    for (size_t c = 0; c < single.values.size(); ++c) {
      result.combined.values[c] = std::max(result.combined.values[c], single.values[c]);
    }
    result.per_obstacle.push_back(std::move(single));
  }
  return result;
}

}  // namespace riskfield
