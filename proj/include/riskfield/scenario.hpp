// Domain types shared by all field modules: traffic participants, road
// geometry, frames, and composition weights, plus scene validation.
#ifndef RISKFIELD_SCENARIO_HPP_
#define RISKFIELD_SCENARIO_HPP_

#include <string>
#include <vector>

#include "riskfield/geometry.hpp"

namespace riskfield {

struct VehicleState {
  std::string id;
  double x = 0.0;       // lateral world position, m
  double y = 0.0;       // longitudinal world position, m
  double v = 0.0;       // speed, m/s
  double a = 0.0;       // longitudinal acceleration, m/s^2
  double yaw = 0.0;     // heading, rad, CCW positive, 0 = +y longitudinal axis
  double length = 4.5;  // body length, m
  double width = 1.8;   // body width, m
  int lane_id = 1;

  Vec2 position() const { return {x, y}; }
  friend bool operator==(const VehicleState&, const VehicleState&) = default;
};

struct PedestrianState {
  std::string id;
  double x = 0.0;
  double y = 0.0;

  Vec2 position() const { return {x, y}; }
  friend bool operator==(const PedestrianState&, const PedestrianState&) = default;
};

struct BoundarySpec {
  double amp = 5.0;        // risk amplitude
  double threshold = 0.3;  // danger-zone distance t_b, m
  double rate = 1.0;       // decay-rate coefficient k_b, m
  double position = 0.0;   // lateral world coordinate of the boundary line, m
  friend bool operator==(const BoundarySpec&, const BoundarySpec&) = default;
};

enum class MarkingKind { kWhiteDotted, kDoubleAmber };

struct MarkingLineSpec {
  MarkingKind kind = MarkingKind::kWhiteDotted;
  double amp = 1.0;       // risk amplitude
  double position = 0.0;  // lateral world coordinate l_pos, m
  double rate = 0.5;      // width coefficient k_l, m^2
  friend bool operator==(const MarkingLineSpec&, const MarkingLineSpec&) = default;
};

// A longitudinal road portion starting at start_y with a rotated boundary
// direction. Segments partition the grid by y; cells below the first
// segment's start_y belong to no segment.
struct RoadSegment {
  double start_y = 0.0;   // R_y, m
  double width = 3.5;     // R_w, m
  double rotation = 0.0;  // theta1, rad
  friend bool operator==(const RoadSegment&, const RoadSegment&) = default;
};

struct RoadGeometry {
  std::vector<BoundarySpec> boundaries;
  std::vector<MarkingLineSpec> marking_lines;
  std::vector<RoadSegment> segments;
  friend bool operator==(const RoadGeometry&, const RoadGeometry&) = default;
};

struct SceneFrame {
  double timestamp = 0.0;  // seconds
  VehicleState ego;
  std::vector<VehicleState> obstacles;
  std::vector<PedestrianState> pedestrians;
  RoadGeometry road;
  friend bool operator==(const SceneFrame&, const SceneFrame&) = default;
};

struct CompositionWeights {
  double alpha_r = 1.0;
  double alpha_v = 1.0;
  double alpha_p = 1.0;
  friend bool operator==(const CompositionWeights&, const CompositionWeights&) = default;
};

// Returns human-readable descriptions of every invariant violation in the
// frame; empty means the frame is well formed. Violations are data, not
// errors: callers decide whether to proceed.
std::vector<std::string> validate_scene(const SceneFrame& frame);

// Frame-sequence validation: per-frame checks plus strictly increasing
// timestamps.
std::vector<std::string> validate_frames(const std::vector<SceneFrame>& frames);

}  // namespace riskfield

#endif  // RISKFIELD_SCENARIO_HPP_
