#include "riskfield/scenario.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace riskfield {
namespace {

void check_vehicle(const VehicleState& v, const std::string& role,
                   std::vector<std::string>* out) {
  auto fail = [&](const std::string& rule) {
    out->push_back(role + " '" + v.id + "': " + rule);
  };
  if (!(v.length > 0.0)) fail("length must be > 0");
  if (!(v.width > 0.0)) fail("width must be > 0");
  if (v.v < 0.0) fail("speed must be >= 0");
  if (v.lane_id < 1) fail("lane_id must be >= 1");
  if (!std::isfinite(v.x) || !std::isfinite(v.y)) fail("position must be finite");
  if (!std::isfinite(v.yaw)) fail("yaw must be finite");
}

void check_road(const RoadGeometry& road, std::vector<std::string>* out) {
  for (size_t i = 0; i < road.boundaries.size(); ++i) {
    const BoundarySpec& b = road.boundaries[i];
    std::string name = "boundary " + std::to_string(i);
    if (!(b.amp > 0.0)) out->push_back(name + ": amp must be > 0");
    if (!(b.rate > 0.0)) out->push_back(name + ": rate must be > 0");
    if (b.threshold < 0.0) out->push_back(name + ": threshold must be >= 0");
  }
  if (!road.segments.empty() && road.boundaries.size() != 2) {
    out->push_back("road: segmented roads need exactly 2 boundaries, got " +
                   std::to_string(road.boundaries.size()));
  }
  for (size_t i = 0; i < road.segments.size(); ++i) {
    if (!(road.segments[i].width > 0.0)) {
      out->push_back("segment " + std::to_string(i) + ": width must be > 0");
    }
  }

  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  if (road.boundaries.size() == 2) {
    lo = std::min(road.boundaries[0].position, road.boundaries[1].position);
    hi = std::max(road.boundaries[0].position, road.boundaries[1].position);
  }
  double min_amber = std::numeric_limits<double>::infinity();
  double max_white = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < road.marking_lines.size(); ++i) {
    const MarkingLineSpec& l = road.marking_lines[i];
    std::string name = "marking line " + std::to_string(i);
    if (!(l.amp > 0.0)) out->push_back(name + ": amp must be > 0");
    if (!(l.rate > 0.0)) out->push_back(name + ": rate must be > 0");
    if (road.boundaries.size() == 2 && !(l.position > lo && l.position < hi)) {
      out->push_back(name + ": position must lie strictly between the boundaries");
    }
    if (l.kind == MarkingKind::kDoubleAmber) min_amber = std::min(min_amber, l.amp);
    if (l.kind == MarkingKind::kWhiteDotted) max_white = std::max(max_white, l.amp);
  }
  if (std::isfinite(min_amber) && std::isfinite(max_white) && !(min_amber > max_white)) {
    out->push_back("road: double-amber amp must exceed white-dotted amp");
  }
}

}  // namespace

std::vector<std::string> validate_scene(const SceneFrame& frame) {
  std::vector<std::string> violations;
  check_vehicle(frame.ego, "ego", &violations);
  for (const VehicleState& obs : frame.obstacles) {
    check_vehicle(obs, "obstacle", &violations);
    if (obs.id == frame.ego.id) {
      violations.push_back("obstacle '" + obs.id + "': duplicates the ego id");
    }
  }
  for (const PedestrianState& p : frame.pedestrians) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      violations.push_back("pedestrian '" + p.id + "': position must be finite");
    }
  }
  check_road(frame.road, &violations);
  return violations;
}

std::vector<std::string> validate_frames(const std::vector<SceneFrame>& frames) {
  std::vector<std::string> violations;
  for (size_t i = 0; i < frames.size(); ++i) {
    for (const std::string& v : validate_scene(frames[i])) {
      violations.push_back("frame " + std::to_string(i) + ": " + v);
    }
    if (i > 0 && !(frames[i].timestamp > frames[i - 1].timestamp)) {
      std::ostringstream msg;
      msg << "frame " << i << ": timestamp " << frames[i].timestamp
          << " not greater than previous " << frames[i - 1].timestamp;
      violations.push_back(msg.str());
    }
  }
  return violations;
}

}  // namespace riskfield
