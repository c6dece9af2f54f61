#include "riskfield/scenario_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace riskfield {
namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& source, const std::string& what) {
  throw std::runtime_error(source + ": " + what);
}

std::string id_from(const json& j, const std::string& source) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<int64_t>());
  if (j.is_number()) return json(j.get<double>()).dump();
  fail(source, "id must be a string or number");
}

double number_at(const json& j, const char* key, const std::string& source) {
  if (!j.contains(key)) fail(source, std::string("missing key '") + key + "'");
  const json& v = j.at(key);
  if (!v.is_number()) fail(source, std::string("key '") + key + "' must be a number");
  return v.get<double>();
}

VehicleState vehicle_from(const json& j, const std::string& source) {
  VehicleState v;
  if (!j.contains("id")) fail(source, "vehicle missing 'id'");
  v.id = id_from(j.at("id"), source);
  const std::string where = source + " vehicle '" + v.id + "'";
  v.x = number_at(j, "x", where);
  v.y = number_at(j, "y", where);
  v.v = number_at(j, "v", where);
  v.a = number_at(j, "a", where);
  v.yaw = number_at(j, "yaw", where);
  v.length = number_at(j, "length", where);
  v.width = number_at(j, "width", where);
  v.lane_id = static_cast<int>(number_at(j, "lane_id", where));
  return v;
}

PedestrianState pedestrian_from(const json& j, const std::string& source) {
  PedestrianState p;
  if (!j.contains("id")) fail(source, "pedestrian missing 'id'");
  p.id = id_from(j.at("id"), source);
  const std::string where = source + " pedestrian '" + p.id + "'";
  p.x = number_at(j, "x", where);
  p.y = number_at(j, "y", where);
  return p;
}

MarkingKind kind_from(const std::string& s, const std::string& source) {
  if (s == "white_dotted") return MarkingKind::kWhiteDotted;
  if (s == "double_amber") return MarkingKind::kDoubleAmber;
  fail(source, "marking line kind must be 'white_dotted' or 'double_amber', got '" + s + "'");
}

RoadGeometry road_from(const json& j, const std::string& source) {
  RoadGeometry road;
  for (const json& b : j.value("boundaries", json::array())) {
    BoundarySpec spec;
    spec.amp = number_at(b, "amp", source + " boundary");
    spec.threshold = number_at(b, "threshold", source + " boundary");
    spec.rate = number_at(b, "rate", source + " boundary");
    spec.position = number_at(b, "position", source + " boundary");
    road.boundaries.push_back(spec);
  }
  for (const json& l : j.value("marking_lines", json::array())) {
    MarkingLineSpec spec;
    if (!l.contains("kind") || !l.at("kind").is_string()) {
      fail(source, "marking line missing string 'kind'");
    }
    spec.kind = kind_from(l.at("kind").get<std::string>(), source);
    spec.amp = number_at(l, "amp", source + " marking line");
    spec.position = number_at(l, "position", source + " marking line");
    spec.rate = number_at(l, "rate", source + " marking line");
    road.marking_lines.push_back(spec);
  }
  for (const json& s : j.value("segments", json::array())) {
    RoadSegment seg;
    seg.start_y = number_at(s, "start_y", source + " segment");
    seg.width = number_at(s, "width", source + " segment");
    seg.rotation = number_at(s, "rotation", source + " segment");
    road.segments.push_back(seg);
  }
  return road;
}

SceneFrame frame_from(const json& j, const std::string& source) {
  SceneFrame frame;
  frame.timestamp = number_at(j, "timestamp", source);
  if (!j.contains("ego")) fail(source, "frame missing 'ego'");
  frame.ego = vehicle_from(j.at("ego"), source);
  for (const json& o : j.value("obstacles", json::array())) {
    frame.obstacles.push_back(vehicle_from(o, source));
  }
  for (const json& p : j.value("pedestrians", json::array())) {
    frame.pedestrians.push_back(pedestrian_from(p, source));
  }
  if (j.contains("road")) frame.road = road_from(j.at("road"), source);
  return frame;
}

void params_from(const json& j, const std::string& source, ScenarioParams* out) {
  auto num = [&](const char* key) -> std::optional<double> {
    if (!j.contains(key)) return std::nullopt;
    if (!j.at(key).is_number()) fail(source, std::string("params key '") + key + "' must be a number");
    return j.at(key).get<double>();
  };
  out->delta = num("delta");
  out->horizon = num("horizon");
  if (auto v = num("num")) out->num = static_cast<int>(*v);
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer()) {
      fail(source, "params key 'seed' must be an integer");
    }
    out->seed = j.at("seed").get<uint64_t>();
  }
  out->variance = num("variance");
  out->eta1 = num("eta1");
  out->eta2 = num("eta2");
  out->footprint_sigma = num("footprint_sigma");
  out->margin = num("margin");
  if (auto v = num("thresholds")) out->thresholds = static_cast<int>(*v);
}

ordered vehicle_to_json(const VehicleState& v) {
  ordered j;
  j["id"] = v.id;
  j["x"] = v.x;
  j["y"] = v.y;
  j["v"] = v.v;
  j["a"] = v.a;
  j["yaw"] = v.yaw;
  j["length"] = v.length;
  j["width"] = v.width;
  j["lane_id"] = v.lane_id;
  return j;
}

ordered road_to_json(const RoadGeometry& road) {
  ordered j;
  j["boundaries"] = ordered::array();
  for (const BoundarySpec& b : road.boundaries) {
    ordered e;
    e["amp"] = b.amp;
    e["threshold"] = b.threshold;
    e["rate"] = b.rate;
    e["position"] = b.position;
    j["boundaries"].push_back(e);
  }
  j["marking_lines"] = ordered::array();
  for (const MarkingLineSpec& l : road.marking_lines) {
    ordered e;
    e["kind"] = l.kind == MarkingKind::kDoubleAmber ? "double_amber" : "white_dotted";
    e["amp"] = l.amp;
    e["position"] = l.position;
    e["rate"] = l.rate;
    j["marking_lines"].push_back(e);
  }
  j["segments"] = ordered::array();
  for (const RoadSegment& s : road.segments) {
    ordered e;
    e["start_y"] = s.start_y;
    e["width"] = s.width;
    e["rotation"] = s.rotation;
    j["segments"].push_back(e);
  }
  return j;
}

ordered frame_to_json(const SceneFrame& frame) {
  ordered j;
  j["timestamp"] = frame.timestamp;
  j["ego"] = vehicle_to_json(frame.ego);
  j["obstacles"] = ordered::array();
  for (const VehicleState& o : frame.obstacles) j["obstacles"].push_back(vehicle_to_json(o));
  j["pedestrians"] = ordered::array();
  for (const PedestrianState& p : frame.pedestrians) {
    ordered e;
    e["id"] = p.id;
    e["x"] = p.x;
    e["y"] = p.y;
    j["pedestrians"].push_back(e);
  }
  j["road"] = road_to_json(frame.road);
  return j;
}

}  // namespace

Scenario parse_scenario(std::istream& in, const std::string& source_name) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(source_name, std::string("JSON parse error: ") + e.what());
  }

  Scenario scenario;
  const json* frames = nullptr;
  if (doc.is_array()) {
    frames = &doc;
  } else if (doc.is_object() && doc.contains("frames")) {
    if (!doc.at("frames").is_array()) fail(source_name, "'frames' must be an array");
    frames = &doc.at("frames");
  }

  if (frames != nullptr) {
    int index = 0;
    for (const json& f : *frames) {
      scenario.frames.push_back(
          frame_from(f, source_name + " frame " + std::to_string(index)));
      ++index;
    }
  } else if (doc.is_object()) {
    scenario.frames.push_back(frame_from(doc, source_name));
  } else {
    fail(source_name, "document must be a frame object or an array of frames");
  }

  for (size_t i = 1; i < scenario.frames.size(); ++i) {
    if (!(scenario.frames[i].timestamp > scenario.frames[i - 1].timestamp)) {
      fail(source_name, "frame timestamps must be strictly increasing (frame " +
                            std::to_string(i) + ")");
    }
  }

  if (doc.is_object()) {
    if (doc.contains("composition_weights")) {
      const json& w = doc.at("composition_weights");
      CompositionWeights cw;
      cw.alpha_r = number_at(w, "alpha_r", source_name + " composition_weights");
      cw.alpha_v = number_at(w, "alpha_v", source_name + " composition_weights");
      cw.alpha_p = number_at(w, "alpha_p", source_name + " composition_weights");
      scenario.weights = cw;
    }
    if (doc.contains("pearson_params")) {
      const json& p = doc.at("pearson_params");
      if (!p.is_array() || p.size() != 8) {
        fail(source_name, "pearson_params must be an array of 8 numbers");
      }
      std::array<double, 8> a{};
      for (size_t i = 0; i < 8; ++i) {
        if (!p[i].is_number()) fail(source_name, "pearson_params entries must be numbers");
        a[i] = p[i].get<double>();
      }
      PearsonParams pp = pearson_from_array(a);
      if (!(pp.delta_v > 0.0) || !(pp.delta_s > 0.0) || !(pp.gamma > 0.0)) {
        fail(source_name, "pearson_params: delta_v, delta_s and gamma must be positive");
      }
      scenario.pearson = pp;
    }
    if (doc.contains("params")) {
      params_from(doc.at("params"), source_name, &scenario.params);
    }
  }
  return scenario;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(path, "cannot open scenario file");
  return parse_scenario(in, path);
}

std::string scenario_to_json(const Scenario& scenario) {
  ordered doc;
  doc["frames"] = ordered::array();
  for (const SceneFrame& f : scenario.frames) doc["frames"].push_back(frame_to_json(f));
  if (scenario.weights) {
    ordered w;
    w["alpha_r"] = scenario.weights->alpha_r;
    w["alpha_v"] = scenario.weights->alpha_v;
    w["alpha_p"] = scenario.weights->alpha_p;
    doc["composition_weights"] = w;
  }
  if (scenario.pearson) {
    doc["pearson_params"] = to_array(*scenario.pearson);
  }
  ordered params;
  auto put = [&params](const char* key, const auto& opt) {
    if (opt) params[key] = *opt;
  };
  put("delta", scenario.params.delta);
  put("horizon", scenario.params.horizon);
  put("num", scenario.params.num);
  put("seed", scenario.params.seed);
  put("variance", scenario.params.variance);
  put("eta1", scenario.params.eta1);
  put("eta2", scenario.params.eta2);
  put("footprint_sigma", scenario.params.footprint_sigma);
  put("margin", scenario.params.margin);
  put("thresholds", scenario.params.thresholds);
  if (!params.empty()) doc["params"] = params;
  return doc.dump(2) + "\n";
}

void save_scenario(const Scenario& scenario, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(path, "cannot open file for writing");
  out << scenario_to_json(scenario);
  if (!out) fail(path, "write failed");
}

}  // namespace riskfield
