#include "riskfield/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace riskfield {
namespace {

constexpr double kLaneWidthFeet = 12.0;  // synthesized road lane width

const char* const kRequiredColumns[] = {"vehicle_id", "global_time", "local_x",
                                        "local_y",    "length",      "width",
                                        "velocity",   "acceleration", "lane_id"};

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line, char delimiter) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, delimiter)) fields.push_back(trim(field));
  if (!line.empty() && line.back() == delimiter) fields.push_back("");
  return fields;
}

// Lowercase with every non-alphanumeric squashed to '_', so header spellings
// like "Vehicle ID", "v_Vel" or "Local_X" all normalize predictably.
std::string normalize_name(const std::string& s) {
  std::string out;
  for (char c : s) {
    out.push_back(std::isalnum(static_cast<unsigned char>(c))
                      ? static_cast<char>(std::tolower(static_cast<unsigned char>(c)))
                      : '_');
  }
  return out;
}

// Canonical column key for a normalized header name, or "" when unknown.
std::string canonical_column(const std::string& normalized) {
  static const std::map<std::string, std::string> aliases = {
      {"vehicle_id", "vehicle_id"},   {"frame_id", "frame_id"},
      {"total_frames", "total_frames"}, {"global_time", "global_time"},
      {"local_x", "local_x"},         {"local_y", "local_y"},
      {"global_x", "global_x"},       {"global_y", "global_y"},
      {"v_length", "length"},         {"length", "length"},
      {"v_width", "width"},           {"width", "width"},
      {"v_class", "class"},           {"v_vel", "velocity"},
      {"velocity", "velocity"},       {"v_acc", "acceleration"},
      {"acceleration", "acceleration"}, {"lane_id", "lane_id"},
  };
  auto it = aliases.find(normalized);
  return it == aliases.end() ? "" : it->second;
}

bool parse_number(const std::string& s, double* out) {
  if (s.empty()) return false;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) return false;
  *out = v;
  return true;
}

struct ColumnAccess {
  const std::map<std::string, int>& columns;
  const std::vector<std::string>& fields;
  int line_number;
  std::vector<std::string>* diagnostics;
  bool ok = true;

  std::string raw(const std::string& name) {
    const int idx = columns.at(name);
    if (idx < 0 || static_cast<size_t>(idx) >= fields.size()) {
      note("missing field for column '" + name + "'");
      return "";
    }
    return fields[static_cast<size_t>(idx)];
  }

  double num(const std::string& name) {
    const std::string s = raw(name);
    double v = 0.0;
    if (!ok) return 0.0;
    if (!parse_number(s, &v)) {
      note("non-numeric value '" + s + "' in column '" + name + "'");
      return 0.0;
    }
    return v;
  }

  void note(const std::string& what) {
    if (ok) {
      diagnostics->push_back("line " + std::to_string(line_number) + ": " + what);
      ok = false;
    }
  }
};

}  // namespace

IngestConfig default_ingest_config() {
  IngestConfig config;
  config.columns = {
      {"vehicle_id", 0}, {"frame_id", 1},     {"total_frames", 2}, {"global_time", 3},
      {"local_x", 4},    {"local_y", 5},      {"global_x", 6},     {"global_y", 7},
      {"length", 8},     {"width", 9},        {"class", 10},       {"velocity", 11},
      {"acceleration", 12}, {"lane_id", 13},
  };
  return config;
}

ParseResult parse_trajectories(std::istream& in, const IngestConfig& config) {
  ParseResult result;
  std::map<std::string, int> columns =
      config.columns.empty() ? default_ingest_config().columns : config.columns;

  std::string line;
  int line_number = 0;
  bool saw_data_or_header = false;
  while (std::getline(in, line)) {
    ++line_number;
    if (trim(line).empty()) continue;
    std::vector<std::string> fields = split(line, config.delimiter);

    if (!saw_data_or_header) {
      saw_data_or_header = true;
      // Header detection: a non-numeric first field means column names.
      double probe = 0.0;
      if (!fields.empty() && !parse_number(fields[0], &probe)) {
        std::map<std::string, int> mapped;
        for (size_t i = 0; i < fields.size(); ++i) {
          const std::string key = canonical_column(normalize_name(fields[i]));
          if (!key.empty()) mapped[key] = static_cast<int>(i);
        }
        for (const char* required : kRequiredColumns) {
          if (mapped.find(required) == mapped.end()) {
            throw std::runtime_error(std::string("trajectory header missing required column '") +
                                     required + "'");
          }
        }
        columns = std::move(mapped);
        continue;
      }
    }

    ColumnAccess access{columns, fields, line_number, &result.diagnostics};
    RawTrajectoryRecord record;
    record.line_number = line_number;
    record.vehicle_id = access.raw("vehicle_id");
    if (record.vehicle_id.empty()) access.note("empty vehicle_id");
    record.timestamp_ms = static_cast<int64_t>(std::llround(access.num("global_time")));
    record.local_x = access.num("local_x");
    record.local_y = access.num("local_y");
    record.length = access.num("length");
    record.width = access.num("width");
    record.velocity = access.num("velocity");
    record.acceleration = access.num("acceleration");
    record.lane_id = static_cast<int>(std::llround(access.num("lane_id")));
    if (access.ok) result.records.push_back(std::move(record));
  }
  return result;
}

double estimate_accel_variance(const std::vector<RawTrajectoryRecord>& records) {
  if (records.size() < 2) {
    throw std::invalid_argument("estimate_accel_variance: need at least 2 observations, got " +
                                std::to_string(records.size()));
  }
  double mean = 0.0;
  for (const RawTrajectoryRecord& r : records) mean += r.acceleration * kFeetToMeters;
  mean /= static_cast<double>(records.size());
  double ss = 0.0;
  for (const RawTrajectoryRecord& r : records) {
    const double d = r.acceleration * kFeetToMeters - mean;
    ss += d * d;
  }
  return ss / static_cast<double>(records.size() - 1);
}

PreprocessResult preprocess(const std::vector<RawTrajectoryRecord>& records,
                            const IngestConfig& config) {
  if (records.empty()) throw std::invalid_argument("preprocess: no records");
  if (config.ego_id.empty()) throw std::invalid_argument("preprocess: ego_id not set");

  PreprocessResult result;
  result.accel_variance = records.size() >= 2 ? estimate_accel_variance(records) : 0.0;

  const int64_t bucket_ms = std::llround(config.frame_interval * 1000.0);

  // vehicle id -> bucket key -> converted state (first record wins).
  std::map<std::string, std::map<int64_t, VehicleState>> by_vehicle;
  std::set<int64_t> keys;
  int max_lane = 1;

  for (const RawTrajectoryRecord& r : records) {
    const int64_t key = r.timestamp_ms / bucket_ms;
    auto& per_vehicle = by_vehicle[r.vehicle_id];
    if (per_vehicle.count(key) > 0) {
      result.diagnostics.push_back("line " + std::to_string(r.line_number) + ": duplicate of vehicle '" +
                                   r.vehicle_id + "' in one frame interval, ignored");
      continue;
    }
    VehicleState v;
    v.id = r.vehicle_id;
    v.x = r.local_x * kFeetToMeters;
    v.y = r.local_y * kFeetToMeters;
    v.v = r.velocity * kFeetToMeters;
    v.a = r.acceleration * kFeetToMeters;
    v.length = r.length * kFeetToMeters;
    v.width = r.width * kFeetToMeters;
    v.lane_id = r.lane_id;
    per_vehicle[key] = v;
    keys.insert(key);
    max_lane = std::max(max_lane, r.lane_id);
  }

  // Yaw from successive positions; the first observation inherits the
  // second's yaw, and a vehicle that did not move keeps its previous yaw.
  for (auto& [id, frames] : by_vehicle) {
    double prev_yaw = 0.0;
    const VehicleState* prev = nullptr;
    std::vector<std::pair<const int64_t, VehicleState>*> ordered;
    for (auto& entry : frames) ordered.push_back(&entry);
    for (auto* entry : ordered) {
      if (prev != nullptr) {
        const double dx = entry->second.x - prev->x;
        const double dy = entry->second.y - prev->y;
        if (dx != 0.0 || dy != 0.0) prev_yaw = std::atan2(dx, dy);
        entry->second.yaw = prev_yaw;
      }
      prev = &entry->second;
    }
    if (ordered.size() >= 2) ordered[0]->second.yaw = ordered[1]->second.yaw;
  }

  // Synthesized straight road from the observed lane range: boundaries at the
  // outer lane edges, white-dotted lines between lanes.
  RoadGeometry road;
  const double lane_width = kLaneWidthFeet * kFeetToMeters;
  road.boundaries.push_back({5.0, 0.3, 1.0, 0.0});
  road.boundaries.push_back({5.0, 0.3, 1.0, max_lane * lane_width});
  for (int lane = 1; lane < max_lane; ++lane) {
    road.marking_lines.push_back({MarkingKind::kWhiteDotted, 1.0, lane * lane_width, 0.5});
  }

  const int64_t first_key = *keys.begin();
  const int64_t last_key = *keys.rbegin();
  const int64_t window_keys =
      std::max<int64_t>(1, std::llround(config.window_length / config.frame_interval));

  std::map<int64_t, SceneWindow> windows;
  for (int64_t key : keys) {
    const auto ego_frames = by_vehicle.find(config.ego_id);
    const VehicleState* ego = nullptr;
    if (ego_frames != by_vehicle.end()) {
      auto it = ego_frames->second.find(key);
      if (it != ego_frames->second.end()) ego = &it->second;
    }
    if (ego == nullptr) {
      result.diagnostics.push_back("frame at t=" +
                                   std::to_string(key * config.frame_interval) +
                                   "s: ego '" + config.ego_id + "' absent, frame dropped");
      continue;
    }
    SceneFrame frame;
    frame.timestamp = static_cast<double>(key) * config.frame_interval;
    frame.ego = *ego;
    for (const auto& [id, frames] : by_vehicle) {
      if (id == config.ego_id) continue;
      auto it = frames.find(key);
      if (it != frames.end()) frame.obstacles.push_back(it->second);
    }
    frame.road = road;
    windows[(key - first_key) / window_keys].frames.push_back(std::move(frame));
  }

  if (windows.empty()) {
    result.diagnostics.push_back("no window contains ego '" + config.ego_id + "', output empty");
    return result;
  }

  for (auto& [index, window] : windows) {
    const int64_t window_end_key = first_key + (index + 1) * window_keys - 1;
    window.partial = last_key < window_end_key;
    result.windows.push_back(std::move(window));
  }
  return result;
}

}  // namespace riskfield
