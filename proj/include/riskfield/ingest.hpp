// Trajectory-log ingestion: parses NGSIM-style CSV records and preprocesses
// them into scene-frame windows (unit conversion, yaw derivation, 10 s
// splitting), plus the acceleration-variance calibration.
#ifndef RISKFIELD_INGEST_HPP_
#define RISKFIELD_INGEST_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "riskfield/scenario.hpp"

namespace riskfield {

constexpr double kFeetToMeters = 0.3048;  // exact conversion factor

// One raw CSV row, still in source units (feet, feet/s, feet/s^2, ms).
struct RawTrajectoryRecord {
  std::string vehicle_id;
  int64_t timestamp_ms = 0;
  double local_x = 0.0;
  double local_y = 0.0;
  double length = 0.0;
  double width = 0.0;
  double velocity = 0.0;
  double acceleration = 0.0;
  int lane_id = 0;
  int line_number = 0;  // 1-based source line, for diagnostics
};

struct IngestConfig {
  double frame_interval = 0.1;  // s
  double window_length = 10.0;  // s
  std::string ego_id;
  // Column name -> zero-based index. Defaults to the canonical trajectory
  // layout (vehicle_id, frame_id, total_frames, global_time, local_x,
  // local_y, global_x, global_y, length, width, class, velocity,
  // acceleration, lane_id). Header rows override it when present.
  std::map<std::string, int> columns;
  char delimiter = ',';
};

IngestConfig default_ingest_config();

struct ParseResult {
  std::vector<RawTrajectoryRecord> records;
  std::vector<std::string> diagnostics;  // malformed rows, with line numbers
};

// Reads CSV text. A header row (detected by a non-numeric id column) may
// rename/reorder columns. A missing required column throws
// std::runtime_error naming it; malformed data rows become diagnostics.
ParseResult parse_trajectories(std::istream& in, const IngestConfig& config);

struct SceneWindow {
  std::vector<SceneFrame> frames;
  bool partial = false;  // shorter than the configured window length
};

struct PreprocessResult {
  std::vector<SceneWindow> windows;
  std::vector<std::string> diagnostics;
  double accel_variance = 0.0;  // (m/s^2)^2, from estimate_accel_variance
};

// Conversion feet -> meters, grouping into frames, yaw from successive
// positions (first frame inherits the second's), window splitting (trailing
// partial windows kept and flagged), ego/obstacle designation, and a road
// synthesized from the observed lane range.
PreprocessResult preprocess(const std::vector<RawTrajectoryRecord>& records,
                            const IngestConfig& config);

// Unbiased sample variance of the converted acceleration observations.
// Throws std::invalid_argument with fewer than 2 observations.
double estimate_accel_variance(const std::vector<RawTrajectoryRecord>& records);

}  // namespace riskfield

#endif  // RISKFIELD_INGEST_HPP_
