// Command layer shared by the CLI and the tests: config resolution
// (flag > scenario file > built-in default), per-frame field computation,
// deterministic file output, and the synthetic micro-benchmark.
#ifndef RISKFIELD_PIPELINE_HPP_
#define RISKFIELD_PIPELINE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "riskfield/ccdf.hpp"
#include "riskfield/field_composer.hpp"
#include "riskfield/pedestrian_field.hpp"
#include "riskfield/scenario_io.hpp"
#include "riskfield/vehicle_field.hpp"

namespace riskfield {

enum class Command { kRender, kCcdf, kReplay, kIngest, kBench };

struct RunConfig {
  Command command = Command::kRender;
  std::string scenario_path;  // scenario JSON; raw trajectory CSV for ingest
  std::string out_dir;
  std::optional<uint64_t> seed;
  std::optional<double> grid_cell;
  std::optional<std::pair<int, int>> frame_range;  // inclusive frame indices
  std::map<std::string, std::string> params;       // --param key=value overrides
};

// All model parameters after applying the precedence chain. `seed` stays
// unset only when neither the flag nor the scenario provides one; commands
// that evaluate vehicle fields reject that.
struct ResolvedParams {
  VehicleFieldParams vehicle;
  PedestrianRiskParams ped;
  CompositionWeights weights;
  double margin = kDefaultWindowMargin;
  int thresholds = kDefaultThresholdCount;
  double cell_size = 0.25;
  std::optional<uint64_t> seed;
};

ResolvedParams resolve_params(const Scenario& scenario, const RunConfig& config);

// Component fields of one frame on an ego-centered grid.
struct FrameFields {
  GridSpec grid;
  GridField road;
  VehicleFieldResult vehicle;
  GridField pedestrian;
  GridField total;
};

FrameFields compute_frame_fields(const SceneFrame& frame, const ResolvedParams& params);

void run_render(const RunConfig& config);
void run_ccdf(const RunConfig& config);
void run_replay(const RunConfig& config);  // render + ccdf outputs per frame
void run_ingest(const RunConfig& config);

struct BenchSpec {
  std::vector<int> obstacle_counts = {1, 2, 4, 8};
  int rows = 200;
  int cols = 400;
  // Cell-count sweep: base grid scaled by each factor in both dimensions
  // (so cells grow by factor^2 per step).
  std::vector<int> grid_scales = {1, 2};
  int grid_sweep_obstacles = 2;
  uint64_t seed = 1;
};

struct BenchTiming {
  int n_obstacles = 0;
  long long cells = 0;
  double seconds = 0.0;
};

struct BenchReport {
  std::vector<BenchTiming> by_obstacles;
  std::vector<BenchTiming> by_cells;
  double exponent_obstacles = 0.0;  // log-log slope of time vs n
  double exponent_cells = 0.0;      // log-log slope of time vs cell count
};

// Deterministic synthetic scene with n obstacles spread over three lanes.
SceneFrame make_bench_scene(int n_obstacles);

BenchReport measure_bench(const BenchSpec& spec);
BenchReport run_bench(const RunConfig& config);  // measure + write report CSV

}  // namespace riskfield

#endif  // RISKFIELD_PIPELINE_HPP_
