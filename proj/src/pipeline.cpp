#include "riskfield/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "riskfield/field_io.hpp"
#include "riskfield/ingest.hpp"
#include "riskfield/road_field.hpp"

namespace riskfield {
namespace {

namespace fs = std::filesystem;

[[noreturn]] void fail(const std::string& what) { throw std::runtime_error(what); }

double parse_double_param(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (value.empty() || end != value.c_str() + value.size()) {
    fail("invalid numeric value '" + value + "' for --param " + key);
  }
  return v;
}

uint64_t parse_seed_param(const std::string& key, const std::string& value) {
  try {
    // stoull would silently wrap negative input into a huge unsigned value.
    if (value.find('-') != std::string::npos) throw std::invalid_argument("negative");
    size_t pos = 0;
    const uint64_t v = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    fail("invalid seed value '" + value + "' for --param " + key);
  }
}

std::string sanitize_id(const std::string& id) {
  std::string out;
  for (char c : id) {
    out.push_back(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' ? c
                                                                                      : '_');
  }
  return out.empty() ? "unnamed" : out;
}

std::string frame_prefix(int index) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "frame%04d", index);
  return buf;
}

// Output directory check, done before any field computation.
void prepare_out_dir(const std::string& out_dir) {
  if (out_dir.empty()) fail("output directory not set");
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) fail(out_dir + ": cannot create output directory: " + ec.message());
  const fs::path probe = fs::path(out_dir) / ".riskfield_probe";
  {
    std::ofstream test(probe);
    if (!test) fail(out_dir + ": output directory is not writable");
  }
  fs::remove(probe, ec);
}

void validate_or_fail(const std::vector<SceneFrame>& frames) {
  const std::vector<std::string> violations = validate_frames(frames);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "scenario invalid (" << violations.size() << " violation(s)):";
  for (const std::string& v : violations) msg << "\n  " << v;
  fail(msg.str());
}

std::pair<int, int> select_frames(const Scenario& scenario, const RunConfig& config) {
  const int count = static_cast<int>(scenario.frames.size());
  if (count == 0) fail("scenario has no frames");
  int begin = 0;
  int end = count - 1;
  if (config.frame_range) {
    begin = config.frame_range->first;
    end = config.frame_range->second;
    if (begin < 0 || end < begin || end >= count) {
      fail("frame range " + std::to_string(begin) + ".." + std::to_string(end) +
           " out of bounds for " + std::to_string(count) + " frame(s)");
    }
  }
  return {begin, end};
}

bool frames_have_obstacles(const Scenario& scenario, int begin, int end) {
  for (int i = begin; i <= end; ++i) {
    if (!scenario.frames[static_cast<size_t>(i)].obstacles.empty()) return true;
  }
  return false;
}

void apply_cli_params(const RunConfig& config, ResolvedParams* out) {
  static const std::set<std::string> known = {
      "delta",   "horizon", "num",     "variance",        "eta1",
      "eta2",    "seed",    "margin",  "footprint_sigma", "thresholds",
      "alpha_r", "alpha_v", "alpha_p", "ego_id",          "frame_interval",
      "window_length", "bench_rows",  "bench_cols",       "bench_n",
      "bench_scales"};
  for (const auto& [key, value] : config.params) {
    if (known.find(key) == known.end()) {
      std::string keys;
      for (const std::string& k : known) keys += (keys.empty() ? "" : ", ") + k;
      fail("unknown --param key '" + key + "' (known keys: " + keys + ")");
    }
    if (key == "delta") out->vehicle.delta = parse_double_param(key, value);
    else if (key == "horizon") out->vehicle.horizon = parse_double_param(key, value);
    else if (key == "num") out->vehicle.sampler.num = static_cast<int>(parse_double_param(key, value));
    else if (key == "variance") out->vehicle.sampler.variance = parse_double_param(key, value);
    else if (key == "eta1") out->ped.eta1 = parse_double_param(key, value);
    else if (key == "eta2") out->ped.eta2 = parse_double_param(key, value);
    else if (key == "seed") out->seed = parse_seed_param(key, value);
    else if (key == "margin") out->margin = parse_double_param(key, value);
    else if (key == "footprint_sigma") out->ped.footprint_sigma = parse_double_param(key, value);
    else if (key == "thresholds") out->thresholds = static_cast<int>(parse_double_param(key, value));
    else if (key == "alpha_r") out->weights.alpha_r = parse_double_param(key, value);
    else if (key == "alpha_v") out->weights.alpha_v = parse_double_param(key, value);
    else if (key == "alpha_p") out->weights.alpha_p = parse_double_param(key, value);
    // ego_id / frame_interval / window_length / bench_* are consumed by the
    // ingest and bench commands.
  }
}

struct FrameJob {
  int index = 0;
  const SceneFrame* frame = nullptr;
  FrameFields fields;
};

void write_render_outputs(const std::string& out_dir, const FrameJob& job) {
  const std::string prefix = (fs::path(out_dir) / frame_prefix(job.index)).string();
  auto write_pair = [](const std::string& base, const GridField& f) {
    write_text_file(base + ".csv", field_to_csv(f));
    write_text_file(base + ".pgm", field_to_pgm(f));
  };
  write_pair(prefix + "_road", job.fields.road);
  const SceneFrame& frame = *job.frame;
  for (size_t i = 0; i < frame.obstacles.size(); ++i) {
    write_pair(prefix + "_vehicle_" + sanitize_id(frame.obstacles[i].id),
               job.fields.vehicle.per_obstacle[i]);
  }
  if (!frame.obstacles.empty()) {
    write_pair(prefix + "_vehicle_combined", job.fields.vehicle.combined);
  }
  if (!frame.pedestrians.empty()) {
    write_pair(prefix + "_pedestrian", job.fields.pedestrian);
  }
  if (!frame.obstacles.empty() || !frame.pedestrians.empty()) {
    write_pair(prefix + "_total", job.fields.total);
  }
}

void write_ccdf_outputs(const std::string& out_dir, const FrameJob& job,
                        const ResolvedParams& params,
                        std::vector<std::pair<std::string, std::vector<std::pair<int, double>>>>*
                            area_series) {
  const SceneFrame& frame = *job.frame;
  for (size_t i = 0; i < frame.obstacles.size(); ++i) {
    const VehicleState& obs = frame.obstacles[i];
    const GridField& field = job.fields.vehicle.per_obstacle[i];
    const MetricWindow window = default_window(field, obs, frame.ego, params.margin);
    const std::vector<double> thresholds =
        default_thresholds(field, window, params.thresholds);
    const CCDFCurve curve = empirical_ccdf(field, window, thresholds);
    const std::string name =
        frame_prefix(job.index) + "_" + sanitize_id(obs.id) + "_ccdf.csv";
    write_text_file((fs::path(out_dir) / name).string(), ccdf_to_csv(curve));

    const double area = curve_area(curve);
    auto it = std::find_if(area_series->begin(), area_series->end(),
                           [&](const auto& entry) { return entry.first == obs.id; });
    if (it == area_series->end()) {
      area_series->push_back({obs.id, {}});
      it = std::prev(area_series->end());
    }
    it->second.push_back({job.index, area});
  }
}

void write_area_outputs(
    const std::string& out_dir,
    const std::vector<std::pair<std::string, std::vector<std::pair<int, double>>>>& series) {
  for (const auto& [id, rows] : series) {
    write_text_file((fs::path(out_dir) / (sanitize_id(id) + "_area.csv")).string(),
                    area_series_to_csv(rows));
  }
}

void run_frames(const RunConfig& config, bool render, bool ccdf) {
  const Scenario scenario = load_scenario(config.scenario_path);
  validate_or_fail(scenario.frames);
  const ResolvedParams params = resolve_params(scenario, config);
  const auto [begin, end] = select_frames(scenario, config);
  if (ccdf && !frames_have_obstacles(scenario, begin, end)) {
    fail("ccdf requires at least one obstacle in the selected frames");
  }
  prepare_out_dir(config.out_dir);

  std::vector<std::pair<std::string, std::vector<std::pair<int, double>>>> area_series;
  for (int i = begin; i <= end; ++i) {
    FrameJob job;
    job.index = i;
    job.frame = &scenario.frames[static_cast<size_t>(i)];
    job.fields = compute_frame_fields(*job.frame, params);
    if (render) write_render_outputs(config.out_dir, job);
    if (ccdf) write_ccdf_outputs(config.out_dir, job, params, &area_series);
  }
  if (ccdf) write_area_outputs(config.out_dir, area_series);
}

std::vector<int> parse_int_list(const std::string& key, const std::string& value) {
  std::vector<int> out;
  std::istringstream in(value);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    out.push_back(static_cast<int>(parse_double_param(key, tok)));
  }
  if (out.empty()) fail("empty list for --param " + key);
  return out;
}

double loglog_slope(const std::vector<std::pair<double, double>>& points) {
  // Least-squares slope of ln(y) on ln(x).
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(points.size());
  for (const auto& [x, y] : points) {
    const double lx = std::log(x);
    const double ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  return denom != 0.0 ? (n * sxy - sx * sy) / denom : 0.0;
}

double time_frame_once(const SceneFrame& frame, const GridSpec& grid,
                       const ResolvedParams& params) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  const GridField road = road_field(frame.road, grid);
  VehicleFieldParams vp = params.vehicle;
  vp.sampler.seed = params.seed.value_or(1);
  const VehicleFieldResult veh = vehicle_field(frame.ego, frame.obstacles, grid, vp);
  const GridField ped =
      pedestrian_grid_field(frame.ego, frame.pedestrians, grid, params.ped);
  const GridField total = total_field(road, veh.combined, ped, params.weights);
  const auto t1 = clock::now();
  (void)total;
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

ResolvedParams resolve_params(const Scenario& scenario, const RunConfig& config) {
  ResolvedParams out;
  // Scenario-file layer.
  const ScenarioParams& sp = scenario.params;
  if (sp.delta) out.vehicle.delta = *sp.delta;
  if (sp.horizon) out.vehicle.horizon = *sp.horizon;
  if (sp.num) out.vehicle.sampler.num = *sp.num;
  if (sp.variance) out.vehicle.sampler.variance = *sp.variance;
  if (sp.seed) out.seed = *sp.seed;
  if (sp.eta1) out.ped.eta1 = *sp.eta1;
  if (sp.eta2) out.ped.eta2 = *sp.eta2;
  if (sp.footprint_sigma) out.ped.footprint_sigma = *sp.footprint_sigma;
  if (sp.margin) out.margin = *sp.margin;
  if (sp.thresholds) out.thresholds = *sp.thresholds;
  if (scenario.weights) out.weights = *scenario.weights;
  if (scenario.pearson) out.ped.pearson = *scenario.pearson;
  // CLI layer wins.
  apply_cli_params(config, &out);
  if (config.seed) out.seed = *config.seed;
  if (config.grid_cell) {
    if (!(*config.grid_cell > 0.0)) fail("--grid-cell must be positive");
    out.cell_size = *config.grid_cell;
  }
  if (out.vehicle.sampler.num < 1) fail("sample count must be >= 1");
  if (out.thresholds < 2) fail("threshold count must be >= 2");
  if (!(out.ped.eta1 > 0.0) || !(out.ped.eta2 > 0.0)) {
    fail("eta1 and eta2 must be positive");
  }
  return out;
}

FrameFields compute_frame_fields(const SceneFrame& frame, const ResolvedParams& params) {
  FrameFields fields;
  fields.grid = default_grid(frame.ego.position(), params.cell_size);
  fields.road = road_field(frame.road, fields.grid);
  if (!frame.obstacles.empty()) {
    if (!params.seed) {
      fail("seed required: pass --seed N or set params.seed in the scenario file");
    }
    VehicleFieldParams vp = params.vehicle;
    vp.sampler.seed = *params.seed;
    fields.vehicle = vehicle_field(frame.ego, frame.obstacles, fields.grid, vp);
  } else {
    fields.vehicle.combined = GridField(fields.grid);
  }
  fields.pedestrian = pedestrian_grid_field(frame.ego, frame.pedestrians, fields.grid,
                                            params.ped);
  fields.total = total_field(fields.road, fields.vehicle.combined, fields.pedestrian,
                             params.weights);
  return fields;
}

void run_render(const RunConfig& config) { run_frames(config, true, false); }

void run_ccdf(const RunConfig& config) { run_frames(config, false, true); }

void run_replay(const RunConfig& config) { run_frames(config, true, true); }

void run_ingest(const RunConfig& config) {
  IngestConfig ingest = default_ingest_config();
  auto param = [&](const char* key) -> std::optional<std::string> {
    auto it = config.params.find(key);
    if (it == config.params.end()) return std::nullopt;
    return it->second;
  };
  if (auto v = param("ego_id")) ingest.ego_id = *v;
  if (ingest.ego_id.empty()) fail("ingest requires --param ego_id=<vehicle id>");
  if (auto v = param("frame_interval")) {
    ingest.frame_interval = parse_double_param("frame_interval", *v);
  }
  if (auto v = param("window_length")) {
    ingest.window_length = parse_double_param("window_length", *v);
  }
  if (!(ingest.frame_interval > 0.0) || ingest.window_length < ingest.frame_interval) {
    fail("frame_interval must be > 0 and window_length >= frame_interval");
  }

  prepare_out_dir(config.out_dir);
  std::ifstream in(config.scenario_path);
  if (!in) fail(config.scenario_path + ": cannot open trajectory file");
  const ParseResult parsed = parse_trajectories(in, ingest);
  if (parsed.records.empty()) fail(config.scenario_path + ": no usable records");
  const PreprocessResult pre = preprocess(parsed.records, ingest);

  std::string summary;
  summary += "windows: " + std::to_string(pre.windows.size()) + "\n";
  summary += "accel_variance: " + format_double(pre.accel_variance) + "\n";
  for (size_t i = 0; i < pre.windows.size(); ++i) {
    const SceneWindow& window = pre.windows[i];
    char name[32];
    std::snprintf(name, sizeof(name), "window%02zu.json", i);
    Scenario scenario;
    scenario.frames = window.frames;
    scenario.params.variance = pre.accel_variance;
    if (config.seed) scenario.params.seed = *config.seed;
    save_scenario(scenario, (fs::path(config.out_dir) / name).string());
    summary += std::string(name) + ": frames=" + std::to_string(window.frames.size()) +
               " partial=" + (window.partial ? "1" : "0") + "\n";
  }
  for (const std::string& d : parsed.diagnostics) summary += "parse: " + d + "\n";
  for (const std::string& d : pre.diagnostics) summary += "preprocess: " + d + "\n";
  write_text_file((fs::path(config.out_dir) / "ingest_summary.txt").string(), summary);
}

SceneFrame make_bench_scene(int n_obstacles) {
  SceneFrame frame;
  frame.ego = {"ego", 0.0, 0.0, 10.0, 0.0, 0.0, 4.5, 1.8, 2};
  frame.road.boundaries.push_back({5.0, 0.3, 1.0, -5.25});
  frame.road.boundaries.push_back({5.0, 0.3, 1.0, 5.25});
  frame.road.marking_lines.push_back({MarkingKind::kWhiteDotted, 1.0, -1.75, 0.5});
  frame.road.marking_lines.push_back({MarkingKind::kDoubleAmber, 3.0, 1.75, 0.5});
  for (int i = 0; i < n_obstacles; ++i) {
    VehicleState obs;
    obs.id = "obs" + std::to_string(i);
    obs.lane_id = (i % 3) + 1;
    obs.x = (obs.lane_id - 2) * 3.5;
    obs.y = -40.0 + 80.0 * ((i * 37 + 11) % 97) / 96.0;
    obs.v = 6.0 + (i % 7);
    obs.a = ((i % 5) - 2) * 0.5;
    obs.yaw = ((i % 3) - 1) * 0.05;
    obs.length = 4.3;
    obs.width = 1.8;
    frame.obstacles.push_back(obs);
  }
  return frame;
}

BenchReport measure_bench(const BenchSpec& spec) {
  BenchReport report;
  ResolvedParams params;
  params.seed = spec.seed;
  params.vehicle.sampler.variance = 0.04;

  auto grid_for = [&](int scale) {
    GridSpec grid;
    grid.cell_size = 0.25;
    grid.rows = spec.rows * scale;
    grid.cols = spec.cols * scale;
    grid.origin = {-grid.cols * grid.cell_size / 2.0, -grid.rows * grid.cell_size / 2.0};
    return grid;
  };

  struct Point {
    SceneFrame frame;
    GridSpec grid;
    double seconds = std::numeric_limits<double>::infinity();
  };
  std::vector<Point> n_sweep;
  for (int n : spec.obstacle_counts) {
    n_sweep.push_back({make_bench_scene(n), grid_for(1)});
  }
  std::vector<Point> cell_sweep;
  for (int scale : spec.grid_scales) {
    cell_sweep.push_back({make_bench_scene(spec.grid_sweep_obstacles), grid_for(scale)});
  }

  // Warm-up so first-touch costs don't skew the smallest case, then
  // round-robin repetitions keeping each point's minimum: a transient load
  // burst inflates whichever points it overlaps, and the minimum over
  // interleaved rounds discards it instead of letting it poison one
  // point's ratio.
  time_frame_once(make_bench_scene(1), grid_for(1), params);
  constexpr int kRounds = 5;
  for (int round = 0; round < kRounds; ++round) {
    for (Point& p : n_sweep) {
      p.seconds = std::min(p.seconds, time_frame_once(p.frame, p.grid, params));
    }
    for (Point& p : cell_sweep) {
      p.seconds = std::min(p.seconds, time_frame_once(p.frame, p.grid, params));
    }
  }

  std::vector<std::pair<double, double>> n_points;
  for (size_t i = 0; i < n_sweep.size(); ++i) {
    const Point& p = n_sweep[i];
    const int n = spec.obstacle_counts[i];
    report.by_obstacles.push_back(
        {n, static_cast<long long>(p.grid.rows) * p.grid.cols, p.seconds});
    if (n > 0) n_points.push_back({static_cast<double>(n), p.seconds});
  }
  if (n_points.size() >= 2) report.exponent_obstacles = loglog_slope(n_points);

  std::vector<std::pair<double, double>> cell_points;
  for (const Point& p : cell_sweep) {
    const long long cells = static_cast<long long>(p.grid.rows) * p.grid.cols;
    report.by_cells.push_back({spec.grid_sweep_obstacles, cells, p.seconds});
    cell_points.push_back({static_cast<double>(cells), p.seconds});
  }
  if (cell_points.size() >= 2) report.exponent_cells = loglog_slope(cell_points);
  return report;
}

BenchReport run_bench(const RunConfig& config) {
  BenchSpec spec;
  auto param = [&](const char* key) -> std::optional<std::string> {
    auto it = config.params.find(key);
    if (it == config.params.end()) return std::nullopt;
    return it->second;
  };
  if (auto v = param("bench_rows")) spec.rows = static_cast<int>(parse_double_param("bench_rows", *v));
  if (auto v = param("bench_cols")) spec.cols = static_cast<int>(parse_double_param("bench_cols", *v));
  if (auto v = param("bench_n")) spec.obstacle_counts = parse_int_list("bench_n", *v);
  if (auto v = param("bench_scales")) spec.grid_scales = parse_int_list("bench_scales", *v);
  if (config.seed) spec.seed = *config.seed;

  prepare_out_dir(config.out_dir);
  const BenchReport report = measure_bench(spec);

  std::string csv = "sweep,n_obstacles,cells,seconds\n";
  for (const BenchTiming& t : report.by_obstacles) {
    csv += "obstacles," + std::to_string(t.n_obstacles) + "," + std::to_string(t.cells) +
           "," + format_double(t.seconds) + "\n";
  }
  for (const BenchTiming& t : report.by_cells) {
    csv += "cells," + std::to_string(t.n_obstacles) + "," + std::to_string(t.cells) + "," +
           format_double(t.seconds) + "\n";
  }
  csv += "exponent,obstacles,," + format_double(report.exponent_obstacles) + "\n";
  csv += "exponent,cells,," + format_double(report.exponent_cells) + "\n";
  write_text_file((fs::path(config.out_dir) / "bench.csv").string(), csv);
  return report;
}

}  // namespace riskfield
