// Command-line front end for the risk field library.
//
// Usage:
//   riskfield <render|ccdf|replay|ingest|bench>
//       --scenario PATH --out DIR [--seed N] [--grid-cell M]
//       [--frames A..B] [--param key=value]...

#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "riskfield/pipeline.hpp"

namespace {

std::pair<int, int> parse_frame_range(const std::string& text) {
  const size_t pos = text.find("..");
  if (pos == std::string::npos) {
    throw std::runtime_error("--frames expects A..B, got '" + text + "'");
  }
  try {
    size_t used = 0;
    const int a = std::stoi(text.substr(0, pos), &used);
    if (used != pos) throw std::invalid_argument("trailing");
    const std::string rest = text.substr(pos + 2);
    const int b = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("trailing");
    return {a, b};
  } catch (const std::exception&) {
    throw std::runtime_error("--frames expects A..B with integer bounds, got '" + text +
                             "'");
  }
}

void split_params(const std::vector<std::string>& raw,
                  std::map<std::string, std::string>* out) {
  for (const std::string& entry : raw) {
    const size_t eq = entry.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::runtime_error("--param expects key=value, got '" + entry + "'");
    }
    (*out)[entry.substr(0, eq)] = entry.substr(eq + 1);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Driving risk potential field toolkit"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_dir;
  std::optional<uint64_t> seed;
  std::optional<double> grid_cell;
  std::string frames_text;
  std::vector<std::string> raw_params;

  auto add_common = [&](CLI::App* cmd, bool scenario_required) {
    cmd->add_option("--scenario", scenario_path, "Input scenario JSON (or CSV for ingest)")
        ->required(scenario_required);
    cmd->add_option("--out", out_dir, "Output directory")->required();
    cmd->add_option("--seed", seed, "Seed for acceleration sampling");
    cmd->add_option("--grid-cell", grid_cell, "Grid cell size in metres");
    cmd->add_option("--frames", frames_text, "Frame range A..B (inclusive, 0-based)");
    cmd->add_option("--param", raw_params, "Parameter override key=value")
        ->take_all()
        ->allow_extra_args(false);
  };

  CLI::App* render = app.add_subcommand("render", "Write per-frame field rasters");
  CLI::App* ccdf = app.add_subcommand("ccdf", "Write per-obstacle CCDF curves and areas");
  CLI::App* replay =
      app.add_subcommand("replay", "Render fields and CCDF metrics for every frame");
  CLI::App* ingest =
      app.add_subcommand("ingest", "Convert a trajectory CSV into scenario windows");
  CLI::App* bench = app.add_subcommand("bench", "Measure field computation scaling");
  add_common(render, true);
  add_common(ccdf, true);
  add_common(replay, true);
  add_common(ingest, true);
  add_common(bench, false);

  CLI11_PARSE(app, argc, argv);

  try {
    riskfield::RunConfig config;
    config.scenario_path = scenario_path;
    config.out_dir = out_dir;
    config.seed = seed;
    config.grid_cell = grid_cell;
    if (!frames_text.empty()) config.frame_range = parse_frame_range(frames_text);
    split_params(raw_params, &config.params);

    if (render->parsed()) {
      config.command = riskfield::Command::kRender;
      riskfield::run_render(config);
    } else if (ccdf->parsed()) {
      config.command = riskfield::Command::kCcdf;
      riskfield::run_ccdf(config);
    } else if (replay->parsed()) {
      config.command = riskfield::Command::kReplay;
      riskfield::run_replay(config);
    } else if (ingest->parsed()) {
      config.command = riskfield::Command::kIngest;
      riskfield::run_ingest(config);
    } else if (bench->parsed()) {
      config.command = riskfield::Command::kBench;
      riskfield::run_bench(config);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
