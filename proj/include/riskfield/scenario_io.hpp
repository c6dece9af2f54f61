// Scenario JSON loading and saving. Files mirror SceneFrame field names in
// snake_case; a document is either a single frame object, an array of frames,
// or a wrapper object with "frames" plus optional model-parameter keys
// ("composition_weights", "pearson_params", "params").
#ifndef RISKFIELD_SCENARIO_IO_HPP_
#define RISKFIELD_SCENARIO_IO_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "riskfield/pedestrian_field.hpp"
#include "riskfield/scenario.hpp"
#include "riskfield/vehicle_field.hpp"

namespace riskfield {

// Model parameters a scenario file may carry alongside its frames. All are
// optional; absent values fall back to built-in defaults unless a CLI flag
// overrides them (flag > scenario file > default).
struct ScenarioParams {
  std::optional<double> delta;
  std::optional<double> horizon;
  std::optional<int> num;
  std::optional<uint64_t> seed;
  std::optional<double> variance;
  std::optional<double> eta1;
  std::optional<double> eta2;
  std::optional<double> footprint_sigma;
  std::optional<double> margin;
  std::optional<int> thresholds;
};

struct Scenario {
  std::vector<SceneFrame> frames;
  std::optional<CompositionWeights> weights;
  std::optional<PearsonParams> pearson;
  ScenarioParams params;
};

// Parse failures and invariant violations (e.g. non-increasing timestamps,
// malformed pearson_params) throw std::runtime_error with the offending
// key/field named.
Scenario load_scenario(const std::string& path);
Scenario parse_scenario(std::istream& in, const std::string& source_name);

// Serializes frames (plus any set optional blocks) as a wrapper document.
// Doubles round-trip exactly.
std::string scenario_to_json(const Scenario& scenario);
void save_scenario(const Scenario& scenario, const std::string& path);

}  // namespace riskfield

#endif  // RISKFIELD_SCENARIO_IO_HPP_
