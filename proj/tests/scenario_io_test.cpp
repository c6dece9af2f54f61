#include "riskfield/scenario_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "doctest.h"

namespace riskfield {
namespace {

Scenario parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_scenario(in, "test");
}

const char* kMinimalFrame = R"({
  "timestamp": 0.5,
  "ego": {"id": "e", "x": 1.0, "y": 2.0, "v": 3.0, "a": 0.1, "yaw": 0.0,
          "length": 4.5, "width": 1.8, "lane_id": 1}
})";

TEST_CASE("a single frame object parses as a one-frame scenario") {
  const Scenario s = parse_text(kMinimalFrame);
  REQUIRE(s.frames.size() == 1);
  CHECK(s.frames[0].timestamp == 0.5);
  CHECK(s.frames[0].ego.id == "e");
  CHECK(s.frames[0].obstacles.empty());
  CHECK(s.frames[0].road.boundaries.empty());
  CHECK_FALSE(s.weights.has_value());
  CHECK_FALSE(s.pearson.has_value());
}

TEST_CASE("a bare array parses as a frame sequence") {
  const std::string text = std::string("[") + kMinimalFrame + "," +
                           R"({"timestamp": 1.0,
  "ego": {"id": "e", "x": 1.0, "y": 2.5, "v": 3.0, "a": 0.1, "yaw": 0.0,
          "length": 4.5, "width": 1.8, "lane_id": 1}})" +
                           "]";
  const Scenario s = parse_text(text);
  REQUIRE(s.frames.size() == 2);
  CHECK(s.frames[1].timestamp == 1.0);
}

TEST_CASE("a wrapper document carries weights, pearson and params") {
  const std::string text = std::string(R"({"frames": [)") + kMinimalFrame + R"(],
    "composition_weights": {"alpha_r": 0.5, "alpha_v": 1.5, "alpha_p": 2.0},
    "pearson_params": [4, 10, 2, 5, 0.3, 2, 1, 2],
    "params": {"delta": 0.07, "num": 40, "seed": 12, "variance": 0.09,
               "eta1": 0.4, "eta2": 0.6, "margin": 4.0, "thresholds": 32}
  })";
  const Scenario s = parse_text(text);
  REQUIRE(s.weights.has_value());
  CHECK(s.weights->alpha_v == 1.5);
  REQUIRE(s.pearson.has_value());
  CHECK(s.pearson->mu_s == 10.0);
  CHECK(s.pearson->b == 2.0);
  CHECK(s.params.delta == 0.07);
  CHECK(s.params.num == 40);
  CHECK(s.params.seed == 12);
  CHECK(s.params.variance == 0.09);
  CHECK(s.params.eta2 == 0.6);
  CHECK(s.params.margin == 4.0);
  CHECK(s.params.thresholds == 32);
  CHECK_FALSE(s.params.horizon.has_value());
}

TEST_CASE("numeric ids are canonicalized to strings") {
  const std::string text = R"({
    "timestamp": 0.0,
    "ego": {"id": 2505, "x": 0, "y": 0, "v": 1, "a": 0, "yaw": 0,
            "length": 4.5, "width": 1.8, "lane_id": 1},
    "obstacles": [{"id": 2476, "x": 3, "y": 10, "v": 1, "a": 0, "yaw": 0,
                   "length": 4.5, "width": 1.8, "lane_id": 2}]
  })";
  const Scenario s = parse_text(text);
  CHECK(s.frames[0].ego.id == "2505");
  CHECK(s.frames[0].obstacles[0].id == "2476");
}

TEST_CASE("road blocks parse boundaries, marking lines and segments") {
  const std::string text = R"({
    "timestamp": 0.0,
    "ego": {"id": "e", "x": 0, "y": 0, "v": 1, "a": 0, "yaw": 0,
            "length": 4.5, "width": 1.8, "lane_id": 1},
    "road": {
      "boundaries": [
        {"amp": 5.0, "threshold": 0.3, "rate": 1.0, "position": -2.0},
        {"amp": 5.0, "threshold": 0.3, "rate": 1.0, "position": 2.0}],
      "marking_lines": [
        {"kind": "double_amber", "amp": 3.0, "position": 0.5, "rate": 0.5},
        {"kind": "white_dotted", "amp": 1.0, "position": -0.5, "rate": 0.5}],
      "segments": [{"start_y": 10.0, "width": 4.0, "rotation": 0.5235987755982988}]
    }
  })";
  const Scenario s = parse_text(text);
  const RoadGeometry& road = s.frames[0].road;
  REQUIRE(road.boundaries.size() == 2);
  REQUIRE(road.marking_lines.size() == 2);
  CHECK(road.marking_lines[0].kind == MarkingKind::kDoubleAmber);
  CHECK(road.marking_lines[1].kind == MarkingKind::kWhiteDotted);
  REQUIRE(road.segments.size() == 1);
  CHECK(road.segments[0].start_y == 10.0);
}

TEST_CASE("a missing vehicle key is reported with its source and name") {
  const std::string text = R"({
    "timestamp": 0.0,
    "ego": {"id": "e", "x": 0, "y": 0, "v": 1, "a": 0, "yaw": 0,
            "length": 4.5, "lane_id": 1}
  })";
  CHECK_THROWS_WITH_AS(parse_text(text), doctest::Contains("'width'"),
                       std::runtime_error);
}

TEST_CASE("malformed pearson_params are rejected") {
  const std::string head = std::string(R"({"frames": [)") + kMinimalFrame + "],";
  CHECK_THROWS_WITH_AS(parse_text(head + R"("pearson_params": [1, 2, 3]})"),
                       doctest::Contains("8"), std::runtime_error);
  CHECK_THROWS_WITH_AS(
      parse_text(head + R"("pearson_params": [4, 10, 0, 5, 0.3, 2, 1, 2]})"),
      doctest::Contains("positive"), std::runtime_error);
  CHECK_THROWS_WITH_AS(
      parse_text(head + R"("pearson_params": [4, 10, 2, 5, 0.3, 2, 1, "x"]})"),
      doctest::Contains("numbers"), std::runtime_error);
}

TEST_CASE("non-increasing timestamps are rejected at parse time") {
  const std::string text = std::string("[") + kMinimalFrame + "," + kMinimalFrame + "]";
  CHECK_THROWS_WITH_AS(parse_text(text), doctest::Contains("strictly increasing"),
                       std::runtime_error);
}

TEST_CASE("an unknown marking kind is rejected") {
  const std::string text = R"({
    "timestamp": 0.0,
    "ego": {"id": "e", "x": 0, "y": 0, "v": 1, "a": 0, "yaw": 0,
            "length": 4.5, "width": 1.8, "lane_id": 1},
    "road": {"marking_lines": [{"kind": "chevron", "amp": 1, "position": 0, "rate": 1}]}
  })";
  CHECK_THROWS_WITH_AS(parse_text(text), doctest::Contains("chevron"),
                       std::runtime_error);
}

TEST_CASE("JSON syntax errors carry the source name") {
  CHECK_THROWS_WITH_AS(parse_text("{nope"), doctest::Contains("test"),
                       std::runtime_error);
}

SceneFrame awkward_frame() {
  SceneFrame frame;
  frame.timestamp = 0.1 + 0.2;  // not representable exactly in decimal
  frame.ego = {"e", M_PI, -0.1, 1.0 / 3.0, 1e-17, -2.5e300, 4.27, 1.49, 3};
  frame.obstacles.push_back({"o", 0.3048, 6.05 * 0.3048, 9.99, -0.125, 0.0, 3.96, 1.49, 1});
  frame.pedestrians.push_back({"p", std::nextafter(1.0, 2.0), -0.0});
  frame.road.boundaries.push_back({5.0, 0.3, 1.0, 0.1});
  frame.road.marking_lines.push_back({MarkingKind::kDoubleAmber, 3.0, 0.05, 0.5});
  frame.road.segments.push_back({1e-9, 3.5, 0.7853981633974483});
  return frame;
}

TEST_CASE("serialization round-trips doubles exactly") {
  Scenario scenario;
  scenario.frames.push_back(awkward_frame());
  scenario.weights = CompositionWeights{0.1, 0.2, 0.7};
  scenario.pearson = PearsonParams{3.8301, 0.0090, 25.7824, 0.0105, 18.3901,
                                   0.7999, 5.7181, 617.3393};
  scenario.params.variance = 0.123456789012345678;
  scenario.params.seed = 18446744073709551615ULL;  // max uint64 survives

  std::istringstream in(scenario_to_json(scenario));
  const Scenario back = parse_scenario(in, "roundtrip");
  REQUIRE(back.frames.size() == 1);
  CHECK(back.frames[0] == scenario.frames[0]);
  CHECK(back.weights == scenario.weights);
  REQUIRE(back.pearson.has_value());
  CHECK(to_array(*back.pearson) == to_array(*scenario.pearson));
  CHECK(back.params.variance == scenario.params.variance);
  CHECK(back.params.seed == scenario.params.seed);
}

TEST_CASE("save and load through a file preserve the scenario") {
  Scenario scenario;
  scenario.frames.push_back(awkward_frame());
  const std::string path = "/tmp/riskfield_scenario_io_test.json";
  save_scenario(scenario, path);
  const Scenario back = load_scenario(path);
  CHECK(back.frames == scenario.frames);
  std::remove(path.c_str());
}

TEST_CASE("loading a missing file names the path") {
  CHECK_THROWS_WITH_AS(load_scenario("/nonexistent/dir/foo.json"),
                       doctest::Contains("/nonexistent/dir/foo.json"),
                       std::runtime_error);
}

}  // namespace
}  // namespace riskfield
