#include "riskfield/field_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "riskfield/ccdf.hpp"
#include "riskfield/grid.hpp"

namespace riskfield {
namespace {

GridField small_field() {
  GridField field(GridSpec{{0.0, 0.0}, 1.0, 2, 3});  // 2 rows x 3 cols
  field.at(0, 0) = 0.0;
  field.at(0, 1) = 1.5;
  field.at(0, 2) = 2.0;
  field.at(1, 0) = 0.25;
  field.at(1, 1) = 4.0;
  field.at(1, 2) = 1.0;
  return field;
}

TEST_CASE("format_double emits shortest strings for representative values") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-0.5) == "-0.5");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(0.30000000000000004) == "0.30000000000000004");
}

TEST_CASE("format_double output parses back to the identical double") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
  std::uniform_int_distribution<int> exponent(-300, 300);
  for (int i = 0; i < 2000; ++i) {
    const double value = std::ldexp(mantissa(rng), exponent(rng));
    const std::string text = format_double(value);
    char* end = nullptr;
    const double back = std::strtod(text.c_str(), &end);
    CHECK(*end == '\0');
    CHECK(back == value);
  }
  const double tiny = std::numeric_limits<double>::denorm_min();
  CHECK(std::strtod(format_double(tiny).c_str(), nullptr) == tiny);
  const double huge = std::numeric_limits<double>::max();
  CHECK(std::strtod(format_double(huge).c_str(), nullptr) == huge);
}

TEST_CASE("field_to_csv writes row 0 first, comma separated") {
  const std::string csv = field_to_csv(small_field());
  CHECK(csv == "0,1.5,2\n0.25,4,1\n");
}

TEST_CASE("field_to_pgm writes a P5 header and scales max to 255") {
  const GridField field = small_field();
  const std::string pgm = field_to_pgm(field);
  const std::string header = "P5\n3 2\n255\n";
  REQUIRE(pgm.size() == header.size() + 6);
  CHECK(pgm.substr(0, header.size()) == header);
  const unsigned char* bytes =
      reinterpret_cast<const unsigned char*>(pgm.data() + header.size());
  // Row-major, row 0 first: values / 4.0 * 255, rounded to nearest.
  CHECK(bytes[0] == 0);
  CHECK(bytes[1] == 96);   // 1.5 / 4 * 255 = 95.625
  CHECK(bytes[2] == 128);  // 2.0 / 4 * 255 = 127.5 rounds away from zero
  CHECK(bytes[3] == 16);   // 0.25 / 4 * 255 = 15.9375
  CHECK(bytes[4] == 255);  // the maximum always maps to full scale
  CHECK(bytes[5] == 64);   // 1.0 / 4 * 255 = 63.75
}

TEST_CASE("an all-zero field renders as all-zero bytes") {
  GridField field(GridSpec{{0.0, 0.0}, 1.0, 2, 2});
  const std::string pgm = field_to_pgm(field);
  const std::string header = "P5\n2 2\n255\n";
  REQUIRE(pgm.size() == header.size() + 4);
  for (std::size_t i = header.size(); i < pgm.size(); ++i) {
    CHECK(pgm[i] == '\0');
  }
}

TEST_CASE("ccdf_to_csv writes one threshold,probability row per point") {
  CCDFCurve curve;
  curve.thresholds = {0.0, 0.5, 1.0};
  curve.probabilities = {1.0, 0.25, 0.0};
  CHECK(ccdf_to_csv(curve) == "threshold,probability\n0,1\n0.5,0.25\n1,0\n");
}

TEST_CASE("area_series_to_csv writes one frame,area row per entry") {
  const std::vector<std::pair<int, double>> series = {{0, 1.25}, {1, 0.5}, {4, 0.125}};
  CHECK(area_series_to_csv(series) == "frame,area\n0,1.25\n1,0.5\n4,0.125\n");
}

TEST_CASE("write_text_file stores content verbatim and errors name the path") {
  const std::string path = "/tmp/riskfield_field_io_test.txt";
  write_text_file(path, "a,b\n1,2\n");
  std::FILE* file = std::fopen(path.c_str(), "rb");
  REQUIRE(file != nullptr);
  char buffer[32] = {};
  const std::size_t read = std::fread(buffer, 1, sizeof(buffer), file);
  std::fclose(file);
  std::remove(path.c_str());
  CHECK(std::string(buffer, read) == "a,b\n1,2\n");

  CHECK_THROWS_WITH_AS(write_text_file("/nonexistent_dir_xyz/out.txt", "x"),
                       doctest::Contains("/nonexistent_dir_xyz/out.txt"),
                       std::runtime_error);
}

}  // namespace
}  // namespace riskfield
