#include "riskfield/field_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace riskfield {

std::string format_double(double value) {
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

std::string field_to_csv(const GridField& field) {
  std::string out;
  out.reserve(field.values.size() * 8);
  for (int row = 0; row < field.spec.rows; ++row) {
    for (int col = 0; col < field.spec.cols; ++col) {
      if (col > 0) out.push_back(',');
      out += format_double(field.at(row, col));
    }
    out.push_back('\n');
  }
  return out;
}

std::string field_to_pgm(const GridField& field) {
  std::string out = "P5\n" + std::to_string(field.spec.cols) + " " +
                    std::to_string(field.spec.rows) + "\n255\n";
  const double max = field.max_value();
  out.reserve(out.size() + field.values.size());
  for (int row = 0; row < field.spec.rows; ++row) {
    for (int col = 0; col < field.spec.cols; ++col) {
      const double v = max > 0.0 ? field.at(row, col) / max : 0.0;
      out.push_back(static_cast<char>(static_cast<unsigned char>(std::lround(v * 255.0))));
    }
  }
  return out;
}

std::string ccdf_to_csv(const CCDFCurve& curve) {
  std::string out = "threshold,probability\n";
  for (size_t i = 0; i < curve.thresholds.size(); ++i) {
    out += format_double(curve.thresholds[i]);
    out.push_back(',');
    out += format_double(curve.probabilities[i]);
    out.push_back('\n');
  }
  return out;
}

std::string area_series_to_csv(const std::vector<std::pair<int, double>>& series) {
  std::string out = "frame,area\n";
  for (const auto& [frame, area] : series) {
    out += std::to_string(frame);
    out.push_back(',');
    out += format_double(area);
    out.push_back('\n');
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace riskfield
