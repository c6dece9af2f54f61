// Deterministic file export: CSV matrices, 8-bit PGM images, CCDF curve and
// area-series CSVs. All numeric output uses shortest round-trip formatting so
// reruns are byte-identical and values reload exactly.
#ifndef RISKFIELD_FIELD_IO_HPP_
#define RISKFIELD_FIELD_IO_HPP_

#include <string>
#include <utility>
#include <vector>

#include "riskfield/ccdf.hpp"
#include "riskfield/grid.hpp"

namespace riskfield {

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double value);

std::string field_to_csv(const GridField& field);
std::string field_to_pgm(const GridField& field);  // P5, maxval 255, max value -> 255
std::string ccdf_to_csv(const CCDFCurve& curve);   // header "threshold,probability"
std::string area_series_to_csv(const std::vector<std::pair<int, double>>& series);

// Write helpers; failures throw std::runtime_error naming the path.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace riskfield

#endif  // RISKFIELD_FIELD_IO_HPP_
