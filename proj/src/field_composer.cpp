#include "riskfield/field_composer.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace riskfield {
namespace {

std::string describe(const GridSpec& s) {
  std::ostringstream out;
  out << s.rows << "x" << s.cols << " @ " << s.cell_size << " m, origin (" << s.origin.x
      << ", " << s.origin.y << ")";
  return out.str();
}

void require_same_spec(const GridSpec& a, const GridSpec& b, const char* name) {
  if (!(a == b)) {
    throw std::invalid_argument(std::string("total_field: ") + name +
                                " grid mismatch: [" + describe(a) + "] vs [" + describe(b) +
                                "]");
  }
}

}  // namespace

GridField total_field(const GridField& road, const GridField& vehicle,
                      const GridField& pedestrian, const CompositionWeights& w) {
  require_same_spec(road.spec, vehicle.spec, "road/vehicle");
  require_same_spec(road.spec, pedestrian.spec, "road/pedestrian");
  GridField total(road.spec);
  for (size_t i = 0; i < total.values.size(); ++i) {
    total.values[i] = w.alpha_r * std::abs(road.values[i]) +
                      w.alpha_v * std::abs(vehicle.values[i]) +
                      w.alpha_p * std::abs(pedestrian.values[i]);
  }
  return total;
}

}  // namespace riskfield
