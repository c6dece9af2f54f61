// Weighted composition of the component fields into the total risk field.
#ifndef RISKFIELD_FIELD_COMPOSER_HPP_
#define RISKFIELD_FIELD_COMPOSER_HPP_

#include "riskfield/grid.hpp"
#include "riskfield/scenario.hpp"

namespace riskfield {

// Per cell: alpha_r * |E_R| + alpha_v * |E_V| + alpha_p * |E_P|. All three
// fields must share one grid spec; a mismatch throws std::invalid_argument
// naming both specs.
GridField total_field(const GridField& road, const GridField& vehicle,
                      const GridField& pedestrian, const CompositionWeights& w);

}  // namespace riskfield

#endif  // RISKFIELD_FIELD_COMPOSER_HPP_
