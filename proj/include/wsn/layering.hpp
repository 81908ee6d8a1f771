#pragma once

#include "wsn/core.hpp"

namespace wsn {

// Splits a span into bands: the first band is first_fraction of the span,
// each following band is the previous width plus first_fraction of what
// remains, and the final band absorbs any remainder too small to continue.
Layering compute_layers(double span_meters, double first_fraction = 0.15);

// Distance from the sink to the nearest point of the field rectangle
// [0,w]x[0,h]; zero when the sink is inside. Band offsets are measured from
// this near edge so an exterior sink still yields a populated first band.
double field_near_distance(const Position& sink, double field_w, double field_h);

// Assigns every alive node the band containing its sink distance, offset by
// the field near edge. Offsets beyond the last boundary (float residue on
// the farthest node) clamp to the last band.
void assign_layers(std::vector<NodeState>& nodes, const Layering& layering,
                   const Position& sink, const NetworkConfig& config);

// Recomputes the layered span from the current sink position and the alive
// nodes, then rebuilds widths and band assignments. Called once up front and
// again whenever the sink has moved. Never touches node energies.
Layering relayer_on_sink_move(std::vector<NodeState>& nodes, const Position& sink,
                              const NetworkConfig& config);

}  // namespace wsn
