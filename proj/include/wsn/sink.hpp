#pragma once

#include "wsn/core.hpp"

namespace wsn {

// Sink motion state. A mobile sink jumps along a circle once per round; a
// static sink never leaves its initial position.
struct SinkState {
    Position pos;
    SinkMode mode = SinkMode::Static;
    Position orbit_center;
    double orbit_radius = 0.0;   // meters
    double angle_deg = 0.0;      // current position on the orbit
    double step_deg = 0.0;       // advance per round
};

// Arc length covered by t degrees on a circle of radius r.
double arc_step(double t_degrees, double r_meters);

// Degrees per round that cover speed meters of arc on a circle of radius r.
double degrees_for_speed(double speed_m_per_round, double r_meters);

// Builds the initial sink state from the config. The default orbit is
// centered on the field and passes through the configured initial position;
// both are overridable. The per-round step is derived from sink_speed.
SinkState make_sink_state(const NetworkConfig& config);

// Advances a mobile sink one jump along its orbit. No-op for a static sink.
SinkState advance_sink(const SinkState& sink);

}  // namespace wsn
