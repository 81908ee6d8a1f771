#include "wsn/sink.hpp"

#include <cmath>
#include <numbers>

namespace wsn {

double arc_step(double t_degrees, double r_meters) {
    return t_degrees * (std::numbers::pi / 180.0) * r_meters;
}

double degrees_for_speed(double speed_m_per_round, double r_meters) {
    return speed_m_per_round * 180.0 / (std::numbers::pi * r_meters);
}

namespace {

Position on_orbit(const Position& center, double radius, double angle_deg) {
    const double rad = angle_deg * std::numbers::pi / 180.0;
    return Position{center.x + radius * std::cos(rad),
                    center.y + radius * std::sin(rad)};
}

}  // namespace

SinkState make_sink_state(const NetworkConfig& config) {
    SinkState sink;
    sink.mode = config.sink_mode;
    sink.pos = config.sink_initial;
    sink.orbit_center = config.orbit_center.value_or(
        Position{config.field_width / 2.0, config.field_height / 2.0});

    double radius = config.orbit_radius.value_or(
        distance(sink.orbit_center, config.sink_initial));
    if (radius <= 0.0) {
        // Sink configured on the orbit center: fall back to a circle just
        // outside the field.
        radius = 0.75 * std::sqrt(config.field_width * config.field_width +
                                  config.field_height * config.field_height);
    }
    sink.orbit_radius = radius;
    sink.angle_deg = std::atan2(config.sink_initial.y - sink.orbit_center.y,
                                config.sink_initial.x - sink.orbit_center.x) *
                     180.0 / std::numbers::pi;
    sink.step_deg = degrees_for_speed(config.sink_speed, radius);
    if (sink.mode == SinkMode::Mobile) {
        sink.pos = on_orbit(sink.orbit_center, radius, sink.angle_deg);
    }
    return sink;
}

SinkState advance_sink(const SinkState& sink) {
    if (sink.mode != SinkMode::Mobile) return sink;
    SinkState next = sink;
    next.angle_deg = std::fmod(sink.angle_deg + sink.step_deg, 360.0);
    next.pos = on_orbit(next.orbit_center, next.orbit_radius, next.angle_deg);
    return next;
}

}  // namespace wsn
