#include "wsn/core.hpp"

#include <cmath>
#include <stdexcept>

namespace wsn {

double distance(const Position& a, const Position& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

double Layering::span() const {
    double total = 0.0;
    for (double w : widths) total += w;
    return total;
}

int Layering::band_of(double offset) const {
    double edge = 0.0;
    for (int i = 0; i < count(); ++i) {
        edge += widths[static_cast<std::size_t>(i)];
        if (offset <= edge) return i + 1;
    }
    return count();  // float residue past the last boundary clamps down
}

int ClusterAssignment::head_count() const {
    int n = 0;
    for (const auto& layer : heads_per_layer) n += static_cast<int>(layer.size());
    return n;
}

std::vector<NodeState> deploy_network(const NetworkConfig& config, SplitMix64& rng) {
    std::vector<NodeState> nodes;
    nodes.reserve(static_cast<std::size_t>(config.node_count));
    for (int i = 0; i < config.node_count; ++i) {
        NodeState node;
        node.id = i;
        node.pos.x = rng.next_double(0.0, config.field_width);
        node.pos.y = rng.next_double(0.0, config.field_height);
        node.energy = config.initial_energy;
        node.initial_energy = config.initial_energy;
        node.role = Role::Member;
        nodes.push_back(node);
    }
    return nodes;
}

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

}  // namespace

void validate_config(const NetworkConfig& config) {
    require(config.field_width > 0.0, "field_width must be > 0");
    require(config.field_height > 0.0, "field_height must be > 0");
    require(config.node_count >= 1, "node_count must be >= 1");
    require(config.rounds_max >= 1, "rounds_max must be >= 1");
    require(config.initial_energy > 0.0, "initial_energy must be > 0");
    require(config.radio.e_elec > 0.0, "radio.e_elec must be > 0");
    require(config.radio.e_amp > 0.0, "radio.e_amp must be > 0");
    require(config.radio.e_cpu > 0.0, "radio.e_cpu must be > 0");
    require(config.radio.packet_bits > 0.0, "radio.packet_bits must be > 0");
    require(config.radio.gamma_near <= config.radio.gamma_far,
            "radio.gamma_near must be <= radio.gamma_far");
    require(config.radio.d_threshold > 0.0, "radio.d_threshold must be > 0");
    require(std::isfinite(config.sink_initial.x) && std::isfinite(config.sink_initial.y),
            "sink_initial must be finite");
    require(config.sink_speed >= 0.0, "sink_speed must be >= 0");
    require(config.election_p > 0.0 && config.election_p < 1.0,
            "election_p must be in (0, 1)");
    require(config.layer_fraction > 0.0 && config.layer_fraction < 1.0,
            "layer_fraction must be in (0, 1)");
    if (config.orbit_radius) require(*config.orbit_radius > 0.0, "orbit_radius must be > 0");
}

std::string to_string(Protocol p) {
    switch (p) {
        case Protocol::Leach: return "leach";
        case Protocol::ELeach: return "eleach";
        case Protocol::Propose1: return "propose1";
        case Protocol::Propose2: return "propose2";
    }
    return "leach";
}

std::string to_string(SinkMode m) {
    return m == SinkMode::Static ? "static" : "mobile";
}

std::optional<Protocol> protocol_from_string(const std::string& s) {
    if (s == "leach") return Protocol::Leach;
    if (s == "eleach") return Protocol::ELeach;
    if (s == "propose1") return Protocol::Propose1;
    if (s == "propose2") return Protocol::Propose2;
    return std::nullopt;
}

std::optional<SinkMode> sink_mode_from_string(const std::string& s) {
    if (s == "static") return SinkMode::Static;
    if (s == "mobile") return SinkMode::Mobile;
    return std::nullopt;
}

}  // namespace wsn
