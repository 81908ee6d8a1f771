#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wsn/rng.hpp"

namespace wsn {

using NodeId = std::int32_t;

// Sentinel parents in a forwarding tree.
inline constexpr NodeId kParentSink = -1;  // delivers straight to the sink
inline constexpr NodeId kParentNone = -2;  // no traffic this round (dormant/dead)

struct Position {
    double x = 0.0;  // meters
    double y = 0.0;  // meters
};

double distance(const Position& a, const Position& b);

enum class Role : std::uint8_t { Member, ClusterHead, Gateway, Dormant, Dead };

enum class Protocol : std::uint8_t { Leach, ELeach, Propose1, Propose2 };

enum class SinkMode : std::uint8_t { Static, Mobile };

// How a relaying head picks its upstream hop: a residual-energy-over-squared-
// distance score, or residual energy first with distance as tie-break.
enum class RouteMetric : std::uint8_t { EnergyDistanceScore, EnergyFirst };

// First-order radio parameters. The amplifier exponent switches from
// gamma_near to gamma_far at d_threshold; with the default single-exponent
// model both are 2 and the threshold is inert.
struct RadioParams {
    double e_elec = 50e-9;       // J/bit, transceiver electronics
    double e_amp = 0.659e-9;     // J/bit/m^gamma, amplifier
    double e_cpu = 7e-9;         // J/bit, aggregation processing
    double packet_bits = 4000.0;
    double gamma_near = 2.0;
    double gamma_far = 2.0;
    double d_threshold = 100.0;  // meters
};

struct NodeState {
    NodeId id = 0;
    Position pos;
    double energy = 0.0;          // J, residual
    double initial_energy = 0.0;  // J
    int layer = 0;                // 1-based distance band, 0 = unassigned
    Role role = Role::Member;

    bool alive() const { return role != Role::Dead; }
};

struct NetworkConfig {
    double field_width = 200.0;   // meters
    double field_height = 200.0;  // meters
    int node_count = 100;
    double initial_energy = 0.5;  // J
    RadioParams radio;

    SinkMode sink_mode = SinkMode::Static;
    Position sink_initial{100.0, 300.0};
    double sink_speed = 10.0;  // meters/round along the orbit, mobile only
    // Orbit defaults: center = field center, radius = |center - sink_initial|.
    std::optional<Position> orbit_center;
    std::optional<double> orbit_radius;

    Protocol protocol = Protocol::Leach;
    int rounds_max = 10000;
    std::uint64_t rng_seed = 1;

    double election_p = 0.05;     // baseline cluster-head probability
    double layer_fraction = 0.15; // seed fraction of the layering recursion
    RouteMetric route_metric = RouteMetric::EnergyDistanceScore;
};

// Ordered widths of the distance bands, band 1 nearest the sink. Widths sum
// to the layered span exactly; the last band absorbs the residual.
struct Layering {
    std::vector<double> widths;

    int count() const { return static_cast<int>(widths.size()); }
    double span() const;
    // Band index (1-based) containing a distance offset from the near edge.
    // An offset exactly on a boundary belongs to the nearer band.
    int band_of(double offset) const;
};

// One round's cluster structure. member_head maps a member to the head (or
// first-layer gateway) it reports to; kParentSink marks a direct-to-sink
// round. Dead and non-member nodes hold kParentNone.
struct ClusterAssignment {
    bool layered = false;  // false for the network-wide baseline protocols
    std::vector<std::vector<NodeId>> heads_per_layer;
    std::vector<NodeId> member_head;
    std::vector<NodeId> gateways;
    std::vector<NodeId> dormant;

    int head_count() const;
};

struct RoundMetrics {
    int round = 0;  // 1-based
    int alive = 0;
    double total_energy = 0.0;  // J, summed over all nodes after the round
    int deaths_this_round = 0;
    int ch_count = 0;
    int gateway_count = 0;
    int dormant_count = 0;
};

struct LifetimeSummary {
    int first_node_death = 0;  // 1-based round, 0 = never happened
    int half_nodes_death = 0;
    int last_node_death = 0;
    int rounds_executed = 0;
};

// Uniform deployment over the field rectangle: two draws (x, then y) per
// node in ascending id order. All nodes start as full-energy members.
std::vector<NodeState> deploy_network(const NetworkConfig& config, SplitMix64& rng);

// Throws std::invalid_argument naming the offending field.
void validate_config(const NetworkConfig& config);

std::string to_string(Protocol p);
std::string to_string(SinkMode m);
std::optional<Protocol> protocol_from_string(const std::string& s);
std::optional<SinkMode> sink_mode_from_string(const std::string& s);

}  // namespace wsn
