#pragma once

#include <span>

#include "wsn/core.hpp"

namespace wsn {

// Per-round forwarding graph. parent[id] is a node id, kParentSink, or
// kParentNone. slots lists transmitting nodes in execution order: farther
// bands first, members before relays within a band, ascending id last, so
// every receiver forwards only after all of its senders.
struct ForwardingTree {
    std::vector<NodeId> parent;
    std::vector<NodeId> slots;
};

// Picks the upstream hop among alive candidates, or kParentSink when none
// exist. The score metric maximizes residual_energy / (distance^2 + 1 m^2);
// the energy-first metric compares energy, then distance. Ties: lower id.
NodeId next_hop(const NodeState& from, std::span<const NodeId> candidates,
                const std::vector<NodeState>& nodes, RouteMetric metric);

// Members point at their head or gateway, gateways at the sink, and each
// deeper-band head at the best relay in the nearest populated band between
// it and the sink (bridging any empty bands), falling back to the sink.
ForwardingTree build_forwarding_tree(const ClusterAssignment& assignment,
                                     const std::vector<NodeState>& nodes,
                                     RouteMetric metric);

struct TrafficResult {
    std::vector<double> debits;  // energy actually removed per node
    int packets_delivered = 0;   // aggregated streams that reached the sink
};

// Runs one round of traffic over the tree. Every alive sender transmits one
// packet at its slot; a relay pays one receive plus one processing charge per
// packet taken in and forwards a single aggregated packet upstream. A node
// dead by the time its slot arrives does nothing, and packets sent to a dead
// relay are lost without charging it.
TrafficResult execute_round_traffic(const ForwardingTree& tree,
                                    const RadioParams& radio,
                                    std::vector<NodeState>& nodes,
                                    const Position& sink);

}  // namespace wsn
