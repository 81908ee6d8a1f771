#include "wsn/routing.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "wsn/energy.hpp"

namespace wsn {

NodeId next_hop(const NodeState& from, std::span<const NodeId> candidates,
                const std::vector<NodeState>& nodes, RouteMetric metric) {
    NodeId best = kParentSink;
    double best_score = -std::numeric_limits<double>::infinity();
    double best_energy = -1.0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (NodeId id : candidates) {
        const NodeState& cand = nodes[static_cast<std::size_t>(id)];
        if (!cand.alive()) continue;
        const double d = distance(from.pos, cand.pos);
        if (metric == RouteMetric::EnergyDistanceScore) {
            const double score = cand.energy / (d * d + 1.0);
            if (score > best_score) {
                best_score = score;
                best = id;
            }
        } else {
            if (cand.energy > best_energy ||
                (cand.energy == best_energy && d < best_dist)) {
                best_energy = cand.energy;
                best_dist = d;
                best = id;
            }
        }
    }
    return best;
}

ForwardingTree build_forwarding_tree(const ClusterAssignment& assignment,
                                     const std::vector<NodeState>& nodes,
                                     RouteMetric metric) {
    ForwardingTree tree;
    tree.parent.assign(nodes.size(), kParentNone);

    // Alive relays per band, used as next-hop candidates by the band above.
    const int bands = static_cast<int>(assignment.heads_per_layer.size());
    std::vector<std::vector<NodeId>> relays(static_cast<std::size_t>(bands));
    for (int b = 1; b <= bands; ++b) {
        const std::vector<NodeId>& source =
            (assignment.layered && b == 1) ? assignment.gateways
                                           : assignment.heads_per_layer[static_cast<std::size_t>(b - 1)];
        for (NodeId id : source) {
            if (nodes[static_cast<std::size_t>(id)].alive())
                relays[static_cast<std::size_t>(b - 1)].push_back(id);
        }
    }

    for (const NodeState& node : nodes) {
        if (!node.alive()) continue;
        const std::size_t idx = static_cast<std::size_t>(node.id);
        switch (node.role) {
            case Role::Dormant:
                break;
            case Role::Gateway:
                tree.parent[idx] = kParentSink;
                break;
            case Role::Member:
                tree.parent[idx] = assignment.member_head[idx];
                break;
            case Role::ClusterHead: {
                if (!assignment.layered) {
                    tree.parent[idx] = kParentSink;
                    break;
                }
                // Nearest populated band between this head and the sink;
                // empty bands are bridged, and no band at all means a direct
                // hop to the sink.
                NodeId up = kParentSink;
                for (int b = node.layer - 1; b >= 1; --b) {
                    const auto& pool = relays[static_cast<std::size_t>(b - 1)];
                    if (!pool.empty()) {
                        up = next_hop(node, pool, nodes, metric);
                        break;
                    }
                }
                tree.parent[idx] = up;
                break;
            }
            case Role::Dead:
                break;
        }
    }

    // Transmission slots: farther bands first, members before relays within
    // a band, ascending id. Every receiver's senders come earlier.
    for (const NodeState& node : nodes) {
        if (node.alive() && tree.parent[static_cast<std::size_t>(node.id)] != kParentNone)
            tree.slots.push_back(node.id);
    }
    std::sort(tree.slots.begin(), tree.slots.end(), [&](NodeId a, NodeId b) {
        const NodeState& na = nodes[static_cast<std::size_t>(a)];
        const NodeState& nb = nodes[static_cast<std::size_t>(b)];
        if (na.layer != nb.layer) return na.layer > nb.layer;
        const bool relay_a = na.role != Role::Member;
        const bool relay_b = nb.role != Role::Member;
        if (relay_a != relay_b) return !relay_a;
        return a < b;
    });

    // Paths must terminate within node_count hops; anything longer would
    // mean a cycle, which band monotonicity rules out.
    for (NodeId start : tree.slots) {
        NodeId cur = start;
        std::size_t steps = 0;
        while (cur >= 0) {
            cur = tree.parent[static_cast<std::size_t>(cur)];
            if (++steps > nodes.size()) {
                throw std::logic_error("forwarding tree contains a cycle");
            }
        }
    }
    return tree;
}

TrafficResult execute_round_traffic(const ForwardingTree& tree,
                                    const RadioParams& radio,
                                    std::vector<NodeState>& nodes,
                                    const Position& sink) {
    TrafficResult result;
    result.debits.assign(nodes.size(), 0.0);
    const double eps = death_epsilon(radio);
    const double bits = radio.packet_bits;

    for (NodeId id : tree.slots) {
        NodeState& sender = nodes[static_cast<std::size_t>(id)];
        if (!sender.alive()) continue;  // died earlier this round
        const NodeId up = tree.parent[static_cast<std::size_t>(id)];

        if (up == kParentSink) {
            result.debits[static_cast<std::size_t>(id)] +=
                charge(sender, tx_cost(radio, bits, distance(sender.pos, sink)), eps);
            ++result.packets_delivered;
            continue;
        }

        NodeState& receiver = nodes[static_cast<std::size_t>(up)];
        result.debits[static_cast<std::size_t>(id)] +=
            charge(sender, tx_cost(radio, bits, distance(sender.pos, receiver.pos)), eps);
        // A relay that died earlier in the round takes the packet nowhere
        // and is charged nothing.
        if (receiver.alive()) {
            result.debits[static_cast<std::size_t>(up)] +=
                charge(receiver, rx_cost(radio, bits), eps);
        }
        if (receiver.alive()) {
            result.debits[static_cast<std::size_t>(up)] +=
                charge(receiver, cpu_cost(radio, bits), eps);
        }
    }
    return result;
}

}  // namespace wsn
