#include "wsn/protocols.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

namespace wsn {

std::int64_t election_epoch(double p) {
    return static_cast<std::int64_t>(std::ceil(1.0 / p));
}

bool ElectionState::in_candidate_set(NodeId id, std::int64_t round, double p) const {
    const std::int64_t since = round - last_head_round[static_cast<std::size_t>(id)];
    return since >= election_epoch(p);
}

double leach_threshold(double p, std::int64_t round, bool in_g) {
    if (!in_g) return 0.0;
    const std::int64_t cycle = std::llround(1.0 / p);
    const double phase = static_cast<double>(round % cycle);
    return p / (1.0 - p * phase);
}

double eleach_threshold(double p, std::int64_t round, bool in_g, double energy,
                        double initial_energy) {
    return leach_threshold(p, round, in_g) * (energy / initial_energy);
}

int gateway_target_count(int first_layer_alive) {
    if (first_layer_alive == 0) return 0;
    const int k = static_cast<int>(std::ceil(0.02 * first_layer_alive));
    return std::max(k, 2);
}

int head_target_count(int layer_alive, int prev_target) {
    if (layer_alive == 0) return 0;
    const int k =
        static_cast<int>(std::ceil(0.05 * layer_alive + 0.5 * prev_target));
    return std::min(k, layer_alive);
}

int cluster_member_cap(int layer_alive, int head_count) {
    assert(head_count >= 1 && layer_alive >= head_count);
    const int per_head = (layer_alive - head_count) / head_count;
    return static_cast<int>(std::ceil(per_head * 0.9));
}

int dormant_target_count(int first_layer_alive, int gateway_count) {
    assert(first_layer_alive >= gateway_count);
    return (first_layer_alive - gateway_count) / 2;
}

std::vector<NodeId> run_head_lottery(std::span<const NodeId> layer_ids,
                                     const std::vector<NodeState>& nodes,
                                     const ElectionState& election, double p,
                                     std::int64_t round, bool energy_weighted,
                                     SplitMix64& rng) {
    std::vector<NodeId> winners;
    for (NodeId id : layer_ids) {
        const NodeState& node = nodes[static_cast<std::size_t>(id)];
        const double u = rng.next_double();
        const bool in_g = election.in_candidate_set(id, round, p);
        const double threshold =
            energy_weighted
                ? eleach_threshold(p, round, in_g, node.energy, node.initial_energy)
                : leach_threshold(p, round, in_g);
        if (u < threshold) winners.push_back(id);
    }
    return winners;
}

namespace {

// Descending residual energy, lower id on ties.
struct ByEnergyDesc {
    const std::vector<NodeState>& nodes;
    bool operator()(NodeId a, NodeId b) const {
        const double ea = nodes[static_cast<std::size_t>(a)].energy;
        const double eb = nodes[static_cast<std::size_t>(b)].energy;
        if (ea != eb) return ea > eb;
        return a < b;
    }
};

}  // namespace

std::vector<NodeId> elect_cluster_heads(std::span<const NodeId> layer_ids,
                                        int k_target,
                                        const std::vector<NodeState>& nodes,
                                        ElectionState& election, double p,
                                        std::int64_t round, bool energy_weighted,
                                        SplitMix64& rng) {
    assert(k_target <= static_cast<int>(layer_ids.size()));
    std::vector<NodeId> heads;
    if (k_target == static_cast<int>(layer_ids.size())) {
        // Saturated band: everyone serves, no lottery needed.
        heads.assign(layer_ids.begin(), layer_ids.end());
    } else {
        heads = run_head_lottery(layer_ids, nodes, election, p, round,
                                 energy_weighted, rng);
        if (static_cast<int>(heads.size()) > k_target) {
            std::sort(heads.begin(), heads.end(), ByEnergyDesc{nodes});
            heads.resize(static_cast<std::size_t>(k_target));
        } else if (static_cast<int>(heads.size()) < k_target) {
            std::vector<bool> won(nodes.size(), false);
            for (NodeId id : heads) won[static_cast<std::size_t>(id)] = true;
            std::vector<NodeId> in_g_pool;
            std::vector<NodeId> fallback_pool;
            for (NodeId id : layer_ids) {
                if (won[static_cast<std::size_t>(id)]) continue;
                if (election.in_candidate_set(id, round, p)) in_g_pool.push_back(id);
                else fallback_pool.push_back(id);
            }
            std::sort(in_g_pool.begin(), in_g_pool.end(), ByEnergyDesc{nodes});
            std::sort(fallback_pool.begin(), fallback_pool.end(), ByEnergyDesc{nodes});
            for (NodeId id : in_g_pool) {
                if (static_cast<int>(heads.size()) >= k_target) break;
                heads.push_back(id);
            }
            // G exhausted but heads still owed: take anyone alive rather
            // than stall the band.
            for (NodeId id : fallback_pool) {
                if (static_cast<int>(heads.size()) >= k_target) break;
                heads.push_back(id);
            }
        }
    }
    std::sort(heads.begin(), heads.end());
    for (NodeId id : heads) election.record_head(id, round);
    return heads;
}

void form_clusters(std::span<const NodeId> layer_ids, std::span<const NodeId> heads,
                   int member_cap, std::vector<NodeState>& nodes,
                   std::vector<NodeId>& member_head) {
    if (heads.empty()) return;
    std::vector<bool> is_head(nodes.size(), false);
    for (NodeId h : heads) is_head[static_cast<std::size_t>(h)] = true;

    struct Candidate {
        NodeId id;
        double nearest_dist;
    };
    std::vector<Candidate> pending;
    for (NodeId id : layer_ids) {
        if (is_head[static_cast<std::size_t>(id)]) continue;
        double best = std::numeric_limits<double>::infinity();
        for (NodeId h : heads) {
            best = std::min(best, distance(nodes[static_cast<std::size_t>(id)].pos,
                                           nodes[static_cast<std::size_t>(h)].pos));
        }
        pending.push_back({id, best});
    }
    std::sort(pending.begin(), pending.end(), [](const Candidate& a, const Candidate& b) {
        if (a.nearest_dist != b.nearest_dist) return a.nearest_dist < b.nearest_dist;
        return a.id < b.id;
    });

    std::vector<int> load(heads.size(), 0);
    std::vector<NodeId> overflow;

    // Phase 1: closest nodes pick first, each taking its nearest head that
    // still has room.
    for (const Candidate& c : pending) {
        int best_idx = -1;
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t h = 0; h < heads.size(); ++h) {
            if (load[h] >= member_cap) continue;
            const double d = distance(nodes[static_cast<std::size_t>(c.id)].pos,
                                      nodes[static_cast<std::size_t>(heads[h])].pos);
            if (d < best_dist) {
                best_dist = d;
                best_idx = static_cast<int>(h);
            }
        }
        if (best_idx >= 0) {
            member_head[static_cast<std::size_t>(c.id)] = heads[static_cast<std::size_t>(best_idx)];
            ++load[static_cast<std::size_t>(best_idx)];
        } else {
            overflow.push_back(c.id);
        }
    }

    // Phase 2: every head is full; the leftovers join their nearest head
    // regardless of the cap.
    for (NodeId id : overflow) {
        int best_idx = 0;
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t h = 0; h < heads.size(); ++h) {
            const double d = distance(nodes[static_cast<std::size_t>(id)].pos,
                                      nodes[static_cast<std::size_t>(heads[h])].pos);
            if (d < best_dist) {
                best_dist = d;
                best_idx = static_cast<int>(h);
            }
        }
        member_head[static_cast<std::size_t>(id)] = heads[static_cast<std::size_t>(best_idx)];
    }
}

FirstLayerRoles select_first_layer_roles(std::span<const NodeId> layer_ids,
                                         int gateway_k, int dormant_k,
                                         const std::vector<NodeState>& nodes,
                                         const Position& sink) {
    std::vector<NodeId> ranked(layer_ids.begin(), layer_ids.end());
    std::sort(ranked.begin(), ranked.end(), [&](NodeId a, NodeId b) {
        const NodeState& na = nodes[static_cast<std::size_t>(a)];
        const NodeState& nb = nodes[static_cast<std::size_t>(b)];
        if (na.energy != nb.energy) return na.energy > nb.energy;
        const double da = distance(na.pos, sink);
        const double db = distance(nb.pos, sink);
        if (da != db) return da < db;
        return a < b;
    });

    FirstLayerRoles roles;
    const int n = static_cast<int>(ranked.size());
    const int g = std::min(gateway_k, n);
    const int d = std::min(dormant_k, n - g);
    roles.gateways.assign(ranked.begin(), ranked.begin() + g);
    roles.dormant.assign(ranked.begin() + g, ranked.begin() + g + d);
    roles.active.assign(ranked.begin() + g + d, ranked.end());
    std::sort(roles.gateways.begin(), roles.gateways.end());
    std::sort(roles.dormant.begin(), roles.dormant.end());
    std::sort(roles.active.begin(), roles.active.end());
    return roles;
}

namespace {

std::vector<NodeId> alive_ids(const std::vector<NodeState>& nodes) {
    std::vector<NodeId> ids;
    for (const NodeState& node : nodes) {
        if (node.alive()) ids.push_back(node.id);
    }
    return ids;
}

NodeId nearest_of(const Position& pos, std::span<const NodeId> candidates,
                  const std::vector<NodeState>& nodes) {
    NodeId best = candidates.front();
    double best_dist = std::numeric_limits<double>::infinity();
    for (NodeId id : candidates) {
        const double d = distance(pos, nodes[static_cast<std::size_t>(id)].pos);
        if (d < best_dist) {
            best_dist = d;
            best = id;
        }
    }
    return best;
}

}  // namespace

ClusterAssignment baseline_round_setup(std::vector<NodeState>& nodes,
                                       Protocol protocol, ElectionState& election,
                                       std::int64_t round, double p,
                                       SplitMix64& rng) {
    ClusterAssignment assignment;
    assignment.layered = false;
    assignment.member_head.assign(nodes.size(), kParentNone);
    assignment.heads_per_layer.resize(1);

    const std::vector<NodeId> alive = alive_ids(nodes);
    if (alive.empty()) return assignment;

    const bool energy_weighted = protocol == Protocol::ELeach;
    std::vector<NodeId> heads =
        run_head_lottery(alive, nodes, election, p, round, energy_weighted, rng);
    for (NodeId id : heads) election.record_head(id, round);

    for (NodeState& node : nodes) {
        if (node.alive()) node.role = Role::Member;
    }
    for (NodeId id : heads) nodes[static_cast<std::size_t>(id)].role = Role::ClusterHead;

    if (heads.empty()) {
        // Nobody won: the whole network reports straight to the sink.
        for (NodeId id : alive) assignment.member_head[static_cast<std::size_t>(id)] = kParentSink;
        return assignment;
    }

    assignment.heads_per_layer[0] = heads;
    for (NodeId id : alive) {
        if (nodes[static_cast<std::size_t>(id)].role == Role::ClusterHead) continue;
        assignment.member_head[static_cast<std::size_t>(id)] =
            nearest_of(nodes[static_cast<std::size_t>(id)].pos, heads, nodes);
    }
    return assignment;
}

ClusterAssignment propose_round_setup(std::vector<NodeState>& nodes,
                                      Protocol protocol, const Layering& layering,
                                      ElectionState& election, std::int64_t round,
                                      const Position& sink, SplitMix64& rng) {
    ClusterAssignment assignment;
    assignment.layered = true;
    assignment.member_head.assign(nodes.size(), kParentNone);
    assignment.heads_per_layer.resize(static_cast<std::size_t>(layering.count()));

    std::vector<std::vector<NodeId>> layer_ids(static_cast<std::size_t>(layering.count()));
    for (const NodeState& node : nodes) {
        if (!node.alive()) continue;
        layer_ids[static_cast<std::size_t>(node.layer - 1)].push_back(node.id);
    }
    for (NodeState& node : nodes) {
        if (node.alive()) node.role = Role::Member;
    }

    const bool energy_weighted = protocol == Protocol::Propose2;

    // First band: gateways and sleepers by rank, actives report to their
    // nearest gateway.
    const std::vector<NodeId>& first = layer_ids[0];
    const int n1 = static_cast<int>(first.size());
    const int gateway_target = gateway_target_count(n1);
    if (n1 > 0) {
        const int gateway_k = std::min(gateway_target, n1);
        const int dormant_k = dormant_target_count(n1, gateway_k);
        FirstLayerRoles roles =
            select_first_layer_roles(first, gateway_k, dormant_k, nodes, sink);
        assignment.gateways = roles.gateways;
        assignment.dormant = roles.dormant;
        for (NodeId id : roles.gateways) nodes[static_cast<std::size_t>(id)].role = Role::Gateway;
        for (NodeId id : roles.dormant) nodes[static_cast<std::size_t>(id)].role = Role::Dormant;
        for (NodeId id : roles.active) {
            assignment.member_head[static_cast<std::size_t>(id)] =
                nearest_of(nodes[static_cast<std::size_t>(id)].pos, roles.gateways, nodes);
        }
    }

    // Deeper bands: chained head targets, election, capped membership. The
    // chain passes each band's target on to the next, including through
    // empty bands.
    int prev_target = gateway_target;
    for (int layer = 2; layer <= layering.count(); ++layer) {
        const std::vector<NodeId>& ids = layer_ids[static_cast<std::size_t>(layer - 1)];
        const int n_i = static_cast<int>(ids.size());
        const int k_i = head_target_count(n_i, prev_target);
        prev_target = k_i;
        if (n_i == 0 || k_i == 0) continue;

        const double p_eff = static_cast<double>(k_i) / static_cast<double>(n_i);
        std::vector<NodeId> heads = elect_cluster_heads(ids, k_i, nodes, election,
                                                        p_eff, round,
                                                        energy_weighted, rng);
        for (NodeId id : heads) nodes[static_cast<std::size_t>(id)].role = Role::ClusterHead;
        assignment.heads_per_layer[static_cast<std::size_t>(layer - 1)] = heads;

        const int cap = cluster_member_cap(n_i, static_cast<int>(heads.size()));
        form_clusters(ids, heads, cap, nodes, assignment.member_head);
    }
    return assignment;
}

}  // namespace wsn
