#pragma once

#include <cstdint>
#include <span>

#include "wsn/core.hpp"
#include "wsn/rng.hpp"

namespace wsn {

// Rotation bookkeeping for the head lotteries. A node that served as head
// recently enough is outside the candidate set G and its threshold is zero.
struct ElectionState {
    static constexpr std::int64_t kNeverHead = -(std::int64_t{1} << 40);
    std::vector<std::int64_t> last_head_round;

    explicit ElectionState(int node_count = 0)
        : last_head_round(static_cast<std::size_t>(node_count), kNeverHead) {}

    bool in_candidate_set(NodeId id, std::int64_t round, double p) const;
    void record_head(NodeId id, std::int64_t round) {
        last_head_round[static_cast<std::size_t>(id)] = round;
    }
};

// Epoch length of the rotation window: one full head cycle at probability p.
std::int64_t election_epoch(double p);

// Classic rotating-threshold election probability for a node in G at the
// given round; zero outside G.
double leach_threshold(double p, std::int64_t round, bool in_g);

// Energy-weighted variant: the plain threshold scaled by residual/initial.
double eleach_threshold(double p, std::int64_t round, bool in_g, double energy,
                        double initial_energy);

// Relay (gateway) count for the first band: 2% of its alive nodes, at least
// two whenever the band is populated.
int gateway_target_count(int first_layer_alive);

// Head count for a deeper band: 5% of its alive nodes plus half the previous
// band's target, capped at the band population.
int head_target_count(int layer_alive, int prev_target);

// Per-head member ceiling: 90% of the even members-per-head split.
int cluster_member_cap(int layer_alive, int head_count);

// First-band sleepers: half of the nodes left over after gateway selection.
int dormant_target_count(int first_layer_alive, int gateway_count);

// One lottery pass over a layer: one uniform draw per node in ascending id
// (drawn even for nodes outside G, which cannot win, so the stream does not
// depend on rotation state). energy_weighted selects the threshold variant.
std::vector<NodeId> run_head_lottery(std::span<const NodeId> layer_ids,
                                     const std::vector<NodeState>& nodes,
                                     const ElectionState& election, double p,
                                     std::int64_t round, bool energy_weighted,
                                     SplitMix64& rng);

// Lottery followed by adjustment to exactly k_target heads: surplus winners
// are trimmed keeping the highest residual energy, short lotteries are filled
// from non-winners in G by descending energy, and if G is exhausted the fill
// falls back to any alive node so the layer never stalls. Ties break on the
// lower id. Records the final heads in the election state.
std::vector<NodeId> elect_cluster_heads(std::span<const NodeId> layer_ids,
                                        int k_target,
                                        const std::vector<NodeState>& nodes,
                                        ElectionState& election, double p,
                                        std::int64_t round, bool energy_weighted,
                                        SplitMix64& rng);

// Two-phase capped membership. Phase 1 walks non-head nodes in ascending
// distance-to-nearest-head order, each joining the nearest head with spare
// capacity; nodes left over (possible only once every head is full) join
// their nearest head outright in phase 2.
void form_clusters(std::span<const NodeId> layer_ids, std::span<const NodeId> heads,
                   int member_cap, std::vector<NodeState>& nodes,
                   std::vector<NodeId>& member_head);

struct FirstLayerRoles {
    std::vector<NodeId> gateways;
    std::vector<NodeId> dormant;
    std::vector<NodeId> active;  // members that report to their nearest gateway
};

// Ranks the first band by descending residual energy (ties: nearer to sink,
// then lower id); the best gateway_k become gateways, the next dormant_k
// sleep, the rest stay active.
FirstLayerRoles select_first_layer_roles(std::span<const NodeId> layer_ids,
                                         int gateway_k, int dormant_k,
                                         const std::vector<NodeState>& nodes,
                                         const Position& sink);

// Network-wide baseline round: one flat lottery (energy-weighted for the
// E-LEACH variant), members join the nearest head uncapped, heads report
// straight to the sink. A zero-head lottery falls back to every node
// transmitting directly to the sink.
ClusterAssignment baseline_round_setup(std::vector<NodeState>& nodes,
                                       Protocol protocol, ElectionState& election,
                                       std::int64_t round, double p,
                                       SplitMix64& rng);

// Layered round for the proposed variants: target counts chained across
// bands, per-band elections (energy-weighted for the second variant), capped
// membership, and gateway/dormant/active roles in the first band.
ClusterAssignment propose_round_setup(std::vector<NodeState>& nodes,
                                      Protocol protocol, const Layering& layering,
                                      ElectionState& election, std::int64_t round,
                                      const Position& sink, SplitMix64& rng);

}  // namespace wsn
