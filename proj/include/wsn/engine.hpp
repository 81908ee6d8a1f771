#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "wsn/core.hpp"
#include "wsn/routing.hpp"

namespace wsn {

// Everything a per-round observer may inspect. nodes_at_setup is the state
// after roles were assigned but before any traffic; debits hold the energy
// actually removed from each node this round.
struct RoundSnapshot {
    std::int64_t round_index = 0;  // 0-based
    const std::vector<NodeState>& nodes_at_setup;
    const std::vector<NodeState>& nodes_after;
    const ClusterAssignment& assignment;
    const ForwardingTree& tree;
    const std::vector<double>& debits;
    int packets_delivered = 0;
    const Layering& layering;
    Position sink_pos;
};

// Invoked after each round. Setup-state copies are made only when an
// observer is installed, so bare runs pay nothing for the hook.
using RoundObserver = std::function<void(const RoundSnapshot&)>;

struct RunResult {
    std::vector<RoundMetrics> rounds;
    LifetimeSummary lifetime;
};

// One full simulation: validate, deploy, then per round advance the sink,
// re-layer if it moved, form clusters, build the forwarding tree, run
// traffic, and record metrics, until every node is dead or rounds_max is
// reached. Deterministic in (config, rng_seed).
RunResult run(const NetworkConfig& config, const RoundObserver& observer = {});

struct EnsembleResult {
    std::vector<std::uint64_t> seeds;
    std::vector<LifetimeSummary> per_seed;  // aligned with seeds
    double fnd_median = 0.0, fnd_mean = 0.0;
    double hnd_median = 0.0, hnd_mean = 0.0;
    double lnd_median = 0.0, lnd_mean = 0.0;
};

// Independent runs over a seed list, executed in parallel. Each run owns its
// full state; per-seed results do not depend on list order or thread count.
EnsembleResult run_ensemble(const NetworkConfig& config,
                            std::span<const std::uint64_t> seeds,
                            unsigned max_threads = 0);

double median(std::vector<double> values);

}  // namespace wsn
