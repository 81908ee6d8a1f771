#include "wsn/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "wsn/layering.hpp"
#include "wsn/protocols.hpp"
#include "wsn/sink.hpp"

namespace wsn {

namespace {

int count_alive(const std::vector<NodeState>& nodes) {
    int alive = 0;
    for (const NodeState& node : nodes) {
        if (node.alive()) ++alive;
    }
    return alive;
}

double total_energy(const std::vector<NodeState>& nodes) {
    double total = 0.0;
    for (const NodeState& node : nodes) total += node.energy;
    return total;
}

bool is_layered(Protocol p) {
    return p == Protocol::Propose1 || p == Protocol::Propose2;
}

}  // namespace

RunResult run(const NetworkConfig& config, const RoundObserver& observer) {
    validate_config(config);

    RunResult result;
    SplitMix64 rng(config.rng_seed);
    std::vector<NodeState> nodes = deploy_network(config, rng);
    SinkState sink = make_sink_state(config);
    ElectionState election(config.node_count);
    Layering layering;

    const bool layered = is_layered(config.protocol);
    const int half_dead = (config.node_count + 1) / 2;
    int alive = count_alive(nodes);
    LifetimeSummary& life = result.lifetime;

    for (int r = 0; r < config.rounds_max && alive > 0; ++r) {
        if (config.sink_mode == SinkMode::Mobile) {
            const Position before = sink.pos;
            sink = advance_sink(sink);
            if (layered && (r == 0 || sink.pos.x != before.x || sink.pos.y != before.y)) {
                layering = relayer_on_sink_move(nodes, sink.pos, config);
            }
        } else if (layered && r == 0) {
            layering = relayer_on_sink_move(nodes, sink.pos, config);
        }

        ClusterAssignment assignment =
            layered ? propose_round_setup(nodes, config.protocol, layering, election,
                                          r, sink.pos, rng)
                    : baseline_round_setup(nodes, config.protocol, election, r,
                                           config.election_p, rng);

        std::vector<NodeState> setup_copy;
        if (observer) setup_copy = nodes;

        ForwardingTree tree =
            build_forwarding_tree(assignment, nodes, config.route_metric);
        TrafficResult traffic =
            execute_round_traffic(tree, config.radio, nodes, sink.pos);

        const int alive_after = count_alive(nodes);
        RoundMetrics metrics;
        metrics.round = r + 1;
        metrics.alive = alive_after;
        metrics.total_energy = total_energy(nodes);
        metrics.deaths_this_round = alive - alive_after;
        metrics.ch_count = assignment.head_count();
        metrics.gateway_count = static_cast<int>(assignment.gateways.size());
        metrics.dormant_count = static_cast<int>(assignment.dormant.size());
        result.rounds.push_back(metrics);

        if (life.first_node_death == 0 && alive_after < config.node_count)
            life.first_node_death = metrics.round;
        if (life.half_nodes_death == 0 && config.node_count - alive_after >= half_dead)
            life.half_nodes_death = metrics.round;
        if (life.last_node_death == 0 && alive_after == 0)
            life.last_node_death = metrics.round;
        life.rounds_executed = metrics.round;

        if (observer) {
            observer(RoundSnapshot{r, setup_copy, nodes, assignment, tree,
                                   traffic.debits, traffic.packets_delivered,
                                   layering, sink.pos});
        }
        alive = alive_after;
    }
    return result;
}

double median(std::vector<double> values) {
    if (values.empty()) return 0.0;
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

namespace {

double mean(const std::vector<double>& values) {
    if (values.empty()) return 0.0;
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

}  // namespace

EnsembleResult run_ensemble(const NetworkConfig& config,
                            std::span<const std::uint64_t> seeds,
                            unsigned max_threads) {
    EnsembleResult result;
    result.seeds.assign(seeds.begin(), seeds.end());
    result.per_seed.resize(seeds.size());

    unsigned workers = max_threads > 0 ? max_threads : std::thread::hardware_concurrency();
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(seeds.size())));

    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= seeds.size()) break;
            NetworkConfig cfg = config;
            cfg.rng_seed = seeds[i];
            result.per_seed[i] = run(cfg).lifetime;
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) threads.emplace_back(work);
        for (std::thread& t : threads) t.join();
    }

    std::vector<double> fnd, hnd, lnd;
    for (const LifetimeSummary& s : result.per_seed) {
        fnd.push_back(s.first_node_death);
        hnd.push_back(s.half_nodes_death);
        lnd.push_back(s.last_node_death);
    }
    result.fnd_median = median(fnd);
    result.fnd_mean = mean(fnd);
    result.hnd_median = median(hnd);
    result.hnd_mean = mean(hnd);
    result.lnd_median = median(lnd);
    result.lnd_mean = mean(lnd);
    return result;
}

}  // namespace wsn
