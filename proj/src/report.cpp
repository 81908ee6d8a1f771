#include "wsn/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "wsn/config_io.hpp"

namespace wsn {

namespace {

[[noreturn]] void io_fail(const std::string& what, const std::filesystem::path& path) {
    throw std::runtime_error(what + ": " + path.string());
}

}  // namespace

void emit_trace(const std::vector<RoundMetrics>& metrics,
                const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) io_fail("cannot open trace file for writing", path);
    out << "round,alive,total_energy_j,deaths,ch_count,gateway_count,dormant_count\n";
    char line[160];
    for (const RoundMetrics& m : metrics) {
        std::snprintf(line, sizeof line, "%d,%d,%.9f,%d,%d,%d,%d\n", m.round,
                      m.alive, m.total_energy, m.deaths_this_round, m.ch_count,
                      m.gateway_count, m.dormant_count);
        out << line;
    }
    if (!out.flush()) io_fail("failed writing trace file", path);
}

std::vector<RoundMetrics> parse_trace(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) io_fail("cannot open trace file for reading", path);
    std::string line;
    if (!std::getline(in, line)) io_fail("trace file is empty", path);

    std::vector<RoundMetrics> metrics;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        RoundMetrics m;
        if (std::sscanf(line.c_str(), "%d,%d,%lf,%d,%d,%d,%d", &m.round, &m.alive,
                        &m.total_energy, &m.deaths_this_round, &m.ch_count,
                        &m.gateway_count, &m.dormant_count) != 7) {
            io_fail("malformed trace line", path);
        }
        metrics.push_back(m);
    }
    return metrics;
}

SummaryRecord make_summary_record(const NetworkConfig& config,
                                  const EnsembleResult& ensemble) {
    SummaryRecord rec;
    rec.protocol = to_string(config.protocol);
    rec.nodes = config.node_count;
    rec.field_w = config.field_width;
    rec.field_h = config.field_height;
    rec.sink_mode = to_string(config.sink_mode);
    rec.sink_speed = config.sink_mode == SinkMode::Mobile ? config.sink_speed : 0.0;
    rec.seed_count = static_cast<int>(ensemble.seeds.size());
    rec.fnd_median = ensemble.fnd_median;
    rec.fnd_mean = ensemble.fnd_mean;
    rec.hnd_median = ensemble.hnd_median;
    rec.hnd_mean = ensemble.hnd_mean;
    rec.lnd_median = ensemble.lnd_median;
    rec.lnd_mean = ensemble.lnd_mean;
    return rec;
}

void emit_summary(const std::vector<SummaryRecord>& records,
                  const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) io_fail("cannot open summary file for writing", path);
    out << "protocol,nodes,area,sink_mode,sink_speed_m_per_round,seeds,"
           "fnd_median,fnd_mean,hnd_median,hnd_mean,lnd_median,lnd_mean\n";
    char line[320];
    for (const SummaryRecord& r : records) {
        std::snprintf(line, sizeof line,
                      "%s,%d,%gx%g,%s,%g,%d,%g,%g,%g,%g,%g,%g\n",
                      r.protocol.c_str(), r.nodes, r.field_w, r.field_h,
                      r.sink_mode.c_str(), r.sink_speed, r.seed_count,
                      r.fnd_median, r.fnd_mean, r.hnd_median, r.hnd_mean,
                      r.lnd_median, r.lnd_mean);
        out << line;
    }
    if (!out.flush()) io_fail("failed writing summary file", path);
}

std::optional<SweepDimension> sweep_dimension_from_string(const std::string& s) {
    if (s == "nodes") return SweepDimension::Nodes;
    if (s == "area") return SweepDimension::Area;
    if (s == "sink_speed" || s == "sink-speed") return SweepDimension::SinkSpeed;
    if (s == "protocol") return SweepDimension::Protocol;
    return std::nullopt;
}

NetworkConfig apply_sweep_value(const NetworkConfig& base, SweepDimension dim,
                                const std::string& value) {
    NetworkConfig cfg = base;
    switch (dim) {
        case SweepDimension::Nodes:
            cfg.node_count = std::stoi(value);
            break;
        case SweepDimension::Area: {
            const auto [w, h] = parse_area(value);
            cfg.field_width = w;
            cfg.field_height = h;
            // Keep the default sink geometry proportional to the field
            // unless the caller pinned it explicitly.
            cfg.sink_initial = Position{w / 2.0, 1.5 * h};
            break;
        }
        case SweepDimension::SinkSpeed:
            cfg.sink_speed = std::stod(value);
            cfg.sink_mode = SinkMode::Mobile;
            break;
        case SweepDimension::Protocol: {
            const auto p = protocol_from_string(value);
            if (!p) throw std::invalid_argument("unknown protocol: " + value);
            cfg.protocol = *p;
            break;
        }
    }
    return cfg;
}

std::vector<SummaryRecord> sweep(const NetworkConfig& base, SweepDimension dim,
                                 const std::vector<std::string>& values,
                                 std::span<const std::uint64_t> seeds) {
    std::vector<SummaryRecord> records;
    records.reserve(values.size());
    for (const std::string& value : values) {
        const NetworkConfig cfg = apply_sweep_value(base, dim, value);
        validate_config(cfg);
        records.push_back(make_summary_record(cfg, run_ensemble(cfg, seeds)));
    }
    return records;
}

}  // namespace wsn
