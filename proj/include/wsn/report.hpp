#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "wsn/core.hpp"
#include "wsn/engine.hpp"

namespace wsn {

// Writes the per-round trace as CSV with header
// round,alive,total_energy_j,deaths,ch_count,gateway_count,dormant_count
// and energy at 9 decimal places. Throws std::runtime_error naming the path
// on I/O failure.
void emit_trace(const std::vector<RoundMetrics>& metrics,
                const std::filesystem::path& path);

// Reads a trace back; inverse of emit_trace up to the 9-decimal energy
// quantization.
std::vector<RoundMetrics> parse_trace(const std::filesystem::path& path);

// One protocol/config cell of an ensemble, enough to rebuild a comparison
// table row.
struct SummaryRecord {
    std::string protocol;
    int nodes = 0;
    double field_w = 0.0, field_h = 0.0;
    std::string sink_mode;
    double sink_speed = 0.0;
    int seed_count = 0;
    double fnd_median = 0.0, fnd_mean = 0.0;
    double hnd_median = 0.0, hnd_mean = 0.0;
    double lnd_median = 0.0, lnd_mean = 0.0;
};

SummaryRecord make_summary_record(const NetworkConfig& config,
                                  const EnsembleResult& ensemble);

void emit_summary(const std::vector<SummaryRecord>& records,
                  const std::filesystem::path& path);

enum class SweepDimension { Nodes, Area, SinkSpeed, Protocol };

std::optional<SweepDimension> sweep_dimension_from_string(const std::string& s);

// Applies one sweep value ("300", "100x100", "propose2", ...) to a copy of
// the base config. Throws std::invalid_argument on a malformed value.
NetworkConfig apply_sweep_value(const NetworkConfig& base, SweepDimension dim,
                                const std::string& value);

// Runs the cross product of sweep values with a shared seed list and returns
// one record per cell, in value order.
std::vector<SummaryRecord> sweep(const NetworkConfig& base, SweepDimension dim,
                                 const std::vector<std::string>& values,
                                 std::span<const std::uint64_t> seeds);

}  // namespace wsn
