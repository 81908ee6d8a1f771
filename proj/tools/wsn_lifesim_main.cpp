#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "wsn/config_io.hpp"
#include "wsn/core.hpp"
#include "wsn/engine.hpp"
#include "wsn/report.hpp"

namespace {

struct OutputOptions {
    std::string out_dir;
    std::vector<std::uint64_t> seeds{1};
    std::string sweep_spec;
};

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        if (comma == std::string::npos) {
            parts.push_back(text.substr(start));
            break;
        }
        parts.push_back(text.substr(start, comma - start));
        start = comma + 1;
    }
    return parts;
}

// Shared by config-file entries and flags so precedence is simply the order
// of application: defaults, then file, then flags.
void apply_option(wsn::NetworkConfig& cfg, OutputOptions& out,
                  const std::string& key, const std::string& value) {
    if (key == "protocol") {
        const auto p = wsn::protocol_from_string(value);
        if (!p) throw std::invalid_argument("unknown protocol '" + value + "'");
        cfg.protocol = *p;
    } else if (key == "nodes") {
        cfg.node_count = std::stoi(value);
    } else if (key == "area") {
        const auto [w, h] = wsn::parse_area(value);
        cfg.field_width = w;
        cfg.field_height = h;
        cfg.sink_initial = wsn::Position{w / 2.0, 1.5 * h};
    } else if (key == "sink") {
        const auto m = wsn::sink_mode_from_string(value);
        if (!m) throw std::invalid_argument("sink must be 'static' or 'mobile', got '" + value + "'");
        cfg.sink_mode = *m;
    } else if (key == "sink-speed") {
        cfg.sink_speed = std::stod(value);
    } else if (key == "rounds") {
        cfg.rounds_max = std::stoi(value);
    } else if (key == "seed") {
        out.seeds = {std::stoull(value)};
    } else if (key == "seeds") {
        out.seeds.clear();
        for (const std::string& s : split_csv(value)) out.seeds.push_back(std::stoull(s));
        if (out.seeds.empty()) throw std::invalid_argument("seeds list is empty");
    } else if (key == "p") {
        cfg.election_p = std::stod(value);
    } else if (key == "layer-fraction") {
        cfg.layer_fraction = std::stod(value);
    } else if (key == "out") {
        out.out_dir = value;
    } else if (key == "sweep") {
        out.sweep_spec = value;
    } else {
        throw std::invalid_argument("unknown option '" + key + "'");
    }
}

int run_cli(int argc, char** argv) {
    CLI::App app{"Discrete-round wireless-sensor-network lifetime simulator"};

    std::map<std::string, std::string> flag_values;
    std::string config_path;
    app.add_option("--config", config_path, "flat key=value config file");
    for (const char* name :
         {"protocol", "nodes", "area", "sink", "sink-speed", "rounds", "seed",
          "seeds", "p", "layer-fraction", "out", "sweep"}) {
        const std::string key = name;
        app.add_option_function<std::string>(
               "--" + key,
               [&flag_values, key](const std::string& v) { flag_values[key] = v; })
            ->expected(1);
    }
    app.get_option("--protocol")->description("leach|eleach|propose1|propose2");
    app.get_option("--area")->description("field size WxH in meters");
    app.get_option("--sink")->description("static|mobile");
    app.get_option("--sink-speed")->description("meters per round along the orbit");
    app.get_option("--seeds")->description("comma-separated seed list for an ensemble");
    app.get_option("--sweep")->description("DIM=V1,V2,... over nodes|area|sink_speed|protocol");

    CLI11_PARSE(app, argc, argv);

    wsn::NetworkConfig cfg;
    OutputOptions out;
    if (const char* env = std::getenv("WSN_LIFESIM_OUT")) out.out_dir = env;

    if (!config_path.empty()) {
        for (const auto& [key, value] : wsn::load_config_file(config_path)) {
            apply_option(cfg, out, key, value);
        }
    }
    for (const auto& [key, value] : flag_values) apply_option(cfg, out, key, value);

    wsn::validate_config(cfg);

    namespace fs = std::filesystem;
    const fs::path out_dir = out.out_dir.empty() ? fs::path{"."} : fs::path{out.out_dir};
    fs::create_directories(out_dir);

    if (!out.sweep_spec.empty()) {
        const auto eq = out.sweep_spec.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("sweep must look like DIM=V1,V2,...");
        }
        const auto dim = wsn::sweep_dimension_from_string(out.sweep_spec.substr(0, eq));
        if (!dim) {
            throw std::invalid_argument("unknown sweep dimension '" +
                                        out.sweep_spec.substr(0, eq) + "'");
        }
        const std::vector<std::string> values = split_csv(out.sweep_spec.substr(eq + 1));
        const auto records = wsn::sweep(cfg, *dim, values, out.seeds);
        const fs::path path = out_dir / "summary.csv";
        wsn::emit_summary(records, path);
        for (const auto& r : records) {
            std::printf("%s nodes=%d area=%gx%g sink=%s speed=%g  FND median %.1f  LND median %.1f\n",
                        r.protocol.c_str(), r.nodes, r.field_w, r.field_h,
                        r.sink_mode.c_str(), r.sink_speed, r.fnd_median, r.lnd_median);
        }
        std::printf("wrote %s\n", path.string().c_str());
        return 0;
    }

    if (out.seeds.size() > 1) {
        const wsn::EnsembleResult ensemble = wsn::run_ensemble(cfg, out.seeds);
        const auto record = wsn::make_summary_record(cfg, ensemble);
        const fs::path path = out_dir / "summary.csv";
        wsn::emit_summary({record}, path);
        std::printf("%s over %zu seeds: FND median %.1f mean %.1f, HND median %.1f, LND median %.1f mean %.1f\n",
                    record.protocol.c_str(), out.seeds.size(), ensemble.fnd_median,
                    ensemble.fnd_mean, ensemble.hnd_median, ensemble.lnd_median,
                    ensemble.lnd_mean);
        std::printf("wrote %s\n", path.string().c_str());
        return 0;
    }

    cfg.rng_seed = out.seeds.front();
    const wsn::RunResult result = wsn::run(cfg);
    const fs::path path =
        out_dir / ("trace_" + wsn::to_string(cfg.protocol) + "_seed" +
                   std::to_string(cfg.rng_seed) + ".csv");
    wsn::emit_trace(result.rounds, path);
    const wsn::LifetimeSummary& life = result.lifetime;
    std::printf("%s seed=%llu: rounds=%d first_death=%d half_death=%d last_death=%d\n",
                wsn::to_string(cfg.protocol).c_str(),
                static_cast<unsigned long long>(cfg.rng_seed), life.rounds_executed,
                life.first_node_death, life.half_nodes_death, life.last_node_death);
    std::printf("wrote %s\n", path.string().c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
