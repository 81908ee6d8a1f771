#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "wsn/core.hpp"

namespace wsn {

// Flat key=value config file, one option per line, '#' comments. Keys are
// the CLI flag names without dashes (protocol, nodes, area, sink,
// sink-speed, rounds, seed, seeds, p, layer-fraction, out, sweep). Unknown
// keys throw std::invalid_argument.
std::map<std::string, std::string> load_config_file(const std::filesystem::path& path);

// Parses "WxH" into width/height. Throws std::invalid_argument on bad input.
std::pair<double, double> parse_area(const std::string& text);

}  // namespace wsn
