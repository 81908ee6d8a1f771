#include "wsn/config_io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <stdexcept>

namespace wsn {

namespace {

constexpr std::array<const char*, 12> kKnownKeys = {
    "protocol", "nodes",  "area", "sink",           "sink-speed", "rounds",
    "seed",     "seeds",  "p",    "layer-fraction", "out",        "sweep"};

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

std::map<std::string, std::string> load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file: " + path.string());
    }
    std::map<std::string, std::string> options;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config file " + path.string() + " line " +
                                        std::to_string(line_no) +
                                        ": expected key=value");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end()) {
            throw std::invalid_argument("config file " + path.string() + " line " +
                                        std::to_string(line_no) +
                                        ": unknown key '" + key + "'");
        }
        options[key] = value;
    }
    return options;
}

std::pair<double, double> parse_area(const std::string& text) {
    const auto x = text.find('x');
    if (x == std::string::npos || x == 0 || x + 1 >= text.size()) {
        throw std::invalid_argument("area must look like WxH, got '" + text + "'");
    }
    std::size_t used_w = 0;
    std::size_t used_h = 0;
    const std::string w_str = text.substr(0, x);
    const std::string h_str = text.substr(x + 1);
    const double w = std::stod(w_str, &used_w);
    const double h = std::stod(h_str, &used_h);
    if (used_w != w_str.size() || used_h != h_str.size()) {
        throw std::invalid_argument("area must look like WxH, got '" + text + "'");
    }
    return {w, h};
}

}  // namespace wsn
