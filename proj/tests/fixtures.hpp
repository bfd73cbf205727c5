#pragma once

#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include "pefet/config.hpp"

namespace fixtures {

inline std::string default_ini_path() { return std::string(PEFET_SOURCE_DIR) + "/configs/default.ini"; }

inline std::string default_ini_text() {
    std::ifstream in(default_ini_path());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// The shipped configuration, parsed once.
inline const pefet::RunConfig& config() {
    static const pefet::RunConfig cfg = pefet::load_config(default_ini_path());
    return cfg;
}

inline const pefet::PeFetConfig& device() { return config().device(); }

/// Replace `key = ...` in the shipped INI text (first occurrence after `section`).
inline std::string with_value(std::string text, const std::string& section, const std::string& key,
                              const std::string& value) {
    auto at = text.find("[" + section + "]");
    std::regex re("\\n" + key + " = [^\\n]*");
    std::smatch m;
    std::string tail = text.substr(at);
    if (std::regex_search(tail, m, re)) {
        tail.replace(m.position(0), m.length(0), "\n" + key + " = " + value);
    }
    return text.substr(0, at) + tail;
}

}  // namespace fixtures
