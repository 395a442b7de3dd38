#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cuntz {

// Thrown when a request exceeds a configured resource bound, as opposed to
// violating a mathematical precondition (those use std::invalid_argument /
// std::domain_error).
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Resource bounds and the default numeric tolerance.  Every bound-checked
// operation takes a Limits argument defaulting to these values.
struct Limits {
    int max_car_index = 12;   // largest n accepted by car_generator
    int max_level = 8;        // largest word length for expansion / matrices
    int max_perm_depth = 12;  // largest cutoff for the permutative lower bound
    double tolerance = 1e-9;  // default tolerance for float norm comparisons
};

inline const Limits& default_limits() {
    static const Limits l{};
    return l;
}

struct Config {
    Limits limits{};
    std::uint64_t seed = 0;
};

// Minimal "key = value" file format; '#' starts a comment.  Unknown keys are
// rejected so typos do not silently fall back to defaults.
inline Config load_config(std::istream& in) {
    Config cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r\n");
            auto e = s.find_last_not_of(" \t\r\n");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": empty key or value");
        try {
            if (key == "max_car_index")
                cfg.limits.max_car_index = std::stoi(value);
            else if (key == "max_level")
                cfg.limits.max_level = std::stoi(value);
            else if (key == "max_perm_depth")
                cfg.limits.max_perm_depth = std::stoi(value);
            else if (key == "tolerance")
                cfg.limits.tolerance = std::stod(value);
            else if (key == "seed")
                cfg.seed = std::stoull(value);
            else
                throw std::invalid_argument("config line " + std::to_string(lineno) +
                                            ": unknown key '" + key + "'");
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": bad value '" + value + "' for " + key);
        }
    }
    return cfg;
}

inline Config load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    return load_config(in);
}

}  // namespace cuntz
