#pragma once

// Scenario configuration: flat key=value text file, with command-line flag
// overrides applied on top (flags win). Every invariant is validated before
// a config is handed to the engines.

#include <cctype>
#include <cstdint>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>

#include "tauspinor/kinematics.hpp"
#include "tauspinor/solver.hpp"

namespace tauspinor {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ScenarioConfig {
    std::string scenario = "verify";

    // grid
    int nx = 256;
    int ntau = 64;
    double lx = 64.0;
    double ltau = 16.0;

    // mode / packet parameters
    double k0 = 2.0 * kPi * 8.0 / 64.0;    // 8 spatial periods on the default box
    double kappa0 = 2.0 * kPi * 2.0 / 16.0;  // 2 internal periods
    double sigma_x = 4.0;
    double sigma_tau = 1.0;
    double v0 = 0.6;  // worldline speed for the kinematics scenarios
    int branch = 1;
    int helicity = 1;

    // evolution
    double t_final = 2.0;
    int n_snapshots = 5;

    std::string out_dir = "out";
    std::uint64_t seed = 0;
    double tol_scale = 1.0;  // multiplies every verification tolerance

    void validate() const {
        auto pow2 = [](int n) { return n >= 4 && (n & (n - 1)) == 0; };
        if (!pow2(nx) || !pow2(ntau))
            throw ConfigError("grid size must be a power of two >= 4");
        if (!(lx > 0) || !(ltau > 0)) throw ConfigError("box periods must be positive");
        if (!(t_final >= 0)) throw ConfigError("t_final must be >= 0");
        if (n_snapshots < 1) throw ConfigError("n_snapshots must be >= 1");
        if (branch != 1 && branch != -1) throw ConfigError("branch must be +1 or -1");
        if (helicity != 1 && helicity != -1) throw ConfigError("helicity must be +1 or -1");
        if (!(sigma_x > 0) || !(sigma_tau > 0)) throw ConfigError("widths must be positive");
        if (!(v0 >= 0) || v0 >= 1.0) throw ConfigError("v0 must lie in [0, 1)");
        if (!(tol_scale >= 0)) throw ConfigError("tol_scale must be >= 0");
        try {
            (void)wavenumber_index(k0, nx, lx);
        } catch (const std::invalid_argument&) {
            throw ConfigError("k0 is not compatible with the (nx, lx) grid");
        }
        try {
            (void)wavenumber_index(kappa0, ntau, ltau);
        } catch (const std::invalid_argument&) {
            throw ConfigError("kappa0 is not compatible with the (ntau, ltau) grid");
        }
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

inline int to_int(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        const int r = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return r;
    } catch (const std::exception&) {
        throw ConfigError("invalid integer for key '" + key + "': " + v);
    }
}

inline double to_double(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double r = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return r;
    } catch (const std::exception&) {
        throw ConfigError("invalid number for key '" + key + "': " + v);
    }
}

}  // namespace detail

/// Apply one key=value assignment; unknown keys are errors that name the key.
inline void apply_key(ScenarioConfig& cfg, const std::string& key, const std::string& value) {
    using detail::to_double;
    using detail::to_int;
    if (key == "scenario") cfg.scenario = value;
    else if (key == "nx") cfg.nx = to_int(value, key);
    else if (key == "ntau") cfg.ntau = to_int(value, key);
    else if (key == "lx") cfg.lx = to_double(value, key);
    else if (key == "ltau") cfg.ltau = to_double(value, key);
    else if (key == "k0") cfg.k0 = to_double(value, key);
    else if (key == "kappa0") cfg.kappa0 = to_double(value, key);
    else if (key == "sigma_x") cfg.sigma_x = to_double(value, key);
    else if (key == "sigma_tau") cfg.sigma_tau = to_double(value, key);
    else if (key == "v0") cfg.v0 = to_double(value, key);
    else if (key == "branch") cfg.branch = to_int(value, key);
    else if (key == "helicity") cfg.helicity = to_int(value, key);
    else if (key == "t_final") cfg.t_final = to_double(value, key);
    else if (key == "n_snapshots") cfg.n_snapshots = to_int(value, key);
    else if (key == "out_dir") cfg.out_dir = value;
    else if (key == "seed") {
        try {
            cfg.seed = static_cast<std::uint64_t>(std::stoull(value));
        } catch (const std::exception&) {
            throw ConfigError("invalid integer for key 'seed': " + value);
        }
    }
    else if (key == "tol_scale") cfg.tol_scale = to_double(value, key);
    else throw ConfigError("unknown config key '" + key + "'");
}

/// Parse a key=value file on top of defaults. Blank lines and lines starting
/// with '#' are skipped. Validation is the caller's job (flag overrides may
/// still arrive).
inline ScenarioConfig parse_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config file: " + path);
    ScenarioConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string t = detail::trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
        apply_key(cfg, detail::trim(t.substr(0, eq)), detail::trim(t.substr(eq + 1)));
    }
    return cfg;
}

}  // namespace tauspinor
