#pragma once

// Machine-readable verification report. One row per physics claim, each
// carrying the anchor label of the claim it tests, the measured residual,
// its tolerance and the pass flag. The generated_at field is the only part
// excluded from determinism guarantees.

#include <cstdint>
#include <ctime>
#include <string>
#include <vector>

#include "tauspinor/config.hpp"
#include "tauspinor/io.hpp"

namespace tauspinor {

inline constexpr const char* kVersion = "0.1.0";

struct ClaimResult {
    std::string id;
    std::string anchor;
    double residual = 0;
    double tolerance = 0;
    bool pass = false;
};

struct VerificationReport {
    std::vector<ClaimResult> claims;
    std::uint64_t seed = 0;

    int total() const { return static_cast<int>(claims.size()); }
    int passed() const {
        int n = 0;
        for (const auto& c : claims) n += c.pass ? 1 : 0;
        return n;
    }
    int failed() const { return total() - passed(); }
    bool all_pass() const { return failed() == 0; }
};

inline std::string iso_timestamp_now() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

inline json config_to_json(const ScenarioConfig& c) {
    return json{{"scenario", c.scenario}, {"nx", c.nx},       {"ntau", c.ntau},
                {"lx", c.lx},             {"ltau", c.ltau},   {"k0", c.k0},
                {"kappa0", c.kappa0},     {"sigma_x", c.sigma_x}, {"sigma_tau", c.sigma_tau},
                {"v0", c.v0},             {"branch", c.branch},   {"helicity", c.helicity},
                {"t_final", c.t_final},   {"n_snapshots", c.n_snapshots},
                {"seed", c.seed},         {"tol_scale", c.tol_scale}};
}

inline json report_to_json(const VerificationReport& r, const ScenarioConfig& cfg,
                           bool with_timestamp = true) {
    json claims = json::array();
    for (const auto& c : r.claims)
        claims.push_back({{"id", c.id},
                          {"anchor", c.anchor},
                          {"residual", c.residual},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass}});
    json out{{"version", kVersion},
             {"seed", r.seed},
             {"config", config_to_json(cfg)},
             {"summary", {{"total", r.total()}, {"passed", r.passed()}, {"failed", r.failed()}}},
             {"claims", claims},
             {"dirac_matrices",
              {{"alpha1", matrix_to_json(dirac_alpha(1))},
               {"alpha2", matrix_to_json(dirac_alpha(2))},
               {"alpha3", matrix_to_json(dirac_alpha(3))},
               {"beta", matrix_to_json(dirac_beta())}}}};
    if (with_timestamp) out["generated_at"] = iso_timestamp_now();
    return out;
}

}  // namespace tauspinor
