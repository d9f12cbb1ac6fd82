#pragma once

// Scenario runner: emits plot-ready CSV data plus a manifest JSON listing
// every file written and any scalar checks computed along the way.

#include <filesystem>
#include <string>
#include <vector>

#include "tauspinor/config.hpp"
#include "tauspinor/io.hpp"
#include "tauspinor/report.hpp"
#include "tauspinor/solver.hpp"

namespace tauspinor {

inline const std::vector<std::string>& scenario_names() {
    static const std::vector<std::string> names = {"timeline", "quadrants", "evolution",
                                                   "mass-spectrum", "ehrenfest"};
    return names;
}

/// Run one named scenario; returns the manifest that was also written to
/// <out_dir>/manifest.json.
inline json run_scenario(const ScenarioConfig& cfg) {
    cfg.validate();
    namespace fs = std::filesystem;
    const fs::path out(cfg.out_dir);
    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec) throw IoError("cannot create output directory: " + out.string());

    json manifest{{"scenario", cfg.scenario}, {"config", config_to_json(cfg)},
                  {"files", json::array()}, {"checks", json::object()}};
    auto record = [&](const fs::path& p) { manifest["files"].push_back(p.string()); };

    if (cfg.scenario == "timeline") {
        // Constant-speed worldlines for both matter branches, proper time
        // against reference time.
        std::vector<double> grid;
        const int n = 1000;
        for (int i = 0; i <= n; ++i) grid.push_back(cfg.t_final * i / n);
        for (int branch : {1, -1}) {
            const auto tl = integrate_timeline(
                [&](double) { return Vec3{cfg.v0, 0, 0}; }, grid, branch);
            const fs::path p = out / ("timeline_branch" + std::string(branch > 0 ? "p" : "m") +
                                      ".csv");
            write_timeline_csv(tl, p);
            record(p);
            manifest["checks"]["tau_final_branch" + std::string(branch > 0 ? "p" : "m")] =
                tl.tau.back();
        }
        manifest["checks"]["tau_final_closed_form"] =
            cfg.t_final * std::sqrt(1.0 - cfg.v0 * cfg.v0);
    } else if (cfg.scenario == "quadrants") {
        // Species map of the kinematic circle, one row per sampled phi.
        const fs::path p = out / "quadrants.csv";
        auto os = open_out(p);
        os << "phi,tau_dot,speed_signed,matter,helicity,beta_expect,alpha_dot_s\n";
        const int n = 360;
        for (int i = 0; i < n; ++i) {
            const double phi = -kPi + (2.0 * kPi) * (i + 0.5) / n;
            const KinematicState st(phi, UnitVec3(0, 0, 1));
            const auto [matter, hel] = classify(st);
            const auto [v, td] = dequantize(quantize(st));
            os << fmt_g17(phi) << ',' << fmt_g17(std::cos(phi)) << ','
               << fmt_g17(std::sin(phi)) << ',' << matter << ',' << hel << ','
               << fmt_g17(td) << ',' << fmt_g17(st.s.dot(v)) << '\n';
        }
        if (!os) throw IoError("write failed: " + p.string());
        record(p);
    } else if (cfg.scenario == "evolution") {
        Field f = gaussian_packet(cfg.nx, cfg.ntau, cfg.lx, cfg.ltau, cfg.k0, cfg.kappa0,
                                  cfg.sigma_x, cfg.lx / 2, cfg.branch, cfg.helicity);
        for (int i = 0; i < cfg.n_snapshots; ++i) {
            const double t = cfg.n_snapshots > 1
                                 ? cfg.t_final * i / (cfg.n_snapshots - 1)
                                 : 0.0;
            const Field g = evolve(f, t);
            const fs::path p = out / ("field_" + std::to_string(i) + ".csv");
            write_field_csv(g, t, p);
            record(p);
            record(fs::path(p).concat(".json"));
        }
        manifest["checks"]["final_norm"] = evolve(f, cfg.t_final).norm();
    } else if (cfg.scenario == "mass-spectrum") {
        const Field f = make_plane_wave(cfg.nx, cfg.ntau, cfg.lx, cfg.ltau, cfg.k0, cfg.kappa0,
                                        cfg.branch, cfg.helicity);
        const fs::path p = out / "spectrum.csv";
        write_spectrum_csv(mass_spectrum(f), p);
        record(p);
    } else if (cfg.scenario == "ehrenfest") {
        const Field f = gaussian_packet(cfg.nx, cfg.ntau, cfg.lx, cfg.ltau, cfg.k0, cfg.kappa0,
                                        cfg.sigma_x, cfg.lx / 2, cfg.branch, cfg.helicity);
        const fs::path p = out / "ehrenfest.csv";
        auto os = open_out(p);
        os << "t,x_mean,alpha1_expect\n";
        const int n = std::max(2, cfg.n_snapshots);
        double worst = 0;
        bool wrapped = false;
        for (int i = 0; i < n; ++i) {
            const double t = cfg.t_final * i / (n - 1);
            const auto r = ehrenfest_velocity(f, t, 1e-2);
            const Field g = evolve(f, t);
            os << fmt_g17(t) << ',' << fmt_g17(detail::position_mean(g)) << ','
               << fmt_g17(r.alpha1) << '\n';
            worst = std::max(worst, std::abs(r.slope - r.alpha1));
            wrapped = wrapped || r.wrap_warning;
        }
        if (!os) throw IoError("write failed: " + p.string());
        record(p);
        manifest["checks"]["max_slope_deviation"] = worst;
        manifest["checks"]["slope_matches_alpha1"] = worst < 1e-4;
        manifest["checks"]["wrap_warning"] = wrapped;
    } else {
        throw ConfigError("unknown scenario '" + cfg.scenario + "'");
    }

    const fs::path mp = out / "manifest.json";
    auto ms = open_out(mp);
    ms << manifest.dump(2) << '\n';
    if (!ms) throw IoError("write failed: " + mp.string());
    return manifest;
}

}  // namespace tauspinor
