// tauspinor command-line front end.
//
// Subcommands:
//   verify          run the full invariant suite, write report.json
//   run <scenario>  emit plot-ready CSV data for one scenario
//   list-scenarios  print the available scenario names
//
// Exit codes: 0 all pass, 1 verification failure, 2 usage error, 3 I/O error.
// TAUSPINOR_OUT overrides the output directory; explicit flags win over it.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tauspinor/config.hpp"
#include "tauspinor/io.hpp"
#include "tauspinor/report.hpp"
#include "tauspinor/scenarios.hpp"
#include "tauspinor/verify.hpp"

namespace {

struct FlagOverrides {
    std::optional<int> nx, ntau, n_snapshots, branch, helicity;
    std::optional<double> lx, ltau, k0, kappa0, sigma_x, sigma_tau, v0, t_final, tol_scale;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_dir;
};

void add_common_options(CLI::App& app, std::string& config_path, FlagOverrides& fo) {
    app.add_option("--config", config_path, "key=value config file");
    app.add_option("--nx", fo.nx, "spatial grid size (power of two)");
    app.add_option("--ntau", fo.ntau, "proper-time grid size (power of two)");
    app.add_option("--lx", fo.lx, "spatial box length");
    app.add_option("--ltau", fo.ltau, "proper-time box length");
    app.add_option("--k0", fo.k0, "packet/mode spatial wavenumber");
    app.add_option("--kappa0", fo.kappa0, "packet/mode internal wavenumber");
    app.add_option("--sigma-x", fo.sigma_x, "packet width in x");
    app.add_option("--sigma-tau", fo.sigma_tau, "packet width in tau");
    app.add_option("--v0", fo.v0, "worldline speed for kinematics scenarios");
    app.add_option("--branch", fo.branch, "energy branch, +1 or -1");
    app.add_option("--helicity", fo.helicity, "helicity, +1 or -1");
    app.add_option("--t-final", fo.t_final, "evolution time span");
    app.add_option("--n-snapshots", fo.n_snapshots, "number of output snapshots");
    app.add_option("--out", fo.out_dir, "output directory");
    app.add_option("--seed", fo.seed, "seed for randomized property suites");
    app.add_option("--tol-scale", fo.tol_scale, "multiply all verification tolerances");
}

tauspinor::ScenarioConfig build_config(const std::string& config_path, const FlagOverrides& fo) {
    tauspinor::ScenarioConfig cfg;
    if (!config_path.empty()) cfg = tauspinor::parse_config_file(config_path);
    if (const char* env = std::getenv("TAUSPINOR_OUT")) cfg.out_dir = env;
    if (fo.nx) cfg.nx = *fo.nx;
    if (fo.ntau) cfg.ntau = *fo.ntau;
    if (fo.lx) cfg.lx = *fo.lx;
    if (fo.ltau) cfg.ltau = *fo.ltau;
    if (fo.k0) cfg.k0 = *fo.k0;
    if (fo.kappa0) cfg.kappa0 = *fo.kappa0;
    if (fo.sigma_x) cfg.sigma_x = *fo.sigma_x;
    if (fo.sigma_tau) cfg.sigma_tau = *fo.sigma_tau;
    if (fo.v0) cfg.v0 = *fo.v0;
    if (fo.branch) cfg.branch = *fo.branch;
    if (fo.helicity) cfg.helicity = *fo.helicity;
    if (fo.t_final) cfg.t_final = *fo.t_final;
    if (fo.n_snapshots) cfg.n_snapshots = *fo.n_snapshots;
    if (fo.out_dir) cfg.out_dir = *fo.out_dir;
    if (fo.seed) cfg.seed = *fo.seed;
    if (fo.tol_scale) cfg.tol_scale = *fo.tol_scale;
    cfg.validate();
    return cfg;
}

int do_verify(const tauspinor::ScenarioConfig& cfg) {
    const auto report = tauspinor::run_verify(cfg);

    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    if (ec) throw tauspinor::IoError("cannot create output directory: " + cfg.out_dir);
    const auto path = std::filesystem::path(cfg.out_dir) / "report.json";
    auto os = tauspinor::open_out(path);
    os << tauspinor::report_to_json(report, cfg).dump(2) << '\n';
    if (!os) throw tauspinor::IoError("write failed: " + path.string());

    for (const auto& c : report.claims)
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << "  " << c.anchor
                  << "  residual=" << c.residual << " tol=" << c.tolerance << '\n';
    std::cout << report.passed() << "/" << report.total() << " claims passed; report at "
              << path.string() << '\n';
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"unit-vector kinematics, Dirac spinor algebra and the proper-time "
                 "spectral solver"};
    app.require_subcommand(1);

    std::string config_path;
    FlagOverrides fo;
    std::string scenario;

    auto* verify = app.add_subcommand("verify", "run the full invariant suite");
    add_common_options(*verify, config_path, fo);

    auto* run = app.add_subcommand("run", "run one scenario and emit its data files");
    run->add_option("scenario", scenario, "scenario name (see list-scenarios)")->required();
    add_common_options(*run, config_path, fo);

    app.add_subcommand("list-scenarios", "print available scenario names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand("list-scenarios")) {
            for (const auto& n : tauspinor::scenario_names()) std::cout << n << '\n';
            return 0;
        }
        if (app.got_subcommand("verify")) return do_verify(build_config(config_path, fo));
        // run
        auto cfg = build_config(config_path, fo);
        cfg.scenario = scenario;
        const auto manifest = tauspinor::run_scenario(cfg);
        std::cout << "wrote " << manifest["files"].size() << " file(s) to " << cfg.out_dir
                  << '\n';
        return 0;
    } catch (const tauspinor::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const tauspinor::IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
