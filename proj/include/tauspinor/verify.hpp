#pragma once

// The verification suite: every invariant of the kinematics, spinor and
// solver modules measured as a residual and compared against its pinned
// tolerance. Deterministic for a given seed.

#include <algorithm>
#include <cmath>

#include "tauspinor/config.hpp"
#include "tauspinor/report.hpp"
#include "tauspinor/rng.hpp"
#include "tauspinor/solver.hpp"
#include "tauspinor/spinor.hpp"

namespace tauspinor {

namespace detail {

inline UnitVec3 random_unit_vec(SplitMix64& rng) {
    const double z = rng.uniform(-1.0, 1.0);
    const double az = rng.uniform(0.0, 2.0 * kPi);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return UnitVec3(r * std::cos(az), r * std::sin(az), z);
}

inline Spinor2 random_spinor2(SplitMix64& rng) {
    Spinor2 s;
    s[0] = Complex{rng.normal(), rng.normal()};
    s[1] = Complex{rng.normal(), rng.normal()};
    return normalized(s);
}

inline Spinor4 random_spinor4(SplitMix64& rng) {
    Spinor4 s;
    for (int i = 0; i < 4; ++i) s[i] = Complex{rng.normal(), rng.normal()};
    return normalized(s);
}

inline KinematicState random_state(SplitMix64& rng) {
    return KinematicState(rng.uniform(-kPi, kPi), random_unit_vec(rng));
}

/// 3x3 rotation matrix action on a vector, built from Rodrigues directly.
inline Vec3 rotate_vec(const Vec3& v, const UnitVec3& axis, double theta) {
    return rodrigues(v, axis, theta);
}

}  // namespace detail

/// Run the whole invariant suite. Tolerances are the pinned per-claim values
/// multiplied by cfg.tol_scale (1 by default; 0 forces every claim red).
inline VerificationReport run_verify(const ScenarioConfig& cfg) {
    cfg.validate();
    VerificationReport rep;
    rep.seed = cfg.seed;
    SplitMix64 rng(cfg.seed);

    auto add = [&](const std::string& id, const std::string& anchor, double residual,
                   double tol) {
        const double t = tol * cfg.tol_scale;
        rep.claims.push_back(ClaimResult{id, anchor, residual, t, residual <= t});
    };

    // ---- kinematics ------------------------------------------------------
    {
        double worst = 0;
        for (int i = 0; i < 10000; ++i) {
            const auto st = detail::random_state(rng);
            const auto [v, td] = velocity_from_state(st);
            worst = std::max(worst, std::abs(v.norm2() + td * td - 1.0));
        }
        add("KIN-01", "unit-speed identity |x_dot|^2 + tau_dot^2 = 1", worst, 1e-12);
    }
    {
        double worst = 0;
        for (int i = 0; i < 1000; ++i) {
            const double speed = rng.uniform(1e-6, 0.999999);
            const Vec3 v = detail::random_unit_vec(rng).vec() * speed;
            const int branch = rng.uniform() < 0.5 ? 1 : -1;
            const int hel = rng.uniform() < 0.5 ? 1 : -1;
            const auto st = state_from_velocity(v, branch, hel);
            const auto [v2, td] = velocity_from_state(st);
            worst = std::max(worst, (v2 - v).norm());
            worst = std::max(worst, std::abs(td - proper_time_rate(v, branch)));
        }
        add("KIN-02", "velocity round trip through the unit-vector pair", worst, 1e-12);
    }
    {
        KinematicState st(0.3, UnitVec3(0, 0, 1));
        double worst = 0;
        for (int i = 0; i < 10000; ++i) {
            st = rotate_s(st, detail::random_unit_vec(rng), rng.uniform(-kPi, kPi));
            const Vec3 s = st.s.vec();
            worst = std::max(worst, std::abs(s.norm() - 1.0));
        }
        add("KIN-03", "direction vector stays unit under composed rotations", worst, 1e-12);
    }
    {
        double worst = 0;
        for (int i = 0; i < 1000; ++i) {
            const auto st = detail::random_state(rng);
            const double dphi = rng.uniform(-10.0, 10.0);
            const auto back = rotate_r(rotate_r(st, dphi), -dphi);
            worst = std::max(worst, std::abs(normalize_angle(back.phi - st.phi)));
        }
        add("KIN-04", "kinematic-plane rotation is invertible", worst, 1e-12);
    }
    {
        double worst = 0;
        for (int i = 0; i < 1000; ++i) {
            const auto st = detail::random_state(rng);
            const KinematicState mirror(-st.phi, -st.s);
            const auto [v1, t1] = velocity_from_state(st);
            const auto [v2, t2] = velocity_from_state(mirror);
            worst = std::max(worst, (v1 - v2).norm());
            worst = std::max(worst, std::abs(t1 - t2));
        }
        add("KIN-05", "the two helicity representations give the same velocity", worst, 0.0);
    }
    {
        double worst = 0;
        for (int i = 0; i < 1000; ++i) {
            auto st = detail::random_state(rng);
            if (std::cos(st.phi) == 0.0 || std::sin(st.phi) == 0.0) continue;
            const auto before = classify(st);
            st = rotate_s(st, detail::random_unit_vec(rng), rng.uniform(-kPi, kPi));
            const auto after = classify(st);
            if (before != after) worst = 1.0;
        }
        add("KIN-06", "species classification depends only on phi", worst, 0.0);
    }
    {
        // Constant speed has a closed form; the trapezoid is exact there.
        const double v = 0.6;
        std::vector<double> grid;
        for (int i = 0; i <= 1000; ++i) grid.push_back(10.0 * i / 1000.0);
        const auto tl = integrate_timeline([&](double) { return Vec3{v, 0, 0}; }, grid, 1);
        const double res_const = std::abs(tl.tau.back() - 10.0 * std::sqrt(1.0 - v * v));
        add("KIN-07a", "proper time matches the closed form t/gamma", res_const, 1e-10);

        // Smooth varying speed v = sin(t) on [0,1]: tau(1) = sin(1) exactly.
        auto tau_err = [&](int n) {
            std::vector<double> g;
            for (int i = 0; i <= n; ++i) g.push_back(static_cast<double>(i) / n);
            const auto t = integrate_timeline(
                [](double s) { return Vec3{std::sin(s), 0, 0}; }, g, 1);
            return std::abs(t.tau.back() - std::sin(1.0));
        };
        const double ratio = tau_err(200) / tau_err(400);
        add("KIN-07b", "timeline integration converges at second order", std::abs(ratio - 4.0),
            0.5);
    }

    // ---- spinor algebra --------------------------------------------------
    {
        double worst = 0;
        const Matrix4 id = Matrix4::identity();
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                const Matrix4 want = (i == j) ? id * Complex{2, 0} : Matrix4::zero();
                worst = std::max(worst,
                                 max_abs_diff(anticommutator(dirac_alpha(i), dirac_alpha(j)), want));
            }
        for (int i = 1; i <= 3; ++i)
            worst = std::max(worst,
                             max_abs(anticommutator(dirac_alpha(i), dirac_beta())));
        worst = std::max(worst, max_abs_diff(dirac_beta() * dirac_beta(), id));
        add("SPN-01", "Dirac matrix anticommutation relations", worst, 0.0);
    }
    {
        double worst = 0;
        for (int i = 0; i < 10000; ++i) {
            const Vec3 b = spinor_to_bloch(detail::random_spinor2(rng));
            worst = std::max(worst, std::abs(b.norm2() - 1.0));
        }
        add("SPN-02", "spin expectations form a unit vector", worst, 1e-12);
    }
    {
        double worst = 0;
        for (int i = 0; i < 10000; ++i) {
            const Spinor2 chi = detail::random_spinor2(rng);
            const UnitVec3 axis = detail::random_unit_vec(rng);
            const double theta = rng.uniform(-2.0 * kPi, 2.0 * kPi);
            const Vec3 got = spinor_to_bloch(normalized(su2_rotation(axis, theta) * chi));
            const Vec3 want = detail::rotate_vec(spinor_to_bloch(chi), axis, theta);
            worst = std::max(worst, (got - want).norm());
        }
        add("SPN-03", "rotation covariance of spin expectations", worst, 1e-12);
    }
    {
        double worst_prod = 0, worst_bound = 0;
        for (int i = 0; i < 1000; ++i) {
            const auto [v, td] = dequantize(quantize(detail::random_state(rng)));
            worst_prod = std::max(worst_prod, std::abs(v.norm2() + td * td - 1.0));
            const auto [ve, tde] = dequantize(detail::random_spinor4(rng));
            worst_bound = std::max(worst_bound, ve.norm2() + tde * tde - 1.0);
        }
        add("SPN-04a", "quantized product states saturate the velocity bound", worst_prod, 1e-12);
        add("SPN-04b", "velocity expectations of any state stay inside the unit ball",
            std::max(0.0, worst_bound), 1e-12);
    }
    {
        double worst = 0;
        for (int i = 0; i < 1000; ++i) {
            const auto st = detail::random_state(rng);
            if (std::cos(st.phi) == 0.0 || std::sin(st.phi) == 0.0) continue;
            const auto [matter, hel] = classify(st);
            const auto [v, td] = dequantize(quantize(st));
            if ((td > 0 ? 1 : -1) != matter) worst = 1.0;
            if ((st.s.dot(v) > 0 ? 1 : -1) != hel) worst = 1.0;
        }
        add("SPN-05", "quantization preserves the species quadrants", worst, 0.0);
    }
    {
        double worst = 0;
        for (int i = 0; i < 1000; ++i) {
            const UnitVec3 axis = detail::random_unit_vec(rng);
            const double t1 = rng.uniform(-kPi, kPi), t2 = rng.uniform(-kPi, kPi);
            worst = std::max(worst, max_abs_diff(su2_rotation(axis, t1) * su2_rotation(axis, t2),
                                                 su2_rotation(axis, t1 + t2)));
        }
        add("SPN-06", "SU(2) rotations compose as a one-parameter group", worst, 1e-12);
    }
    {
        double worst = 0;
        for (int i = 0; i < 1000; ++i) {
            const auto st = detail::random_state(rng);
            const Spinor4 psi = quantize(st);
            const auto [v, td] = velocity_from_state(st);
            worst = std::max(worst, std::abs(dot(psi, dirac_beta() * psi).real() - td));
            const auto [ve, tde] = dequantize(psi);
            worst = std::max(worst, (ve - v).norm());
        }
        add("SPN-07", "unit-vector quantization reproduces classical expectations", worst, 1e-12);
    }

    // ---- plane-wave eigensystem ------------------------------------------
    {
        double worst_disp = 0, worst_res = 0, worst_comm = 0, worst_breit = 0;
        for (int i = 0; i < 1000; ++i) {
            const Vec3 p{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
            const double m = rng.uniform(-3, 3);
            const Matrix4 h = dirac_hamiltonian(p, m);
            for (const auto& mode : plane_wave_eigensystem(p, m)) {
                worst_disp = std::max(worst_disp, std::abs(mode.energy * mode.energy -
                                                           (p.norm2() + m * m)));
                Spinor4 r = h * mode.u - mode.u * Complex{mode.energy, 0};
                worst_res = std::max(worst_res, r.norm());
            }
            if (p.norm() > 1e-9)
                worst_comm = std::max(worst_comm, max_abs(commutator(h, helicity_operator(p))));

            const double k = rng.uniform(-3, 3);
            const double kappa = rng.uniform(-3, 3);
            if (std::hypot(k, kappa) < 1e-9) continue;
            for (const auto& mode : plane_wave_eigensystem(Vec3{k, 0, 0}, kappa)) {
                if (mode.branch < 0) continue;
                const auto [v, td] = dequantize(mode.u);
                worst_breit = std::max(worst_breit, std::abs(v.x * k + td * kappa - mode.energy));
            }
        }
        add("SOL-01", "energy-momentum dispersion of the eigenvalues", worst_disp, 1e-10);
        add("SOL-02", "plane-wave eigenpair residual", worst_res, 1e-10);
        add("SOL-03", "helicity operator commutes with the Hamiltonian", worst_comm, 1e-12);
        add("SOL-04", "Breit decomposition of positive-mode energies", worst_breit, 1e-10);
    }

    // ---- spectral evolution ----------------------------------------------
    const Field packet = gaussian_packet(cfg.nx, cfg.ntau, cfg.lx, cfg.ltau, cfg.k0, cfg.kappa0,
                                         cfg.sigma_x, cfg.lx / 2, cfg.branch, cfg.helicity);
    {
        Field f = packet;
        for (int i = 0; i < 100; ++i) f = evolve(f, 0.05);
        add("SOL-05", "probability conservation under composed evolution",
            std::abs(f.norm() - 1.0), 1e-10);
        const Field direct = evolve(packet, 100 * 0.05);
        add("SOL-06", "evolution composes as a one-parameter group",
            max_pointwise_diff(f, direct), 1e-10);
    }
    {
        SplitMix64 frng(rng.next());
        Field mixed = random_field(cfg.nx / 8, cfg.ntau / 2, cfg.lx / 8, cfg.ltau, frng);
        const double t = 1.3;
        add("SOL-07", "mass sectors are conserved by the evolution",
            max_pointwise_diff(evolve(project_mass_sector(mixed, cfg.kappa0), t),
                               project_mass_sector(evolve(mixed, t), cfg.kappa0)),
            1e-10);
        add("SOL-08", "proper-time translation symmetry of the evolution",
            max_pointwise_diff(evolve(translate_tau(mixed, 0.7), t),
                               translate_tau(evolve(mixed, t), 0.7)),
            1e-10);
        add("SOL-09", "proper-time reversal covariance of the evolution",
            max_pointwise_diff(evolve(proper_time_reversal(mixed), t),
                               proper_time_reversal(evolve(mixed, t))),
            1e-10);
        const auto s0 = mass_spectrum(mixed);
        const auto s1 = mass_spectrum(proper_time_reversal(mixed));
        double worst = 0;
        const int n = static_cast<int>(s0.size());
        for (int i = 0; i < n; ++i) {
            // kappa row i mirrors to -kappa; index n-i lands on the same grid
            // except the unpaired -ntau/2 row, which maps to itself.
            const int j = (i == 0) ? 0 : n - i;
            if (j >= n) continue;
            worst = std::max(worst, std::abs(s1[static_cast<std::size_t>(j)].weight -
                                             s0[static_cast<std::size_t>(i)].weight));
        }
        add("SOL-10", "reversal mirrors the mass spectrum", worst, 1e-10);
    }
    {
        std::vector<Spinor4> profile(static_cast<std::size_t>(cfg.nx));
        for (int ix = 0; ix < cfg.nx; ++ix) {
            const double x = ix * cfg.lx / cfg.nx - cfg.lx / 2;
            profile[static_cast<std::size_t>(ix)][0] =
                Complex{std::exp(-x * x / (4.0 * cfg.sigma_x * cfg.sigma_x)), 0.0};
        }
        add("SOL-11", "reduction to the fixed-mass Dirac dynamics",
            compare_standard_dirac(profile, cfg.kappa0, 5.0, cfg.lx, cfg.ltau, cfg.ntau), 1e-10);
    }
    {
        const Field mode = make_plane_wave(cfg.nx, cfg.ntau, cfg.lx, cfg.ltau,
                                           2.0 * kPi / cfg.lx, 2.0 * kPi / cfg.ltau, 1, 1);
        const double r1 = lagrangian_residual(mode, 1e-3);
        const double r2 = lagrangian_residual(mode, 5e-4);
        add("SOL-12", "stationarity residual of the total time derivative", r1, 1e-6);
        add("SOL-13", "stationarity residual converges at second order",
            std::abs(r1 / r2 - 4.0), 0.5);
    }
    {
        double min_prod = 1e300;
        for (int i = 0; i < 1000; ++i) {
            const Field f = random_field(32, 32, 16.0, 16.0, rng);
            min_prod = std::min(min_prod, uncertainty_check(f).product);
        }
        add("SOL-14", "internal time-energy uncertainty bound",
            std::max(0.0, (0.5 - 1e-6) - min_prod), 0.0);

        Field g = Field::zeros(8, 256, 8.0, cfg.ltau);
        const double s = cfg.sigma_tau;
        for (int ix = 0; ix < g.nx; ++ix)
            for (int it = 0; it < g.ntau; ++it) {
                const double d = g.tau_at(it) - cfg.ltau / 2;
                g.at(ix, it, 0) = Complex{std::exp(-d * d / (4.0 * s * s)), 0.0};
            }
        add("SOL-15", "Gaussian fields saturate the uncertainty bound",
            std::abs(uncertainty_check(g).product - 0.5), 1e-3);
    }
    {
        const auto res = ehrenfest_velocity(packet, 1.0, 1e-2);
        add("SOL-16", "velocity operator matches the packet drift",
            std::abs(res.slope - res.alpha1), 1e-4);
    }

    return rep;
}

}  // namespace tauspinor
