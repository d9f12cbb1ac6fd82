// Acceptance suite: the project-level physics criteria, each run at its
// pinned tolerance with one pass/fail line, plus wall-clock budgets.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "tauspinor/rng.hpp"
#include "tauspinor/solver.hpp"
#include "tauspinor/spinor.hpp"

using namespace tauspinor;

namespace {

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int id, const std::string& name, double residual, double tol, double seconds,
            double budget) {
    const bool ok = residual <= tol && seconds <= budget;
    if (!ok) ++g_failures;
    std::printf("[%s] %2d. %-34s residual=%-12.3e tol=%-9.1e (%.2fs / %.0fs)\n",
                ok ? "PASS" : "FAIL", id, name.c_str(), residual, tol, seconds, budget);
}

UnitVec3 random_unit(SplitMix64& rng) {
    const double z = rng.uniform(-1.0, 1.0);
    const double az = rng.uniform(0.0, 2.0 * kPi);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return UnitVec3(r * std::cos(az), r * std::sin(az), z);
}

Spinor2 random_spinor2(SplitMix64& rng) {
    Spinor2 s;
    s[0] = Complex{rng.normal(), rng.normal()};
    s[1] = Complex{rng.normal(), rng.normal()};
    return normalized(s);
}

// standard grid for the evolution criteria
constexpr int kNx = 256, kNtau = 64;
constexpr double kLx = 64.0, kLtau = 16.0;
const double kK0 = 2.0 * kPi * 8.0 / kLx;
const double kKappa0 = 2.0 * kPi * 2.0 / kLtau;

}  // namespace

int main() {
    SplitMix64 rng(0);

    {  // 1. Dirac algebra, exact
        Timer t;
        double worst = 0;
        const Matrix4 id = Matrix4::identity();
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                const Matrix4 want = (i == j) ? id * Complex{2, 0} : Matrix4::zero();
                worst = std::max(
                    worst, max_abs_diff(anticommutator(dirac_alpha(i), dirac_alpha(j)), want));
            }
        for (int i = 1; i <= 3; ++i)
            worst = std::max(worst, max_abs(anticommutator(dirac_alpha(i), dirac_beta())));
        worst = std::max(worst, max_abs_diff(dirac_beta() * dirac_beta(), id));
        report(1, "Dirac algebra (exact)", worst, 0.0, t.seconds(), 1.0);
    }

    {  // 2. unit-vector quantization on 1e4 random states
        Timer t;
        double worst = 0;
        for (int i = 0; i < 10000; ++i) {
            const KinematicState st(rng.uniform(-kPi, kPi), random_unit(rng));
            const Spinor4 psi = quantize(st);
            const auto [vq, tq] = dequantize(psi);
            const auto [v, td] = velocity_from_state(st);
            worst = std::max(worst, std::abs(tq - td));
            worst = std::max(worst, std::abs(vq.x - v.x));
            worst = std::max(worst, std::abs(vq.y - v.y));
            worst = std::max(worst, std::abs(vq.z - v.z));
        }
        report(2, "unit-vector quantization", worst, 1e-12, t.seconds(), 5.0);
    }

    {  // 3. rotation covariance and unit spin vector on 1e4 random spinors
        Timer t;
        double worst = 0;
        for (int i = 0; i < 10000; ++i) {
            const Spinor2 chi = random_spinor2(rng);
            const Vec3 b = spinor_to_bloch(chi);
            worst = std::max(worst, std::abs(b.norm2() - 1.0));
            const UnitVec3 axis = random_unit(rng);
            const double theta = rng.uniform(-2 * kPi, 2 * kPi);
            const Vec3 got = spinor_to_bloch(normalized(su2_rotation(axis, theta) * chi));
            worst = std::max(worst, (got - rodrigues(b, axis, theta)).norm());
        }
        report(3, "rotation covariance + unit spin", worst, 1e-12, t.seconds(), 5.0);
    }

    {  // 4. dispersion over 1e3 random (p, m)
        Timer t;
        double worst = 0;
        for (int i = 0; i < 1000; ++i) {
            const Vec3 p{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
            const double m = rng.uniform(-3, 3);
            for (const auto& mode : plane_wave_eigensystem(p, m))
                worst = std::max(worst,
                                 std::abs(mode.energy * mode.energy - (p.norm2() + m * m)));
        }
        report(4, "energy-momentum dispersion", worst, 1e-10, t.seconds(), 5.0);
    }

    const Field packet =
        gaussian_packet(kNx, kNtau, kLx, kLtau, kK0, kKappa0, 4.0, kLx / 2, 1, 1);

    {  // 5. generalized evolution: norm over 1e3 steps; symmetry commutators
        Timer t;
        Field f = packet;
        for (int i = 0; i < 1000; ++i) f = evolve(f, 0.01);
        double worst = std::abs(f.norm() - 1.0);
        const double te = 1.3;
        worst = std::max(worst,
                         max_pointwise_diff(evolve(project_mass_sector(packet, kKappa0), te),
                                            project_mass_sector(evolve(packet, te), kKappa0)));
        worst = std::max(worst, max_pointwise_diff(evolve(translate_tau(packet, 0.7), te),
                                                   translate_tau(evolve(packet, te), 0.7)));
        report(5, "generalized evolution + symmetry", worst, 1e-10, t.seconds(), 60.0);
    }

    {  // 6. reduction to the standard Dirac equation, Gaussian packet, t = 5
        Timer t;
        std::vector<Spinor4> profile(kNx);
        for (int ix = 0; ix < kNx; ++ix) {
            const double x = ix * kLx / kNx - kLx / 2;
            profile[ix][0] = Complex{std::exp(-x * x / 64.0), 0};
            profile[ix][3] = Complex{0.4 * std::exp(-x * x / 48.0), 0.2};
        }
        const double r = compare_standard_dirac(profile, kKappa0, 5.0, kLx, kLtau, kNtau);
        report(6, "reduction to standard Dirac", r, 1e-10, t.seconds(), 30.0);
    }

    {  // 7. stationarity residual: absolute size and second-order convergence
        Timer t;
        const Field mode =
            make_plane_wave(kNx, kNtau, kLx, kLtau, 2.0 * kPi / kLx, 2.0 * kPi / kLtau, 1, 1);
        const double r1 = lagrangian_residual(mode, 1e-3);
        const double r2 = lagrangian_residual(mode, 5e-4);
        const double worst = std::max(r1 <= 1e-6 ? 0.0 : r1,
                                      std::abs(r1 / r2 - 4.0) <= 0.5 ? 0.0 : std::abs(r1 / r2));
        report(7, "stationarity, O(dt^2) residual", worst, 0.0, t.seconds(), 30.0);
    }

    {  // 8. Ehrenfest velocity for a boosted packet over t in [0, 2]
        Timer t;
        double worst = 0;
        for (double tt = 0.0; tt <= 2.0; tt += 0.5) {
            const auto r = ehrenfest_velocity(packet, tt, 1e-2);
            worst = std::max(worst, std::abs(r.slope - r.alpha1));
        }
        report(8, "Ehrenfest velocity", worst, 1e-4, t.seconds(), 60.0);
    }

    {  // 9. Breit identity for positive-energy modes
        Timer t;
        double worst = 0;
        for (int i = 0; i < 1000; ++i) {
            const double k = rng.uniform(-3, 3), kappa = rng.uniform(-3, 3);
            if (std::hypot(k, kappa) < 1e-9) continue;
            for (const auto& mode : plane_wave_eigensystem(Vec3{k, 0, 0}, kappa)) {
                if (mode.branch < 0) continue;
                const auto [v, td] = dequantize(mode.u);
                worst = std::max(worst, std::abs(v.x * k + td * kappa - mode.energy));
            }
        }
        report(9, "Breit identity", worst, 1e-10, t.seconds(), 5.0);
    }

    {  // 10. proper-time reversal: spectrum mirror, energies unchanged
        Timer t;
        SplitMix64 frng(7);
        const Field f = random_field(64, 32, 16.0, kLtau, frng);
        const auto s0 = mass_spectrum(f);
        const auto s1 = mass_spectrum(proper_time_reversal(f));
        double worst = 0;
        const int n = static_cast<int>(s0.size());
        for (int i = 0; i < n; ++i) {
            const int j = (i == 0) ? 0 : n - i;
            worst = std::max(worst, std::abs(s1[j].weight - s0[i].weight));
        }
        worst = std::max(worst, max_pointwise_diff(evolve(proper_time_reversal(f), 1.1),
                                                   proper_time_reversal(evolve(f, 1.1))));
        report(10, "proper-time reversal", worst, 1e-10, t.seconds(), 30.0);
    }

    {  // 11. uncertainty bound on 1e3 random fields; Gaussian saturation
        Timer t;
        double min_prod = 1e300;
        for (int i = 0; i < 1000; ++i) {
            const Field f = random_field(32, 32, 16.0, 16.0, rng);
            min_prod = std::min(min_prod, uncertainty_check(f).product);
        }
        double worst = std::max(0.0, (0.5 - 1e-6) - min_prod);

        Field g = Field::zeros(8, 256, 8.0, kLtau);
        for (int ix = 0; ix < g.nx; ++ix)
            for (int it = 0; it < g.ntau; ++it) {
                const double d = g.tau_at(it) - kLtau / 2;
                g.at(ix, it, 0) = Complex{std::exp(-d * d / 4.0), 0};
            }
        const double gauss_dev = std::abs(uncertainty_check(g).product - 0.5);
        worst = std::max(worst, gauss_dev <= 1e-3 ? 0.0 : gauss_dev);
        report(11, "time-energy uncertainty", worst, 0.0, t.seconds(), 30.0);
    }

    {  // 12. classical layer: timeline convergence + quadrant map
        Timer t;
        auto tau_err = [](int n) {
            std::vector<double> g;
            for (int i = 0; i <= n; ++i) g.push_back(static_cast<double>(i) / n);
            const auto tl =
                integrate_timeline([](double s) { return Vec3{std::sin(s), 0, 0}; }, g, 1);
            return std::abs(tl.tau.back() - std::sin(1.0));
        };
        double worst = 0;
        const double ratio = tau_err(200) / tau_err(400);
        if (std::abs(ratio - 4.0) > 0.5) worst = std::abs(ratio - 4.0);

        std::vector<double> grid;
        for (int i = 0; i <= 1000; ++i) grid.push_back(10.0 * i / 1000.0);
        const auto tl =
            integrate_timeline([](double) { return Vec3{0.6, 0, 0}; }, grid, 1);
        worst = std::max(worst, std::abs(tl.tau.back() - 8.0));

        const UnitVec3 z(0, 0, 1);
        if (classify(KinematicState(kPi / 4, z)) != std::pair<int, int>{1, 1}) worst = 1;
        if (classify(KinematicState(3 * kPi / 4, z)) != std::pair<int, int>{-1, 1}) worst = 1;
        if (classify(KinematicState(-3 * kPi / 4, z)) != std::pair<int, int>{-1, -1}) worst = 1;
        if (classify(KinematicState(-kPi / 4, z)) != std::pair<int, int>{1, -1}) worst = 1;
        report(12, "classical kinematics layer", worst, 1e-10, t.seconds(), 5.0);
    }

    std::printf("%s: %d criterion(s) failed\n", g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                g_failures);
    return g_failures == 0 ? 0 : 1;
}
