#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tauspinor/rng.hpp"
#include "tauspinor/solver.hpp"

using namespace tauspinor;

namespace {

// small grid used throughout; kappa grid spacing 2*pi/8
constexpr int kNx = 32, kNtau = 16;
constexpr double kLx = 16.0, kLtau = 8.0;

double kx(int periods) { return 2.0 * kPi * periods / kLx; }
double kt(int periods) { return 2.0 * kPi * periods / kLtau; }

Field test_packet() {
    // sigma 1.2 keeps the position tails clear of the periodic seam on this box
    return gaussian_packet(kNx, kNtau, kLx, kLtau, kx(2), kt(1), 1.2, kLx / 2, 1, 1);
}

}  // namespace

TEST_CASE("dirac_hamiltonian squares to the dispersion") {
    const Matrix4 rest = dirac_hamiltonian(Vec3{0, 0, 0}, 1.0);
    CHECK(max_abs_diff(rest, dirac_beta()) == 0.0);

    const Matrix4 h = dirac_hamiltonian(Vec3{3, 0, 0}, 4.0);
    CHECK(is_hermitian(h));
    CHECK(max_abs_diff(h * h, Matrix4::identity() * Complex{25, 0}) < 1e-12);

    // massless: eigenvalues come out of the eigensystem as {+2, +2, -2, -2}
    for (const auto& m : plane_wave_eigensystem(Vec3{0, 0, 2}, 0.0))
        CHECK(std::abs(std::abs(m.energy) - 2.0) < 1e-12);
}

TEST_CASE("plane-wave eigensystem") {
    SUBCASE("rest frame gives the standard basis") {
        const auto modes = plane_wave_eigensystem(Vec3{0, 0, 0}, 1.0);
        int positive = 0;
        for (const auto& m : modes) {
            CHECK(std::abs(std::abs(m.energy) - 1.0) < 1e-14);
            if (m.branch > 0) ++positive;
            // eigenvectors are standard basis vectors
            int nonzero = 0;
            for (int c = 0; c < 4; ++c)
                if (std::abs(m.u[c]) > 1e-14) ++nonzero;
            CHECK(nonzero == 1);
        }
        CHECK(positive == 2);
    }
    SUBCASE("energies and orthonormality for a 3D momentum") {
        const Vec3 p{3, 0, 0};
        const auto modes = plane_wave_eigensystem(p, 4.0);
        const Matrix4 h = dirac_hamiltonian(p, 4.0);
        for (const auto& m : modes) {
            CHECK(std::abs(std::abs(m.energy) - 5.0) < 1e-12);
            const Spinor4 r = h * m.u - m.u * Complex{m.energy, 0};
            CHECK(r.norm() < 1e-12);
        }
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                const double want = i == j ? 1.0 : 0.0;
                CHECK(std::abs(dot(modes[i].u, modes[j].u) - want) < 1e-12);
            }
    }
    SUBCASE("helicity eigenvectors, random p and m") {
        SplitMix64 rng(31);
        for (int i = 0; i < 200; ++i) {
            const Vec3 p{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
            const double m = rng.uniform(-3, 3);
            const Matrix4 h = dirac_hamiltonian(p, m);
            const Matrix4 hel = helicity_operator(p);
            CHECK(max_abs(commutator(h, hel)) < 1e-12);
            for (const auto& mode : plane_wave_eigensystem(p, m)) {
                const Spinor4 r = hel * mode.u - mode.u * Complex{static_cast<double>(mode.helicity), 0};
                CHECK(r.norm() < 1e-12);
            }
        }
    }
    SUBCASE("negative kappa still yields clean eigenpairs") {
        for (const double m : {-2.0, -0.5}) {
            const Matrix4 h = dirac_hamiltonian(Vec3{0, 0, 0}, m);
            for (const auto& mode : plane_wave_eigensystem(Vec3{0, 0, 0}, m)) {
                const Spinor4 r = h * mode.u - mode.u * Complex{mode.energy, 0};
                CHECK(r.norm() < 1e-14);
                CHECK(std::abs(mode.u.norm() - 1.0) < 1e-14);
            }
        }
    }
    CHECK_THROWS_AS(plane_wave_eigensystem(Vec3{0, 0, 0}, 0.0), std::domain_error);
}

TEST_CASE("helicity operator") {
    const Matrix4 h = helicity_operator(Vec3{0, 0, 1});
    CHECK(h(0, 0) == Complex{1, 0});
    CHECK(h(1, 1) == Complex{-1, 0});
    CHECK(h(2, 2) == Complex{1, 0});
    CHECK(h(3, 3) == Complex{-1, 0});
    CHECK(max_abs_diff(h * h, Matrix4::identity()) < 1e-14);
    CHECK_THROWS_AS(helicity_operator(Vec3{0, 0, 0}), std::domain_error);
}

TEST_CASE("Breit identity on positive-energy modes") {
    SplitMix64 rng(41);
    for (int i = 0; i < 500; ++i) {
        const double k = rng.uniform(-3, 3), kappa = rng.uniform(-3, 3);
        if (std::hypot(k, kappa) < 1e-9) continue;
        for (const auto& mode : plane_wave_eigensystem(Vec3{k, 0, 0}, kappa)) {
            if (mode.branch < 0) continue;
            const auto [v, td] = dequantize(mode.u);
            CHECK(std::abs(v.x * k + td * kappa - mode.energy) < 1e-10);
        }
    }
}

TEST_CASE("make_plane_wave") {
    const Field f = make_plane_wave(kNx, kNtau, kLx, kLtau, 0.0, kt(1), 1, 1);
    CHECK(f.norm() == doctest::Approx(1.0).epsilon(1e-12));

    // rest mode: tau-only phase e^{i kappa tau} on a constant spinor profile
    const Complex ratio = f.at(0, 3, 0) / f.at(0, 0, 0);
    CHECK(std::abs(ratio - std::polar(1.0, kt(1) * f.tau_at(3))) < 1e-12);

    const Field massless = make_plane_wave(kNx, kNtau, kLx, kLtau, kx(1), 0.0, 1, 1);
    CHECK(massless.norm() == doctest::Approx(1.0).epsilon(1e-12));
    // energy |k|: one step of evolution multiplies by e^{-i|k|t}
    const double t = 0.37;
    const Field ev = evolve(massless, t);
    const Complex ov = overlap(massless, ev);
    CHECK(std::abs(ov - std::polar(1.0, -kx(1) * t)) < 1e-12);

    CHECK_THROWS_AS(make_plane_wave(kNx, kNtau, kLx, kLtau, 0.1234, 0.0, 1, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_plane_wave(kNx, kNtau, kLx, kLtau, 0.0, 0.1234, 1, 1),
                    std::invalid_argument);
}

TEST_CASE("evolve") {
    const Field f = test_packet();
    SUBCASE("t = 0 is the identity") {
        CHECK(max_pointwise_diff(evolve(f, 0.0), f) < 1e-13);
    }
    SUBCASE("single positive mode picks up a global phase") {
        const Field mode = make_plane_wave(kNx, kNtau, kLx, kLtau, kx(1), kt(1), 1, -1);
        const double e = std::hypot(kx(1), kt(1));
        const double t = 1.7;
        const Field ev = evolve(mode, t);
        CHECK(std::abs(overlap(mode, ev) - std::polar(1.0, -e * t)) < 1e-12);
    }
    SUBCASE("norm conserved over composed steps") {
        Field g = f;
        for (int i = 0; i < 200; ++i) g = evolve(g, 0.05);
        CHECK(std::abs(g.norm() - 1.0) < 1e-10);
    }
    SUBCASE("group property") {
        const Field a = evolve(evolve(f, 0.4), 0.9);
        const Field b = evolve(f, 1.3);
        CHECK(max_pointwise_diff(a, b) < 1e-12);
    }
}

TEST_CASE("mass_spectrum") {
    SUBCASE("pure mode: single nonzero row") {
        const Field f = make_plane_wave(kNx, kNtau, kLx, kLtau, kx(1), kt(2), 1, 1);
        double total = 0;
        for (const auto& r : mass_spectrum(f)) {
            total += r.weight;
            if (std::abs(r.kappa - kt(2)) > 1e-12) CHECK(r.weight < 1e-12);
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("equal superposition splits the weight") {
        const Field a = make_plane_wave(kNx, kNtau, kLx, kLtau, 0.0, kt(2), 1, 1);
        const Field b = make_plane_wave(kNx, kNtau, kLx, kLtau, 0.0, kt(-2), 1, 1);
        const Field f = scaled(axpy(Complex{1, 0}, a, b), Complex{1.0 / std::sqrt(2.0), 0});
        for (const auto& r : mass_spectrum(f)) {
            if (std::abs(std::abs(r.kappa) - kt(2)) < 1e-12)
                CHECK(r.weight == doctest::Approx(0.5).epsilon(1e-10));
            else
                CHECK(r.weight < 1e-12);
        }
    }
    SUBCASE("zero field: all weights zero") {
        for (const auto& r : mass_spectrum(Field::zeros(kNx, kNtau, kLx, kLtau)))
            CHECK(r.weight == 0.0);
    }
    SUBCASE("weights sum to the squared norm") {
        SplitMix64 rng(51);
        const Field f = scaled(random_field(kNx, kNtau, kLx, kLtau, rng), Complex{1.7, 0});
        double total = 0;
        for (const auto& r : mass_spectrum(f)) total += r.weight;
        CHECK(total == doctest::Approx(f.norm2()).epsilon(1e-10));
    }
}

TEST_CASE("project_mass_sector") {
    SplitMix64 rng(61);
    const Field mixed = random_field(kNx, kNtau, kLx, kLtau, rng);
    SUBCASE("pure field is unchanged") {
        const Field f = make_plane_wave(kNx, kNtau, kLx, kLtau, kx(1), kt(2), 1, 1);
        CHECK(max_pointwise_diff(project_mass_sector(f, kt(2)), f) < 1e-13);
        // projecting onto an empty sector gives zero
        CHECK(project_mass_sector(f, kt(1)).norm() < 1e-13);
    }
    SUBCASE("projected norm equals the spectrum weight") {
        const auto rows = mass_spectrum(mixed);
        const Field p = project_mass_sector(mixed, kt(2));
        double want = 0;
        for (const auto& r : rows)
            if (std::abs(r.kappa - kt(2)) < 1e-12) want = r.weight;
        CHECK(p.norm2() == doctest::Approx(want).epsilon(1e-10));
    }
    SUBCASE("commutes with evolve") {
        const double t = 0.8;
        CHECK(max_pointwise_diff(evolve(project_mass_sector(mixed, kt(1)), t),
                                 project_mass_sector(evolve(mixed, t), kt(1))) < 1e-12);
    }
    CHECK_THROWS_AS(project_mass_sector(mixed, 0.1234), std::invalid_argument);
}

TEST_CASE("compare_standard_dirac") {
    std::vector<Spinor4> profile(kNx);
    for (int ix = 0; ix < kNx; ++ix) {
        const double x = ix * kLx / kNx - kLx / 2;
        profile[ix][0] = Complex{std::exp(-x * x / 8.0), 0};
        profile[ix][2] = Complex{0.3 * std::exp(-x * x / 6.0), 0.1};
    }
    CHECK(compare_standard_dirac(profile, kt(1), 0.0, kLx, kLtau, kNtau) < 1e-13);
    CHECK(compare_standard_dirac(profile, kt(1), 5.0, kLx, kLtau, kNtau) < 1e-10);

    // single spatial mode, closed form on both sides
    std::vector<Spinor4> mode(kNx);
    for (int ix = 0; ix < kNx; ++ix)
        mode[ix][1] = std::polar(1.0, kx(3) * (ix * kLx / kNx));
    CHECK(compare_standard_dirac(mode, kt(2), 2.5, kLx, kLtau, kNtau) < 1e-12);
}

TEST_CASE("translate_tau") {
    const Field f = make_plane_wave(kNx, kNtau, kLx, kLtau, kx(1), kt(2), 1, 1);
    SUBCASE("dtau = 0 is the identity") {
        CHECK(max_pointwise_diff(translate_tau(f, 0.0), f) < 1e-13);
    }
    SUBCASE("pure mode acquires e^{i kappa dtau}") {
        const double dtau = 0.93;
        const Complex ov = overlap(f, translate_tau(f, dtau));
        CHECK(std::abs(ov - std::polar(1.0, kt(2) * dtau)) < 1e-12);
    }
    SUBCASE("mixed field dephases") {
        const Field b = make_plane_wave(kNx, kNtau, kLx, kLtau, kx(1), kt(-1), 1, 1);
        const Field mix = scaled(axpy(Complex{1, 0}, f, b), Complex{1.0 / std::sqrt(2.0), 0});
        const Complex ov = overlap(mix, translate_tau(mix, 1.1));
        CHECK(std::abs(ov) < 1.0 - 1e-3);
    }
    SUBCASE("commutes with evolve") {
        SplitMix64 rng(71);
        const Field mixed = random_field(kNx, kNtau, kLx, kLtau, rng);
        CHECK(max_pointwise_diff(evolve(translate_tau(mixed, 0.7), 1.3),
                                 translate_tau(evolve(mixed, 1.3), 0.7)) < 1e-12);
    }
}

TEST_CASE("proper_time_reversal") {
    SUBCASE("involution up to nothing at all: M^2 = I and tau -> tau") {
        SplitMix64 rng(81);
        const Field f = random_field(kNx, kNtau, kLx, kLtau, rng);
        const Field twice = proper_time_reversal(proper_time_reversal(f));
        CHECK(std::abs(std::abs(overlap(f, twice)) - 1.0) < 1e-12);
        CHECK(max_pointwise_diff(twice, f) < 1e-13);
    }
    SUBCASE("positive-energy rest mode maps to positive energy at -kappa") {
        // oracle: direct matrix algebra, (alpha_1 k - beta m)(M u) = +E (M u)
        const double m = 1.5;
        const auto mode = select_mode(plane_wave_eigensystem(Vec3{0, 0, 0}, m), 1, 1);
        const Matrix4 mrev = kron(pauli(1), Matrix2::identity());
        const Spinor4 mu = mrev * mode.u;
        const Matrix4 hneg = dirac_hamiltonian(Vec3{0, 0, 0}, -m);
        const Spinor4 r = hneg * mu - mu * Complex{mode.energy, 0};
        CHECK(r.norm() < 1e-13);

        const Field f = make_plane_wave(kNx, kNtau, kLx, kLtau, 0.0, kt(2), 1, 1);
        const Field rev = proper_time_reversal(f);
        // spectrum moved to -kappa
        for (const auto& row : mass_spectrum(rev)) {
            if (std::abs(row.kappa - kt(-2)) < 1e-12)
                CHECK(row.weight == doctest::Approx(1.0).epsilon(1e-10));
            else
                CHECK(row.weight < 1e-12);
        }
        // energy (phase of the evolution) unchanged and still positive
        const double e = kt(2);
        const double t = 0.9;
        CHECK(std::abs(overlap(rev, evolve(rev, t)) - std::polar(1.0, -e * t)) < 1e-12);
    }
    SUBCASE("spectrum mirror on a mixed field") {
        SplitMix64 rng(91);
        const Field f = random_field(kNx, kNtau, kLx, kLtau, rng);
        const auto s0 = mass_spectrum(f);
        const auto s1 = mass_spectrum(proper_time_reversal(f));
        const int n = static_cast<int>(s0.size());
        for (int i = 0; i < n; ++i) {
            const int j = (i == 0) ? 0 : n - i;  // -kappa row; the edge row is its own mirror
            CHECK(std::abs(s1[j].weight - s0[i].weight) < 1e-12);
        }
    }
    SUBCASE("covariance with evolve") {
        SplitMix64 rng(101);
        const Field f = random_field(kNx, kNtau, kLx, kLtau, rng);
        CHECK(max_pointwise_diff(evolve(proper_time_reversal(f), 1.1),
                                 proper_time_reversal(evolve(f, 1.1))) < 1e-12);
    }
}

TEST_CASE("lagrangian_residual") {
    const Field mode = make_plane_wave(kNx, kNtau, kLx, kLtau, kx(1), kt(1), 1, 1);
    const double r1 = lagrangian_residual(mode, 1e-3);
    CHECK(r1 < 1e-6);
    const double r2 = lagrangian_residual(mode, 5e-4);
    CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.01));

    // a pair NOT related by the evolution produces an O(1) residual
    SplitMix64 rng(111);
    const Field a = random_field(kNx, kNtau, kLx, kLtau, rng);
    const Field b = random_field(kNx, kNtau, kLx, kLtau, rng);
    CHECK(lagrangian_residual_pair(a, b, 1e-3) > 1.0);
    // while a genuine pair stays small
    CHECK(lagrangian_residual_pair(a, evolve(a, 1e-3), 1e-3) < 1e-2);
}

TEST_CASE("ehrenfest_velocity") {
    SUBCASE("symmetric rest packet drifts nowhere") {
        // wider box: massive packets carry exp(-kappa0 |x|) tails, so the
        // seam leakage on the 16-box would dominate this tight tolerance
        const Field f = gaussian_packet(2 * kNx, kNtau, 2 * kLx, kLtau, 0.0, kt(1), 1.2, kLx, 1, 1);
        const auto r = ehrenfest_velocity(f, 0.5, 1e-2);
        CHECK(std::abs(r.slope) < 1e-6);
        CHECK(std::abs(r.alpha1) < 1e-6);
    }
    SUBCASE("boosted packet: slope tracks <alpha_1>") {
        const Field f = test_packet();
        const auto r = ehrenfest_velocity(f, 0.5, 1e-2);
        CHECK(std::abs(r.slope - r.alpha1) < 1e-4);
        CHECK(r.alpha1 > 0.1);
        CHECK_FALSE(r.wrap_warning);
    }
    SUBCASE("plus/minus energy superposition still satisfies the identity") {
        const Field p = gaussian_packet(kNx, kNtau, kLx, kLtau, kx(2), kt(1), 1.2, kLx / 2, 1, 1);
        const Field m = gaussian_packet(kNx, kNtau, kLx, kLtau, kx(2), kt(1), 1.2, kLx / 2, -1, 1);
        const Field f = normalized(axpy(Complex{1, 0}, p, m));
        const auto r = ehrenfest_velocity(f, 0.5, 1e-3);
        CHECK(std::abs(r.slope - r.alpha1) < 1e-4);
    }
}

TEST_CASE("uncertainty_check") {
    SUBCASE("Gaussian tau profile saturates the bound") {
        Field g = Field::zeros(8, 256, 8.0, 16.0);
        const double s = 1.0;
        for (int ix = 0; ix < g.nx; ++ix)
            for (int it = 0; it < g.ntau; ++it) {
                const double d = g.tau_at(it) - 8.0;
                g.at(ix, it, 0) = Complex{std::exp(-d * d / (4.0 * s * s)), 0};
            }
        const auto u = uncertainty_check(g);
        CHECK(u.delta_tau == doctest::Approx(s).epsilon(1e-6));
        CHECK(u.delta_kappa == doctest::Approx(0.5 / s).epsilon(1e-6));
        CHECK(u.product == doctest::Approx(0.5).epsilon(1e-3));

        // narrower Gaussian: wider kappa marginal, bound still respected
        Field g2 = Field::zeros(8, 256, 8.0, 16.0);
        for (int ix = 0; ix < g2.nx; ++ix)
            for (int it = 0; it < g2.ntau; ++it) {
                const double d = g2.tau_at(it) - 8.0;
                g2.at(ix, it, 0) = Complex{std::exp(-d * d / (4.0 * 0.25 * 0.25)), 0};
            }
        const auto u2 = uncertainty_check(g2);
        CHECK(u2.delta_kappa > u.delta_kappa);
        CHECK(u2.product >= 0.5 - 1e-6);
    }
    SUBCASE("pure mode: zero kappa spread, box-uniform tau spread") {
        const Field f = make_plane_wave(kNx, kNtau, kLx, kLtau, 0.0, kt(2), 1, 1);
        const auto u = uncertainty_check(f);
        CHECK(u.delta_kappa < 1e-9);
        // oracle: discrete uniform over ntau points spaced dtau
        const double dtau = kLtau / kNtau;
        const double want = dtau * std::sqrt((kNtau * double(kNtau) - 1.0) / 12.0);
        CHECK(u.delta_tau == doctest::Approx(want).epsilon(1e-10));
    }
    SUBCASE("random fields respect the bound") {
        SplitMix64 rng(121);
        for (int i = 0; i < 100; ++i) {
            const Field f = random_field(16, 16, 8.0, 8.0, rng);
            CHECK(uncertainty_check(f).product >= 0.5 - 1e-6);
        }
    }
}

TEST_CASE("field plumbing") {
    CHECK_THROWS_AS(Field::zeros(3, 16, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Field::zeros(16, 100, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Field::zeros(16, 16, -1.0, 1.0), std::invalid_argument);

    SplitMix64 rng(131);
    const Field f = random_field(16, 16, 8.0, 8.0, rng);
    CHECK(f.norm() == doctest::Approx(1.0).epsilon(1e-12));
    // round trip through mode space
    CHECK(max_pointwise_diff(from_modes(to_modes(f)), f) < 1e-13);
}
