#pragma once

// Plane-wave eigensystem of H = alpha.p + beta*m and exact spectral
// evolution of the generalized equation i d_t psi = [alpha_1(-i d_x) +
// beta(-i d_tau)] psi on a periodic (x, tau) grid.
//
// Conventions: forward transform e^{-ikx}; plane waves e^{+i(kx + kappa*tau
// - Et)}; the mass is the +kappa eigenvalue of -i d_tau, so e^{i m tau} is a
// mass-m state. tau lives on a periodic box of length ltau, which quantizes
// kappa in units 2*pi/ltau. That is a numerical device, not physics.
//
// The grid is 1 space + 1 proper-time dimension; the full 3D alpha matrices
// are kept so the algebra is unreduced, with k entering through alpha_1.

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tauspinor/fft.hpp"
#include "tauspinor/kinematics.hpp"
#include "tauspinor/linalg.hpp"
#include "tauspinor/rng.hpp"
#include "tauspinor/spinor.hpp"

namespace tauspinor {

/// alpha.p + beta*m; Hermitian, squares to (p^2 + m^2) I.
inline Matrix4 dirac_hamiltonian(const Vec3& p, double m) {
    return alpha_dot(p) + dirac_beta() * Complex{m, 0.0};
}

/// (I (x) sigma.p)/|p|; Hermitian, squares to I, commutes with the
/// Hamiltonian for every mass.
inline Matrix4 helicity_operator(const Vec3& p) {
    const double pn = p.norm();
    if (pn == 0.0) throw std::domain_error("helicity_operator: zero momentum");
    return kron(Matrix2::identity(), sigma_dot(p * (1.0 / pn)));
}

/// One plane-wave eigen-solution of alpha.p + beta*kappa.
struct ModeSolution {
    Vec3 p;
    double kappa = 0;
    double energy = 0;
    int branch = 1;    // sign of the energy
    int helicity = 1;  // eigenvalue of (I (x) sigma.p)/|p|; sigma_3 label at p = 0
    Spinor4 u;
};

/// The four orthonormal eigenpairs of alpha.p + beta*m, energies
/// {+E, +E, -E, -E} with E = sqrt(p^2 + m^2), resolved in the helicity
/// basis for p != 0 and in the sigma_3 basis at p = 0. The mass argument is
/// stored as kappa; negative values are allowed (internal-momentum modes).
inline std::array<ModeSolution, 4> plane_wave_eigensystem(const Vec3& p, double m) {
    const double pn = p.norm();
    const double e = std::sqrt(pn * pn + m * m);
    if (e == 0.0) throw std::domain_error("plane_wave_eigensystem: p = 0 and m = 0 is degenerate");

    std::array<ModeSolution, 4> out;
    std::size_t idx = 0;
    for (int branch : {1, -1}) {
        for (int lambda : {1, -1}) {
            Spinor2 chi;
            if (pn > 0.0) {
                const Vec3 d = p * (static_cast<double>(lambda) / pn);
                chi = bloch_to_spinor(UnitVec3(d.x, d.y, d.z));
            } else {
                chi = (lambda > 0) ? Spinor2{{Complex{1, 0}, Complex{0, 0}}}
                                   : Spinor2{{Complex{0, 0}, Complex{1, 0}}};
            }
            // The 4x4 problem reduces to [[m, q], [q, -m]] on the (upper,
            // lower) amplitudes, q = lambda |p|. Two algebraically parallel
            // eigenvector forms exist per branch; pick the one that stays
            // away from 0/0 for the sign of m at hand.
            const double q = static_cast<double>(lambda) * pn;
            double a, b;
            if (branch > 0) {
                if (m >= 0) { a = e + m; b = q; }
                else        { a = q;     b = e - m; }
            } else {
                if (m >= 0) { a = -q;    b = e + m; }
                else        { a = m - e; b = q; }
            }
            Spinor4 u;
            u[0] = a * chi[0];
            u[1] = a * chi[1];
            u[2] = b * chi[0];
            u[3] = b * chi[1];
            out[idx++] = ModeSolution{p, m, static_cast<double>(branch) * e, branch, lambda,
                                      phase_fixed(normalized(u))};
        }
    }
    return out;
}

inline ModeSolution select_mode(const std::array<ModeSolution, 4>& modes, int branch,
                                int helicity) {
    for (const auto& m : modes)
        if (m.branch == branch && m.helicity == helicity) return m;
    throw std::invalid_argument("select_mode: branch and helicity must be +1 or -1");
}

// ---------------------------------------------------------------------------
// Periodic field

/// psi sampled on a periodic nx x ntau grid, 4 complex amplitudes per site.
/// Layout: data[(ix*ntau + it)*4 + comp].
struct Field {
    int nx = 0, ntau = 0;
    double lx = 0, ltau = 0;
    std::vector<Complex> data;

    static bool valid_size(int n) { return n >= 4 && (n & (n - 1)) == 0; }

    static Field zeros(int nx, int ntau, double lx, double ltau) {
        if (!valid_size(nx) || !valid_size(ntau))
            throw std::invalid_argument("Field: grid sizes must be powers of two >= 4");
        if (!(lx > 0) || !(ltau > 0))
            throw std::invalid_argument("Field: periods must be positive");
        Field f;
        f.nx = nx;
        f.ntau = ntau;
        f.lx = lx;
        f.ltau = ltau;
        f.data.assign(static_cast<std::size_t>(nx) * ntau * 4, Complex{});
        return f;
    }

    double dx() const { return lx / nx; }
    double dtau() const { return ltau / ntau; }
    double x_at(int ix) const { return ix * dx(); }
    double tau_at(int it) const { return it * dtau(); }

    Complex& at(int ix, int it, int c) {
        return data[(static_cast<std::size_t>(ix) * ntau + it) * 4 + c];
    }
    const Complex& at(int ix, int it, int c) const {
        return data[(static_cast<std::size_t>(ix) * ntau + it) * 4 + c];
    }

    /// Integral of psi^dag psi over the box.
    double norm2() const {
        double s = 0;
        for (const auto& z : data) s += std::norm(z);
        return s * dx() * dtau();
    }
    double norm() const { return std::sqrt(norm2()); }
};

inline void check_same_grid(const Field& a, const Field& b) {
    if (a.nx != b.nx || a.ntau != b.ntau || a.lx != b.lx || a.ltau != b.ltau)
        throw std::invalid_argument("fields live on different grids");
}

/// Integral of conj(a) . b over the box.
inline Complex overlap(const Field& a, const Field& b) {
    check_same_grid(a, b);
    Complex s = 0;
    for (std::size_t i = 0; i < a.data.size(); ++i) s += std::conj(a.data[i]) * b.data[i];
    return s * (a.dx() * a.dtau());
}

inline double max_pointwise_diff(const Field& a, const Field& b) {
    check_same_grid(a, b);
    double r = 0;
    for (std::size_t i = 0; i < a.data.size(); ++i)
        r = std::max(r, std::abs(a.data[i] - b.data[i]));
    return r;
}

inline Field axpy(Complex alpha, const Field& x, const Field& y) {
    check_same_grid(x, y);
    Field r = y;
    for (std::size_t i = 0; i < r.data.size(); ++i) r.data[i] += alpha * x.data[i];
    return r;
}

inline Field scaled(const Field& f, Complex s) {
    Field r = f;
    for (auto& z : r.data) z *= s;
    return r;
}

inline Field normalized(const Field& f) {
    const double n = f.norm();
    if (n == 0.0) throw std::invalid_argument("cannot normalize a zero field");
    return scaled(f, Complex{1.0 / n, 0.0});
}

// ---------------------------------------------------------------------------
// Fourier helpers

/// Signed wavenumber of grid index j on an n-point period-L axis.
inline double grid_wavenumber(int j, int n, double L) {
    const int s = (j < n / 2) ? j : j - n;
    return 2.0 * kPi * s / L;
}

/// Index of an on-grid wavenumber; throws if k is not 2*pi*integer/L or
/// falls outside the representable band.
inline int wavenumber_index(double k, int n, double L) {
    const double x = k * L / (2.0 * kPi);
    const double r = std::round(x);
    if (std::abs(x - r) > 1e-9)
        throw std::invalid_argument("wavenumber is not on the 2*pi/L grid");
    const int s = static_cast<int>(r);
    if (s < -n / 2 || s >= n / 2)
        throw std::invalid_argument("wavenumber outside the representable band");
    return (s + n) % n;
}

namespace detail {

/// Raw 2D FFT over both grid directions for each of the 4 components,
/// no normalization beyond the 1/n carried by the inverse.
inline void fft2(Field& f, bool inverse) {
    for (int c = 0; c < 4; ++c) {
        for (int ix = 0; ix < f.nx; ++ix)
            fft(f.data.data() + (static_cast<std::size_t>(ix) * f.ntau) * 4 + c, f.ntau, 4,
                inverse);
        for (int it = 0; it < f.ntau; ++it)
            fft(f.data.data() + static_cast<std::size_t>(it) * 4 + c, f.nx,
                static_cast<std::size_t>(f.ntau) * 4, inverse);
    }
}

/// (alpha_1 k + beta kappa) applied to one 4-amplitude, in place.
inline void apply_mode_hamiltonian(Complex* v, double k, double kappa) {
    const Complex c0 = v[0], c1 = v[1], c2 = v[2], c3 = v[3];
    v[0] = k * c3 + kappa * c0;
    v[1] = k * c2 + kappa * c1;
    v[2] = k * c1 - kappa * c2;
    v[3] = k * c0 - kappa * c3;
}

}  // namespace detail

/// Fourier coefficients such that psi(x, tau) = sum psihat e^{+i(kx + kappa tau)}.
inline Field to_modes(const Field& f) {
    Field m = f;
    detail::fft2(m, false);
    const double s = 1.0 / (static_cast<double>(f.nx) * f.ntau);
    for (auto& z : m.data) z *= s;
    return m;
}

inline Field from_modes(const Field& m) {
    Field f = m;
    const double s = static_cast<double>(m.nx) * m.ntau;
    for (auto& z : f.data) z *= s;
    detail::fft2(f, true);
    return f;
}

// ---------------------------------------------------------------------------
// Construction

/// Single plane-wave solution u e^{i(kx + kappa tau)}, unit norm. Both
/// wavenumbers must sit on their grids.
inline Field make_plane_wave(int nx, int ntau, double lx, double ltau, double k, double kappa,
                             int branch, int helicity) {
    Field f = Field::zeros(nx, ntau, lx, ltau);
    (void)wavenumber_index(k, nx, lx);
    (void)wavenumber_index(kappa, ntau, ltau);
    const ModeSolution mode =
        select_mode(plane_wave_eigensystem(Vec3{k, 0, 0}, kappa), branch, helicity);
    const double amp = 1.0 / std::sqrt(lx * ltau);
    for (int ix = 0; ix < nx; ++ix) {
        for (int it = 0; it < ntau; ++it) {
            const Complex ph = std::polar(amp, k * f.x_at(ix) + kappa * f.tau_at(it));
            for (int c = 0; c < 4; ++c) f.at(ix, it, c) = mode.u[c] * ph;
        }
    }
    return f;
}

/// Gaussian wavepacket assembled in Fourier space on a single kappa row:
/// psihat(k) = exp(-(k - k0)^2 sigma_x^2) e^{-i k x0} u(k) for the requested
/// energy branch, with the spin part pinned to the sigma_1 eigenspinor of the
/// given helicity sign. Pinning the spin gauge (instead of using the
/// helicity-basis eigenvectors, which flip discontinuously at k = 0) keeps
/// u(k) smooth across the whole momentum grid, so the packet's position tails
/// fall off like the Gaussian envelope rather than 1/x. At the carrier k0 > 0
/// the mode coincides with the (branch, helicity) eigenvector. Pure-branch by
/// construction, so <x>(t) is free of interference oscillations. Unit norm.
inline Field gaussian_packet(int nx, int ntau, double lx, double ltau, double k0, double kappa0,
                             double sigma_x, double x0, int branch, int helicity) {
    Field m = Field::zeros(nx, ntau, lx, ltau);
    const int jt = wavenumber_index(kappa0, ntau, ltau);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int jx = 0; jx < nx; ++jx) {
        const double k = grid_wavenumber(jx, nx, lx);
        const double g = std::exp(-(k - k0) * (k - k0) * sigma_x * sigma_x);
        if (g < 1e-300) continue;
        Spinor4 u;
        const double e = std::hypot(k, kappa0);
        if (e == 0.0) {
            u[0] = 1.0;  // the zero mode has no eigenbasis; any spinor works
        } else {
            // 2x2 reduced eigenproblem [[kappa0, q], [q, -kappa0]] with the
            // signed momentum q = helicity * k; both closed forms below avoid
            // the vanishing-component branch.
            const double q = helicity * k;
            double a, b;
            if (branch > 0) {
                if (kappa0 >= 0) { a = e + kappa0; b = q; }
                else             { a = q;          b = e - kappa0; }
            } else {
                if (kappa0 >= 0) { a = -q;         b = e + kappa0; }
                else             { a = kappa0 - e; b = q; }
            }
            const double s = 1.0 / std::hypot(a, b);
            u[0] = a * s * inv_sqrt2;
            u[1] = helicity * a * s * inv_sqrt2;
            u[2] = b * s * inv_sqrt2;
            u[3] = helicity * b * s * inv_sqrt2;
        }
        const Complex ph = std::polar(g, -k * x0);
        for (int c = 0; c < 4; ++c) m.at(jx, jt, c) = u[c] * ph;
    }
    return normalized(from_modes(m));
}

/// Random field: independent standard-normal real/imag parts per site and
/// component, then normalized. The unpaired Nyquist row in kappa is projected
/// out: tau reflection has no partner for it on the grid (its kappa aliases to
/// both signs), so keeping it would spoil exact symmetry identities that hold
/// for every resolvable mode. Deterministic given the generator state.
inline Field random_field(int nx, int ntau, double lx, double ltau, SplitMix64& rng) {
    Field f = Field::zeros(nx, ntau, lx, ltau);
    for (auto& z : f.data) z = Complex{rng.normal(), rng.normal()};
    Field m = to_modes(f);
    for (int jx = 0; jx < nx; ++jx)
        for (int c = 0; c < 4; ++c) m.at(jx, ntau / 2, c) = 0.0;
    return normalized(from_modes(m));
}

// ---------------------------------------------------------------------------
// Evolution and symmetry operations

/// Exact spectral propagation by time t: every Fourier mode (k, kappa) is
/// advanced with exp(-i(alpha_1 k + beta kappa)t), evaluated in closed form
/// as cos(Et) I - i sin(Et) H/E with E = sqrt(k^2 + kappa^2); the k = kappa
/// = 0 mode is left alone. Unitary, so the norm is preserved.
inline Field evolve(const Field& f, double t) {
    Field m = f;
    detail::fft2(m, false);
    for (int jx = 0; jx < m.nx; ++jx) {
        const double k = grid_wavenumber(jx, m.nx, m.lx);
        for (int jt = 0; jt < m.ntau; ++jt) {
            const double kappa = grid_wavenumber(jt, m.ntau, m.ltau);
            const double e = std::hypot(k, kappa);
            if (e == 0.0) continue;
            Complex* v = &m.at(jx, jt, 0);
            Complex h[4] = {v[0], v[1], v[2], v[3]};
            detail::apply_mode_hamiltonian(h, k, kappa);
            const double c = std::cos(e * t);
            const Complex s = Complex{0.0, -std::sin(e * t) / e};
            for (int i = 0; i < 4; ++i) v[i] = c * v[i] + s * h[i];
        }
    }
    detail::fft2(m, true);
    return m;
}

/// The generalized Hamiltonian applied spectrally.
inline Field apply_generalized_hamiltonian(const Field& f) {
    Field m = f;
    detail::fft2(m, false);
    for (int jx = 0; jx < m.nx; ++jx) {
        const double k = grid_wavenumber(jx, m.nx, m.lx);
        for (int jt = 0; jt < m.ntau; ++jt)
            detail::apply_mode_hamiltonian(&m.at(jx, jt, 0), k,
                                           grid_wavenumber(jt, m.ntau, m.ltau));
    }
    detail::fft2(m, true);
    return m;
}

struct SpectrumRow {
    double kappa = 0;
    double weight = 0;
};

/// Mass (kappa) marginal of the field: weight(kappa) = sum over k and
/// components of |psihat|^2, normalized so the weights sum to norm^2.
/// Rows cover the whole kappa grid in ascending order.
inline std::vector<SpectrumRow> mass_spectrum(const Field& f) {
    const Field m = to_modes(f);
    std::vector<SpectrumRow> rows(static_cast<std::size_t>(m.ntau));
    const double scale = m.lx * m.ltau;
    for (int s = -m.ntau / 2; s < m.ntau / 2; ++s) {
        const int jt = (s + m.ntau) % m.ntau;
        double w = 0;
        for (int jx = 0; jx < m.nx; ++jx)
            for (int c = 0; c < 4; ++c) w += std::norm(m.at(jx, jt, c));
        rows[static_cast<std::size_t>(s + m.ntau / 2)] =
            SpectrumRow{grid_wavenumber(jt, m.ntau, m.ltau), w * scale};
    }
    return rows;
}

/// Zero every Fourier component with kappa' != kappa. The result is a fixed-
/// mass sector whose dynamics is the standard Dirac equation with m = kappa.
inline Field project_mass_sector(const Field& f, double kappa) {
    const int keep = wavenumber_index(kappa, f.ntau, f.ltau);
    Field m = f;
    detail::fft2(m, false);
    for (int jx = 0; jx < m.nx; ++jx)
        for (int jt = 0; jt < m.ntau; ++jt)
            if (jt != keep)
                for (int c = 0; c < 4; ++c) m.at(jx, jt, c) = Complex{};
    detail::fft2(m, true);
    return m;
}

/// Proper-time translation: mode (k, kappa) picks up e^{+i kappa dtau}, so a
/// pure e^{i kappa0 tau} field acquires the global phase e^{i kappa0 dtau}.
/// Norm preserved exactly.
inline Field translate_tau(const Field& f, double dtau) {
    Field m = f;
    detail::fft2(m, false);
    for (int jt = 0; jt < m.ntau; ++jt) {
        const Complex ph = std::polar(1.0, grid_wavenumber(jt, m.ntau, m.ltau) * dtau);
        for (int jx = 0; jx < m.nx; ++jx)
            for (int c = 0; c < 4; ++c) m.at(jx, jt, c) *= ph;
    }
    detail::fft2(m, true);
    return m;
}

/// tau -> -tau combined with the spinor factor M = rho_1 (x) I, the unique
/// standard-representation matrix (up to phase) commuting with every alpha_i
/// and anticommuting with beta. Maps a positive-energy mode at kappa to a
/// positive-energy mode at -kappa.
inline Field proper_time_reversal(const Field& f) {
    Field out = Field::zeros(f.nx, f.ntau, f.lx, f.ltau);
    for (int ix = 0; ix < f.nx; ++ix) {
        for (int it = 0; it < f.ntau; ++it) {
            const int src = (f.ntau - it) % f.ntau;
            // M swaps the rho-up and rho-down component pairs.
            out.at(ix, it, 0) = f.at(ix, src, 2);
            out.at(ix, it, 1) = f.at(ix, src, 3);
            out.at(ix, it, 2) = f.at(ix, src, 0);
            out.at(ix, it, 3) = f.at(ix, src, 1);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Diagnostics

/// Reduction check: evolves (a) the embedded field e^{i m tau} xprofile under
/// the generalized equation and (b) xprofile under the fixed-mass 1D Dirac
/// propagator exp(-i(alpha_1 k + beta m)t) per spatial mode, and returns the
/// maximum pointwise discrepancy between (a) and e^{i m tau} (b).
inline double compare_standard_dirac(const std::vector<Spinor4>& xprofile, double m, double t,
                                     double lx, double ltau, int ntau) {
    const int nx = static_cast<int>(xprofile.size());
    if (!Field::valid_size(nx)) throw std::invalid_argument("xprofile length must be a power of two >= 4");
    (void)wavenumber_index(m, ntau, ltau);

    Field f = Field::zeros(nx, ntau, lx, ltau);
    for (int ix = 0; ix < nx; ++ix)
        for (int it = 0; it < ntau; ++it) {
            const Complex ph = std::polar(1.0, m * f.tau_at(it));
            for (int c = 0; c < 4; ++c) f.at(ix, it, c) = xprofile[ix][c] * ph;
        }
    const Field a = evolve(f, t);

    // 1D standard-Dirac route.
    std::vector<Complex> buf(static_cast<std::size_t>(nx) * 4);
    for (int ix = 0; ix < nx; ++ix)
        for (int c = 0; c < 4; ++c) buf[static_cast<std::size_t>(ix) * 4 + c] = xprofile[ix][c];
    for (int c = 0; c < 4; ++c) fft(buf.data() + c, nx, 4, false);
    for (int jx = 0; jx < nx; ++jx) {
        const double k = grid_wavenumber(jx, nx, lx);
        const double e = std::hypot(k, m);
        if (e == 0.0) continue;
        Complex* v = buf.data() + static_cast<std::size_t>(jx) * 4;
        Complex h[4] = {v[0], v[1], v[2], v[3]};
        detail::apply_mode_hamiltonian(h, k, m);
        const double cs = std::cos(e * t);
        const Complex sn = Complex{0.0, -std::sin(e * t) / e};
        for (int i = 0; i < 4; ++i) v[i] = cs * v[i] + sn * h[i];
    }
    for (int c = 0; c < 4; ++c) fft(buf.data() + c, nx, 4, true);

    double worst = 0;
    for (int ix = 0; ix < nx; ++ix)
        for (int it = 0; it < ntau; ++it) {
            const Complex ph = std::polar(1.0, m * a.tau_at(it));
            for (int c = 0; c < 4; ++c)
                worst = std::max(worst, std::abs(a.at(ix, it, c) -
                                                 buf[static_cast<std::size_t>(ix) * 4 + c] * ph));
        }
    return worst;
}

/// Centered-difference residual of the equation of motion,
/// r = || i(psi(t+dt) - psi(t))/dt - H_g psi(t+dt/2) || / ||psi||,
/// with the half step supplied by the exact propagator. O(dt^2) on
/// solutions; this is the operator content of stationarity d psi/dt = 0.
inline double lagrangian_residual(const Field& f, double dt) {
    if (!(dt > 0)) throw std::invalid_argument("lagrangian_residual: dt must be positive");
    const Field f1 = evolve(f, dt);
    const Field hmid = apply_generalized_hamiltonian(evolve(f, 0.5 * dt));
    const Field r = axpy(Complex{-1.0, 0.0}, hmid,
                         scaled(axpy(Complex{-1.0, 0.0}, f, f1), Complex{0.0, 1.0 / dt}));
    return r.norm() / f.norm();
}

/// Pair form for fields that are *claimed* to be dt apart: the midpoint is
/// approximated by the average, so non-solution pairs produce O(1) residuals.
inline double lagrangian_residual_pair(const Field& f0, const Field& f1, double dt) {
    if (!(dt > 0)) throw std::invalid_argument("lagrangian_residual_pair: dt must be positive");
    const Field hmid =
        apply_generalized_hamiltonian(scaled(axpy(Complex{1.0, 0.0}, f0, f1), Complex{0.5, 0.0}));
    const Field r = axpy(Complex{-1.0, 0.0}, hmid,
                         scaled(axpy(Complex{-1.0, 0.0}, f0, f1), Complex{0.0, 1.0 / dt}));
    return r.norm() / f0.norm();
}

struct EhrenfestResult {
    double alpha1 = 0;        // <alpha_1> at time t
    double slope = 0;         // centered difference of <x>
    bool wrap_warning = false;  // packet touches the periodic seam
};

namespace detail {

inline double position_mean(const Field& f, bool* touches_seam = nullptr) {
    std::vector<double> marginal(static_cast<std::size_t>(f.nx), 0.0);
    for (int ix = 0; ix < f.nx; ++ix) {
        double rho = 0;
        for (int it = 0; it < f.ntau; ++it)
            for (int c = 0; c < 4; ++c) rho += std::norm(f.at(ix, it, c));
        marginal[static_cast<std::size_t>(ix)] = rho;
    }
    double total = 0, mean = 0, peak = 0;
    for (int ix = 0; ix < f.nx; ++ix) {
        total += marginal[static_cast<std::size_t>(ix)];
        mean += f.x_at(ix) * marginal[static_cast<std::size_t>(ix)];
        peak = std::max(peak, marginal[static_cast<std::size_t>(ix)]);
    }
    if (touches_seam) *touches_seam = peak > 0 && marginal[0] > 1e-6 * peak;
    return mean / total;
}

}  // namespace detail

/// Velocity-operator check: compares d<x>/dt (centered difference around t)
/// with <alpha_1> at t. Valid for localized packets; a packet reaching the
/// periodic seam sets wrap_warning.
inline EhrenfestResult ehrenfest_velocity(const Field& f, double t, double dt) {
    if (!(dt > 0)) throw std::invalid_argument("ehrenfest_velocity: dt must be positive");
    const Field fm = evolve(f, t - dt);
    const Field f0 = evolve(f, t);
    const Field fp = evolve(f, t + dt);

    EhrenfestResult res;
    bool seam_m = false, seam_p = false;
    const double xm = detail::position_mean(fm, &seam_m);
    const double xp = detail::position_mean(fp, &seam_p);
    res.slope = (xp - xm) / (2.0 * dt);
    res.wrap_warning = seam_m || seam_p;

    double a1 = 0;
    for (int ix = 0; ix < f0.nx; ++ix)
        for (int it = 0; it < f0.ntau; ++it) {
            a1 += 2.0 * (std::conj(f0.at(ix, it, 0)) * f0.at(ix, it, 3) +
                         std::conj(f0.at(ix, it, 1)) * f0.at(ix, it, 2))
                            .real();
        }
    res.alpha1 = a1 * f0.dx() * f0.dtau() / f0.norm2();
    return res;
}

struct UncertaintyResult {
    double delta_tau = 0;
    double delta_kappa = 0;
    double product = 0;
};

/// Standard deviations of the tau marginal (box coordinate) and of the
/// kappa marginal of |psihat|^2, plus their product.
inline UncertaintyResult uncertainty_check(const Field& f) {
    const double n2 = f.norm2();
    if (!(n2 > 0)) throw std::invalid_argument("uncertainty_check: zero field");

    double mean_t = 0, m2_t = 0, total_t = 0;
    std::vector<double> pt(static_cast<std::size_t>(f.ntau), 0.0);
    for (int it = 0; it < f.ntau; ++it) {
        double w = 0;
        for (int ix = 0; ix < f.nx; ++ix)
            for (int c = 0; c < 4; ++c) w += std::norm(f.at(ix, it, c));
        pt[static_cast<std::size_t>(it)] = w;
        total_t += w;
        mean_t += f.tau_at(it) * w;
    }
    mean_t /= total_t;
    for (int it = 0; it < f.ntau; ++it) {
        const double d = f.tau_at(it) - mean_t;
        m2_t += d * d * pt[static_cast<std::size_t>(it)];
    }

    const auto rows = mass_spectrum(f);
    double total_k = 0, mean_k = 0, m2_k = 0;
    for (const auto& r : rows) {
        total_k += r.weight;
        mean_k += r.kappa * r.weight;
    }
    mean_k /= total_k;
    for (const auto& r : rows) {
        const double d = r.kappa - mean_k;
        m2_k += d * d * r.weight;
    }

    UncertaintyResult res;
    res.delta_tau = std::sqrt(m2_t / total_t);
    res.delta_kappa = std::sqrt(m2_k / total_k);
    res.product = res.delta_tau * res.delta_kappa;
    return res;
}

}  // namespace tauspinor
