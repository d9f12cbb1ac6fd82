#pragma once

// Pauli and Dirac matrices, SU(2) rotations, and the quantization map that
// sends the classical unit-vector pair (r-hat, s-hat) to a 4-spinor.
// Basis order is (rho-up sigma-up, rho-up sigma-down, rho-down sigma-up,
// rho-down sigma-down), i.e. rho-space outermost, which reproduces the
// standard Dirac-Pauli representation.

#include <algorithm>
#include <utility>

#include "tauspinor/kinematics.hpp"
#include "tauspinor/linalg.hpp"

namespace tauspinor {

inline constexpr Complex kI{0.0, 1.0};

/// Standard Pauli matrices, index 1..3.
inline Matrix2 pauli(int i) {
    Matrix2 m;
    switch (i) {
        case 1:
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case 2:
            m(0, 1) = -kI;
            m(1, 0) = kI;
            break;
        case 3:
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
        default:
            throw std::out_of_range("pauli: index must be 1..3");
    }
    return m;
}

/// sigma . n for a real 3-vector n.
inline Matrix2 sigma_dot(const Vec3& n) {
    return pauli(1) * Complex{n.x, 0} + pauli(2) * Complex{n.y, 0} + pauli(3) * Complex{n.z, 0};
}

/// alpha_i = rho_1 (x) sigma_i, the velocity operator components.
inline Matrix4 dirac_alpha(int i) { return kron(pauli(1), pauli(i)); }

/// beta = rho_3 (x) I, the proper-time velocity operator.
inline Matrix4 dirac_beta() { return kron(pauli(3), Matrix2::identity()); }

/// alpha . p for a real 3-vector p.
inline Matrix4 alpha_dot(const Vec3& p) {
    return dirac_alpha(1) * Complex{p.x, 0} + dirac_alpha(2) * Complex{p.y, 0} +
           dirac_alpha(3) * Complex{p.z, 0};
}

/// exp(-i theta (axis.sigma)/2) = cos(theta/2) I - i sin(theta/2) axis.sigma.
inline Matrix2 su2_rotation(const UnitVec3& axis, double theta) {
    const double h = 0.5 * theta;
    return Matrix2::identity() * Complex{std::cos(h), 0.0} +
           sigma_dot(axis.vec()) * (-kI * std::sin(h));
}

/// The 2-spinor whose sigma expectations reproduce the unit vector u:
/// chi = (cos(t/2), e^{i p} sin(t/2)) with t = polar angle, p = azimuth.
/// Phase convention: first nonvanishing component real and >= 0.
inline Spinor2 bloch_to_spinor(const UnitVec3& u) {
    const double theta = std::acos(std::clamp(u.z, -1.0, 1.0));
    const double phi = std::atan2(u.y, u.x);
    Spinor2 chi;
    chi[0] = Complex{std::cos(0.5 * theta), 0.0};
    chi[1] = std::polar(std::sin(0.5 * theta), phi);
    return phase_fixed(chi);
}

/// Bloch vector of a normalized 2-spinor: (<sigma_1>, <sigma_2>, <sigma_3>).
inline Vec3 spinor_to_bloch(const Spinor2& chi) {
    return {expectation(chi, pauli(1)).real(), expectation(chi, pauli(2)).real(),
            expectation(chi, pauli(3)).real()};
}

/// Quantize a classical state as the product spinor chi(r-hat) (x) chi(s-hat).
/// The result satisfies <beta> = cos phi and <alpha_i> = sin phi * s_i.
inline Spinor4 quantize(const KinematicState& st) {
    const Vec3 r = st.r_hat();
    const Spinor2 chi_r = bloch_to_spinor(UnitVec3(r.x, r.y, r.z));
    const Spinor2 chi_s = bloch_to_spinor(st.s);
    return kron(chi_r, chi_s);
}

/// Velocity and proper-time-velocity expectations of a normalized 4-spinor:
/// ((<alpha_1>, <alpha_2>, <alpha_3>), <beta>). Round-trips quantize output.
inline std::pair<Vec3, double> dequantize(const Spinor4& psi) {
    const Vec3 v{expectation(psi, dirac_alpha(1)).real(),
                 expectation(psi, dirac_alpha(2)).real(),
                 expectation(psi, dirac_alpha(3)).real()};
    return {v, expectation(psi, dirac_beta()).real()};
}

}  // namespace tauspinor
