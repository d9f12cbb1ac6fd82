#pragma once

// Classical special-relativistic kinematics as rotations of two unit
// vectors: r-hat = (sin phi, 0, cos phi) in the kinematic plane carries the
// speed and the proper-time velocity, s-hat carries the direction of motion.
// Units c = 1 throughout.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tauspinor {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

struct Vec3 {
    double x = 0, y = 0, z = 0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }
};

/// Unit 3-vector; the constructor enforces |u| = 1 within 1e-12. Components
/// are stored exactly as given, so negation and axis reflections stay exact.
struct UnitVec3 {
    double x, y, z;

    UnitVec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
        const double n = std::sqrt(x * x + y * y + z * z);
        if (std::abs(n - 1.0) > 1e-12)
            throw std::invalid_argument("UnitVec3: norm deviates from 1 by more than 1e-12");
    }

    static UnitVec3 from(const Vec3& v) {
        const double n = v.norm();
        if (n == 0.0) throw std::invalid_argument("UnitVec3: zero vector has no direction");
        return UnitVec3(v.x / n, v.y / n, v.z / n);
    }

    Vec3 vec() const { return {x, y, z}; }
    double dot(const Vec3& o) const { return vec().dot(o); }
    UnitVec3 operator-() const { return UnitVec3(-x, -y, -z); }
};

/// Normalize an angle to (-pi, pi].
inline double normalize_angle(double a) {
    a = std::remainder(a, 2.0 * kPi);  // (-pi, pi], except -pi can appear
    if (a <= -kPi) a += 2.0 * kPi;
    return a;
}

/// The classical motion state: angle of r-hat in the r1-r3 plane plus the
/// velocity direction. Storing phi (not r-hat components) keeps |r| = 1 and
/// r2 = 0 exact under arbitrarily many rotations.
struct KinematicState {
    double phi;   // r-hat = (sin phi, 0, cos phi)
    UnitVec3 s;

    KinematicState(double phi_, UnitVec3 s_) : phi(normalize_angle(phi_)), s(s_) {}

    Vec3 r_hat() const { return {std::sin(phi), 0.0, std::cos(phi)}; }
    double tau_dot() const { return std::cos(phi); }
    double speed() const { return std::abs(std::sin(phi)); }
};

/// Lorentz factor (1 - v^2)^(-1/2).
inline double gamma(const Vec3& v) {
    const double v2 = v.norm2();
    if (v2 >= 1.0) throw std::domain_error("gamma: luminal or superluminal speed");
    return 1.0 / std::sqrt(1.0 - v2);
}

/// d(tau)/dt = branch / gamma. Positive branch describes particles,
/// negative branch classical antiparticles.
inline double proper_time_rate(const Vec3& v, int branch) {
    if (branch != 1 && branch != -1) throw std::invalid_argument("branch must be +1 or -1");
    return static_cast<double>(branch) / gamma(v);
}

/// Build the (phi, s-hat) state for a given velocity. The same velocity has
/// two representations, (s, phi) and (-s, -phi); `helicity` picks one. At
/// rest the direction is undefined classically: the convention is
/// s = helicity * z-hat, phi = 0 (+branch) or pi (-branch).
inline KinematicState state_from_velocity(const Vec3& v, int branch, int helicity) {
    if (branch != 1 && branch != -1) throw std::invalid_argument("branch must be +1 or -1");
    if (helicity != 1 && helicity != -1) throw std::invalid_argument("helicity must be +1 or -1");
    const double speed = v.norm();
    if (speed >= 1.0) throw std::domain_error("state_from_velocity: |v| must be < 1");
    const double tdot = static_cast<double>(branch) * std::sqrt(1.0 - speed * speed);
    if (speed == 0.0) {
        const UnitVec3 s(0.0, 0.0, static_cast<double>(helicity));
        return KinematicState(std::atan2(0.0, tdot), s);
    }
    const UnitVec3 dir = UnitVec3::from(v);
    if (helicity > 0) return KinematicState(std::atan2(speed, tdot), dir);
    return KinematicState(std::atan2(-speed, tdot), -dir);
}

/// Recover (velocity, tau-dot) = (sin phi * s, cos phi).
inline std::pair<Vec3, double> velocity_from_state(const KinematicState& st) {
    const double sp = std::sin(st.phi);
    return {st.s.vec() * sp, std::cos(st.phi)};
}

/// Rotate r-hat in the kinematic plane; s-hat untouched.
inline KinematicState rotate_r(const KinematicState& st, double dphi) {
    return KinematicState(st.phi + dphi, st.s);
}

/// Rodrigues rotation of a plain 3-vector.
inline Vec3 rodrigues(const Vec3& v, const UnitVec3& axis, double theta) {
    const Vec3 a = axis.vec();
    const double c = std::cos(theta), s = std::sin(theta);
    return v * c + a.cross(v) * s + a * (a.dot(v) * (1.0 - c));
}

/// Rotate s-hat about an arbitrary axis; phi untouched.
inline KinematicState rotate_s(const KinematicState& st, const UnitVec3& axis, double theta) {
    const Vec3 r = rodrigues(st.s.vec(), axis, theta);
    const double n = r.norm();
    return KinematicState(st.phi, UnitVec3(r.x / n, r.y / n, r.z / n));
}

/// Species map of the kinematic circle: sign(cos phi) separates particles
/// from antiparticles, sign(sin phi) separates the two helicities.
/// Quadrants: (+,+) spin-up particle, (+,-) spin-down particle,
/// (-,+) spin-up antiparticle, (-,-) spin-down antiparticle.
inline std::pair<int, int> classify(const KinematicState& st) {
    const double c = std::cos(st.phi), s = std::sin(st.phi);
    if (c == 0.0) throw std::domain_error("classify: light-like state, matter sign undefined");
    if (s == 0.0) throw std::domain_error("classify: at rest, helicity undefined");
    return {c > 0 ? 1 : -1, s > 0 ? 1 : -1};
}

/// Classical helicity (s . p)/|p| in [-1, 1].
inline double helicity_classical(const UnitVec3& s, const Vec3& p) {
    const double pn = p.norm();
    if (pn == 0.0) throw std::domain_error("helicity_classical: zero momentum");
    return s.dot(p) / pn;
}

/// Energy in the Breit form E = v.p + tau_dot * m, assembled on-shell with
/// E = sqrt(p^2 + m^2), v = p/E, tau_dot = branch*m/E.
inline double classical_energy(const Vec3& p, double m, int branch) {
    if (m < 0.0) throw std::invalid_argument("classical_energy: m must be >= 0");
    if (branch != 1 && branch != -1) throw std::invalid_argument("branch must be +1 or -1");
    const double p2 = p.norm2();
    if (p2 == 0.0 && m == 0.0)
        throw std::domain_error("classical_energy: p = 0 and m = 0 has no rest frame");
    const double e = std::sqrt(p2 + m * m);
    const Vec3 v = p * (1.0 / e);
    const double tdot = static_cast<double>(branch) * m / e;
    return v.dot(p) + tdot * m;
}

/// Sampled worldline: reference time, proper time, position.
struct Timeline {
    std::vector<double> t;
    std::vector<double> tau;
    std::vector<Vec3> x;
};

/// Integrate tau(t) = int branch/gamma dt and x(t) = int v dt by the
/// trapezoidal rule over the given time grid.
inline Timeline integrate_timeline(const std::function<Vec3(double)>& v_of_t,
                                   const std::vector<double>& t_grid, int branch) {
    if (t_grid.size() < 2) throw std::invalid_argument("integrate_timeline: need >= 2 samples");
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (!(t_grid[i] > t_grid[i - 1]))
            throw std::invalid_argument("integrate_timeline: t grid must be strictly increasing");

    Timeline tl;
    tl.t = t_grid;
    tl.tau.resize(t_grid.size());
    tl.x.resize(t_grid.size());

    Vec3 v_prev = v_of_t(t_grid[0]);
    double rate_prev = proper_time_rate(v_prev, branch);
    tl.tau[0] = 0.0;
    tl.x[0] = Vec3{};
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        const Vec3 v = v_of_t(t_grid[i]);
        const double rate = proper_time_rate(v, branch);
        const double h = t_grid[i] - t_grid[i - 1];
        tl.tau[i] = tl.tau[i - 1] + 0.5 * h * (rate_prev + rate);
        tl.x[i] = tl.x[i - 1] + (v_prev + v) * (0.5 * h);
        v_prev = v;
        rate_prev = rate;
    }
    return tl;
}

}  // namespace tauspinor
