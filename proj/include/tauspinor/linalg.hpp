#pragma once

// Fixed-size complex vectors and square matrices.
// Everything at this scale (2x2, 4x4) is dense; exactness matters more
// than speed, so entries are plain std::complex<double> with no tricks.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>

namespace tauspinor {

using Complex = std::complex<double>;

template <std::size_t N>
struct Vector {
    std::array<Complex, N> c{};

    Complex& operator[](std::size_t i) { return c[i]; }
    const Complex& operator[](std::size_t i) const { return c[i]; }

    Vector operator+(const Vector& o) const {
        Vector r;
        for (std::size_t i = 0; i < N; ++i) r.c[i] = c[i] + o.c[i];
        return r;
    }
    Vector operator-(const Vector& o) const {
        Vector r;
        for (std::size_t i = 0; i < N; ++i) r.c[i] = c[i] - o.c[i];
        return r;
    }
    Vector operator*(Complex s) const {
        Vector r;
        for (std::size_t i = 0; i < N; ++i) r.c[i] = c[i] * s;
        return r;
    }

    double norm2() const {
        double s = 0;
        for (const auto& z : c) s += std::norm(z);
        return s;
    }
    double norm() const { return std::sqrt(norm2()); }
};

using Spinor2 = Vector<2>;
using Spinor4 = Vector<4>;

/// Hermitian inner product, conjugation on the first argument.
template <std::size_t N>
Complex dot(const Vector<N>& a, const Vector<N>& b) {
    Complex s = 0;
    for (std::size_t i = 0; i < N; ++i) s += std::conj(a.c[i]) * b.c[i];
    return s;
}

template <std::size_t N>
Vector<N> normalized(const Vector<N>& v) {
    const double n = v.norm();
    if (n == 0.0) throw std::invalid_argument("cannot normalize a zero vector");
    return v * Complex{1.0 / n, 0.0};
}

/// Multiply by a global phase so the first component with |c| > 1e-12
/// is real and nonnegative. Deterministic representative of the ray.
template <std::size_t N>
Vector<N> phase_fixed(const Vector<N>& v) {
    for (std::size_t i = 0; i < N; ++i) {
        const double a = std::abs(v.c[i]);
        if (a > 1e-12) return v * (std::conj(v.c[i]) / a);
    }
    return v;
}

template <std::size_t N>
struct Matrix {
    std::array<Complex, N * N> m{};

    Complex& operator()(std::size_t r, std::size_t c) { return m[r * N + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return m[r * N + c]; }

    static Matrix identity() {
        Matrix r;
        for (std::size_t i = 0; i < N; ++i) r(i, i) = 1.0;
        return r;
    }
    static Matrix zero() { return Matrix{}; }

    Matrix operator+(const Matrix& o) const {
        Matrix r;
        for (std::size_t i = 0; i < N * N; ++i) r.m[i] = m[i] + o.m[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        Matrix r;
        for (std::size_t i = 0; i < N * N; ++i) r.m[i] = m[i] - o.m[i];
        return r;
    }
    Matrix operator*(Complex s) const {
        Matrix r;
        for (std::size_t i = 0; i < N * N; ++i) r.m[i] = m[i] * s;
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        Matrix r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t k = 0; k < N; ++k) {
                const Complex a = (*this)(i, k);
                if (a == Complex{}) continue;
                for (std::size_t j = 0; j < N; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }
    Vector<N> operator*(const Vector<N>& v) const {
        Vector<N> r;
        for (std::size_t i = 0; i < N; ++i) {
            Complex s = 0;
            for (std::size_t j = 0; j < N; ++j) s += (*this)(i, j) * v.c[j];
            r.c[i] = s;
        }
        return r;
    }

    Matrix adjoint() const {
        Matrix r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj((*this)(j, i));
        return r;
    }
};

using Matrix2 = Matrix<2>;
using Matrix4 = Matrix<4>;

template <std::size_t N>
double max_abs(const Matrix<N>& a) {
    double r = 0;
    for (const auto& z : a.m) r = std::max(r, std::abs(z));
    return r;
}

template <std::size_t N>
double max_abs_diff(const Matrix<N>& a, const Matrix<N>& b) {
    return max_abs(a - b);
}

template <std::size_t N>
double max_abs_diff(const Vector<N>& a, const Vector<N>& b) {
    double r = 0;
    for (std::size_t i = 0; i < N; ++i) r = std::max(r, std::abs(a.c[i] - b.c[i]));
    return r;
}

template <std::size_t N>
bool is_hermitian(const Matrix<N>& a, double tol = 1e-12) {
    return max_abs_diff(a, a.adjoint()) <= tol;
}

template <std::size_t N>
bool is_unitary(const Matrix<N>& a, double tol = 1e-12) {
    return max_abs_diff(a.adjoint() * a, Matrix<N>::identity()) <= tol;
}

/// Checked constructor for matrices required to be Hermitian.
template <std::size_t N>
Matrix<N> hermitian_checked(const Matrix<N>& a, double tol = 1e-12) {
    if (!is_hermitian(a, tol)) throw std::invalid_argument("matrix is not Hermitian");
    return a;
}

/// Checked constructor for matrices required to be unitary.
template <std::size_t N>
Matrix<N> unitary_checked(const Matrix<N>& a, double tol = 1e-12) {
    if (!is_unitary(a, tol)) throw std::invalid_argument("matrix is not unitary");
    return a;
}

/// Kronecker product, first factor outermost (rho-space first).
inline Matrix4 kron(const Matrix2& a, const Matrix2& b) {
    Matrix4 r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l)
                    r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return r;
}

/// Tensor product of two 2-spinors, same ordering as kron.
inline Spinor4 kron(const Spinor2& a, const Spinor2& b) {
    Spinor4 r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < 2; ++k) r.c[2 * i + k] = a.c[i] * b.c[k];
    return r;
}

template <std::size_t N>
Matrix<N> commutator(const Matrix<N>& a, const Matrix<N>& b) {
    return a * b - b * a;
}

template <std::size_t N>
Matrix<N> anticommutator(const Matrix<N>& a, const Matrix<N>& b) {
    return a * b + b * a;
}

/// <psi| O |psi>. Requires a normalized state.
template <std::size_t N>
Complex expectation(const Vector<N>& psi, const Matrix<N>& op) {
    if (std::abs(psi.norm2() - 1.0) > 1e-10)
        throw std::invalid_argument("expectation requires a normalized state");
    return dot(psi, op * psi);
}

}  // namespace tauspinor
