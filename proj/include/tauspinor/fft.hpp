#pragma once

// Iterative radix-2 FFT. Grid sizes in this project are powers of two by
// contract, so nothing more general is needed. Forward convention e^{-ikx};
// the inverse carries the 1/n factor.

#include <complex>
#include <stdexcept>
#include <vector>

namespace tauspinor {

namespace detail {

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// Twiddle table for size n (forward sign), cached per size.
inline const std::vector<std::complex<double>>& twiddles(std::size_t n) {
    static thread_local std::vector<std::vector<std::complex<double>>> cache;
    std::size_t log2n = 0;
    while ((std::size_t{1} << log2n) < n) ++log2n;
    if (cache.size() <= log2n) cache.resize(log2n + 1);
    auto& tw = cache[log2n];
    if (tw.empty()) {
        tw.resize(n / 2);
        const double step = -2.0 * 3.141592653589793238462643383279502884 / static_cast<double>(n);
        for (std::size_t k = 0; k < n / 2; ++k)
            tw[k] = std::polar(1.0, step * static_cast<double>(k));
    }
    return tw;
}

}  // namespace detail

/// In-place FFT of a power-of-two-length buffer. `stride` allows transforming
/// interleaved data without copying.
inline void fft(std::complex<double>* a, std::size_t n, std::size_t stride, bool inverse) {
    if (!detail::is_pow2(n)) throw std::invalid_argument("fft: length must be a power of two");
    if (n == 1) return;

    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i * stride], a[j * stride]);
    }

    const auto& tw = detail::twiddles(n);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len >> 1;
        const std::size_t tstep = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < half; ++k) {
                std::complex<double> w = tw[k * tstep];
                if (inverse) w = std::conj(w);
                auto& lo = a[(i + k) * stride];
                auto& hi = a[(i + k + half) * stride];
                const std::complex<double> t = hi * w;
                hi = lo - t;
                lo += t;
            }
        }
    }
    if (inverse) {
        const double inv = 1.0 / static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) a[i * stride] *= inv;
    }
}

inline void fft(std::vector<std::complex<double>>& a, bool inverse) {
    fft(a.data(), a.size(), 1, inverse);
}

}  // namespace tauspinor
