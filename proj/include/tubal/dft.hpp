#pragma once

#include <numbers>

#include "tubal/tensor.hpp"

namespace tubal {

namespace detail {

inline bool is_pow2(std::size_t p) { return p != 0 && (p & (p - 1)) == 0; }

/// Iterative radix-2 Cooley-Tukey, in place. Forward uses exp(-2*pi*i/p).
inline void fft_pow2(std::vector<cdouble>& x, bool inverse) {
    const std::size_t p = x.size();
    for (std::size_t i = 1, j = 0; i < p; ++i) {
        std::size_t bit = p >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    for (std::size_t len = 2; len <= p; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * std::numbers::pi / double(len);
        const cdouble wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < p; i += len) {
            cdouble w(1.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cdouble u = x[i + k];
                const cdouble v = x[i + k + len / 2] * w;
                x[i + k] = u + v;
                x[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

/// Direct O(p^2) transform for non-power-of-two lengths; p stays small here.
inline void dft_naive(std::vector<cdouble>& x, bool inverse) {
    const std::size_t p = x.size();
    std::vector<cdouble> out(p);
    const double base = (inverse ? 2.0 : -2.0) * std::numbers::pi / double(p);
    for (std::size_t k = 0; k < p; ++k) {
        cdouble acc(0.0);
        for (std::size_t j = 0; j < p; ++j) {
            const double ang = base * double((k * j) % p);
            acc += x[j] * cdouble(std::cos(ang), std::sin(ang));
        }
        out[k] = acc;
    }
    x = std::move(out);
}

inline void dft(std::vector<cdouble>& x, bool inverse) {
    if (x.size() <= 1) return;
    if (is_pow2(x.size()))
        fft_pow2(x, inverse);
    else
        dft_naive(x, inverse);
    if (inverse)
        for (cdouble& v : x) v /= double(x.size());
}

}  // namespace detail

/// Transform slices: slice k is sum_j w^{k j} A^{(j)} with w = exp(-2*pi*i/p),
/// i.e. the fiber DFT of every tube. The block-circulant embedding is unitarily
/// similar to the block diagonal of these slices, so their eigenvalues jointly
/// give the spectrum.
template <typename T>
std::vector<Matrix<cdouble>> block_dft_slices(const TubalMatrix<T>& a) {
    const std::size_t n = a.n(), p = a.tube_length();
    std::vector<Matrix<cdouble>> out(p, Matrix<cdouble>(n, n));
    std::vector<cdouble> fiber(p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < p; ++k) fiber[k] = a.at(i, j, k);
            detail::dft(fiber, false);
            for (std::size_t k = 0; k < p; ++k) out[k](i, j) = fiber[k];
        }
    return out;
}

/// t-product through the transform domain: DFT along tubes, p independent
/// n x n slice products, inverse DFT. Matches tprod up to roundoff.
template <typename T>
TubalMatrix<T> tprod_fft(const TubalMatrix<T>& a, const TubalMatrix<T>& b) {
    const std::size_t n = a.n(), p = a.tube_length();
    if (b.n() != n || b.tube_length() != p) throw DimensionError("tprod_fft: shape mismatch");

    const std::vector<Matrix<cdouble>> ah = block_dft_slices(a);
    const std::vector<Matrix<cdouble>> bh = block_dft_slices(b);

    // Slice products are independent; the inverse transform then runs per
    // fiber, so results do not depend on any processing order.
    std::vector<Matrix<cdouble>> ch(p);
    for (std::size_t k = 0; k < p; ++k) ch[k] = ah[k] * bh[k];

    TubalMatrix<T> c(n, p);
    std::vector<cdouble> fiber(p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < p; ++k) fiber[k] = ch[k](i, j);
            detail::dft(fiber, true);
            for (std::size_t k = 0; k < p; ++k) {
                if constexpr (std::is_same_v<T, cdouble>)
                    c.at(i, j, k) = fiber[k];
                else
                    c.at(i, j, k) = fiber[k].real();
            }
        }
    return c;
}

}  // namespace tubal
