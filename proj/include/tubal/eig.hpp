#pragma once

#include <cmath>
#include <limits>

#include "tubal/dense.hpp"

namespace tubal {

/// Thrown when the QR iteration fails to deflate within the iteration cap.
/// Carries whatever eigenvalues had already converged.
struct SolverError : std::runtime_error {
    SolverError(const std::string& what, std::vector<cdouble> partial_)
        : std::runtime_error(what), partial(std::move(partial_)) {}
    std::vector<cdouble> partial;
};

namespace detail {

constexpr double kEps = std::numeric_limits<double>::epsilon();

/// Unitary Householder reduction to upper Hessenberg form (eigenvalues are
/// preserved; we never need the accumulated transform).
inline Matrix<cdouble> hessenberg(Matrix<cdouble> a) {
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k + 2 < n; ++k) {
        // Householder vector for column k, rows k+1..n-1.
        double norm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) norm2 += std::norm(a(i, k));
        if (norm2 <= kEps * kEps) continue;
        const double norm = std::sqrt(norm2);
        const cdouble x0 = a(k + 1, k);
        const cdouble phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : cdouble(1.0);
        const cdouble alpha = -phase * norm;

        std::vector<cdouble> v(n, cdouble(0.0));
        for (std::size_t i = k + 1; i < n; ++i) v[i] = a(i, k);
        v[k + 1] -= alpha;
        double vnorm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) vnorm2 += std::norm(v[i]);
        if (vnorm2 <= kEps * kEps * norm2) continue;
        const double beta = 2.0 / vnorm2;

        // A <- H A, rows k+1..n-1.
        for (std::size_t j = k; j < n; ++j) {
            cdouble dot(0.0);
            for (std::size_t i = k + 1; i < n; ++i) dot += std::conj(v[i]) * a(i, j);
            dot *= beta;
            for (std::size_t i = k + 1; i < n; ++i) a(i, j) -= dot * v[i];
        }
        // A <- A H, columns k+1..n-1.
        for (std::size_t i = 0; i < n; ++i) {
            cdouble dot(0.0);
            for (std::size_t j = k + 1; j < n; ++j) dot += a(i, j) * v[j];
            dot *= beta;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= dot * std::conj(v[j]);
        }
        for (std::size_t i = k + 2; i < n; ++i) a(i, k) = cdouble(0.0);
    }
    return a;
}

struct Givens {
    double c;
    cdouble s;
};

/// Rotation with G [f; g] = [r; 0], c real.
inline Givens make_givens(cdouble f, cdouble g) {
    if (std::abs(g) == 0.0) return {1.0, cdouble(0.0)};
    if (std::abs(f) == 0.0) return {0.0, std::conj(g) / std::abs(g)};
    const double d = std::hypot(std::abs(f), std::abs(g));
    return {std::abs(f) / d, (f / std::abs(f)) * std::conj(g) / (d)};
}

/// Eigenvalues of a 2x2 complex matrix [[a,b],[c,d]].
inline std::pair<cdouble, cdouble> eig2x2(cdouble a, cdouble b, cdouble c, cdouble d) {
    const cdouble tr = a + d;
    const cdouble disc = std::sqrt(tr * tr - 4.0 * (a * d - b * c));
    return {(tr + disc) / 2.0, (tr - disc) / 2.0};
}

}  // namespace detail

/// All eigenvalues of a dense complex matrix: Householder reduction to
/// Hessenberg form, then explicitly shifted QR with Wilkinson shifts and an
/// exceptional shift every tenth iteration. Each eigenvalue gets at most
/// iter_cap_per_eig * n iterations before SolverError.
inline std::vector<cdouble> eigenvalues(const Matrix<cdouble>& m,
                                        std::size_t iter_cap_per_eig = 100) {
    using namespace detail;
    const std::size_t n = m.rows();
    if (m.cols() != n) throw DimensionError("eigenvalues: matrix must be square");
    std::vector<cdouble> eigs;
    if (n == 0) return eigs;

    Matrix<cdouble> h = hessenberg(m);
    const double scale = std::max(h.max_abs(), kEps);

    std::ptrdiff_t hi = std::ptrdiff_t(n) - 1;
    std::size_t iters = 0;
    const std::size_t cap = iter_cap_per_eig * n;

    while (hi >= 0) {
        // Flush negligible subdiagonals, then deflate from the bottom.
        for (std::ptrdiff_t k = 1; k <= hi; ++k)
            if (std::abs(h(k, k - 1)) <=
                kEps * (std::abs(h(k - 1, k - 1)) + std::abs(h(k, k)) + scale))
                h(k, k - 1) = cdouble(0.0);

        if (hi == 0 || std::abs(h(hi, hi - 1)) == 0.0) {
            eigs.push_back(h(hi, hi));
            --hi;
            iters = 0;
            continue;
        }

        std::ptrdiff_t lo = hi;
        while (lo > 0 && std::abs(h(lo, lo - 1)) != 0.0) --lo;

        ++iters;
        if (iters > cap)
            throw SolverError("qr iteration did not converge within the iteration cap", eigs);

        cdouble sigma;
        if (iters % 10 == 0) {
            // Exceptional shift to break symmetric stalls.
            sigma = h(hi, hi) + cdouble(0.75, 0.4375) * std::abs(h(hi, hi - 1));
        } else {
            const auto [l1, l2] = eig2x2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
            sigma = std::abs(l1 - h(hi, hi)) <= std::abs(l2 - h(hi, hi)) ? l1 : l2;
        }

        // One explicit QR step on the active window [lo..hi]:
        // Q R = H - sigma I, then H <- R Q + sigma I.
        const std::size_t mlen = std::size_t(hi - lo + 1);
        Matrix<cdouble> w(mlen, mlen);
        for (std::size_t i = 0; i < mlen; ++i)
            for (std::size_t j = 0; j < mlen; ++j) w(i, j) = h(lo + i, lo + j);
        for (std::size_t i = 0; i < mlen; ++i) w(i, i) -= sigma;

        std::vector<Givens> rot(mlen - 1);
        for (std::size_t k = 0; k + 1 < mlen; ++k) {
            rot[k] = make_givens(w(k, k), w(k + 1, k));
            const auto [c, s] = rot[k];
            for (std::size_t j = k; j < mlen; ++j) {
                const cdouble t0 = w(k, j), t1 = w(k + 1, j);
                w(k, j) = c * t0 + s * t1;
                w(k + 1, j) = -std::conj(s) * t0 + c * t1;
            }
        }
        for (std::size_t k = 0; k + 1 < mlen; ++k) {
            const auto [c, s] = rot[k];
            const std::size_t top = std::min(k + 2, mlen - 1);
            for (std::size_t i = 0; i <= top; ++i) {
                const cdouble t0 = w(i, k), t1 = w(i, k + 1);
                w(i, k) = c * t0 + std::conj(s) * t1;
                w(i, k + 1) = -s * t0 + c * t1;
            }
        }
        for (std::size_t i = 0; i < mlen; ++i) w(i, i) += sigma;
        for (std::size_t i = 0; i < mlen; ++i)
            for (std::size_t j = 0; j < mlen; ++j) h(lo + i, lo + j) = w(i, j);
    }
    return eigs;
}

// ---------------------------------------------------------------------------
// LU solves (for inverse iteration)

struct Lu {
    Matrix<cdouble> f;        // packed L\U factors
    std::vector<std::size_t> piv;
};

/// Partial-pivoted LU. An exactly zero pivot is replaced by a tiny value so
/// that inverse iteration can solve against a numerically singular shift.
inline Lu lu_factor(Matrix<cdouble> a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw DimensionError("lu_factor: matrix must be square");
    Lu lu{std::move(a), std::vector<std::size_t>(n)};
    const double tiny = detail::kEps * std::max(lu.f.max_abs(), 1.0);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(lu.f(i, k)) > std::abs(lu.f(piv, k))) piv = i;
        lu.piv[k] = piv;
        if (piv != k)
            for (std::size_t j = 0; j < n; ++j) std::swap(lu.f(k, j), lu.f(piv, j));
        if (std::abs(lu.f(k, k)) == 0.0) lu.f(k, k) = tiny;
        for (std::size_t i = k + 1; i < n; ++i) {
            lu.f(i, k) /= lu.f(k, k);
            const cdouble lik = lu.f(i, k);
            if (lik == cdouble(0.0)) continue;
            for (std::size_t j = k + 1; j < n; ++j) lu.f(i, j) -= lik * lu.f(k, j);
        }
    }
    return lu;
}

inline std::vector<cdouble> lu_solve(const Lu& lu, std::vector<cdouble> b) {
    const std::size_t n = lu.f.rows();
    if (b.size() != n) throw DimensionError("lu_solve: dimension mismatch");
    // factorization swapped whole rows, so all permutations apply up front
    for (std::size_t k = 0; k < n; ++k) std::swap(b[k], b[lu.piv[k]]);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = k + 1; i < n; ++i) b[i] -= lu.f(i, k) * b[k];
    for (std::size_t k = n; k-- > 0;) {
        for (std::size_t j = k + 1; j < n; ++j) b[k] -= lu.f(k, j) * b[j];
        b[k] /= lu.f(k, k);
    }
    return b;
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline double unit_double(std::uint64_t& s) {
    return double(splitmix64(s) >> 11) * 0x1.0p-53;
}

}  // namespace detail

/// One inverse-iteration eigenvector of m at the (approximate) eigenvalue
/// lambda, normalized to unit 2-norm. The start vector is a fixed
/// pseudo-random draw, so results are deterministic.
inline std::vector<cdouble> inverse_iteration(const Matrix<cdouble>& m, cdouble lambda,
                                              std::size_t max_steps = 12) {
    const std::size_t n = m.rows();
    Matrix<cdouble> shifted = m;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lambda;
    const Lu lu = lu_factor(std::move(shifted));
    const double scale = std::max(m.max_abs(), 1.0);

    std::uint64_t state = 0x74756265ULL;
    std::vector<cdouble> x(n);
    for (cdouble& v : x) v = cdouble(detail::unit_double(state) - 0.5, detail::unit_double(state) - 0.5);

    std::vector<cdouble> best = x;
    double best_res = std::numeric_limits<double>::infinity();
    for (std::size_t step = 0; step < max_steps; ++step) {
        std::vector<cdouble> y = lu_solve(lu, x);
        double norm = 0.0;
        for (const cdouble& v : y) norm += std::norm(v);
        norm = std::sqrt(norm);
        if (norm == 0.0) break;
        for (cdouble& v : y) v /= norm;
        x = std::move(y);

        const std::vector<cdouble> ax = m * x;
        double res = 0.0;
        for (std::size_t i = 0; i < n; ++i) res = std::max(res, std::abs(ax[i] - lambda * x[i]));
        if (res < best_res) {
            best_res = res;
            best = x;
        }
        if (res <= 1e2 * detail::kEps * scale) break;
    }
    return best;
}

// ---------------------------------------------------------------------------
// One-sided Jacobi SVD (small matrices; used for rank and nullspace tests)

struct Svd {
    std::vector<double> sigma;  // descending
    Matrix<cdouble> u;          // m x k, columns of unit norm where sigma > 0
    Matrix<cdouble> v;          // k x k unitary
};

/// One-sided Jacobi: rotates column pairs of a working copy until mutually
/// orthogonal, accumulating the rotations into V. Avoids forming the Gram
/// matrix, so small singular values keep full relative accuracy.
inline Svd svd_jacobi(const Matrix<cdouble>& a) {
    using detail::kEps;
    const std::size_t m = a.rows(), k = a.cols();
    Matrix<cdouble> w = a;
    Matrix<cdouble> v = Matrix<cdouble>::identity(k);

    const double off_floor = kEps * std::max(a.max_abs(), 1.0);
    for (std::size_t sweep = 0; sweep < 60; ++sweep) {
        bool rotated = false;
        for (std::size_t i = 0; i + 1 < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) {
                double alpha = 0.0, beta = 0.0;
                cdouble gamma(0.0);
                for (std::size_t r = 0; r < m; ++r) {
                    alpha += std::norm(w(r, i));
                    beta += std::norm(w(r, j));
                    gamma += std::conj(w(r, i)) * w(r, j);
                }
                const double g = std::abs(gamma);
                if (g <= kEps * std::sqrt(alpha * beta) + off_floor * off_floor) continue;
                rotated = true;

                const cdouble phase = gamma / g;
                const double tau = (beta - alpha) / (2.0 * g);
                const double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                            : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;

                for (std::size_t r = 0; r < m; ++r) {
                    const cdouble wi = w(r, i), wj = w(r, j);
                    w(r, i) = c * wi - s * std::conj(phase) * wj;
                    w(r, j) = s * phase * wi + c * wj;
                }
                for (std::size_t r = 0; r < k; ++r) {
                    const cdouble vi = v(r, i), vj = v(r, j);
                    v(r, i) = c * vi - s * std::conj(phase) * vj;
                    v(r, j) = s * phase * vi + c * vj;
                }
            }
        if (!rotated) break;
    }

    std::vector<double> sig(k);
    for (std::size_t j = 0; j < k; ++j) {
        double norm = 0.0;
        for (std::size_t r = 0; r < m; ++r) norm += std::norm(w(r, j));
        sig[j] = std::sqrt(norm);
    }
    std::vector<std::size_t> order(k);
    for (std::size_t j = 0; j < k; ++j) order[j] = j;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return sig[x] > sig[y]; });

    Svd out{std::vector<double>(k), Matrix<cdouble>(m, k), Matrix<cdouble>(k, k)};
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t src = order[j];
        out.sigma[j] = sig[src];
        for (std::size_t r = 0; r < m; ++r)
            out.u(r, j) = sig[src] > 0.0 ? w(r, src) / sig[src] : cdouble(0.0);
        for (std::size_t r = 0; r < k; ++r) out.v(r, j) = v(r, src);
    }
    return out;
}

inline std::size_t numeric_rank(const Matrix<cdouble>& a, double rel_gap) {
    const Svd s = svd_jacobi(a);
    if (s.sigma.empty() || s.sigma[0] == 0.0) return 0;
    std::size_t r = 0;
    for (double sv : s.sigma)
        if (sv > rel_gap * s.sigma[0]) ++r;
    return r;
}

/// Columns of V whose singular values fall at or below rel_tol * sigma_max;
/// an orthonormal basis of the numerical nullspace.
inline std::vector<std::vector<cdouble>> nullspace(const Matrix<cdouble>& a, double rel_tol) {
    const Svd s = svd_jacobi(a);
    const double cutoff =
        s.sigma.empty() ? 0.0 : std::max(rel_tol * s.sigma[0], detail::kEps * s.sigma[0]);
    std::vector<std::vector<cdouble>> basis;
    for (std::size_t j = 0; j < s.sigma.size(); ++j) {
        if (s.sigma[j] > cutoff) continue;
        std::vector<cdouble> col(a.cols());
        for (std::size_t r = 0; r < a.cols(); ++r) col[r] = s.v(r, j);
        basis.push_back(std::move(col));
    }
    return basis;
}

}  // namespace tubal
