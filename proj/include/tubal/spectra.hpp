#pragma once

#include "tubal/cone.hpp"
#include "tubal/dft.hpp"
#include "tubal/eig.hpp"

namespace tubal {

enum class EigSide { Right, Left };

/// One eigenvalue together with an eigenvector folded back to tubal form.
/// residual is the max-norm of A*X - lambda*X over unfolded entries; for a
/// Left pair the identity checked is transpose(A)*Y = lambda*Y.
struct Eigenpair {
    cdouble lambda;
    TubalVector<cdouble> vector;
    EigSide side = EigSide::Right;
    double residual = 0.0;
    std::size_t multiplicity = 1;  // algebraic multiplicity of the owning cluster
};

struct EigenvalueCluster {
    cdouble value;  // cluster mean
    std::size_t multiplicity;
};

/// The eigenvalue multiset of the block-circulant embedding: n*p values
/// counted with multiplicity, the spectral radius, and the peripheral
/// eigenvalues attaining it.
struct Spectrum {
    std::vector<cdouble> eigenvalues;        // sorted by (Re, Im)
    std::vector<EigenvalueCluster> clusters;
    double rho = 0.0;
    std::vector<cdouble> rho_attaining;      // cluster means with |value| = rho

    double cluster_tolerance() const { return 1e-8 * (1.0 + rho); }
};

namespace detail {

inline bool complex_less(const cdouble& a, const cdouble& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

}  // namespace detail

/// Eigenvalues through the transform domain: each transform slice is solved
/// densely and the p multisets merged. This equals the spectrum of bcirc(A).
template <typename T>
Spectrum t_spectrum(const TubalMatrix<T>& a) {
    Spectrum sp;
    // The p slice eigensolves are independent; merging sorts afterwards, so
    // the result does not depend on evaluation order.
    for (const Matrix<cdouble>& slice : block_dft_slices(a)) {
        const std::vector<cdouble> evs = eigenvalues(slice);
        sp.eigenvalues.insert(sp.eigenvalues.end(), evs.begin(), evs.end());
    }
    std::sort(sp.eigenvalues.begin(), sp.eigenvalues.end(), detail::complex_less);

    for (const cdouble& l : sp.eigenvalues) sp.rho = std::max(sp.rho, std::abs(l));

    const double ctol = sp.cluster_tolerance();
    for (const cdouble& l : sp.eigenvalues) {
        bool merged = false;
        for (EigenvalueCluster& c : sp.clusters) {
            if (std::abs(l - c.value) <= ctol) {
                c.value = (c.value * double(c.multiplicity) + l) / double(c.multiplicity + 1);
                ++c.multiplicity;
                merged = true;
                break;
            }
        }
        if (!merged) sp.clusters.push_back({l, 1});
    }
    for (const EigenvalueCluster& c : sp.clusters)
        if (std::abs(c.value) >= sp.rho - ctol) sp.rho_attaining.push_back(c.value);
    return sp;
}

namespace detail {

/// Rotate so the largest-modulus entry is real positive; the canonical
/// representative of the eigenvector's ray. Ties go to the lowest index,
/// where "tie" allows a relative slack: circulant eigenvectors repeat the
/// same subvector phase-rotated slice by slice, so maxima recur up to
/// roundoff and an exact comparison would pick an unstable winner.
inline std::size_t leading_entry(const std::vector<cdouble>& u) {
    double best = 0.0;
    for (const cdouble& v : u) best = std::max(best, std::abs(v));
    for (std::size_t i = 0; i < u.size(); ++i)
        if (std::abs(u[i]) >= best * (1.0 - 1e-9)) return i;
    return 0;
}

inline void phase_normalize(std::vector<cdouble>& u) {
    const std::size_t arg = leading_entry(u);
    const double mag = std::abs(u[arg]);
    if (mag <= 0.0) return;
    const cdouble phase = u[arg] / mag;
    for (cdouble& v : u) v /= phase;
}

inline const TubalMatrix<cdouble>& to_complex_if_needed(const TubalMatrix<cdouble>& a) { return a; }
inline TubalMatrix<cdouble> to_complex_if_needed(const TubalMatrix<double>& a) {
    return to_complex(a);
}

}  // namespace detail

/// Residual max-norm of A*X - lambda*X on unfolded entries.
template <typename T>
double eigen_residual(const TubalMatrix<T>& a, cdouble lambda, const TubalVector<cdouble>& x) {
    const TubalVector<cdouble> ax = tprod(detail::to_complex_if_needed(a), x);
    double r = 0.0;
    for (std::size_t i = 0; i < x.n(); ++i)
        for (std::size_t k = 0; k < x.tube_length(); ++k)
            r = std::max(r, std::abs(ax.at(i, k) - lambda * x.at(i, k)));
    return r;
}

/// A right t-eigenvector at lambda by inverse iteration on the circulant
/// embedding. lambda must sit within the cluster tolerance of a computed
/// eigenvalue. The vector is phase-normalized (largest unfolded entry real
/// positive, ties to the lowest index).
inline Eigenpair t_eigenvector(const TubalMatrix<double>& a, cdouble lambda) {
    const Spectrum sp = t_spectrum(a);
    const double ctol = sp.cluster_tolerance();
    const EigenvalueCluster* owner = nullptr;
    for (const EigenvalueCluster& c : sp.clusters)
        if (std::abs(c.value - lambda) <= 1e2 * ctol && (!owner || std::abs(c.value - lambda) <
                                                                       std::abs(owner->value - lambda)))
            owner = &c;
    if (!owner) throw DomainError("t_eigenvector: lambda is not an eigenvalue");

    const Matrix<cdouble> bc = to_complex(bcirc(a));
    std::vector<cdouble> u = inverse_iteration(bc, owner->value);
    detail::phase_normalize(u);

    Eigenpair pair;
    pair.lambda = owner->value;
    pair.vector = fold_vector(u, a.n(), a.tube_length());
    pair.side = EigSide::Right;
    pair.residual = eigen_residual(a, pair.lambda, pair.vector);
    pair.multiplicity = owner->multiplicity;
    return pair;
}

/// Left t-eigenvector: the right eigenvector of the transpose. The spectral
/// radii of A and transpose(A) must agree, which is asserted here.
inline Eigenpair left_t_eigenvector(const TubalMatrix<double>& a, cdouble lambda) {
    const TubalMatrix<double> at = transpose(a);
    Eigenpair pair = t_eigenvector(at, lambda);
    pair.side = EigSide::Left;

    const double rho_a = t_spectrum(a).rho;
    const Spectrum spt = t_spectrum(at);
    if (std::abs(spt.rho - rho_a) > 1e-8 * (1.0 + rho_a))
        throw SolverError("left_t_eigenvector: spectral radii of A and transpose(A) disagree",
                          spt.eigenvalues);
    return pair;
}

/// Orthonormal basis (as tubal vectors) of the eigenspace of the circulant
/// embedding at lambda, via the SVD nullspace of bcirc(A) - lambda I.
inline std::vector<TubalVector<cdouble>> eigenspace(const TubalMatrix<double>& a, cdouble lambda,
                                                    double rel_tol = 1e-8) {
    Matrix<cdouble> shifted = to_complex(bcirc(a));
    for (std::size_t i = 0; i < shifted.rows(); ++i) shifted(i, i) -= lambda;
    std::vector<TubalVector<cdouble>> basis;
    for (const std::vector<cdouble>& col : nullspace(shifted, rel_tol))
        basis.push_back(fold_vector(col, a.n(), a.tube_length()));
    return basis;
}

// ---------------------------------------------------------------------------
// Power iteration for the Perron root

enum class PowerStatus { Converged, Oscillating };

struct PowerResult {
    PowerStatus status = PowerStatus::Oscillating;
    double rho_estimate = 0.0;
    TubalVector<double> vector;
    std::size_t iterations = 0;
    double residual = 0.0;  // max-norm of A*X - rho_estimate*X at exit
};

/// Power iteration X <- A*X / ||A*X||_max on unfolded entries, with a
/// Rayleigh-quotient estimate of the dominant eigenvalue. Converged requires
/// both the estimate and the normalized iterate to settle: peripheral
/// eigenvalues of equal modulus can hold the estimate stationary while the
/// iterate cycles, and that case must be reported as Oscillating so callers
/// fall back to the eigensolver.
inline PowerResult perron_power_iteration(const TubalMatrix<double>& a,
                                          const TubalVector<double>& x0, double tol = 1e-12,
                                          std::size_t max_iter = 5000) {
    if (!is_nonnegative(classify(a, 0.0)))
        throw DomainError("perron_power_iteration: matrix must be nonnegative");
    if (max_abs(a) == 0.0) throw DomainError("perron_power_iteration: matrix is zero");
    if (a.n() != x0.n() || a.tube_length() != x0.tube_length())
        throw DimensionError("perron_power_iteration: shape mismatch");
    for (double v : x0.data())
        if (!(v > 0.0)) throw DomainError("perron_power_iteration: start must be entrywise positive");

    PowerResult out;
    TubalVector<double> x = x0;
    double xmax = max_abs(x);
    x *= 1.0 / xmax;

    double prev_est = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t it = 1; it <= max_iter; ++it) {
        const TubalVector<double> y = tprod(a, x);
        const double ymax = max_abs(y);
        out.iterations = it;
        if (ymax == 0.0) {
            // x landed in the kernel; the dominant eigenvalue estimate is 0
            out.status = PowerStatus::Converged;
            out.rho_estimate = 0.0;
            out.vector = x;
            out.residual = 0.0;
            return out;
        }

        double num = 0.0, den = 0.0;
        for (std::size_t t = 0; t < x.data().size(); ++t) {
            num += x.data()[t] * y.data()[t];
            den += x.data()[t] * x.data()[t];
        }
        const double est = num / den;

        TubalVector<double> xn = y;
        xn *= 1.0 / ymax;

        double step = 0.0;
        for (std::size_t t = 0; t < x.data().size(); ++t)
            step = std::max(step, std::abs(xn.data()[t] - x.data()[t]));

        const bool est_settled =
            !std::isnan(prev_est) && std::abs(est - prev_est) <= tol * std::max(1.0, std::abs(est));
        if (est_settled && step <= 1e2 * tol) {
            out.status = PowerStatus::Converged;
            out.rho_estimate = est;
            out.vector = xn;
            out.residual = 0.0;
            const TubalVector<double> axn = tprod(a, xn);
            for (std::size_t t = 0; t < xn.data().size(); ++t)
                out.residual = std::max(out.residual,
                                        std::abs(axn.data()[t] - est * xn.data()[t]));
            return out;
        }
        prev_est = est;
        x = std::move(xn);
    }
    out.status = PowerStatus::Oscillating;
    out.rho_estimate = prev_est;
    out.vector = x;
    return out;
}

}  // namespace tubal
