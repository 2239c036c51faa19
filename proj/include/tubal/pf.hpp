#pragma once

#include <bit>

#include "tubal/irreducibility.hpp"
#include "tubal/spectra.hpp"

namespace tubal {

enum class CheckStatus { Pass, Fail, NotApplicable, HypothesisNotMet };

inline std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::NotApplicable: return "not applicable";
        case CheckStatus::HypothesisNotMet: return "hypothesis not met";
    }
    return "?";
}

struct ItemVerdict {
    std::string id;
    CheckStatus status = CheckStatus::NotApplicable;
    std::string evidence;
};

/// Tolerance ladder: classification one decade tighter than residuals, so
/// solver noise never flips a verdict.
struct PfOptions {
    double class_tol_factor = 1e-9;
    double residual_tol_factor = 1e-8;
    double rank_gap = 1e-8;
    std::size_t random_combinations = 100;
    std::uint64_t seed = 0x70657272u;
};

struct PFReport {
    ConeClass input_class = ConeClass::Zero;
    Verdict irreducibility = Verdict::Reducible;
    bool has_strongly_positive_tube = false;
    double rho = 0.0;
    std::size_t rho_eigenspace_dim = 0;
    std::size_t positive_rho_rank = 0;  // rank of the positive eigenvectors found at rho
    std::vector<ItemVerdict> items;
    std::vector<double> delta_values;
};

/// sup{ s >= 0 : Y - s X is entrywise nonnegative } over unfolded entries.
/// X must be entrywise nonnegative. Infinity when X = 0 and Y is nonnegative;
/// 0 as soon as Y is negative somewhere X cannot compensate.
inline double delta(const TubalVector<double>& x, const TubalVector<double>& y, double tol = 0.0) {
    if (x.n() != y.n() || x.tube_length() != y.tube_length())
        throw DimensionError("delta: shape mismatch");
    for (double v : x.data())
        if (v < -tol) throw DomainError("delta: X must be entrywise nonnegative");

    double ratio = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < x.data().size(); ++t) {
        const double xe = x.data()[t], ye = y.data()[t];
        if (xe <= tol) {
            if (ye < -tol) return 0.0;
        } else {
            ratio = std::min(ratio, ye / xe);
        }
    }
    return std::max(ratio, 0.0);  // +inf falls through when X = 0 and Y >= 0
}

namespace detail {

struct PfToleranceSet {
    double scale, class_tol, residual_tol, rank_gap;
};

inline PfToleranceSet pf_tolerances(const TubalMatrix<double>& a, const PfOptions& opt) {
    const double scale = std::max(1.0, max_abs(a));
    return {scale, opt.class_tol_factor * scale, opt.residual_tol_factor * scale, opt.rank_gap};
}

inline bool has_strong_tube(const TubalMatrix<double>& a, double tol) {
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j)
            if (is_strongly_positive(classify(a.tube(i, j), tol))) return true;
    return false;
}

inline double unfolded_min(const TubalVector<double>& x) {
    double m = std::numeric_limits<double>::infinity();
    for (double v : x.data()) m = std::min(m, v);
    return m;
}

inline void sign_normalize(TubalVector<double>& v) {
    double best = 0.0;
    double sign = 1.0;
    for (double e : v.data())
        if (std::abs(e) > best) {
            best = std::abs(e);
            sign = e >= 0.0 ? 1.0 : -1.0;
        }
    if (best > 0.0) v *= sign / best;
}

/// Orthonormal real basis of the real points of a complex eigenspace at a
/// real eigenvalue: real and imaginary parts of the complex basis span it.
inline std::vector<TubalVector<double>> real_eigenspace_basis(
    const std::vector<TubalVector<cdouble>>& basis, double rank_gap) {
    if (basis.empty()) return {};
    const std::size_t n = basis[0].n(), p = basis[0].tube_length(), np = n * p;
    Matrix<cdouble> cols(np, 2 * basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b) {
        const std::vector<cdouble> u = unfold(basis[b]);
        for (std::size_t r = 0; r < np; ++r) {
            cols(r, 2 * b) = u[r].real();
            cols(r, 2 * b + 1) = u[r].imag();
        }
    }
    const Svd svd = svd_jacobi(cols);
    std::vector<TubalVector<double>> out;
    for (std::size_t j = 0; j < svd.sigma.size(); ++j) {
        if (svd.sigma[0] == 0.0 || svd.sigma[j] <= rank_gap * svd.sigma[0]) continue;
        std::vector<double> col(np);
        for (std::size_t r = 0; r < np; ++r) col[r] = svd.u(r, j).real();
        TubalVector<double> folded(n, p);
        for (std::size_t k = 0; k < p; ++k)
            for (std::size_t i = 0; i < n; ++i) folded.at(i, k) = col[k * n + i];
        out.push_back(std::move(folded));
    }
    return out;
}

/// Witness family for one eigenvalue cluster: the eigenspace basis, its
/// normalized representatives, and seeded random combinations inside the
/// eigenspace. Checks over "every eigenvector" run over this finite family.
struct ClusterWitnesses {
    cdouble lambda;
    std::size_t multiplicity = 1;
    bool real_lambda = false;
    std::size_t geometric_dim = 0;
    std::vector<TubalVector<cdouble>> complex_vectors;
    std::vector<TubalVector<double>> real_vectors;  // populated when real_lambda
};

inline ClusterWitnesses build_cluster_witnesses(const TubalMatrix<double>& a,
                                                const EigenvalueCluster& cluster,
                                                const Spectrum& sp, const PfToleranceSet& tols,
                                                const PfOptions& opt) {
    ClusterWitnesses w;
    w.lambda = cluster.value;
    w.multiplicity = cluster.multiplicity;
    w.real_lambda = std::abs(cluster.value.imag()) <= 10.0 * sp.cluster_tolerance();

    const std::vector<TubalVector<cdouble>> basis = eigenspace(a, cluster.value, tols.rank_gap);
    w.geometric_dim = basis.size();

    std::uint64_t state = opt.seed ^ std::bit_cast<std::uint64_t>(cluster.value.real());
    for (const TubalVector<cdouble>& b : basis) {
        w.complex_vectors.push_back(b);
        std::vector<cdouble> u = unfold(b);
        phase_normalize(u);
        w.complex_vectors.push_back(fold_vector(u, a.n(), a.tube_length()));
    }
    // random complex combinations inside the eigenspace
    if (basis.size() > 1) {
        for (std::size_t c = 0; c < opt.random_combinations / 2; ++c) {
            TubalVector<cdouble> mix(a.n(), a.tube_length());
            for (const TubalVector<cdouble>& b : basis) {
                const cdouble coeff(2.0 * unit_double(state) - 1.0, 2.0 * unit_double(state) - 1.0);
                TubalVector<cdouble> scaled = b;
                scaled *= coeff;
                mix += scaled;
            }
            const double m = max_abs(mix);
            if (m > 0.0) {
                mix *= cdouble(1.0 / m);
                w.complex_vectors.push_back(std::move(mix));
            }
        }
    }

    if (w.real_lambda) {
        const std::vector<TubalVector<double>> rbasis = real_eigenspace_basis(basis, tols.rank_gap);
        for (const TubalVector<double>& b : rbasis) {
            w.real_vectors.push_back(b);
            TubalVector<double> s = b;
            sign_normalize(s);
            w.real_vectors.push_back(std::move(s));
        }
        for (std::size_t c = 0; c < opt.random_combinations && !rbasis.empty(); ++c) {
            const bool nonneg_draw = c % 2 == 0;
            TubalVector<double> mix(a.n(), a.tube_length());
            for (const TubalVector<double>& b : rbasis) {
                const double u = unit_double(state);
                const double coeff = nonneg_draw ? u : 2.0 * u - 1.0;
                TubalVector<double> scaled = b;
                scaled *= coeff;
                mix += scaled;
            }
            const double m = max_abs(mix);
            if (m > 0.0) {
                mix *= 1.0 / m;
                w.real_vectors.push_back(std::move(mix));
            }
        }
    }
    return w;
}

/// Search for an entrywise-nonnegative eigenvector at rho. Tries plain power
/// iteration on A + scale*I (the shift strictly separates rho from the rest
/// of the peripheral spectrum), then alternating projections between the
/// nonnegative orthant and the rho-eigenspace, then the witness family.
inline bool nonnegative_rho_vector(const TubalMatrix<double>& a, double rho,
                                   const PfToleranceSet& tols, TubalVector<double>& out) {
    const std::size_t n = a.n(), p = a.tube_length();
    const double shift = tols.scale;
    const TubalMatrix<double> shifted = a + shift * TubalMatrix<double>::identity(n, p);

    TubalVector<double> x(n, p);
    for (double& v : x.data()) v = 1.0;
    for (std::size_t it = 0; it < 2000; ++it) {
        TubalVector<double> y = tprod(shifted, x);
        y *= 1.0 / max_abs(y);
        double step = 0.0;
        for (std::size_t t = 0; t < y.data().size(); ++t)
            step = std::max(step, std::abs(y.data()[t] - x.data()[t]));
        x = std::move(y);
        if (step <= 1e-3 * tols.residual_tol || it + 1 == 2000) {
            const TubalVector<double> ax = tprod(a, x);
            double res = 0.0;
            for (std::size_t t = 0; t < x.data().size(); ++t)
                res = std::max(res, std::abs(ax.data()[t] - rho * x.data()[t]));
            if (res <= tols.residual_tol && unfolded_min(x) >= -tols.class_tol) {
                out = x;
                return true;
            }
            if (step <= 1e-3 * tols.residual_tol) break;
        }
    }

    // Alternating projections inside the eigenspace.
    const std::vector<TubalVector<cdouble>> cbasis = eigenspace(a, rho, tols.rank_gap);
    const std::vector<TubalVector<double>> rbasis = real_eigenspace_basis(cbasis, tols.rank_gap);
    if (!rbasis.empty()) {
        std::vector<double> v(n * p, 1.0);
        auto project_subspace = [&](std::vector<double>& w) {
            std::vector<double> acc(n * p, 0.0);
            for (const TubalVector<double>& b : rbasis) {
                const std::vector<double> bu = unfold(b);
                double dot = 0.0;
                for (std::size_t t = 0; t < w.size(); ++t) dot += bu[t] * w[t];
                for (std::size_t t = 0; t < w.size(); ++t) acc[t] += dot * bu[t];
            }
            w = std::move(acc);
        };
        project_subspace(v);
        for (std::size_t it = 0; it < 500; ++it) {
            for (double& e : v) e = std::max(e, 0.0);
            project_subspace(v);
        }
        double m = 0.0;
        for (double e : v) m = std::max(m, std::abs(e));
        if (m > 1e-6) {
            for (double& e : v) e /= m;
            TubalVector<double> cand = fold_vector(v, n, p);
            const TubalVector<double> ax = tprod(a, cand);
            double res = 0.0;
            for (std::size_t t = 0; t < cand.data().size(); ++t)
                res = std::max(res, std::abs(ax.data()[t] - rho * cand.data()[t]));
            if (res <= tols.residual_tol && unfolded_min(cand) >= -tols.class_tol) {
                out = cand;
                return true;
            }
        }
    }
    return false;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Lemma checks

/// For complex A and X: the magnitude of the product never exceeds the
/// product of the magnitudes, entrywise on unfolded data.
inline ItemVerdict check_magnitude_lemma(const TubalMatrix<cdouble>& a,
                                         const TubalVector<cdouble>& x, double tol = 1e-12) {
    const TubalVector<double> lhs = tprod(magnitude(a), magnitude(x));
    const TubalVector<double> rhs = magnitude(tprod(a, x));
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < lhs.data().size(); ++t)
        worst = std::min(worst, lhs.data()[t] - rhs.data()[t]);
    ItemVerdict v{"lemma.product_magnitude_bound", CheckStatus::Pass, ""};
    if (worst < -tol) v.status = CheckStatus::Fail;
    v.evidence = "min margin |A|*|X| - |A*X| = " + std::to_string(worst);
    return v;
}

/// If A admits a positive left eigenvector at rho and A*X - rho*X is
/// nonnegative for a nonzero X, then X must already be an eigenvector at
/// rho. HypothesisNotMet when the difference is not nonnegative;
/// NotApplicable when no positive left eigenvector could be exhibited.
inline ItemVerdict check_subinvariance_lemma(const TubalMatrix<double>& a,
                                             const TubalVector<double>& x,
                                             const PfOptions& opt = {}) {
    const auto tols = detail::pf_tolerances(a, opt);
    ItemVerdict v{"lemma.subinvariant_vector_is_eigenvector", CheckStatus::NotApplicable, ""};
    if (max_abs(x) == 0.0) {
        v.evidence = "X is zero";
        return v;
    }

    const Spectrum sp = t_spectrum(a);
    TubalVector<double> left;
    if (!detail::nonnegative_rho_vector(transpose(a), sp.rho, tols, left) ||
        !is_positive(classify(left, tols.class_tol))) {
        v.evidence = "no positive left eigenvector at rho was found";
        return v;
    }

    TubalVector<double> diff = tprod(a, x);
    TubalVector<double> scaled = x;
    scaled *= sp.rho;
    diff -= scaled;
    if (!is_nonnegative(classify(diff, tols.class_tol))) {
        v.status = CheckStatus::HypothesisNotMet;
        v.evidence = "A*X - rho*X is not nonnegative";
        return v;
    }
    v.status = max_abs(diff) <= tols.residual_tol ? CheckStatus::Pass : CheckStatus::Fail;
    v.evidence = "max |A*X - rho*X| = " + std::to_string(max_abs(diff)) +
                 ", rho = " + std::to_string(sp.rho);
    return v;
}

// ---------------------------------------------------------------------------
// Theorem checkers

/// Weak form, for any nonnegative nonzero A: rho is an eigenvalue and a
/// nonnegative eigenvector lives at it.
inline ItemVerdict check_weak_pf(const TubalMatrix<double>& a, const PfOptions& opt = {}) {
    const auto tols = detail::pf_tolerances(a, opt);
    ItemVerdict v{"weak.rho_attained_with_nonnegative_vector", CheckStatus::NotApplicable, ""};
    if (!is_nonnegative(classify(a, tols.class_tol)) || max_abs(a) == 0.0) {
        v.evidence = "input is not a nonzero nonnegative tubal matrix";
        return v;
    }

    const Spectrum sp = t_spectrum(a);
    bool rho_attained = false;
    for (const EigenvalueCluster& c : sp.clusters)
        if (std::abs(c.value - cdouble(sp.rho)) <= sp.cluster_tolerance() + tols.residual_tol)
            rho_attained = true;

    TubalVector<double> vec;
    const bool found = detail::nonnegative_rho_vector(a, sp.rho, tols, vec);
    const ConeClass cls = found ? classify(vec, tols.class_tol) : ConeClass::Mixed;

    if (rho_attained && found && is_nonnegative(cls) && cls != ConeClass::Zero) {
        v.status = CheckStatus::Pass;
        v.evidence = "rho = " + std::to_string(sp.rho) + ", vector class: " + to_string(cls);
    } else {
        v.status = CheckStatus::Fail;
        v.evidence = rho_attained ? "no nonnegative eigenvector found at rho"
                                  : "rho is not attained by a real eigenvalue";
    }
    return v;
}

/// The seven conclusions for a nonnegative irreducible input. All items are
/// NotApplicable when the hypothesis (nonnegative + irreducible) fails.
/// "Every eigenvector" style items are semi-decided over the witness family.
inline std::vector<ItemVerdict> check_irreducible_pf(const TubalMatrix<double>& a,
                                                     const PfOptions& opt = {},
                                                     PFReport* report = nullptr) {
    const auto tols = detail::pf_tolerances(a, opt);
    std::vector<ItemVerdict> items{
        {"irr.rho_is_eigenvalue", CheckStatus::NotApplicable, ""},
        {"irr.rho_positive", CheckStatus::NotApplicable, ""},
        {"irr.nonnegative_vectors_are_positive", CheckStatus::NotApplicable, ""},
        {"irr.positive_vector_at_rho", CheckStatus::NotApplicable, ""},
        {"irr.peripheral_vectors_have_no_zero_tube", CheckStatus::NotApplicable, ""},
        {"irr.real_rho_vectors_sign_coherent", CheckStatus::NotApplicable, ""},
        {"irr.strongly_positive_vector_implies_rho", CheckStatus::NotApplicable, ""},
    };

    // Hypothesis: nonnegative, irreducible, nonzero. The last clause only
    // matters for n = 1, where the zero matrix counts as irreducible under
    // the no-proper-subset convention yet rho = 0.
    const ConeClass input_class = classify(a, tols.class_tol);
    if (!is_nonnegative(input_class) || max_abs(a) == 0.0 ||
        is_reducible_scc(a, tols.class_tol).verdict != Verdict::Irreducible)
        return items;

    const Spectrum sp = t_spectrum(a);
    const double ctol = sp.cluster_tolerance();

    std::vector<detail::ClusterWitnesses> witnesses;
    witnesses.reserve(sp.clusters.size());
    for (const EigenvalueCluster& c : sp.clusters)
        witnesses.push_back(detail::build_cluster_witnesses(a, c, sp, tols, opt));

    // rho is an eigenvalue (attained by a real positive value), and positive
    bool rho_attained = false;
    for (const EigenvalueCluster& c : sp.clusters)
        if (std::abs(c.value - cdouble(sp.rho)) <= ctol + tols.residual_tol) rho_attained = true;
    items[0].status = rho_attained ? CheckStatus::Pass : CheckStatus::Fail;
    items[0].evidence = "rho = " + std::to_string(sp.rho);
    items[1].status = sp.rho > tols.class_tol ? CheckStatus::Pass : CheckStatus::Fail;
    items[1].evidence = items[0].evidence;

    // every nonnegative witness (any eigenvalue) classifies positive
    {
        bool ok = true;
        std::size_t nonneg_seen = 0;
        std::string bad;
        for (const detail::ClusterWitnesses& w : witnesses) {
            for (const TubalVector<double>& rv : w.real_vectors) {
                const ConeClass c = classify(rv, tols.class_tol);
                if (!is_nonnegative(c) || c == ConeClass::Zero) continue;
                ++nonneg_seen;
                if (!is_positive(c)) {
                    ok = false;
                    bad = "nonnegative eigenvector with a zero tube at lambda = " +
                          std::to_string(w.lambda.real());
                }
            }
        }
        items[2].status = ok ? CheckStatus::Pass : CheckStatus::Fail;
        items[2].evidence =
            ok ? std::to_string(nonneg_seen) + " nonnegative witnesses, all positive" : bad;
    }

    // a positive eigenvector at rho exists
    TubalVector<double> perron;
    const bool have_perron = detail::nonnegative_rho_vector(a, sp.rho, tols, perron);
    const ConeClass perron_class =
        have_perron ? classify(perron, tols.class_tol) : ConeClass::Mixed;
    items[3].status =
        have_perron && is_positive(perron_class) ? CheckStatus::Pass : CheckStatus::Fail;
    items[3].evidence = have_perron
                            ? "vector class: " + to_string(perron_class)
                            : "no nonnegative eigenvector found at rho";

    // peripheral eigenvectors have no zero tubes
    {
        bool ok = true;
        std::size_t checked = 0;
        for (const detail::ClusterWitnesses& w : witnesses) {
            if (std::abs(std::abs(w.lambda) - sp.rho) > ctol + tols.residual_tol) continue;
            for (const TubalVector<cdouble>& cv : w.complex_vectors) {
                ++checked;
                for (std::size_t i = 0; i < cv.n(); ++i)
                    if (modulus(cv.tube(i)) <= tols.class_tol) ok = false;
            }
            for (const TubalVector<double>& rv : w.real_vectors) {
                ++checked;
                for (std::size_t i = 0; i < rv.n(); ++i)
                    if (modulus(rv.tube(i)) <= tols.class_tol) ok = false;
            }
        }
        items[4].status = ok ? CheckStatus::Pass : CheckStatus::Fail;
        items[4].evidence = std::to_string(checked) + " peripheral witnesses checked";
    }

    // real eigenvectors at rho never mix positive tubes with negative entries
    {
        bool ok = true;
        std::size_t checked = 0;
        for (const detail::ClusterWitnesses& w : witnesses) {
            if (std::abs(w.lambda - cdouble(sp.rho)) > ctol + tols.residual_tol) continue;
            for (const TubalVector<double>& rv : w.real_vectors) {
                ++checked;
                bool has_positive_tube = false, has_negative_entry = false;
                for (std::size_t i = 0; i < rv.n(); ++i) {
                    const ConeClass c = classify(rv.tube(i), tols.class_tol);
                    if (is_positive(c)) has_positive_tube = true;
                    if (c == ConeClass::Mixed) has_negative_entry = true;
                }
                if (has_positive_tube && has_negative_entry) ok = false;
            }
        }
        items[5].status = ok ? CheckStatus::Pass : CheckStatus::Fail;
        items[5].evidence = std::to_string(checked) + " real witnesses at rho checked";
    }

    // strongly positive eigenvectors only occur at rho
    {
        bool ok = true;
        std::size_t strong_seen = 0;
        for (const detail::ClusterWitnesses& w : witnesses) {
            for (const TubalVector<double>& rv : w.real_vectors) {
                if (!is_strongly_positive(classify(rv, tols.class_tol))) continue;
                ++strong_seen;
                if (std::abs(w.lambda - cdouble(sp.rho)) > ctol + tols.residual_tol) ok = false;
                else if (report && have_perron) {
                    TubalVector<double> xnn = perron;
                    for (double& e : xnn.data()) e = std::max(e, 0.0);
                    report->delta_values.push_back(delta(xnn, rv, tols.class_tol));
                }
            }
        }
        items[6].status = ok ? CheckStatus::Pass : CheckStatus::Fail;
        items[6].evidence = std::to_string(strong_seen) + " strongly positive witnesses seen";
    }

    if (report) {
        report->rho = sp.rho;
        for (const detail::ClusterWitnesses& w : witnesses) {
            if (std::abs(w.lambda - cdouble(sp.rho)) > ctol + tols.residual_tol) continue;
            report->rho_eigenspace_dim = w.geometric_dim;
            // rank of the positive eigenvectors found at rho
            std::vector<const TubalVector<double>*> positives;
            for (const TubalVector<double>& rv : w.real_vectors)
                if (is_positive(classify(rv, tols.class_tol))) positives.push_back(&rv);
            if (have_perron && is_positive(perron_class)) positives.push_back(&perron);
            if (!positives.empty()) {
                Matrix<cdouble> stack(a.n() * a.tube_length(), positives.size());
                for (std::size_t c = 0; c < positives.size(); ++c) {
                    const std::vector<double> u = unfold(*positives[c]);
                    for (std::size_t r = 0; r < u.size(); ++r) stack(r, c) = u[r];
                }
                report->positive_rho_rank = numeric_rank(stack, tols.rank_gap);
            }
        }
    }
    return items;
}

/// The enhanced conclusions, valid when some tube of the irreducible input
/// is strongly positive: nonnegative eigenvectors are strongly positive, the
/// strongly positive direction at rho is unique, and eigenvalues carrying
/// nonnegative eigenvectors equal rho.
inline std::vector<ItemVerdict> check_enhanced_pf(const TubalMatrix<double>& a,
                                                  const PfOptions& opt = {}) {
    const auto tols = detail::pf_tolerances(a, opt);
    std::vector<ItemVerdict> items{
        {"enh.rho_positive_eigenvalue", CheckStatus::NotApplicable, ""},
        {"enh.nonnegative_vectors_strongly_positive", CheckStatus::NotApplicable, ""},
        {"enh.strongly_positive_vector_unique_ray", CheckStatus::NotApplicable, ""},
        {"enh.nonnegative_vector_implies_rho", CheckStatus::NotApplicable, ""},
    };

    if (!is_nonnegative(classify(a, tols.class_tol)) || max_abs(a) == 0.0 ||
        is_reducible_scc(a, tols.class_tol).verdict != Verdict::Irreducible ||
        !detail::has_strong_tube(a, tols.class_tol))
        return items;

    const Spectrum sp = t_spectrum(a);
    const double ctol = sp.cluster_tolerance();

    std::vector<detail::ClusterWitnesses> witnesses;
    for (const EigenvalueCluster& c : sp.clusters)
        witnesses.push_back(detail::build_cluster_witnesses(a, c, sp, tols, opt));

    bool rho_attained = false;
    for (const EigenvalueCluster& c : sp.clusters)
        if (std::abs(c.value - cdouble(sp.rho)) <= ctol + tols.residual_tol) rho_attained = true;
    items[0].status =
        rho_attained && sp.rho > tols.class_tol ? CheckStatus::Pass : CheckStatus::Fail;
    items[0].evidence = "rho = " + std::to_string(sp.rho);

    {
        bool ok = true;
        std::size_t nonneg_seen = 0;
        for (const detail::ClusterWitnesses& w : witnesses)
            for (const TubalVector<double>& rv : w.real_vectors) {
                const ConeClass c = classify(rv, tols.class_tol);
                if (!is_nonnegative(c) || c == ConeClass::Zero) continue;
                ++nonneg_seen;
                if (!is_strongly_positive(c)) ok = false;
            }
        items[1].status = ok ? CheckStatus::Pass : CheckStatus::Fail;
        items[1].evidence = std::to_string(nonneg_seen) + " nonnegative witnesses";
    }

    {
        std::vector<const TubalVector<double>*> strong;
        for (const detail::ClusterWitnesses& w : witnesses) {
            if (std::abs(w.lambda - cdouble(sp.rho)) > ctol + tols.residual_tol) continue;
            for (const TubalVector<double>& rv : w.real_vectors)
                if (is_strongly_positive(classify(rv, tols.class_tol))) strong.push_back(&rv);
        }
        TubalVector<double> perron;
        if (detail::nonnegative_rho_vector(a, sp.rho, tols, perron) &&
            is_strongly_positive(classify(perron, tols.class_tol)))
            strong.push_back(&perron);

        if (strong.empty()) {
            items[2].status = CheckStatus::Fail;
            items[2].evidence = "no strongly positive eigenvector found at rho";
        } else {
            bool rank_one = true;
            for (std::size_t i = 0; i + 1 < strong.size() && rank_one; ++i)
                for (std::size_t j = i + 1; j < strong.size() && rank_one; ++j) {
                    Matrix<cdouble> pair(a.n() * a.tube_length(), 2);
                    const std::vector<double> ui = unfold(*strong[i]);
                    const std::vector<double> uj = unfold(*strong[j]);
                    for (std::size_t r = 0; r < ui.size(); ++r) {
                        pair(r, 0) = ui[r];
                        pair(r, 1) = uj[r];
                    }
                    if (numeric_rank(pair, tols.rank_gap) != 1) rank_one = false;
                }
            items[2].status = rank_one ? CheckStatus::Pass : CheckStatus::Fail;
            items[2].evidence =
                std::to_string(strong.size()) + " strongly positive witnesses, pairwise rank 1: " +
                (rank_one ? "yes" : "no");
        }
    }

    {
        bool ok = true;
        for (const detail::ClusterWitnesses& w : witnesses)
            for (const TubalVector<double>& rv : w.real_vectors) {
                const ConeClass c = classify(rv, tols.class_tol);
                if (!is_nonnegative(c) || c == ConeClass::Zero) continue;
                if (std::abs(w.lambda - cdouble(sp.rho)) > ctol + tols.residual_tol) ok = false;
            }
        items[3].status = ok ? CheckStatus::Pass : CheckStatus::Fail;
        items[3].evidence = "nonnegative witnesses confined to rho: " + std::string(ok ? "yes" : "no");
    }
    return items;
}

/// Full verification report for one tubal matrix.
inline PFReport pf_report(const TubalMatrix<double>& a, const PfOptions& opt = {}) {
    const auto tols = detail::pf_tolerances(a, opt);
    PFReport report;
    report.input_class = classify(a, tols.class_tol);
    report.irreducibility = is_reducible_scc(a, tols.class_tol).verdict;
    report.has_strongly_positive_tube = detail::has_strong_tube(a, tols.class_tol);
    report.rho = t_spectrum(a).rho;

    report.items.push_back(check_weak_pf(a, opt));
    const std::vector<ItemVerdict> irr = check_irreducible_pf(a, opt, &report);
    report.items.insert(report.items.end(), irr.begin(), irr.end());
    const std::vector<ItemVerdict> enh = check_enhanced_pf(a, opt);
    report.items.insert(report.items.end(), enh.begin(), enh.end());

    // lemma spot checks on derived data
    if (is_nonnegative(report.input_class) && max_abs(a) > 0.0) {
        TubalVector<double> vec;
        if (detail::nonnegative_rho_vector(a, report.rho, tols, vec))
            report.items.push_back(check_subinvariance_lemma(a, vec, opt));
    }
    {
        std::uint64_t state = opt.seed ^ 0xabcdefULL;
        TubalVector<cdouble> x(a.n(), a.tube_length());
        for (cdouble& v : x.data())
            v = cdouble(2.0 * detail::unit_double(state) - 1.0,
                        2.0 * detail::unit_double(state) - 1.0);
        report.items.push_back(check_magnitude_lemma(to_complex(a), x, tols.residual_tol));
    }
    return report;
}

}  // namespace tubal
