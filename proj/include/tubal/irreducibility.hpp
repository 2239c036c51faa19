#pragma once

#include "tubal/digraph.hpp"

namespace tubal {

enum class Verdict { Irreducible, Reducible };

inline std::string to_string(Verdict v) {
    return v == Verdict::Irreducible ? "irreducible" : "reducible";
}

/// Outcome of a reducibility test. For a Reducible verdict, witness is a
/// nonempty proper index set I with tube (i,j) = 0 for all i in I, j not in
/// I; ordering the complement first block-triangularizes the matrix with
/// block sizes (n1, n2) = (n - |I|, |I|).
struct ReducibilityCertificate {
    Verdict verdict = Verdict::Irreducible;
    std::vector<std::size_t> witness;  // sorted, 0-based
    std::size_t n1 = 0, n2 = 0;
};

namespace detail {

inline std::vector<std::vector<bool>> support_table(const TubalMatrix<double>& a, double tol) {
    std::vector<std::vector<bool>> nz(a.n(), std::vector<bool>(a.n(), false));
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j)
            nz[i][j] = classify(a.tube(i, j), tol) != ConeClass::Zero;
    return nz;
}

inline bool subset_is_witness(const std::vector<std::vector<bool>>& nz,
                              const std::vector<bool>& in_set) {
    const std::size_t n = nz.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!in_set[i]) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (!in_set[j] && nz[i][j]) return false;
    }
    return true;
}

inline ReducibilityCertificate make_reducible(std::vector<std::size_t> witness, std::size_t n) {
    ReducibilityCertificate cert;
    cert.verdict = Verdict::Reducible;
    cert.n2 = witness.size();
    cert.n1 = n - cert.n2;
    cert.witness = std::move(witness);
    return cert;
}

}  // namespace detail

/// Reducibility by exhaustive search over all nonempty proper index subsets,
/// visited in lexicographic order of their sorted element sequences; the
/// first witness found is returned. Exponential by nature — this is the
/// ground-truth oracle for the other two tests.
inline ReducibilityCertificate is_reducible_subset(const TubalMatrix<double>& a, double tol) {
    const std::size_t n = a.n();
    if (n > 20)
        throw CapacityError("subset reducibility test supports n <= 20; use the scc method");
    if (n < 2) return {};

    const auto nz = detail::support_table(a, tol);
    std::vector<bool> in_set(n, false);
    std::vector<std::size_t> chosen;

    // Depth-first extension of the current prefix enumerates subsets in
    // lexicographic order: {0}, {0,1}, {0,1,2}, ..., {0,2}, ..., {1}, ...
    auto search = [&](auto&& self, std::size_t first) -> ReducibilityCertificate {
        for (std::size_t v = first; v < n; ++v) {
            chosen.push_back(v);
            in_set[v] = true;
            if (chosen.size() < n && detail::subset_is_witness(nz, in_set))
                return detail::make_reducible(chosen, n);
            ReducibilityCertificate found = self(self, v + 1);
            if (found.verdict == Verdict::Reducible) return found;
            in_set[v] = false;
            chosen.pop_back();
        }
        return {};
    };
    return search(search, 0);
}

/// Reducibility via strong connectivity of the support digraph: the matrix
/// is irreducible iff the digraph is strongly connected. For a reducible
/// matrix the witness is a terminal component of the condensation (no edges
/// leaving it), which is out-closed exactly as the definition requires;
/// among terminal components the one with the smallest minimum vertex is
/// picked for determinism.
inline ReducibilityCertificate is_reducible_scc(const TubalMatrix<double>& a, double tol) {
    const std::size_t n = a.n();
    if (n < 2) return {};

    const SupportDigraph g = support_digraph(a, tol);
    const auto sccs = tarjan_scc(g);
    if (sccs.size() == 1) return {};

    std::vector<std::size_t> comp_of(n);
    for (std::size_t c = 0; c < sccs.size(); ++c)
        for (std::size_t v : sccs[c]) comp_of[v] = c;

    std::vector<bool> has_exit(sccs.size(), false);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w : g.adj[v])
            if (comp_of[v] != comp_of[w]) has_exit[comp_of[v]] = true;

    std::size_t best = sccs.size();
    for (std::size_t c = 0; c < sccs.size(); ++c)
        if (!has_exit[c] && (best == sccs.size() || sccs[c][0] < sccs[best][0])) best = c;

    return detail::make_reducible(sccs[best], n);
}

/// Power criterion for nonnegative matrices: irreducible iff every tube of
/// (A + I)^(n-1) is positive. The computed power ships with the verdict so
/// callers can inspect which tubes stayed zero.
struct PowerCriterion {
    Verdict verdict = Verdict::Irreducible;
    TubalMatrix<double> power;
};

inline PowerCriterion is_irreducible_power(const TubalMatrix<double>& a, double tol) {
    if (!is_nonnegative(classify(a, tol)))
        throw DomainError("power criterion requires a nonnegative tubal matrix");
    const std::size_t n = a.n();
    PowerCriterion out;
    out.power = tpow(a + TubalMatrix<double>::identity(n, a.tube_length()), n == 0 ? 0 : n - 1);
    out.verdict = is_positive(classify(out.power, tol)) ? Verdict::Irreducible : Verdict::Reducible;
    return out;
}

/// Block triangularization from a Reducible certificate: the permutation
/// lists the complement of the witness first, so P*A*P^T has a zero
/// bottom-left n2 x n1 block of tubes (and every frontal slice is block
/// upper triangular under the same permutation). The zero block is verified
/// by reconstruction before returning.
struct BlockTriangularization {
    PermutationTensor permutation;
    TubalMatrix<double> transformed;  // P*A*P^T
    std::size_t n1 = 0, n2 = 0;
};

inline BlockTriangularization block_triangularize(const TubalMatrix<double>& a,
                                                  const ReducibilityCertificate& cert,
                                                  double tol) {
    if (cert.verdict != Verdict::Reducible)
        throw CertificateError("block_triangularize: certificate is not a reducibility witness");
    if (cert.witness.empty() || cert.witness.size() >= a.n())
        throw CertificateError("block_triangularize: witness set is not nonempty and proper");

    std::vector<bool> in_set(a.n(), false);
    for (std::size_t v : cert.witness) {
        if (v >= a.n()) throw CertificateError("block_triangularize: witness index out of range");
        in_set[v] = true;
    }

    std::vector<std::size_t> sigma;
    sigma.reserve(a.n());
    for (std::size_t v = 0; v < a.n(); ++v)
        if (!in_set[v]) sigma.push_back(v);
    for (std::size_t v : cert.witness) sigma.push_back(v);

    BlockTriangularization out;
    out.n1 = a.n() - cert.witness.size();
    out.n2 = cert.witness.size();
    out.permutation = PermutationTensor(std::move(sigma), a.tube_length());
    out.transformed = permute(out.permutation, a);

    for (std::size_t i = out.n1; i < a.n(); ++i)
        for (std::size_t j = 0; j < out.n1; ++j)
            if (classify(out.transformed.tube(i, j), tol) != ConeClass::Zero)
                throw CertificateError(
                    "block_triangularize: certificate does not produce a zero block");
    return out;
}

/// Elementwise reducibility for cubical tensors (n = p): reducible iff some
/// nonempty proper I has entry (i,j,k) = 0 for all i in I and all j, k
/// outside I. Stricter than tube-level reducibility: irreducible here
/// implies irreducible in the tubal sense, not conversely.
inline Verdict is_irreducible_cpz(const TubalMatrix<double>& a, double tol) {
    const std::size_t n = a.n();
    if (n != a.tube_length())
        throw DomainError("elementwise reducibility is defined for cubical tensors (n == p)");
    if (n < 2) return Verdict::Irreducible;
    if (n > 20) throw CapacityError("elementwise reducibility test supports n <= 20");

    for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << n); ++mask) {
        bool witness = true;
        for (std::size_t i = 0; i < n && witness; ++i) {
            if (!(mask >> i & 1)) continue;
            for (std::size_t j = 0; j < n && witness; ++j) {
                if (mask >> j & 1) continue;
                for (std::size_t k = 0; k < n && witness; ++k) {
                    if (mask >> k & 1) continue;
                    if (std::abs(a.at(i, j, k)) > tol) witness = false;
                }
            }
        }
        if (witness) return Verdict::Reducible;
    }
    return Verdict::Irreducible;
}

}  // namespace tubal
