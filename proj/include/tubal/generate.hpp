#pragma once

#include <random>

#include "tubal/irreducibility.hpp"

namespace tubal {

struct GenerationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Ensure { None, Irreducible, IrreducibleWithStrongTube };

/// Recipe for a random nonnegative instance. Identical seeds produce
/// identical tensors on every platform: the engine is std::mt19937_64 (its
/// output sequence is pinned by the standard) and doubles are drawn from the
/// top 53 bits directly, bypassing distribution objects.
struct InstanceSpec {
    std::size_t n = 3;
    std::size_t p = 2;
    double density = 1.0;  // probability that a slice entry is nonzero, in (0,1]
    double lo = 0.0;       // value range [lo, hi], lo >= 0
    double hi = 1.0;
    std::uint64_t seed = 0;
    Ensure ensure = Ensure::None;
};

namespace detail {

inline double draw_unit(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

inline double draw_value(std::mt19937_64& rng, double lo, double hi) {
    return lo + draw_unit(rng) * (hi - lo);
}

}  // namespace detail

inline TubalMatrix<double> generate(const InstanceSpec& spec) {
    if (spec.n == 0 || spec.p == 0) throw DomainError("generate: n and p must be at least 1");
    if (spec.lo < 0.0 || spec.hi < spec.lo)
        throw DomainError("generate: value range must satisfy 0 <= lo <= hi");
    if (spec.density <= 0.0 || spec.density > 1.0) {
        if (spec.density == 0.0 && spec.ensure != Ensure::None)
            throw GenerationError("generate: density 0 cannot satisfy the ensure constraint");
        throw DomainError("generate: density must lie in (0, 1]");
    }
    if (spec.ensure != Ensure::None && spec.hi <= 0.0)
        throw GenerationError("generate: a zero value range cannot satisfy the ensure constraint");

    std::mt19937_64 rng(spec.seed);
    const double strong_lo = std::max(spec.lo, 0.01 * spec.hi);

    auto draw = [&]() {
        TubalMatrix<double> a(spec.n, spec.p);
        for (double& v : a.data())
            if (detail::draw_unit(rng) < spec.density)
                v = detail::draw_value(rng, spec.lo, spec.hi);
        return a;
    };
    auto plant_strong_tube = [&](TubalMatrix<double>& a) {
        const std::size_t i = rng() % spec.n, j = rng() % spec.n;
        for (std::size_t k = 0; k < spec.p; ++k)
            a.at(i, j, k) = detail::draw_value(rng, strong_lo, spec.hi);
    };
    auto satisfied = [&](const TubalMatrix<double>& a) {
        if (spec.ensure == Ensure::None) return true;
        // nonzero matters only for n = 1, where the zero tensor counts as
        // irreducible under the no-proper-subset convention
        return max_abs(a) > 0.0 && is_reducible_scc(a, 0.0).verdict == Verdict::Irreducible;
    };

    TubalMatrix<double> a = draw();
    if (spec.ensure == Ensure::IrreducibleWithStrongTube) plant_strong_tube(a);
    for (std::size_t attempt = 0; attempt < 1000 && !satisfied(a); ++attempt) {
        a = draw();
        if (spec.ensure == Ensure::IrreducibleWithStrongTube) plant_strong_tube(a);
    }

    if (!satisfied(a)) {
        // Rejection failed; plant a full support cycle 1 -> 2 -> ... -> n -> 1.
        for (std::size_t i = 0; i < spec.n; ++i) {
            const std::size_t j = (i + 1) % spec.n;
            const std::size_t k = rng() % spec.p;
            if (a.at(i, j, k) <= 0.0) a.at(i, j, k) = detail::draw_value(rng, strong_lo, spec.hi);
        }
        if (spec.ensure == Ensure::IrreducibleWithStrongTube) plant_strong_tube(a);
        if (!satisfied(a))
            throw GenerationError("generate: could not satisfy the ensure constraint");
    }
    return a;
}

}  // namespace tubal
