#pragma once

#include <string>

#include "tubal/tensor.hpp"

namespace tubal {

/// Position in the nonnegativity hierarchy. For a single tube:
///   Zero             every entry vanishes (within tol)
///   Positive         nonnegative with nonzero modulus
///   StronglyPositive every entry strictly positive
///   Mixed            some entry strictly negative
/// NonnegativeOnly arises only at the vector/matrix level: all tubes
/// nonnegative but at least one of them zero, so the value is neither
/// zero nor positive as a whole.
enum class ConeClass { Zero, NonnegativeOnly, Positive, StronglyPositive, Mixed };

inline bool is_nonnegative(ConeClass c) { return c != ConeClass::Mixed; }
inline bool is_positive(ConeClass c) {
    return c == ConeClass::Positive || c == ConeClass::StronglyPositive;
}
inline bool is_strongly_positive(ConeClass c) { return c == ConeClass::StronglyPositive; }

inline std::string to_string(ConeClass c) {
    switch (c) {
        case ConeClass::Zero: return "zero";
        case ConeClass::NonnegativeOnly: return "nonnegative";
        case ConeClass::Positive: return "positive";
        case ConeClass::StronglyPositive: return "strongly positive";
        case ConeClass::Mixed: return "mixed";
    }
    return "?";
}

inline ConeClass classify(const Tube<double>& a, double tol) {
    bool any_neg = false, all_strict = true, all_zero = true;
    for (double v : a) {
        if (v < -tol) any_neg = true;
        if (v <= tol) all_strict = false;
        if (std::abs(v) > tol) all_zero = false;
    }
    if (any_neg) return ConeClass::Mixed;
    if (a.length() > 0 && all_strict) return ConeClass::StronglyPositive;
    if (all_zero) return ConeClass::Zero;
    return ConeClass::Positive;
}

namespace detail {

/// Meet of elementwise classes: strongly positive needs every tube strongly
/// positive, positive needs every tube positive, and so on down the chain.
class ConeMeet {
public:
    void add(ConeClass c) {
        any_ = true;
        if (c == ConeClass::Mixed) mixed_ = true;
        if (c != ConeClass::StronglyPositive) all_strong_ = false;
        if (!is_positive(c)) all_pos_ = false;
        if (c != ConeClass::Zero) all_zero_ = false;
    }
    ConeClass result() const {
        if (mixed_) return ConeClass::Mixed;
        if (any_ && all_strong_) return ConeClass::StronglyPositive;
        if (any_ && all_pos_) return ConeClass::Positive;
        if (all_zero_) return ConeClass::Zero;
        return ConeClass::NonnegativeOnly;
    }

private:
    bool any_ = false, mixed_ = false, all_strong_ = true, all_pos_ = true, all_zero_ = true;
};

}  // namespace detail

inline ConeClass classify(const TubalVector<double>& x, double tol) {
    detail::ConeMeet meet;
    for (std::size_t i = 0; i < x.n(); ++i) meet.add(classify(x.tube(i), tol));
    return meet.result();
}

inline ConeClass classify(const TubalMatrix<double>& a, double tol) {
    detail::ConeMeet meet;
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j) meet.add(classify(a.tube(i, j), tol));
    return meet.result();
}

/// Default classification tolerance: exact for integer-valued data,
/// 1e-12 * max|entry| otherwise. Eigenvector outputs carry rounding noise,
/// so classification of computed quantities should pass a tolerance
/// explicitly.
template <typename X>
double default_tolerance(const X& x) {
    bool integral = true;
    double scale = 0.0;
    for (double v : x.data()) {
        scale = std::max(scale, std::abs(v));
        if (v != std::nearbyint(v)) integral = false;
    }
    return integral ? 0.0 : 1e-12 * scale;
}

inline double default_tolerance(const Tube<double>& a) {
    bool integral = true;
    double scale = 0.0;
    for (double v : a) {
        scale = std::max(scale, std::abs(v));
        if (v != std::nearbyint(v)) integral = false;
    }
    return integral ? 0.0 : 1e-12 * scale;
}

/// Number of entries with |value| > tol. Diagnostic only: a positive tube may
/// be supported on a single entry.
inline std::size_t support_count(const Tube<double>& a, double tol) {
    std::size_t c = 0;
    for (double v : a)
        if (std::abs(v) > tol) ++c;
    return c;
}

/// Checks the closure rules of the scalar cone under the ring product:
/// nonneg*nonneg stays nonneg, pos*pos stays pos, strongly-pos*pos lands
/// strictly inside, and a*b = 0 with a nonneg, b pos forces a = 0. Each rule
/// reports vacuously true when its hypothesis fails.
struct ClosureReport {
    ConeClass a_class, b_class, product_class;
    Tube<double> product;
    bool nonneg_rule = true;
    bool positive_rule = true;
    bool strong_rule = true;
    bool annihilation_rule = true;

    bool ok() const { return nonneg_rule && positive_rule && strong_rule && annihilation_rule; }
};

inline ClosureReport check_product_closure(const Tube<double>& a, const Tube<double>& b,
                                           double tol) {
    ClosureReport r{classify(a, tol), classify(b, tol), ConeClass::Zero, a * b};
    r.product_class = classify(r.product, tol);
    if (is_nonnegative(r.a_class) && is_nonnegative(r.b_class))
        r.nonneg_rule = is_nonnegative(r.product_class);
    if (is_positive(r.a_class) && is_positive(r.b_class))
        r.positive_rule = is_positive(r.product_class);
    if ((is_strongly_positive(r.a_class) && is_positive(r.b_class)) ||
        (is_strongly_positive(r.b_class) && is_positive(r.a_class)))
        r.strong_rule = is_strongly_positive(r.product_class);
    if (is_nonnegative(r.a_class) && is_positive(r.b_class) && r.product_class == ConeClass::Zero)
        r.annihilation_rule = r.a_class == ConeClass::Zero;
    return r;
}

}  // namespace tubal
