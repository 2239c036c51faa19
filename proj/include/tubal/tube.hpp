#pragma once

#include <cmath>
#include <initializer_list>

#include "tubal/dense.hpp"

namespace tubal {

/// A tubal scalar: a length-p fiber that multiplies by circular convolution.
/// Together with entrywise addition these form a commutative ring with unity
/// e = [1, 0, ..., 0].
template <typename T>
class Tube {
public:
    Tube() = default;
    explicit Tube(std::size_t p, T value = T{}) : e_(p, value) {}
    Tube(std::initializer_list<T> init) : e_(init) {}
    explicit Tube(std::vector<T> entries) : e_(std::move(entries)) {}

    /// The ring unity e.
    static Tube unit(std::size_t p) {
        Tube t(p);
        t.e_[0] = T{1};
        return t;
    }

    std::size_t length() const { return e_.size(); }

    T& operator[](std::size_t k) { return e_[k]; }
    const T& operator[](std::size_t k) const { return e_[k]; }

    const std::vector<T>& entries() const { return e_; }

    auto begin() const { return e_.begin(); }
    auto end() const { return e_.end(); }

    Tube& operator+=(const Tube& o) {
        if (o.length() != length()) throw DimensionError("tube addition: length mismatch");
        for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
        return *this;
    }
    Tube& operator-=(const Tube& o) {
        if (o.length() != length()) throw DimensionError("tube subtraction: length mismatch");
        for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
        return *this;
    }
    Tube& operator*=(T s) {
        for (T& v : e_) v *= s;
        return *this;
    }

    friend Tube operator+(Tube a, const Tube& b) { return a += b; }
    friend Tube operator-(Tube a, const Tube& b) { return a -= b; }
    friend Tube operator*(T s, Tube a) { return a *= s; }
    friend bool operator==(const Tube& a, const Tube& b) { return a.e_ == b.e_; }

private:
    std::vector<T> e_;
};

/// Circulant embedding: column j is the cyclic down-shift of the entries by
/// j positions, so circ(a)(i,j) = a[(i - j) mod p] and column 0 equals a.
template <typename T>
Matrix<T> circ(const Tube<T>& a) {
    const std::size_t p = a.length();
    Matrix<T> m(p, p);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) m(i, j) = a[(i + p - j) % p];
    return m;
}

/// Ring product a * b = circ(a) b, i.e. cyclic convolution of the fibers.
template <typename T>
Tube<T> operator*(const Tube<T>& a, const Tube<T>& b) {
    const std::size_t p = a.length();
    if (b.length() != p) throw DimensionError("tube product: length mismatch");
    Tube<T> c(p);
    for (std::size_t j = 0; j < p; ++j) {
        const T bj = b[j];
        if (bj == T{}) continue;
        for (std::size_t i = 0; i < p; ++i) c[(i + j) % p] += a[i] * bj;
    }
    return c;
}

/// Tube transpose: keep entry 0, reverse entries 1..p-1. Matches the
/// circulant identity circ(transpose(a)) = circ(a)^T.
template <typename T>
Tube<T> transpose(const Tube<T>& a) {
    const std::size_t p = a.length();
    Tube<T> t(p);
    t[0] = a[0];
    for (std::size_t k = 1; k < p; ++k) t[k] = a[p - k];
    return t;
}

/// Euclidean modulus sqrt(sum |a_k|^2); zero exactly when the tube is zero.
template <typename T>
double modulus(const Tube<T>& a) {
    double s = 0.0;
    for (const T& v : a) s += std::norm(cdouble(v));
    return std::sqrt(s);
}

inline Tube<cdouble> to_complex(const Tube<double>& a) {
    Tube<cdouble> t(a.length());
    for (std::size_t k = 0; k < a.length(); ++k) t[k] = a[k];
    return t;
}

/// Entrywise complex modulus, |a|.
inline Tube<double> magnitude(const Tube<cdouble>& a) {
    Tube<double> t(a.length());
    for (std::size_t k = 0; k < a.length(); ++k) t[k] = std::abs(a[k]);
    return t;
}

inline Tube<double> magnitude(const Tube<double>& a) {
    Tube<double> t(a.length());
    for (std::size_t k = 0; k < a.length(); ++k) t[k] = std::abs(a[k]);
    return t;
}

}  // namespace tubal
