#pragma once

#include <algorithm>
#include <numeric>

#include "tubal/tube.hpp"

namespace tubal {

/// A tubal vector: n tubal scalars sharing one tube length p (an n x 1 x p
/// tensor). Stored tube-major so each fiber is contiguous.
template <typename T>
class TubalVector {
public:
    TubalVector() = default;
    TubalVector(std::size_t n, std::size_t p) : n_(n), p_(p), data_(n * p, T{}) {}

    std::size_t n() const { return n_; }
    std::size_t tube_length() const { return p_; }

    T& at(std::size_t i, std::size_t k) { return data_[i * p_ + k]; }
    const T& at(std::size_t i, std::size_t k) const { return data_[i * p_ + k]; }

    Tube<T> tube(std::size_t i) const {
        Tube<T> t(p_);
        for (std::size_t k = 0; k < p_; ++k) t[k] = at(i, k);
        return t;
    }
    void set_tube(std::size_t i, const Tube<T>& t) {
        if (t.length() != p_) throw DimensionError("set_tube: tube length mismatch");
        for (std::size_t k = 0; k < p_; ++k) at(i, k) = t[k];
    }

    std::vector<T>& data() { return data_; }
    const std::vector<T>& data() const { return data_; }

    TubalVector& operator+=(const TubalVector& o) {
        require_same_shape(o, "tubal vector addition");
        for (std::size_t t = 0; t < data_.size(); ++t) data_[t] += o.data_[t];
        return *this;
    }
    TubalVector& operator-=(const TubalVector& o) {
        require_same_shape(o, "tubal vector subtraction");
        for (std::size_t t = 0; t < data_.size(); ++t) data_[t] -= o.data_[t];
        return *this;
    }
    TubalVector& operator*=(T s) {
        for (T& v : data_) v *= s;
        return *this;
    }

    friend TubalVector operator+(TubalVector a, const TubalVector& b) { return a += b; }
    friend TubalVector operator-(TubalVector a, const TubalVector& b) { return a -= b; }
    friend TubalVector operator*(T s, TubalVector a) { return a *= s; }
    friend bool operator==(const TubalVector& a, const TubalVector& b) {
        return a.n_ == b.n_ && a.p_ == b.p_ && a.data_ == b.data_;
    }

private:
    void require_same_shape(const TubalVector& o, const char* what) const {
        if (o.n_ != n_ || o.p_ != p_) throw DimensionError(std::string(what) + ": shape mismatch");
    }

    std::size_t n_ = 0, p_ = 0;
    std::vector<T> data_;
};

/// A tubal matrix: an n x n grid of tubal scalars (an n x n x p tensor).
/// Stored tube-major: entry (i,j,k) lives at data[(i*n + j)*p + k], so the
/// fiber transforms of the fast product path are unit-stride. Frontal slice
/// views are materialized on demand.
template <typename T>
class TubalMatrix {
public:
    TubalMatrix() = default;
    TubalMatrix(std::size_t n, std::size_t p) : n_(n), p_(p), data_(n * n * p, T{}) {}

    /// Identity: first frontal slice is I_n, the rest are zero.
    static TubalMatrix identity(std::size_t n, std::size_t p) {
        TubalMatrix out(n, p);
        for (std::size_t i = 0; i < n; ++i) out.at(i, i, 0) = T{1};
        return out;
    }

    static TubalMatrix from_slices(const std::vector<Matrix<T>>& slices) {
        if (slices.empty()) throw DimensionError("from_slices: no slices");
        const std::size_t n = slices[0].rows();
        TubalMatrix out(n, slices.size());
        for (std::size_t k = 0; k < slices.size(); ++k) {
            if (slices[k].rows() != n || slices[k].cols() != n)
                throw DimensionError("from_slices: slices must all be n x n");
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) out.at(i, j, k) = slices[k](i, j);
        }
        return out;
    }

    std::size_t n() const { return n_; }
    std::size_t tube_length() const { return p_; }

    T& at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n_ + j) * p_ + k]; }
    const T& at(std::size_t i, std::size_t j, std::size_t k) const {
        return data_[(i * n_ + j) * p_ + k];
    }

    Tube<T> tube(std::size_t i, std::size_t j) const {
        Tube<T> t(p_);
        for (std::size_t k = 0; k < p_; ++k) t[k] = at(i, j, k);
        return t;
    }
    void set_tube(std::size_t i, std::size_t j, const Tube<T>& t) {
        if (t.length() != p_) throw DimensionError("set_tube: tube length mismatch");
        for (std::size_t k = 0; k < p_; ++k) at(i, j, k) = t[k];
    }

    Matrix<T> slice(std::size_t k) const {
        Matrix<T> s(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) s(i, j) = at(i, j, k);
        return s;
    }
    std::vector<Matrix<T>> slices() const {
        std::vector<Matrix<T>> out;
        out.reserve(p_);
        for (std::size_t k = 0; k < p_; ++k) out.push_back(slice(k));
        return out;
    }

    std::vector<T>& data() { return data_; }
    const std::vector<T>& data() const { return data_; }

    TubalMatrix& operator+=(const TubalMatrix& o) {
        require_same_shape(o, "tubal matrix addition");
        for (std::size_t t = 0; t < data_.size(); ++t) data_[t] += o.data_[t];
        return *this;
    }
    TubalMatrix& operator-=(const TubalMatrix& o) {
        require_same_shape(o, "tubal matrix subtraction");
        for (std::size_t t = 0; t < data_.size(); ++t) data_[t] -= o.data_[t];
        return *this;
    }
    TubalMatrix& operator*=(T s) {
        for (T& v : data_) v *= s;
        return *this;
    }

    friend TubalMatrix operator+(TubalMatrix a, const TubalMatrix& b) { return a += b; }
    friend TubalMatrix operator-(TubalMatrix a, const TubalMatrix& b) { return a -= b; }
    friend TubalMatrix operator*(T s, TubalMatrix a) { return a *= s; }
    friend bool operator==(const TubalMatrix& a, const TubalMatrix& b) {
        return a.n_ == b.n_ && a.p_ == b.p_ && a.data_ == b.data_;
    }

private:
    void require_same_shape(const TubalMatrix& o, const char* what) const {
        if (o.n_ != n_ || o.p_ != p_) throw DimensionError(std::string(what) + ": shape mismatch");
    }

    std::size_t n_ = 0, p_ = 0;
    std::vector<T> data_;
};

template <typename X>
double max_abs(const X& x) {
    double m = 0.0;
    for (const auto& v : x.data()) m = std::max(m, std::abs(v));
    return m;
}

// ---------------------------------------------------------------------------
// Circulant embedding and (un)folding

/// Block-circulant embedding: block (I,J) is frontal slice (I - J) mod p.
template <typename T>
Matrix<T> bcirc(const TubalMatrix<T>& a) {
    const std::size_t n = a.n(), p = a.tube_length();
    Matrix<T> m(n * p, n * p);
    for (std::size_t bi = 0; bi < p; ++bi)
        for (std::size_t bj = 0; bj < p; ++bj) {
            const std::size_t k = (bi + p - bj) % p;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(bi * n + i, bj * n + j) = a.at(i, j, k);
        }
    return m;
}

/// Stack the frontal slices vertically into an np x n matrix.
template <typename T>
Matrix<T> unfold(const TubalMatrix<T>& a) {
    const std::size_t n = a.n(), p = a.tube_length();
    Matrix<T> m(n * p, n);
    for (std::size_t k = 0; k < p; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(k * n + i, j) = a.at(i, j, k);
    return m;
}

template <typename T>
std::vector<T> unfold(const TubalVector<T>& x) {
    const std::size_t n = x.n(), p = x.tube_length();
    std::vector<T> v(n * p);
    for (std::size_t k = 0; k < p; ++k)
        for (std::size_t i = 0; i < n; ++i) v[k * n + i] = x.at(i, k);
    return v;
}

template <typename T>
TubalMatrix<T> fold(const Matrix<T>& m) {
    const std::size_t n = m.cols();
    if (n == 0 || m.rows() % n != 0)
        throw DimensionError("fold: row count is not a multiple of the column count");
    const std::size_t p = m.rows() / n;
    TubalMatrix<T> a(n, p);
    for (std::size_t k = 0; k < p; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a.at(i, j, k) = m(k * n + i, j);
    return a;
}

template <typename T>
TubalVector<T> fold_vector(const std::vector<T>& v, std::size_t n, std::size_t p) {
    if (v.size() != n * p) throw DimensionError("fold_vector: size is not n*p");
    TubalVector<T> x(n, p);
    for (std::size_t k = 0; k < p; ++k)
        for (std::size_t i = 0; i < n; ++i) x.at(i, k) = v[k * n + i];
    return x;
}

// ---------------------------------------------------------------------------
// t-product and transpose

/// t-product, computed entrywise: (A*B)_{i,j} = sum_k a_{i,k} * b_{k,j} with
/// tube products by cyclic convolution. Equals fold(bcirc(A) unfold(B)).
template <typename T>
TubalMatrix<T> tprod(const TubalMatrix<T>& a, const TubalMatrix<T>& b) {
    const std::size_t n = a.n(), p = a.tube_length();
    if (b.n() != n || b.tube_length() != p) throw DimensionError("tprod: shape mismatch");
    TubalMatrix<T> c(n, p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t u = 0; u < p; ++u) {
                const T aiku = a.at(i, k, u);
                if (aiku == T{}) continue;
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t v = 0; v < p; ++v)
                        c.at(i, j, (u + v) % p) += aiku * b.at(k, j, v);
            }
    return c;
}

template <typename T>
TubalVector<T> tprod(const TubalMatrix<T>& a, const TubalVector<T>& x) {
    const std::size_t n = a.n(), p = a.tube_length();
    if (x.n() != n || x.tube_length() != p) throw DimensionError("tprod: shape mismatch");
    TubalVector<T> y(n, p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t u = 0; u < p; ++u) {
                const T aiku = a.at(i, k, u);
                if (aiku == T{}) continue;
                for (std::size_t v = 0; v < p; ++v) y.at(i, (u + v) % p) += aiku * x.at(k, v);
            }
    return y;
}

/// Inner product of two tubal vectors, transpose(x) * y, a single tube.
template <typename T>
Tube<T> tdot(const TubalVector<T>& x, const TubalVector<T>& y) {
    if (x.n() != y.n() || x.tube_length() != y.tube_length())
        throw DimensionError("tdot: shape mismatch");
    Tube<T> acc(x.tube_length());
    for (std::size_t i = 0; i < x.n(); ++i) acc += transpose(x.tube(i)) * y.tube(i);
    return acc;
}

template <typename T>
TubalMatrix<T> tpow(const TubalMatrix<T>& a, std::size_t k) {
    TubalMatrix<T> acc = TubalMatrix<T>::identity(a.n(), a.tube_length());
    for (std::size_t i = 0; i < k; ++i) acc = tprod(acc, a);
    return acc;
}

/// Transpose: each frontal slice transposed, slices 2..p in reversed order.
/// Satisfies bcirc(transpose(A)) = bcirc(A)^T.
template <typename T>
TubalMatrix<T> transpose(const TubalMatrix<T>& a) {
    const std::size_t n = a.n(), p = a.tube_length();
    TubalMatrix<T> t(n, p);
    for (std::size_t k = 0; k < p; ++k) {
        const std::size_t src = k == 0 ? 0 : p - k;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) t.at(i, j, k) = a.at(j, i, src);
    }
    return t;
}

inline TubalVector<cdouble> to_complex(const TubalVector<double>& x) {
    TubalVector<cdouble> out(x.n(), x.tube_length());
    for (std::size_t i = 0; i < x.n(); ++i)
        for (std::size_t k = 0; k < x.tube_length(); ++k) out.at(i, k) = x.at(i, k);
    return out;
}

inline TubalMatrix<cdouble> to_complex(const TubalMatrix<double>& a) {
    TubalMatrix<cdouble> out(a.n(), a.tube_length());
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j)
            for (std::size_t k = 0; k < a.tube_length(); ++k) out.at(i, j, k) = a.at(i, j, k);
    return out;
}

/// Entrywise complex modulus |X|.
inline TubalVector<double> magnitude(const TubalVector<cdouble>& x) {
    TubalVector<double> out(x.n(), x.tube_length());
    for (std::size_t i = 0; i < x.n(); ++i)
        for (std::size_t k = 0; k < x.tube_length(); ++k) out.at(i, k) = std::abs(x.at(i, k));
    return out;
}

inline TubalMatrix<double> magnitude(const TubalMatrix<cdouble>& a) {
    TubalMatrix<double> out(a.n(), a.tube_length());
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j)
            for (std::size_t k = 0; k < a.tube_length(); ++k)
                out.at(i, j, k) = std::abs(a.at(i, j, k));
    return out;
}

// ---------------------------------------------------------------------------
// Permutation tensors

/// A permutation tensor: first frontal slice is a permutation matrix, all
/// other slices zero. sigma maps result index -> source index, so slice 0
/// has a one at (i, sigma(i)).
class PermutationTensor {
public:
    PermutationTensor() = default;
    PermutationTensor(std::vector<std::size_t> sigma, std::size_t p)
        : sigma_(std::move(sigma)), p_(p) {
        std::vector<bool> seen(sigma_.size(), false);
        for (std::size_t s : sigma_) {
            if (s >= sigma_.size() || seen[s])
                throw DomainError("permutation tensor: not a permutation");
            seen[s] = true;
        }
    }

    static PermutationTensor identity(std::size_t n, std::size_t p) {
        std::vector<std::size_t> sigma(n);
        std::iota(sigma.begin(), sigma.end(), 0);
        return PermutationTensor(std::move(sigma), p);
    }

    std::size_t n() const { return sigma_.size(); }
    std::size_t tube_length() const { return p_; }
    std::size_t operator()(std::size_t i) const { return sigma_[i]; }
    const std::vector<std::size_t>& sigma() const { return sigma_; }

    template <typename T = double>
    TubalMatrix<T> to_tubal_matrix() const {
        TubalMatrix<T> m(sigma_.size(), p_);
        for (std::size_t i = 0; i < sigma_.size(); ++i) m.at(i, sigma_[i], 0) = T{1};
        return m;
    }

    PermutationTensor inverse() const {
        std::vector<std::size_t> inv(sigma_.size());
        for (std::size_t i = 0; i < sigma_.size(); ++i) inv[sigma_[i]] = i;
        return PermutationTensor(std::move(inv), p_);
    }

private:
    std::vector<std::size_t> sigma_;
    std::size_t p_ = 1;
};

/// P * A * P^T: conjugates every frontal slice by the same permutation, so
/// tube (i,j) of the result is tube (sigma(i), sigma(j)) of A.
template <typename T>
TubalMatrix<T> permute(const PermutationTensor& perm, const TubalMatrix<T>& a) {
    if (perm.n() != a.n() || perm.tube_length() != a.tube_length())
        throw DimensionError("permute: shape mismatch");
    TubalMatrix<T> out(a.n(), a.tube_length());
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j)
            for (std::size_t k = 0; k < a.tube_length(); ++k)
                out.at(i, j, k) = a.at(perm(i), perm(j), k);
    return out;
}

/// P * X on a tubal vector: relabels tubes.
template <typename T>
TubalVector<T> permute(const PermutationTensor& perm, const TubalVector<T>& x) {
    if (perm.n() != x.n() || perm.tube_length() != x.tube_length())
        throw DimensionError("permute: shape mismatch");
    TubalVector<T> out(x.n(), x.tube_length());
    for (std::size_t i = 0; i < x.n(); ++i)
        for (std::size_t k = 0; k < x.tube_length(); ++k) out.at(i, k) = x.at(perm(i), k);
    return out;
}

}  // namespace tubal
