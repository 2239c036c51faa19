#pragma once

#include <random>

#include "tubal/tubal.hpp"

// Shared fixtures and generators. The worked examples are frozen here as
// code so unit tests do not depend on the fixture files.

namespace testsup {

using namespace tubal;

// 2x2x2, tubes a_{1,2} = [1,0], a_{2,1} = [0,1]; irreducible.
inline TubalMatrix<double> example_3_9() {
    TubalMatrix<double> a(2, 2);
    a.at(0, 1, 0) = 1.0;
    a.at(1, 0, 1) = 1.0;
    return a;
}

// 2x2x2 with the single tube a_{1,2} = [1,0]; reducible with witness {2}.
inline TubalMatrix<double> example_3_10() {
    TubalMatrix<double> a(2, 2);
    a.at(0, 1, 0) = 1.0;
    return a;
}

// 3x3x3 cycle support: a_{1,2} = e1, a_{2,3} = e2, a_{3,1} = e3; irreducible.
inline TubalMatrix<double> example_3_16() {
    TubalMatrix<double> a(3, 3);
    a.at(0, 1, 0) = 1.0;
    a.at(1, 2, 1) = 1.0;
    a.at(2, 0, 2) = 1.0;
    return a;
}

// 3x3x3 path support: a_{1,2} = e1, a_{2,3} = e2; reducible.
inline TubalMatrix<double> example_3_17() {
    TubalMatrix<double> a(3, 3);
    a.at(0, 1, 0) = 1.0;
    a.at(1, 2, 1) = 1.0;
    return a;
}

// 2x2x2 with zero first slice and antidiagonal second slice; irreducible,
// spectrum {1, 1, -1, -1}, two independent positive eigenvector rays at rho.
inline TubalMatrix<double> example_4_7() {
    TubalMatrix<double> a(2, 2);
    a.at(0, 1, 1) = 1.0;
    a.at(1, 0, 1) = 1.0;
    return a;
}

// Verified value of (A + I)^2 for example_3_16: every tube positive.
inline TubalMatrix<double> example_3_16_square() {
    TubalMatrix<double> c(3, 3);
    const double s1[3][3] = {{1, 2, 0}, {1, 1, 0}, {0, 0, 1}};
    const double s2[3][3] = {{0, 0, 1}, {0, 0, 2}, {0, 0, 0}};
    const double s3[3][3] = {{0, 0, 0}, {0, 0, 0}, {2, 1, 0}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            c.at(i, j, 0) = s1[i][j];
            c.at(i, j, 1) = s2[i][j];
            c.at(i, j, 2) = s3[i][j];
        }
    return c;
}

// Verified value of (A + I)^2 for example_3_17: tubes (2,1), (3,1), (3,2)
// are zero.
inline TubalMatrix<double> example_3_17_square() {
    TubalMatrix<double> c(3, 3);
    const double s1[3][3] = {{1, 2, 0}, {0, 1, 0}, {0, 0, 1}};
    const double s2[3][3] = {{0, 0, 1}, {0, 0, 2}, {0, 0, 0}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            c.at(i, j, 0) = s1[i][j];
            c.at(i, j, 1) = s2[i][j];
        }
    return c;
}

// The four eigenvectors listed for example_4_7, as tubal vectors.
inline TubalVector<double> ex47_vec_a() {  // eigenvalue -1
    TubalVector<double> v(2, 2);
    v.at(0, 1) = 1.0;
    v.at(1, 0) = -1.0;
    return v;
}
inline TubalVector<double> ex47_vec_b() {  // eigenvalue -1
    TubalVector<double> v(2, 2);
    v.at(0, 0) = 1.0;
    v.at(1, 1) = -1.0;
    return v;
}
inline TubalVector<double> ex47_vec_c() {  // eigenvalue 1
    TubalVector<double> v(2, 2);
    v.at(0, 0) = 1.0;
    v.at(1, 1) = 1.0;
    return v;
}
inline TubalVector<double> ex47_vec_d() {  // eigenvalue 1
    TubalVector<double> v(2, 2);
    v.at(0, 1) = 1.0;
    v.at(1, 0) = 1.0;
    return v;
}

// ---------------------------------------------------------------------------
// Random data

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (double(rng() >> 11) * 0x1.0p-53) * (hi - lo);
}

inline TubalMatrix<double> random_matrix(std::mt19937_64& rng, std::size_t n, std::size_t p,
                                         double lo = -1.0, double hi = 1.0) {
    TubalMatrix<double> a(n, p);
    for (double& v : a.data()) v = uniform(rng, lo, hi);
    return a;
}

inline TubalMatrix<double> random_int_matrix(std::mt19937_64& rng, std::size_t n, std::size_t p,
                                             int lo = -4, int hi = 4) {
    TubalMatrix<double> a(n, p);
    for (double& v : a.data()) v = double(int(rng() % std::uint64_t(hi - lo + 1)) + lo);
    return a;
}

inline TubalVector<double> random_vector(std::mt19937_64& rng, std::size_t n, std::size_t p,
                                         double lo = -1.0, double hi = 1.0) {
    TubalVector<double> x(n, p);
    for (double& v : x.data()) v = uniform(rng, lo, hi);
    return x;
}

inline Tube<double> random_tube(std::mt19937_64& rng, std::size_t p, double lo, double hi) {
    Tube<double> t(p);
    for (std::size_t k = 0; k < p; ++k) t[k] = uniform(rng, lo, hi);
    return t;
}

inline TubalMatrix<cdouble> random_complex_matrix(std::mt19937_64& rng, std::size_t n,
                                                  std::size_t p) {
    TubalMatrix<cdouble> a(n, p);
    for (cdouble& v : a.data()) v = cdouble(uniform(rng, -1, 1), uniform(rng, -1, 1));
    return a;
}

inline TubalVector<cdouble> random_complex_vector(std::mt19937_64& rng, std::size_t n,
                                                  std::size_t p) {
    TubalVector<cdouble> x(n, p);
    for (cdouble& v : x.data()) v = cdouble(uniform(rng, -1, 1), uniform(rng, -1, 1));
    return x;
}

/// Random nonnegative tensor with the given support density.
inline TubalMatrix<double> random_nonnegative(std::mt19937_64& rng, std::size_t n, std::size_t p,
                                              double density, bool integer_values = false) {
    TubalMatrix<double> a(n, p);
    for (double& v : a.data())
        if (uniform(rng, 0, 1) < density)
            v = integer_values ? double(1 + rng() % 4) : uniform(rng, 0.05, 1.0);
    return a;
}

/// Greedy nearest-neighbor pairing distance between two eigenvalue multisets.
inline double multiset_distance(std::vector<cdouble> a, std::vector<cdouble> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    std::vector<bool> used(b.size(), false);
    for (const cdouble& l : a) {
        std::size_t arg = b.size();
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < b.size(); ++i)
            if (!used[i] && std::abs(b[i] - l) < best) {
                best = std::abs(b[i] - l);
                arg = i;
            }
        if (arg == b.size()) return std::numeric_limits<double>::infinity();
        used[arg] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace testsup
