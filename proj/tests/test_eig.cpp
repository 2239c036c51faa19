#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

#ifdef TUBAL_HAVE_EIGEN
#include <Eigen/Dense>
#include <Eigen/SVD>
#endif

using namespace tubal;
using namespace testsup;

namespace {

Matrix<cdouble> random_dense(std::mt19937_64& rng, std::size_t n) {
    Matrix<cdouble> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = cdouble(uniform(rng, -1, 1), uniform(rng, -1, 1));
    return m;
}

#ifdef TUBAL_HAVE_EIGEN
Eigen::MatrixXcd to_eigen(const Matrix<cdouble>& m) {
    Eigen::MatrixXcd out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}
#endif

}  // namespace

TEST_CASE("eigenvalues of triangular matrices are the diagonal") {
    Matrix<cdouble> t(3, 3);
    t(0, 0) = cdouble(2, 1);
    t(1, 1) = cdouble(-1, 0);
    t(2, 2) = cdouble(0, 3);
    t(0, 1) = cdouble(5, -2);
    t(0, 2) = cdouble(1, 1);
    t(1, 2) = cdouble(-3, 0);
    const auto evs = eigenvalues(t);
    REQUIRE(multiset_distance(evs, {cdouble(2, 1), cdouble(-1, 0), cdouble(0, 3)}) < 1e-10);
}

TEST_CASE("eigenvalues of the 4x4 reversal permutation") {
    Matrix<cdouble> j(4, 4);
    for (std::size_t i = 0; i < 4; ++i) j(i, 3 - i) = 1.0;
    const auto evs = eigenvalues(j);
    REQUIRE(multiset_distance(evs, {cdouble(1), cdouble(1), cdouble(-1), cdouble(-1)}) < 1e-10);
}

TEST_CASE("defective matrices still deliver their multiple eigenvalues") {
    Matrix<cdouble> jord(3, 3);
    for (std::size_t i = 0; i < 3; ++i) jord(i, i) = 2.0;
    jord(0, 1) = jord(1, 2) = 1.0;
    const auto evs = eigenvalues(jord);
    // a Jordan block's eigenvalues split as a cluster of diameter ~eps^(1/3)
    for (const cdouble& l : evs) REQUIRE(std::abs(l - cdouble(2.0)) < 2e-5);
}

TEST_CASE("empty and 1x1 matrices") {
    REQUIRE(eigenvalues(Matrix<cdouble>(0, 0)).empty());
    Matrix<cdouble> one(1, 1);
    one(0, 0) = cdouble(3, -4);
    REQUIRE(eigenvalues(one)[0] == cdouble(3, -4));
}

#ifdef TUBAL_HAVE_EIGEN
TEST_CASE("eigenvalues agree with a reference dense solver") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 16;
        const auto m = random_dense(rng, n);
        const auto mine = eigenvalues(m);
        REQUIRE(mine.size() == n);

        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(to_eigen(m), false);
        std::vector<cdouble> ref(n);
        for (std::size_t i = 0; i < n; ++i) ref[i] = es.eigenvalues()(long(i));
        REQUIRE(multiset_distance(mine, ref) < 1e-8 * std::max(1.0, m.max_abs()));
    }
}

TEST_CASE("real matrices keep conjugate-closed spectra") {
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + rng() % 8;
        Matrix<cdouble> m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = uniform(rng, -1, 1);
        const auto evs = eigenvalues(m);
        std::vector<cdouble> conj(evs.size());
        for (std::size_t i = 0; i < evs.size(); ++i) conj[i] = std::conj(evs[i]);
        REQUIRE(multiset_distance(evs, conj) < 1e-8);
    }
}

TEST_CASE("jacobi svd matches reference singular values") {
    std::mt19937_64 rng(63);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t m = 1 + rng() % 10, k = 1 + rng() % std::min<std::size_t>(m, 6);
        Matrix<cdouble> a(m, k);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < k; ++j)
                a(i, j) = cdouble(uniform(rng, -1, 1), uniform(rng, -1, 1));
        const Svd mine = svd_jacobi(a);

        Eigen::JacobiSVD<Eigen::MatrixXcd> ref(to_eigen(a));
        for (std::size_t j = 0; j < k; ++j)
            REQUIRE(mine.sigma[j] == Catch::Approx(ref.singularValues()(long(j))).margin(1e-10));

        // U*diag(sigma)*V^H reconstructs A
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                cdouble acc(0.0);
                for (std::size_t t = 0; t < k; ++t)
                    acc += mine.u(i, t) * mine.sigma[t] * std::conj(mine.v(j, t));
                REQUIRE(std::abs(acc - a(i, j)) < 1e-10);
            }
    }
}
#endif

TEST_CASE("lu solves random systems") {
    std::mt19937_64 rng(64);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng() % 12;
        const auto m = random_dense(rng, n);
        std::vector<cdouble> b(n);
        for (cdouble& v : b) v = cdouble(uniform(rng, -1, 1), uniform(rng, -1, 1));
        const auto x = lu_solve(lu_factor(m), b);
        const auto mx = m * x;
        for (std::size_t i = 0; i < n; ++i) REQUIRE(std::abs(mx[i] - b[i]) < 1e-9);
    }
}

TEST_CASE("inverse iteration returns unit eigenvectors with small residual") {
    std::mt19937_64 rng(65);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 2 + rng() % 8;
        const auto m = random_dense(rng, n);
        const auto evs = eigenvalues(m);
        const cdouble lambda = evs[rng() % evs.size()];
        const auto v = inverse_iteration(m, lambda);
        double norm = 0.0;
        for (const cdouble& e : v) norm += std::norm(e);
        REQUIRE(std::sqrt(norm) == Catch::Approx(1.0).margin(1e-9));
        const auto mv = m * v;
        double res = 0.0;
        for (std::size_t i = 0; i < n; ++i) res = std::max(res, std::abs(mv[i] - lambda * v[i]));
        REQUIRE(res < 1e-8 * std::max(1.0, m.max_abs()));
    }
}

TEST_CASE("numeric rank and nullspace of constructed matrices") {
    std::mt19937_64 rng(66);
    // rank-1 outer product with a known nullspace dimension
    const std::size_t n = 5;
    std::vector<cdouble> u(n), w(n);
    for (std::size_t i = 0; i < n; ++i) {
        u[i] = cdouble(uniform(rng, -1, 1), uniform(rng, -1, 1));
        w[i] = cdouble(uniform(rng, -1, 1), uniform(rng, -1, 1));
    }
    Matrix<cdouble> outer(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) outer(i, j) = u[i] * std::conj(w[j]);

    REQUIRE(numeric_rank(outer, 1e-8) == 1);
    const auto basis = nullspace(outer, 1e-8);
    REQUIRE(basis.size() == n - 1);
    for (const auto& col : basis) {
        const auto prod = outer * col;
        for (const cdouble& e : prod) REQUIRE(std::abs(e) < 1e-10);
    }

    REQUIRE(numeric_rank(Matrix<cdouble>(3, 3), 1e-8) == 0);
    REQUIRE(nullspace(Matrix<cdouble>(3, 3), 1e-8).size() == 3);
}
