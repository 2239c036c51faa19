#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace tubal;
using namespace testsup;

TEST_CASE("transform slices for p = 1 are the single frontal slice") {
    std::mt19937_64 rng(31);
    const auto a = random_matrix(rng, 3, 1);
    const auto slices = block_dft_slices(a);
    REQUIRE(slices.size() == 1);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            REQUIRE(slices[0](i, j).real() == Catch::Approx(a.at(i, j, 0)).margin(1e-14));
            REQUIRE(slices[0](i, j).imag() == Catch::Approx(0.0).margin(1e-14));
        }
}

TEST_CASE("transform slices of the worked 2x2x2 example") {
    const auto slices = block_dft_slices(example_4_7());
    REQUIRE(slices.size() == 2);
    const double s1[2][2] = {{0, 1}, {1, 0}};
    const double s2[2][2] = {{0, -1}, {-1, 0}};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            REQUIRE(slices[0](i, j).real() == Catch::Approx(s1[i][j]).margin(1e-14));
            REQUIRE(slices[1](i, j).real() == Catch::Approx(s2[i][j]).margin(1e-14));
            REQUIRE(slices[0](i, j).imag() == Catch::Approx(0.0).margin(1e-14));
            REQUIRE(slices[1](i, j).imag() == Catch::Approx(0.0).margin(1e-14));
        }
}

TEST_CASE("transform slices are the fiber transforms of bcirc's diagonal blocks") {
    // hat A^(k) must equal sum_j w^{k j} A^(j); checked against a direct
    // evaluation as the independent route.
    std::mt19937_64 rng(32);
    for (std::size_t p : {2u, 3u, 5u, 8u}) {
        const auto a = random_matrix(rng, 3, p);
        const auto slices = block_dft_slices(a);
        for (std::size_t k = 0; k < p; ++k)
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) {
                    cdouble acc(0.0);
                    for (std::size_t t = 0; t < p; ++t) {
                        const double ang = -2.0 * std::numbers::pi * double(k * t) / double(p);
                        acc += a.at(i, j, t) * cdouble(std::cos(ang), std::sin(ang));
                    }
                    REQUIRE(std::abs(slices[k](i, j) - acc) < 1e-12 * double(p));
                }
    }
}

TEST_CASE("fast product equals the direct product on the worked square") {
    const auto b = example_3_16() + TubalMatrix<double>::identity(3, 3);
    const auto direct = tprod(b, b);
    const auto fast = tprod_fft(b, b);
    for (std::size_t t = 0; t < direct.data().size(); ++t)
        REQUIRE(std::abs(fast.data()[t] - direct.data()[t]) <= 1e-12);
}

TEST_CASE("fast product leaves an identity factor unchanged") {
    std::mt19937_64 rng(33);
    const auto a = random_matrix(rng, 3, 4);
    const auto id = TubalMatrix<double>::identity(3, 4);
    const auto fast = tprod_fft(a, id);
    for (std::size_t t = 0; t < a.data().size(); ++t)
        REQUIRE(std::abs(fast.data()[t] - a.data()[t]) <= 1e-12);
}

TEST_CASE("fast product tracks the direct product on random instances") {
    std::mt19937_64 rng(34);
    SECTION("4x4x8 pair") {
        const auto a = random_matrix(rng, 4, 8);
        const auto b = random_matrix(rng, 4, 8);
        const auto direct = tprod(a, b);
        const auto fast = tprod_fft(a, b);
        for (std::size_t t = 0; t < direct.data().size(); ++t)
            REQUIRE(std::abs(fast.data()[t] - direct.data()[t]) <= 1e-10);
    }
    SECTION("entries in [-1,1], assorted shapes incl. non-power-of-two p") {
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t n = 1 + rng() % 4, p = 1 + rng() % 7;
            const auto a = random_matrix(rng, n, p);
            const auto b = random_matrix(rng, n, p);
            const auto direct = tprod(a, b);
            const auto fast = tprod_fft(a, b);
            for (std::size_t t = 0; t < direct.data().size(); ++t)
                REQUIRE(std::abs(fast.data()[t] - direct.data()[t]) <= 1e-10);
        }
    }
}

TEST_CASE("fast product handles complex tensors") {
    std::mt19937_64 rng(35);
    const auto a = random_complex_matrix(rng, 3, 6);
    const auto b = random_complex_matrix(rng, 3, 6);
    const auto direct = tprod(a, b);
    const auto fast = tprod_fft(a, b);
    for (std::size_t t = 0; t < direct.data().size(); ++t)
        REQUIRE(std::abs(fast.data()[t] - direct.data()[t]) <= 1e-10);
}
