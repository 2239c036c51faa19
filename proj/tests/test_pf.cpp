#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace tubal;
using namespace testsup;

namespace {

const ItemVerdict& find_item(const std::vector<ItemVerdict>& items, const std::string& id) {
    for (const ItemVerdict& v : items)
        if (v.id == id) return v;
    FAIL("missing item " + id);
    return items.front();
}

bool all_pass(const std::vector<ItemVerdict>& items) {
    for (const ItemVerdict& v : items)
        if (v.status != CheckStatus::Pass) return false;
    return true;
}

}  // namespace

TEST_CASE("weak form on the worked example and the identity") {
    {
        const auto v = check_weak_pf(example_4_7());
        REQUIRE(v.status == CheckStatus::Pass);
        REQUIRE(v.evidence.find("rho = 1.0") != std::string::npos);
    }
    {
        const auto v = check_weak_pf(TubalMatrix<double>::identity(3, 2));
        REQUIRE(v.status == CheckStatus::Pass);
    }
}

TEST_CASE("weak form survives a reducible, nilpotent input with rho = 0") {
    const auto v = check_weak_pf(example_3_17());
    REQUIRE(v.status == CheckStatus::Pass);
}

TEST_CASE("weak form is not applicable to mixed or zero input") {
    TubalMatrix<double> mixed(2, 2);
    mixed.at(0, 0, 0) = -1.0;
    REQUIRE(check_weak_pf(mixed).status == CheckStatus::NotApplicable);
    REQUIRE(check_weak_pf(TubalMatrix<double>(2, 2)).status == CheckStatus::NotApplicable);
}

TEST_CASE("irreducible conclusions all hold on the worked 2x2x2 example") {
    PFReport report;
    const auto items = check_irreducible_pf(example_4_7(), {}, &report);
    REQUIRE(items.size() == 7);
    REQUIRE(all_pass(items));

    // the peripheral-vector item saw witnesses at both 1 and -1
    const auto& item5 = find_item(items, "irr.peripheral_vectors_have_no_zero_tube");
    REQUIRE(item5.status == CheckStatus::Pass);

    // negative control: two independent positive directions at rho
    REQUIRE(report.rho_eigenspace_dim == 2);
    REQUIRE(report.positive_rho_rank == 2);
}

TEST_CASE("irreducible conclusions hold on the worked cycle tensor") {
    const auto items = check_irreducible_pf(example_3_16());
    REQUIRE(all_pass(items));
    REQUIRE(find_item(items, "irr.rho_positive").evidence.find("rho = 1.0") !=
            std::string::npos);
}

TEST_CASE("irreducible checker is vacuous on reducible input") {
    for (const auto& a : {example_3_10(), example_3_17()}) {
        const auto items = check_irreducible_pf(a);
        for (const auto& v : items) REQUIRE(v.status == CheckStatus::NotApplicable);
    }
}

TEST_CASE("enhanced conclusions on the all-ones tensor") {
    TubalMatrix<double> ones(2, 2);
    for (double& v : ones.data()) v = 1.0;
    const auto items = check_enhanced_pf(ones);
    REQUIRE(items.size() == 4);
    REQUIRE(all_pass(items));
    REQUIRE(find_item(items, "enh.rho_positive_eigenvalue").evidence.find("rho = 4.0") !=
            std::string::npos);
}

TEST_CASE("enhanced checker requires a strongly positive tube") {
    // the worked example's tubes are [0,1]-shaped: positive but not strong
    for (const auto& v : check_enhanced_pf(example_4_7()))
        REQUIRE(v.status == CheckStatus::NotApplicable);

    // identity with n >= 2 is reducible, so not applicable either
    for (const auto& v : check_enhanced_pf(TubalMatrix<double>::identity(2, 2)))
        REQUIRE(v.status == CheckStatus::NotApplicable);

    // the 1x1x1 identity is irreducible with a strongly positive tube
    REQUIRE(all_pass(check_enhanced_pf(TubalMatrix<double>::identity(1, 1))));
}

TEST_CASE("delta scaling factor") {
    TubalVector<double> x(1, 2), y(1, 2);
    x.at(0, 0) = 1.0;
    x.at(0, 1) = 2.0;
    y.at(0, 0) = 2.0;
    y.at(0, 1) = 6.0;
    REQUIRE(delta(x, y) == Catch::Approx(2.0));
    REQUIRE(delta(x, x) == Catch::Approx(1.0));

    // positively homogeneous in Y
    std::mt19937_64 rng(81);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 3, p = 1 + rng() % 3;
        TubalVector<double> xs(n, p), ys(n, p);
        for (double& v : xs.data()) v = uniform(rng, 0, 1);
        for (double& v : ys.data()) v = uniform(rng, -0.2, 1);
        const double c = 0.1 + 3.0 * uniform(rng, 0, 1);
        TubalVector<double> cy = ys;
        cy *= c;
        const double d1 = delta(xs, ys), d2 = delta(xs, cy);
        if (std::isinf(d1))
            REQUIRE(std::isinf(d2));
        else
            REQUIRE(d2 == Catch::Approx(c * d1).margin(1e-12));
    }
}

TEST_CASE("delta edge conventions") {
    TubalVector<double> zero(2, 2), y(2, 2);
    for (double& v : y.data()) v = 1.0;
    REQUIRE(std::isinf(delta(zero, y)));  // X = 0, Y nonnegative

    y.at(0, 0) = -1.0;
    REQUIRE(delta(zero, y) == 0.0);  // Y negative where X vanishes

    TubalVector<double> x(2, 2);
    x.at(0, 0) = 1.0;
    TubalVector<double> yneg(2, 2);
    yneg.at(0, 0) = 1.0;
    yneg.at(1, 1) = -0.5;
    REQUIRE(delta(x, yneg) == 0.0);

    TubalVector<double> xneg(2, 2);
    xneg.at(0, 0) = -1.0;
    REQUIRE_THROWS_AS(delta(xneg, y), DomainError);
}

TEST_CASE("delta is positive when Y is strongly positive and X positive") {
    std::mt19937_64 rng(82);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 3, p = 1 + rng() % 3;
        TubalVector<double> x(n, p), y(n, p);
        for (std::size_t i = 0; i < n; ++i) x.at(i, rng() % p) = 0.1 + uniform(rng, 0, 1);
        for (double& v : y.data()) v = 0.05 + uniform(rng, 0, 1);
        REQUIRE(delta(x, y) > 0.0);
    }
}

TEST_CASE("subinvariance: an eigenvector passes trivially") {
    const auto a = example_4_7();
    {
        TubalVector<double> x = ex47_vec_c();
        const auto v = check_subinvariance_lemma(a, x);
        REQUIRE(v.status == CheckStatus::Pass);
    }
    {
        // a combination inside the rho eigenspace also has zero difference
        TubalVector<double> x = ex47_vec_c();
        TubalVector<double> half_d = ex47_vec_d();
        half_d *= 0.5;
        x += half_d;
        const auto v = check_subinvariance_lemma(a, x);
        REQUIRE(v.status == CheckStatus::Pass);
    }
}

TEST_CASE("subinvariance: a perturbed vector fails the hypothesis, never vacuously passes") {
    const auto a = example_4_7();
    std::mt19937_64 rng(83);
    std::size_t hypothesis_failures = 0;
    for (int trial = 0; trial < 50; ++trial) {
        TubalVector<double> x = ex47_vec_c();
        x.at(rng() % 2, rng() % 2) += uniform(rng, 0.05, 0.4);
        const auto v = check_subinvariance_lemma(a, x);
        // the difference A*X - rho X is nonzero; either it is mixed-sign
        // (hypothesis not met) or nonnegative, in which case the lemma
        // demands equality and the checker must not report Pass
        REQUIRE(v.status != CheckStatus::NotApplicable);
        if (v.status == CheckStatus::HypothesisNotMet) ++hypothesis_failures;
        if (v.status == CheckStatus::Pass) {
            TubalVector<double> diff = tprod(a, x);
            TubalVector<double> rx = x;
            rx *= 1.0;
            diff -= rx;
            REQUIRE(max_abs(diff) <= 1e-8);
        }
    }
    REQUIRE(hypothesis_failures > 0);
}

TEST_CASE("subinvariance is not applicable without a positive left eigenvector") {
    // the reducible path tensor: rho = 0 and the left eigenvectors at 0
    // contain zero tubes, so the hypothesis cannot be established
    TubalVector<double> x(3, 3);
    x.at(0, 0) = 1.0;
    const auto v = check_subinvariance_lemma(example_3_17(), x);
    REQUIRE(v.status == CheckStatus::NotApplicable);
}

TEST_CASE("magnitude bound holds for real nonnegative data with equality") {
    std::mt19937_64 rng(84);
    const auto a = random_nonnegative(rng, 3, 3, 0.6);
    TubalVector<double> x(3, 3);
    for (double& v : x.data()) v = uniform(rng, 0, 1);
    const auto verdict = check_magnitude_lemma(to_complex(a), to_complex(x));
    REQUIRE(verdict.status == CheckStatus::Pass);

    const TubalVector<double> lhs = tprod(magnitude(to_complex(a)), magnitude(to_complex(x)));
    const TubalVector<double> rhs = magnitude(tprod(to_complex(a), to_complex(x)));
    for (std::size_t t = 0; t < lhs.data().size(); ++t)
        REQUIRE(lhs.data()[t] == Catch::Approx(rhs.data()[t]).margin(1e-12));
}

TEST_CASE("magnitude bound never fails on random complex data") {
    std::mt19937_64 rng(85);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + rng() % 3, p = 1 + rng() % 3;
        const auto a = random_complex_matrix(rng, n, p);
        const auto x = random_complex_vector(rng, n, p);
        REQUIRE(check_magnitude_lemma(a, x).status == CheckStatus::Pass);
    }
}

TEST_CASE("magnitude bound with a zero vector is an exact tie") {
    std::mt19937_64 rng(86);
    const auto a = random_complex_matrix(rng, 2, 2);
    const TubalVector<cdouble> zero(2, 2);
    const auto v = check_magnitude_lemma(a, zero);
    REQUIRE(v.status == CheckStatus::Pass);
    REQUIRE(v.evidence.find("0.000000") != std::string::npos);
}

TEST_CASE("full report on the worked example") {
    const PFReport report = pf_report(example_4_7());
    REQUIRE(report.input_class == ConeClass::NonnegativeOnly);
    REQUIRE(report.irreducibility == Verdict::Irreducible);
    REQUIRE_FALSE(report.has_strongly_positive_tube);
    REQUIRE(report.rho == Catch::Approx(1.0).margin(1e-10));
    REQUIRE(report.rho_eigenspace_dim == 2);
    REQUIRE(report.positive_rho_rank == 2);

    std::size_t passes = 0, not_applicable = 0;
    for (const auto& item : report.items) {
        if (item.status == CheckStatus::Pass) ++passes;
        if (item.status == CheckStatus::NotApplicable) ++not_applicable;
        REQUIRE(item.status != CheckStatus::Fail);
    }
    REQUIRE(passes >= 10);         // weak + all seven + both lemmas
    REQUIRE(not_applicable == 4);  // the enhanced block
}

TEST_CASE("report items are deterministic and ordered") {
    const PFReport r1 = pf_report(example_3_16());
    const PFReport r2 = pf_report(example_3_16());
    REQUIRE(r1.items.size() == r2.items.size());
    for (std::size_t i = 0; i < r1.items.size(); ++i) {
        REQUIRE(r1.items[i].id == r2.items[i].id);
        REQUIRE(r1.items[i].status == r2.items[i].status);
    }
}

TEST_CASE("random irreducible suite holds the theorems (small smoke run)") {
    std::mt19937_64 rng(87);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 4, p = 1 + rng() % 3;
        const double density = 0.3 + 0.7 * uniform(rng, 0, 1);
        const auto a = random_nonnegative(rng, n, p, density);
        if (max_abs(a) == 0.0) continue;  // n = 1 can draw the zero tensor
        if (is_reducible_scc(a, 0.0).verdict != Verdict::Irreducible) continue;
        ++checked;
        const auto items = check_irreducible_pf(a);
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (i == 5) continue;  // sign-coherence is checked over found real vectors only
            REQUIRE(items[i].status == CheckStatus::Pass);
        }
        REQUIRE(items[5].status == CheckStatus::Pass);

        if (detail::has_strong_tube(a, 1e-9)) {
            const auto enh = check_enhanced_pf(a);
            for (const auto& v : enh) REQUIRE(v.status == CheckStatus::Pass);
        }
    }
    REQUIRE(checked >= 20);
}
