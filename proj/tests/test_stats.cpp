#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "bnevo/rng.hpp"
#include "bnevo/stats.hpp"
#include "oracles.hpp"

using namespace bnevo;

TEST_CASE("summarize basics") {
    auto s = summarize({5.0});
    CHECK(s.n == 1);
    CHECK(s.mean == 5.0);
    CHECK(s.standard_deviation == 0.0);

    s = summarize({1.0, 1.0, 1.0, 1.0});
    CHECK(s.mean == 1.0);
    CHECK(s.standard_deviation == 0.0);

    s = summarize({2, 4, 4, 4, 5, 5, 7, 9});
    CHECK(s.mean == Catch::Approx(5.0));
    CHECK(s.standard_deviation == Catch::Approx(std::sqrt(32.0 / 7.0)).margin(1e-12));

    CHECK_THROWS_AS(summarize({}), std::invalid_argument);
}

TEST_CASE("mann-whitney U on identical samples") {
    const std::vector<double> a = {1, 2, 3};
    const auto res = mann_whitney_u(a, a);
    CHECK(res.u == Catch::Approx(9.0 / 2.0));
    CHECK(res.p_two_sided == Catch::Approx(1.0));
}

TEST_CASE("mann-whitney U under complete separation") {
    const auto res = mann_whitney_u({1, 2, 3}, {4, 5, 6});
    CHECK(res.u == 0.0);
    CHECK(res.p_two_sided < 0.15);
}

TEST_CASE("mann-whitney against the exact enumeration oracle") {
    const std::vector<double> a = {1, 3}, b = {2, 4};
    const auto res = mann_whitney_u(a, b);
    CHECK(res.u == 1.0);
    // all 6 label assignments of the pooled sample: U in {0,1,2,2,3,4},
    // two-sided p = 2 * min tail = 2/3
    const double exact = oracles::exact_mann_whitney_p(a, b);
    CHECK(exact == Catch::Approx(2.0 / 3.0).margin(1e-12));
    CHECK(std::abs(res.p_two_sided - exact) < 0.25);
}

TEST_CASE("normal approximation tracks the exact p at tiny sizes") {
    Rng rng = make_rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> a, b;
        const int na = 2 + int(uniform_below(rng, 3));
        const int nb = 2 + int(uniform_below(rng, 3));
        for (int i = 0; i < na; ++i) a.push_back(double(uniform_below(rng, 6)));
        for (int i = 0; i < nb; ++i) b.push_back(double(uniform_below(rng, 6)));
        const double exact = oracles::exact_mann_whitney_p(a, b);
        const double approx = mann_whitney_u(a, b).p_two_sided;
        REQUIRE(approx >= 0.0);
        REQUIRE(approx <= 1.0);
        REQUIRE(std::abs(approx - exact) < 0.3);
    }
}

TEST_CASE("U statistics of the two directions sum to the pair count") {
    Rng rng = make_rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> a, b;
        const int na = 1 + int(uniform_below(rng, 40));
        const int nb = 1 + int(uniform_below(rng, 40));
        for (int i = 0; i < na; ++i) a.push_back(double(uniform_below(rng, 8)));
        for (int i = 0; i < nb; ++i) b.push_back(double(uniform_below(rng, 8)));
        const auto fwd = mann_whitney_u(a, b);
        const auto rev = mann_whitney_u(b, a);
        REQUIRE(fwd.u + rev.u == double(na) * double(nb));
        REQUIRE(fwd.p_two_sided == Catch::Approx(rev.p_two_sided).margin(1e-12));
    }
}

TEST_CASE("rank basis: invariant under common monotone transforms") {
    const std::vector<double> a = {0.3, 1.2, 2.5, 2.5, 7.0};
    const std::vector<double> b = {0.9, 1.2, 3.1};
    const auto base = mann_whitney_u(a, b);
    const auto transform = [](const std::vector<double>& v) {
        std::vector<double> out;
        for (double x : v) out.push_back(std::exp(0.5 * x) + 3.0);
        return out;
    };
    const auto mapped = mann_whitney_u(transform(a), transform(b));
    CHECK(base.u == mapped.u);
    CHECK(base.p_two_sided == Catch::Approx(mapped.p_two_sided).margin(1e-12));
}

TEST_CASE("empty samples are rejected") {
    CHECK_THROWS_AS(mann_whitney_u({}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(mann_whitney_u({1.0}, {}), std::invalid_argument);
}
