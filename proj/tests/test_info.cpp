#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "bnevo/core.hpp"
#include "bnevo/info.hpp"
#include "oracles.hpp"

using namespace bnevo;
namespace orc = oracles;

namespace {
CountDistribution random_net_distribution(std::uint64_t seed) {
    Rng rng = make_rng(seed);
    return intervention_distribution(transition_map(random_network(rng)));
}
}  // namespace

TEST_CASE("intervention distribution of the reference networks") {
    const auto ident = intervention_distribution(transition_map(orc::identity_network()));
    const auto zero = intervention_distribution(transition_map(orc::constant_network(false)));
    const auto shift = intervention_distribution(transition_map(orc::shift_network()));

    for (std::uint32_t c : ident.counts) REQUIRE(c == 1u);
    REQUIRE(zero.counts[0] == 4096u);
    for (std::uint32_t s = 1; s < 4096; ++s) REQUIRE(zero.counts[s] == 0u);
    // rotation is a bijection; verified independently below
    for (std::uint32_t c : shift.counts) REQUIRE(c == 1u);
    std::vector<bool> hit(4096, false);
    for (GlobalState s = 0; s < 4096; ++s) {
        REQUIRE(!hit[orc::rotate_left_12(s)]);
        hit[orc::rotate_left_12(s)] = true;
    }
}

TEST_CASE("marginal entropy basics") {
    const auto uniform = orc::uniform_distribution();
    CHECK(marginal_entropy(uniform, NodeSubset::full(12)) ==
          Catch::Approx(12.0).margin(1e-12));

    CountDistribution point;
    point.num_nodes = 12;
    point.counts.assign(4096, 0);
    point.counts[0] = 4096;
    CHECK(marginal_entropy(point, NodeSubset::full(12)) == 0.0);
    CHECK(marginal_entropy(point, NodeSubset::single(3)) == 0.0);

    const auto copy = orc::copy_distribution();
    for (int i : {0, 5, 11})
        CHECK(marginal_entropy(copy, NodeSubset::single(i)) ==
              Catch::Approx(1.0).margin(1e-12));
    CHECK(marginal_entropy(copy, NodeSubset{0}) == 0.0);  // empty subset
}

TEST_CASE("total correlation on analytic distributions") {
    const auto uniform = orc::uniform_distribution();
    for (std::uint32_t mask : {0x001u, 0x00fu, 0xfffu, 0x5a5u})
        CHECK(total_correlation(uniform, NodeSubset{mask}) ==
              Catch::Approx(0.0).margin(1e-9));
    CHECK(total_correlation(orc::copy_distribution(), NodeSubset::full(12)) ==
          Catch::Approx(11.0).margin(1e-9));
    CHECK(total_correlation(orc::parity_distribution(), NodeSubset::full(12)) ==
          Catch::Approx(1.0).margin(1e-9));
    // singletons carry no correlation
    CHECK(total_correlation(orc::copy_distribution(), NodeSubset::single(4)) == 0.0);
}

TEST_CASE("o-information signs and analytic values") {
    CHECK(o_information(orc::uniform_distribution()) ==
          Catch::Approx(0.0).margin(1e-9));
    CHECK(o_information(orc::copy_distribution()) ==
          Catch::Approx(10.0).margin(1e-9));
    CHECK(o_information(orc::parity_distribution()) ==
          Catch::Approx(-10.0).margin(1e-9));
}

TEST_CASE("o-information vanishes on product distributions") {
    // product over nodes: some nodes fair, some pinned; counts stay exact
    Rng rng = make_rng(33);
    for (int trial = 0; trial < 5; ++trial) {
        std::array<std::array<std::uint32_t, 2>, 12> factor{};
        for (int i = 0; i < 12; ++i) {
            switch (uniform_below(rng, 3)) {
                case 0: factor[i] = {1, 1}; break;
                case 1: factor[i] = {2, 0}; break;
                default: factor[i] = {0, 2}; break;
            }
        }
        CountDistribution d;
        d.num_nodes = 12;
        d.counts.assign(4096, 0);
        for (std::uint32_t s = 0; s < 4096; ++s) {
            std::uint32_t c = 1;
            for (int i = 0; i < 12; ++i) c *= factor[i][(s >> i) & 1u];
            d.counts[s] = c;
        }
        REQUIRE(o_information(d) == Catch::Approx(0.0).margin(1e-9));
    }
}

TEST_CASE("o-information equals TC minus DTC on random networks") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const CountDistribution d = random_net_distribution(seed);
        const double tc = total_correlation(d, NodeSubset::full(12));
        const double dtc = orc::naive_dual_total_correlation(d);
        REQUIRE(o_information(d) == Catch::Approx(tc - dtc).margin(1e-9));
    }
}

TEST_CASE("tse complexity on analytic distributions") {
    CHECK(tse_complexity(orc::uniform_distribution(), 75, make_rng(1)) ==
          Catch::Approx(0.0).margin(1e-9));
    // every size-i subset of copies has TC = i-1, so any seed gives 5.5 exactly
    for (std::uint64_t seed : {1ull, 99ull})
        CHECK(tse_complexity(orc::copy_distribution(), 75, make_rng(seed)) ==
              Catch::Approx(5.5).margin(1e-9));
    for (std::uint64_t seed : {2ull, 77ull})
        CHECK(tse_complexity(orc::parity_distribution(), 75, make_rng(seed)) ==
              Catch::Approx(5.5).margin(1e-9));
}

TEST_CASE("tse subsampling noise stays below 0.2 bits across seeds") {
    for (std::uint64_t seed = 40; seed < 45; ++seed) {
        const CountDistribution d = random_net_distribution(seed);
        const double a = tse_complexity(d, 75, make_rng(7));
        const double b = tse_complexity(d, 75, make_rng(8));
        REQUIRE(std::abs(a - b) < 0.2);
    }
}

TEST_CASE("tse cap of at least the largest scale count is exact") {
    // with the cap above C(12,6)=924 every scale enumerates, so seeds agree
    const CountDistribution d = random_net_distribution(123);
    const double a = tse_complexity(d, 1000, make_rng(1));
    const double b = tse_complexity(d, 1000, make_rng(2));
    REQUIRE(a == Catch::Approx(b).margin(1e-12));
}

TEST_CASE("entropy and total correlation bounds on random networks") {
    Rng mask_rng = make_rng(55);
    for (std::uint64_t seed = 60; seed < 65; ++seed) {
        const CountDistribution d = random_net_distribution(seed);
        for (int t = 0; t < 16; ++t) {
            const NodeSubset sub{std::uint32_t(uniform_below(mask_rng, 4096))};
            const double h = marginal_entropy(d, sub);
            REQUIRE(h >= 0.0);
            REQUIRE(h <= double(sub.size()) + 1e-9);
            REQUIRE(total_correlation(d, sub) >= -1e-9);
        }
    }
}

TEST_CASE("lagged joint distribution structure on reference networks") {
    const TransitionMap ident = transition_map(orc::identity_network());
    const TransitionMap shift = transition_map(orc::shift_network());

    // identity, i -> j (i != j): independent fair bits
    const auto prod = lagged_joint_distribution(ident, NodeSubset::single(2),
                                                NodeSubset::single(7));
    REQUIRE(prod.cells.size() == 4);
    for (const auto& c : prod.cells) REQUIRE(c.count == 1024u);
    CHECK(lagged_mutual_information(prod) == Catch::Approx(0.0).margin(1e-12));

    // identity, i -> i: diagonal
    const auto diag = lagged_joint_distribution(ident, NodeSubset::single(4),
                                                NodeSubset::single(4));
    REQUIRE(diag.cells.size() == 2);
    for (const auto& c : diag.cells) {
        REQUIRE(c.past_idx == c.future_idx);
        REQUIRE(c.count == 2048u);
    }
    CHECK(lagged_mutual_information(diag) == Catch::Approx(1.0).margin(1e-12));

    // shift, i -> i+1: diagonal as well
    const auto moved = lagged_joint_distribution(shift, NodeSubset::single(3),
                                                 NodeSubset::single(4));
    REQUIRE(moved.cells.size() == 2);
    for (const auto& c : moved.cells) REQUIRE(c.past_idx == c.future_idx);
    CHECK(lagged_mutual_information(moved) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("lagged mutual information against the brute-force oracle") {
    const TransitionMap shift = transition_map(orc::shift_network());
    CHECK(lagged_mutual_information(shift, NodeSubset{0x03fu}, NodeSubset{0x03fu}) ==
          Catch::Approx(5.0).margin(1e-9));
    CHECK(orc::naive_lagged_mi(shift, {0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5}) ==
          Catch::Approx(5.0).margin(1e-9));

    const TransitionMap zero = transition_map(orc::constant_network(false));
    CHECK(lagged_mutual_information(zero, NodeSubset{0x0ffu}, NodeSubset{0xf00u}) ==
          Catch::Approx(0.0).margin(1e-12));

    const TransitionMap ident = transition_map(orc::identity_network());
    CHECK(lagged_mutual_information(ident, NodeSubset::full(12),
                                    NodeSubset::full(12)) ==
          Catch::Approx(12.0).margin(1e-9));

    Rng rng = make_rng(77);
    const TransitionMap tm = transition_map(random_network(rng));
    for (auto [pmask, fmask] : {std::pair<std::uint32_t, std::uint32_t>{0x013u, 0x013u},
                                {0x0f0u, 0x00fu},
                                {0xaaau, 0x555u}}) {
        const NodeSubset p{pmask}, f{fmask};
        REQUIRE(lagged_mutual_information(tm, p, f) ==
                Catch::Approx(orc::naive_lagged_mi(tm, p.members(), f.members()))
                    .margin(1e-9));
    }
}

TEST_CASE("full lagged MI equals the intervention joint entropy") {
    for (std::uint64_t seed = 90; seed < 95; ++seed) {
        Rng rng = make_rng(seed);
        const TransitionMap tm = transition_map(random_network(rng));
        const double mi = lagged_mutual_information(tm, NodeSubset::full(12),
                                                    NodeSubset::full(12));
        const double h = marginal_entropy(intervention_distribution(tm),
                                          NodeSubset::full(12));
        REQUIRE(mi == Catch::Approx(h).margin(1e-9));
    }
}
