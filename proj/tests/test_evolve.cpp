#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "bnevo/evolve.hpp"
#include "oracles.hpp"

using namespace bnevo;
namespace orc = oracles;

namespace {
// individuals with recognizable genomes so survivor identity is checkable
Individual tagged(std::uint32_t tag, double fit) {
    Individual ind;
    for (auto& g : ind.net.genomes) g.table = tag;
    ind.fitness = fit;
    return ind;
}
}  // namespace

TEST_CASE("fitness of the identity network is zero for both omega objectives") {
    const auto ident = orc::identity_network();
    CHECK(fitness(ident, Objective::kMaxRedundancy, 75, make_rng(1)) ==
          Catch::Approx(0.0).margin(1e-9));
    CHECK(fitness(ident, Objective::kMaxSynergy, 75, make_rng(1)) ==
          Catch::Approx(0.0).margin(1e-9));
}

TEST_CASE("random networks start synergy-leaning") {
    Rng rng = make_rng(11);
    double sum = 0.0;
    const int nets = 100;
    for (int i = 0; i < nets; ++i)
        sum += fitness(random_network(rng), Objective::kMaxRedundancy, 75,
                       make_rng(1));
    CHECK(sum / nets == Catch::Approx(-2.396).margin(0.3));
}

TEST_CASE("cull_and_rank keeps the top half, best first") {
    std::vector<Individual> pop = {tagged(0, 1), tagged(1, 2), tagged(2, 3),
                                   tagged(3, 4)};
    auto survivors = cull_and_rank(pop);
    REQUIRE(survivors.size() == 2);
    CHECK(survivors[0].fitness == 4);
    CHECK(survivors[1].fitness == 3);

    // ties break toward the lower population index
    pop = {tagged(10, 5), tagged(11, 5), tagged(12, 5), tagged(13, 5)};
    survivors = cull_and_rank(pop);
    REQUIRE(survivors.size() == 2);
    CHECK(survivors[0].net.genomes[0].table == 10);
    CHECK(survivors[1].net.genomes[0].table == 11);

    pop = {tagged(20, 4), tagged(21, 4), tagged(22, 1), tagged(23, 4)};
    survivors = cull_and_rank(pop);
    REQUIRE(survivors.size() == 2);
    CHECK(survivors[0].net.genomes[0].table == 20);
    CHECK(survivors[1].net.genomes[0].table == 21);

    // odd population: the straggler is culled
    pop = {tagged(0, 1), tagged(1, 3), tagged(2, 2)};
    CHECK(cull_and_rank(pop).size() == 1);
}

TEST_CASE("crossover of identical parents is the identity") {
    Rng netrng = make_rng(3);
    const BooleanNetwork x = random_network(netrng);
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Rng rng = make_rng(seed);
        CHECK(crossover(x, x, rng) == x);
    }
}

TEST_CASE("crossover takes exactly half of each table from each parent") {
    const BooleanNetwork zeros = orc::constant_network(false);
    const BooleanNetwork ones = orc::constant_network(true);
    Rng rng = make_rng(17);
    for (int trial = 0; trial < 32; ++trial) {
        const BooleanNetwork child = crossover(zeros, ones, rng);
        for (const NodeGenome& g : child.genomes)
            REQUIRE(std::popcount(g.table) == 16);
    }
}

TEST_CASE("crossover row origin is uniform across seeds") {
    const BooleanNetwork zeros = orc::constant_network(false);
    const BooleanNetwork ones = orc::constant_network(true);
    // a zero child bit marks a row inherited from parent a; pool the 12 nodes
    std::array<int, 32> from_a{};
    const int trials = 1000;
    Rng rng = make_rng(19);
    for (int t = 0; t < trials; ++t) {
        const BooleanNetwork child = crossover(zeros, ones, rng);
        for (int node = 0; node < 12; ++node)
            for (int row = 0; row < 32; ++row)
                if (!child.genomes[node].entry(row)) from_a[row]++;
    }
    for (int row = 0; row < 32; ++row)
        CHECK(double(from_a[row]) / (12 * trials) ==
              Catch::Approx(0.5).margin(0.04));
}

TEST_CASE("mutate at the boundary rates") {
    Rng netrng = make_rng(23);
    const BooleanNetwork net = random_network(netrng);
    Rng rng = make_rng(5);
    CHECK(mutate(net, 0.0, rng) == net);
    const BooleanNetwork flipped = mutate(net, 1.0, rng);
    for (int i = 0; i < 12; ++i)
        CHECK(flipped.genomes[i].table == (~net.genomes[i].table & 0xffffffffu));
}

TEST_CASE("mutate flips the expected number of bits at rate 0.001") {
    const BooleanNetwork net = orc::constant_network(false);
    Rng rng = make_rng(29);
    std::int64_t flips = 0;
    const int trials = 100000;
    for (int t = 0; t < trials; ++t) {
        const BooleanNetwork m = mutate(net, 0.001, rng);
        for (const NodeGenome& g : m.genomes) flips += std::popcount(g.table);
    }
    CHECK(double(flips) / trials == Catch::Approx(0.384).margin(0.02));
}

TEST_CASE("rank-weighted parent selection matches the weight formula") {
    Rng rng = make_rng(31);
    const int survivors = 250;
    const int draws = 100000;
    int top_hits = 0;
    for (int t = 0; t < draws; ++t)
        if (detail::pick_by_rank(survivors, rng) == 0) ++top_hits;
    // top weight 250 of total 31375
    CHECK(double(top_hits) / draws ==
          Catch::Approx(250.0 / 31375.0).margin(0.0005));
}

TEST_CASE("next_generation refills the population from the survivor pool") {
    std::vector<Individual> survivors = {tagged(0xffffffffu, 2.0),
                                         tagged(0x0u, 1.0)};
    const auto pop = next_generation(survivors, 4, 0.0, 123, 1);
    REQUIRE(pop.size() == 4);
    CHECK(pop[0].fitness == 2.0);
    CHECK(pop[1].fitness == 1.0);
    for (std::size_t i = 2; i < 4; ++i) {
        REQUIRE(std::isnan(pop[i].fitness));
        // with mutation 0, every table row comes from one of the two parents,
        // and the exact-half rule forces 16 ones per table
        for (const NodeGenome& g : pop[i].net.genomes)
            REQUIRE(std::popcount(g.table) == 16);
    }
}

TEST_CASE("next_generation needs at least two survivors") {
    std::vector<Individual> lone = {tagged(1, 1.0)};
    CHECK_THROWS_AS(next_generation(lone, 4, 0.0, 1, 1),
                    DegeneratePopulationError);
}

TEST_CASE("config validation") {
    EvolutionConfig c;
    c.population_size = 3;
    CHECK_THROWS_AS(validate(c), InvalidConfigError);
    c.population_size = 6;
    c.mutation_rate = 1.5;
    CHECK_THROWS_AS(validate(c), InvalidConfigError);
    c.mutation_rate = 0.001;
    c.generations = -1;
    CHECK_THROWS_AS(validate(c), InvalidConfigError);
}

TEST_CASE("zero generations returns the scored initial population") {
    EvolutionConfig c;
    c.population_size = 10;
    c.generations = 0;
    c.master_seed = 42;
    const auto res = run_evolution(c);
    REQUIRE(res.final_population.size() == 10);
    REQUIRE(res.history.size() == 1);
    CHECK(res.history[0].generation == 0);
    CHECK(res.history[0].fitness_max == res.final_population.front().fitness);
}

TEST_CASE("evolution is deterministic under a fixed master seed") {
    EvolutionConfig c;
    c.population_size = 8;
    c.generations = 4;
    c.master_seed = 777;
    const auto a = run_evolution(c);
    const auto b = run_evolution(c);
    REQUIRE(a.history.size() == b.history.size());
    for (std::size_t g = 0; g < a.history.size(); ++g) {
        REQUIRE(a.history[g].fitness_mean == b.history[g].fitness_mean);
        REQUIRE(a.history[g].fitness_max == b.history[g].fitness_max);
        REQUIRE(a.history[g].fitness_min == b.history[g].fitness_min);
    }
    for (std::size_t i = 0; i < a.final_population.size(); ++i)
        REQUIRE(a.final_population[i].net == b.final_population[i].net);
}

TEST_CASE("evolution invariants on a short run") {
    EvolutionConfig c;
    c.population_size = 12;
    c.generations = 10;
    c.master_seed = 4242;
    const auto res = run_evolution(c);
    REQUIRE(res.history.size() == 11);
    // survivors are retained unchanged, so the best never drops
    for (std::size_t g = 1; g < res.history.size(); ++g)
        REQUIRE(res.history[g].fitness_max >= res.history[g - 1].fitness_max);
    REQUIRE(res.final_population.size() == 12);
    for (std::size_t g = 0; g < res.history.size(); ++g) {
        REQUIRE(res.history[g].fitness_min <= res.history[g].fitness_mean);
        REQUIRE(res.history[g].fitness_mean <= res.history[g].fitness_max);
    }
}

TEST_CASE("a clonal population with zero mutation never changes") {
    Rng netrng = make_rng(1);
    const BooleanNetwork proto = random_network(netrng);
    std::vector<Individual> pop(6, Individual{proto, 1.0});
    for (int g = 1; g <= 3; ++g) {
        pop = next_generation(cull_and_rank(pop), 6, 0.0, 99, g);
        for (auto& ind : pop) {
            REQUIRE(ind.net == proto);
            ind.fitness = 1.0;
        }
    }
}
