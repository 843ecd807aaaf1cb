#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "bnevo/core.hpp"
#include "bnevo/info.hpp"
#include "bnevo/rng.hpp"

namespace bnevo {

enum class Objective { kMaxRedundancy, kMaxSynergy, kMaxTse };

inline const char* objective_name(Objective o) {
    switch (o) {
        case Objective::kMaxRedundancy: return "MAX_REDUNDANCY";
        case Objective::kMaxSynergy: return "MAX_SYNERGY";
        case Objective::kMaxTse: return "MAX_TSE";
    }
    return "?";
}

struct EvolutionConfig {
    Objective objective = Objective::kMaxRedundancy;
    int population_size = 500;  // 200 is the usual choice for the TSE objective
    int generations = 750;
    double mutation_rate = 0.001;
    int tse_subset_cap = 75;
    std::uint64_t master_seed = 0;
    int num_nodes = kDefaultNodes;
    int num_inputs = kDefaultInputs;
};

class InvalidConfigError : public std::runtime_error {
  public:
    explicit InvalidConfigError(const std::string& what)
        : std::runtime_error(what) {}
};

class DegeneratePopulationError : public std::runtime_error {
  public:
    explicit DegeneratePopulationError(const std::string& what)
        : std::runtime_error(what) {}
};

inline void validate(const EvolutionConfig& c) {
    if (c.population_size < 4 || c.population_size % 2 != 0)
        throw InvalidConfigError("population_size must be even and >= 4");
    if (c.generations < 0) throw InvalidConfigError("generations must be >= 0");
    if (!(c.mutation_rate >= 0.0 && c.mutation_rate <= 1.0))
        throw InvalidConfigError("mutation_rate must lie in [0,1]");
    if (c.tse_subset_cap < 1)
        throw InvalidConfigError("tse_subset_cap must be >= 1");
}

struct GenerationRecord {
    int generation = 0;
    double fitness_mean = 0.0;
    double fitness_max = 0.0;
    double fitness_min = 0.0;
};

// A network with its score. Fitness is measured once, when the individual is
// created; survivors carry their score forward unchanged, which keeps the
// best-of-population trajectory monotone even for the subsampled TSE
// objective.
struct Individual {
    BooleanNetwork net;
    double fitness = 0.0;
};

// Higher is always fitter. The rng feeds TSE subset sampling only.
inline double fitness(const BooleanNetwork& net, Objective objective,
                      int tse_subset_cap, Rng rng) {
    const CountDistribution d = intervention_distribution(transition_map(net));
    switch (objective) {
        case Objective::kMaxRedundancy: return o_information(d);
        case Objective::kMaxSynergy: return -o_information(d);
        case Objective::kMaxTse:
            return tse_complexity(d, tse_subset_cap, std::move(rng));
    }
    return 0.0;
}

// Keeps the top half, best first. Ties break toward the lower population
// index; an odd straggler is culled.
inline std::vector<Individual> cull_and_rank(
    const std::vector<Individual>& population) {
    std::vector<std::size_t> order(population.size());
    std::iota(order.begin(), order.end(), std::size_t(0));
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return population[a].fitness > population[b].fitness;
    });
    std::vector<Individual> survivors;
    survivors.reserve(population.size() / 2);
    for (std::size_t i = 0; i < population.size() / 2; ++i)
        survivors.push_back(population[order[i]]);
    return survivors;
}

// Each node's child table takes exactly half of its rows from parent a, the
// half chosen uniformly, and the rest from parent b.
inline BooleanNetwork crossover(const BooleanNetwork& a, const BooleanNetwork& b,
                                Rng& rng) {
    assert(a.num_nodes == b.num_nodes && a.num_inputs == b.num_inputs);
    BooleanNetwork child(a.num_nodes, a.num_inputs);
    const int rows = a.table_size();
    for (int i = 0; i < a.num_nodes; ++i) {
        std::uint32_t from_a = 0;
        for (int row : sample_distinct(rng, rows, rows / 2))
            from_a |= std::uint32_t(1) << row;
        child.genomes[std::size_t(i)].table =
            (a.genomes[std::size_t(i)].table & from_a) |
            (b.genomes[std::size_t(i)].table & ~from_a);
        child.genomes[std::size_t(i)].table &= child.table_mask();
    }
    return child;
}

// Flips every table bit independently with probability `rate`.
inline BooleanNetwork mutate(const BooleanNetwork& net, double rate, Rng& rng) {
    assert(rate >= 0.0 && rate <= 1.0);
    BooleanNetwork out = net;
    for (auto& g : out.genomes)
        for (int e = 0; e < net.table_size(); ++e)
            if (uniform_unit(rng) < rate) g.table ^= std::uint32_t(1) << e;
    return out;
}

namespace detail {

// One rank-weighted draw: survivor at position p (best first, s survivors)
// carries weight s - p.
inline std::size_t pick_by_rank(std::size_t num_survivors, Rng& rng) {
    const std::uint64_t s = num_survivors;
    const std::uint64_t total = s * (s + 1) / 2;
    std::uint64_t ticket = uniform_below(rng, total);
    std::size_t pos = 0;
    std::uint64_t w = s;
    while (ticket >= w) {
        ticket -= w;
        --w;
        ++pos;
    }
    return pos;
}

}  // namespace detail

// Refills the population: survivors are retained unchanged and each offspring
// is crossover-then-mutate of two distinct parents drawn with probability
// proportional to rank (fittest heaviest). Offspring j in generation g draws
// all of its randomness from a substream keyed by (master_seed, g, j), so the
// result is independent of evaluation order. Offspring are returned
// unevaluated (fitness NaN).
inline std::vector<Individual> next_generation(
    const std::vector<Individual>& ranked_survivors, int population_size,
    double mutation_rate, std::uint64_t master_seed, int generation) {
    if (ranked_survivors.size() < 2)
        throw DegeneratePopulationError(
            "fewer than two survivors; cannot mate at generation " +
            std::to_string(generation));
    std::vector<Individual> next = ranked_survivors;
    next.reserve(std::size_t(population_size));
    const int offspring = population_size - int(ranked_survivors.size());
    for (int j = 0; j < offspring; ++j) {
        Rng rng = make_rng(derive_seed(master_seed, 0x6f66667370ull,
                                       std::uint64_t(generation),
                                       std::uint64_t(j)));
        const std::size_t pa = detail::pick_by_rank(ranked_survivors.size(), rng);
        std::size_t pb = pa;
        while (pb == pa) pb = detail::pick_by_rank(ranked_survivors.size(), rng);
        BooleanNetwork child =
            crossover(ranked_survivors[pa].net, ranked_survivors[pb].net, rng);
        next.push_back({mutate(child, mutation_rate, rng),
                        std::numeric_limits<double>::quiet_NaN()});
    }
    return next;
}

struct EvolutionResult {
    std::vector<Individual> final_population;  // sorted by fitness, best first
    std::vector<GenerationRecord> history;     // one record per generation, 0..G
};

inline GenerationRecord record_generation(const std::vector<Individual>& pop,
                                          int generation) {
    GenerationRecord r;
    r.generation = generation;
    r.fitness_max = pop.front().fitness;
    r.fitness_min = pop.front().fitness;
    double sum = 0.0;
    for (const Individual& ind : pop) {
        sum += ind.fitness;
        r.fitness_max = std::max(r.fitness_max, ind.fitness);
        r.fitness_min = std::min(r.fitness_min, ind.fitness);
    }
    r.fitness_mean = sum / double(pop.size());
    return r;
}

// Full optimization loop, deterministic given the config. Individuals are
// scored with per-(generation, index) fitness substreams when they are born.
inline EvolutionResult run_evolution(const EvolutionConfig& config) {
    validate(config);
    const auto score = [&](const BooleanNetwork& net, int generation, int index) {
        return fitness(net, config.objective, config.tse_subset_cap,
                       make_rng(derive_seed(config.master_seed, 0x666974ull,
                                            std::uint64_t(generation),
                                            std::uint64_t(index))));
    };

    std::vector<Individual> pop;
    pop.reserve(std::size_t(config.population_size));
    for (int i = 0; i < config.population_size; ++i) {
        Rng rng = make_rng(
            derive_seed(config.master_seed, 0x696e6974ull, std::uint64_t(i)));
        BooleanNetwork net = random_network(rng, config.num_nodes, config.num_inputs);
        pop.push_back({std::move(net), 0.0});
        pop.back().fitness = score(pop.back().net, 0, i);
    }

    EvolutionResult result;
    result.history.push_back(record_generation(pop, 0));
    for (int g = 1; g <= config.generations; ++g) {
        pop = next_generation(cull_and_rank(pop), config.population_size,
                              config.mutation_rate, config.master_seed, g);
        for (std::size_t i = 0; i < pop.size(); ++i)
            if (std::isnan(pop[i].fitness))
                pop[i].fitness = score(pop[i].net, g, int(i));
        result.history.push_back(record_generation(pop, g));
    }

    std::stable_sort(pop.begin(), pop.end(), [](const Individual& a,
                                                const Individual& b) {
        return a.fitness > b.fitness;
    });
    result.final_population = std::move(pop);
    return result;
}

}  // namespace bnevo
