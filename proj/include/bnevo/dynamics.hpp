#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

#include "bnevo/core.hpp"
#include "bnevo/rng.hpp"

namespace bnevo {

// Exhaustive decomposition of the functional graph: every state belongs to
// exactly one basin and its transient counts the steps until first entering
// the cycle (zero for states on a cycle).
struct AttractorReport {
    int attractor_count = 0;
    std::vector<int> cycle_lengths;      // per attractor
    std::vector<int> basin_sizes;        // per attractor, sums to the state count
    std::vector<int> transient_lengths;  // per state
    std::vector<int> attractor_index;    // per state
    double mean_transient = 0.0;
};

inline AttractorReport find_attractors(const TransitionMap& tm) {
    const std::uint32_t count = tm.state_count();
    AttractorReport rep;
    rep.transient_lengths.assign(count, 0);
    rep.attractor_index.assign(count, -1);

    enum : std::uint8_t { kUnseen = 0, kOnPath = 1, kDone = 2 };
    std::vector<std::uint8_t> status(count, kUnseen);
    std::vector<std::uint32_t> path;

    for (std::uint32_t start = 0; start < count; ++start) {
        if (status[start] != kUnseen) continue;
        path.clear();
        std::uint32_t v = start;
        while (status[v] == kUnseen) {
            status[v] = kOnPath;
            path.push_back(v);
            v = tm.next[v];
        }
        if (status[v] == kOnPath) {
            // new cycle discovered inside the current path
            std::size_t entry = 0;
            while (path[entry] != v) ++entry;
            const int id = rep.attractor_count++;
            rep.cycle_lengths.push_back(int(path.size() - entry));
            rep.basin_sizes.push_back(0);
            for (std::size_t i = entry; i < path.size(); ++i) {
                rep.attractor_index[path[i]] = id;
                rep.transient_lengths[path[i]] = 0;
            }
            for (std::size_t i = 0; i < entry; ++i) {
                rep.attractor_index[path[i]] = id;
                rep.transient_lengths[path[i]] = int(entry - i);
            }
        } else {
            // path drains into already-classified territory
            const int id = rep.attractor_index[v];
            const int base = rep.transient_lengths[v];
            for (std::size_t i = 0; i < path.size(); ++i) {
                rep.attractor_index[path[i]] = id;
                rep.transient_lengths[path[i]] = int(path.size() - i) + base;
            }
        }
        for (std::uint32_t s : path) status[s] = kDone;
    }

    std::uint64_t total_transient = 0;
    for (std::uint32_t s = 0; s < count; ++s) {
        rep.basin_sizes[std::size_t(rep.attractor_index[s])]++;
        total_transient += std::uint64_t(rep.transient_lengths[s]);
    }
    rep.mean_transient = double(total_transient) / double(count);
    return rep;
}

// Derrida coefficient: for m in {1, 2}, sample states uniformly, flip m
// distinct bits, advance original and copy one step, and average the Hamming
// distance between the successors. The coefficient is the least-squares slope
// of mean distance against m with the curve anchored at the zero-perturbation
// point (m=0 gives distance 0 identically). States are drawn with
// replacement; the m flipped bits within one perturbation are distinct.
inline double derrida_coefficient(const BooleanNetwork& net, int samples_per_m,
                                  Rng rng) {
    assert(samples_per_m >= 2);
    const GlobalState count = net.state_count();
    double mean_dist[3] = {0.0, 0.0, 0.0};  // index by m
    for (int m = 1; m <= 2; ++m) {
        std::uint64_t sum = 0;
        for (int t = 0; t < samples_per_m; ++t) {
            const GlobalState s = GlobalState(uniform_below(rng, count));
            GlobalState perturbed = s;
            for (int bit : sample_distinct(rng, net.num_nodes, m))
                perturbed ^= GlobalState(1) << bit;
            sum += std::uint64_t(std::popcount(step(net, s) ^ step(net, perturbed)));
        }
        mean_dist[m] = double(sum) / double(samples_per_m);
    }
    // OLS over (0,0), (1,mean1), (2,mean2)
    const double xs[3] = {0.0, 1.0, 2.0};
    const double x_bar = 1.0;
    const double y_bar = (mean_dist[0] + mean_dist[1] + mean_dist[2]) / 3.0;
    double sxy = 0.0, sxx = 0.0;
    for (int i = 0; i < 3; ++i) {
        sxy += (xs[i] - x_bar) * (mean_dist[i] - y_bar);
        sxx += (xs[i] - x_bar) * (xs[i] - x_bar);
    }
    return sxy / sxx;
}

}  // namespace bnevo
