#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bnevo/core.hpp"
#include "bnevo/rng.hpp"

namespace bnevo {

// A subset of nodes, as a bit mask over node indices.
struct NodeSubset {
    std::uint32_t mask = 0;

    int size() const { return std::popcount(mask); }
    bool empty() const { return mask == 0; }
    bool contains(int node) const { return (mask >> node) & 1u; }

    static NodeSubset full(int num_nodes) {
        return {num_nodes == 32 ? 0xffffffffu : ((1u << num_nodes) - 1u)};
    }
    static NodeSubset single(int node) { return {1u << node}; }
    NodeSubset complement(int num_nodes) const {
        return {full(num_nodes).mask & ~mask};
    }
    std::vector<int> members() const {
        std::vector<int> out;
        for (int i = 0; i < 32; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    bool operator==(const NodeSubset&) const = default;
};

// Exact occupancy counts over all global states. Counts always sum to the
// number of states (2^num_nodes); probabilities become floating point only
// inside the entropy evaluation.
struct CountDistribution {
    int num_nodes = kDefaultNodes;
    std::vector<std::uint32_t> counts;

    std::uint32_t total() const { return std::uint32_t(1) << num_nodes; }
};

// Image of the uniform (maximum-entropy) distribution after one update step:
// one walker per state, each advanced once.
inline CountDistribution intervention_distribution(const TransitionMap& tm) {
    CountDistribution d;
    d.num_nodes = tm.num_nodes;
    d.counts.assign(tm.state_count(), 0);
    for (GlobalState s = 0; s < tm.state_count(); ++s) d.counts[tm.next[s]]++;
    return d;
}

namespace detail {

// c * log2(c) with the 0 log 0 = 0 convention, tabulated for exact counts.
inline double xlog2x(std::uint32_t c) {
    static const std::vector<double> table = [] {
        std::vector<double> t(65537);
        t[0] = 0.0;
        for (std::uint32_t i = 1; i < t.size(); ++i)
            t[i] = double(i) * std::log2(double(i));
        return t;
    }();
    assert(c < table.size());
    return table[c];
}

// Gathers the bits of `value` selected by `mask` into a compact low-order index.
inline std::uint32_t compact_bits(std::uint32_t value, std::uint32_t mask) {
    std::uint32_t out = 0;
    int k = 0;
    while (mask != 0) {
        const std::uint32_t low = mask & (std::uint32_t(0) - mask);
        if (value & low) out |= std::uint32_t(1) << k;
        ++k;
        mask &= mask - 1;
    }
    return out;
}

inline double entropy_of_counts(const std::vector<std::uint32_t>& bins,
                                std::uint32_t total) {
    double acc = 0.0;
    for (std::uint32_t c : bins) acc += xlog2x(c);
    return std::log2(double(total)) - acc / double(total);
}

// Nonzero (state, count) pairs; lets subset marginalizations skip the empty
// part of the state space, which dominates for canalized networks.
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> support_of(
    const CountDistribution& d) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> sup;
    for (std::uint32_t s = 0; s < d.counts.size(); ++s)
        if (d.counts[s] != 0) sup.emplace_back(s, d.counts[s]);
    return sup;
}

// Marginal entropy over `mask`, using caller-owned scratch. `bins` must be
// zeroed and at least 2^|mask| long on entry; it is returned zeroed.
inline double subset_entropy_sparse(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& support,
    std::uint32_t mask, std::uint32_t total, std::vector<std::uint32_t>& bins,
    std::vector<std::uint32_t>& touched) {
    touched.clear();
    for (const auto& [state, count] : support) {
        const std::uint32_t idx = compact_bits(state, mask);
        if (bins[idx] == 0) touched.push_back(idx);
        bins[idx] += count;
    }
    double acc = 0.0;
    for (std::uint32_t idx : touched) {
        acc += xlog2x(bins[idx]);
        bins[idx] = 0;
    }
    return std::log2(double(total)) - acc / double(total);
}

inline std::array<double, 32> single_node_entropies(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& support,
    int num_nodes, std::uint32_t total) {
    std::array<std::uint32_t, 32> ones{};
    for (const auto& [state, count] : support)
        for (int i = 0; i < num_nodes; ++i)
            if ((state >> i) & 1u) ones[std::size_t(i)] += count;
    std::array<double, 32> h{};
    for (int i = 0; i < num_nodes; ++i) {
        const std::uint32_t c1 = ones[std::size_t(i)];
        h[std::size_t(i)] = std::log2(double(total)) -
                            (xlog2x(c1) + xlog2x(total - c1)) / double(total);
    }
    return h;
}

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r = r * std::uint64_t(n - i) / std::uint64_t(i + 1);
    return r;
}

// All masks over n bits with exactly k bits set, in ascending numeric order.
inline std::vector<std::uint32_t> all_masks_of_size(int n, int k) {
    std::vector<std::uint32_t> out;
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    std::uint32_t m = (std::uint32_t(1) << k) - 1;
    const std::uint32_t limit = std::uint32_t(1) << n;
    while (m < limit) {
        out.push_back(m);
        const std::uint32_t c = m & (std::uint32_t(0) - m);
        const std::uint32_t r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    return out;
}

}  // namespace detail

// Shannon entropy (base 2) of the distribution projected onto `subset`.
// The empty subset has zero entropy by convention.
inline double marginal_entropy(const CountDistribution& d, NodeSubset subset) {
    if (subset.empty()) return 0.0;
    assert((subset.mask & ~NodeSubset::full(d.num_nodes).mask) == 0);
    std::vector<std::uint32_t> bins(std::size_t(1) << subset.size(), 0);
    for (std::uint32_t s = 0; s < d.counts.size(); ++s)
        if (d.counts[s] != 0)
            bins[detail::compact_bits(s, subset.mask)] += d.counts[s];
    return detail::entropy_of_counts(bins, d.total());
}

// Total correlation: sum of single-node entropies minus the joint entropy.
// Zero for singletons and for any product of independent marginals.
inline double total_correlation(const CountDistribution& d, NodeSubset subset) {
    if (subset.empty()) return 0.0;
    double singles = 0.0;
    for (int i : subset.members())
        singles += marginal_entropy(d, NodeSubset::single(i));
    return singles - marginal_entropy(d, subset);
}

// O-information: (2-N) TC(X) + sum over i of TC(X without node i).
// Positive means redundancy-dominated, negative synergy-dominated.
inline double o_information(const CountDistribution& d) {
    const int n = d.num_nodes;
    const auto support = detail::support_of(d);
    const auto singles = detail::single_node_entropies(support, n, d.total());

    std::vector<std::uint32_t> bins(d.counts.size(), 0);
    std::vector<std::uint32_t> touched;
    touched.reserve(support.size());

    const NodeSubset full = NodeSubset::full(n);
    double sum_singles = 0.0;
    for (int i = 0; i < n; ++i) sum_singles += singles[std::size_t(i)];

    const double h_full = detail::subset_entropy_sparse(support, full.mask,
                                                        d.total(), bins, touched);
    double omega = double(2 - n) * (sum_singles - h_full);
    for (int i = 0; i < n; ++i) {
        const NodeSubset loo = NodeSubset::single(i).complement(n);
        const double h_loo = detail::subset_entropy_sparse(
            support, loo.mask, d.total(), bins, touched);
        omega += (sum_singles - singles[std::size_t(i)]) - h_loo;
    }
    return omega;
}

// Tononi-Sporns-Edelman complexity. For each scale i in 1..N-1 the expected
// subset total correlation is exact when C(N,i) <= max_subsets_per_scale and
// otherwise averaged over that many subsets sampled uniformly without
// replacement from `rng`. The stream is taken by value so parallel callers
// never share it.
inline double tse_complexity(const CountDistribution& d,
                             int max_subsets_per_scale, Rng rng) {
    assert(max_subsets_per_scale >= 1);
    const int n = d.num_nodes;
    const auto support = detail::support_of(d);
    const auto singles = detail::single_node_entropies(support, n, d.total());

    std::vector<std::uint32_t> bins(d.counts.size(), 0);
    std::vector<std::uint32_t> touched;
    touched.reserve(support.size());

    double sum_singles = 0.0;
    for (int i = 0; i < n; ++i) sum_singles += singles[std::size_t(i)];
    const double h_full = detail::subset_entropy_sparse(
        support, NodeSubset::full(n).mask, d.total(), bins, touched);
    const double tc_full = sum_singles - h_full;

    const auto tc_of = [&](std::uint32_t mask) {
        double s = 0.0;
        for (std::uint32_t m = mask; m != 0; m &= m - 1)
            s += singles[std::size_t(std::countr_zero(m))];
        return s - detail::subset_entropy_sparse(support, mask, d.total(), bins,
                                                 touched);
    };

    double tse = 0.0;
    for (int scale = 1; scale < n; ++scale) {
        std::vector<std::uint32_t> masks;
        if (detail::binomial(n, scale) <= std::uint64_t(max_subsets_per_scale)) {
            masks = detail::all_masks_of_size(n, scale);
        } else {
            std::unordered_set<std::uint32_t> seen;
            masks.reserve(std::size_t(max_subsets_per_scale));
            while (int(masks.size()) < max_subsets_per_scale) {
                std::uint32_t m = 0;
                for (int node : sample_distinct(rng, n, scale))
                    m |= std::uint32_t(1) << node;
                if (seen.insert(m).second) masks.push_back(m);
            }
        }
        double mean_tc = 0.0;
        for (std::uint32_t m : masks) mean_tc += tc_of(m);
        mean_tc /= double(masks.size());
        tse += (double(scale) / n) * tc_full - mean_tc;
    }
    return tse;
}

// Joint counts of (subset of bits at time t, subset of bits at time t+1) under
// the maximum-entropy time-t distribution. At most one cell per source state
// is nonzero, so cells are stored sparsely, sorted by (past, future) index.
struct LaggedJointDistribution {
    struct Cell {
        std::uint32_t past_idx;
        std::uint32_t future_idx;
        std::uint32_t count;
    };
    NodeSubset past, future;
    std::vector<Cell> cells;
    std::uint32_t total = 0;
};

inline LaggedJointDistribution lagged_joint_distribution(const TransitionMap& tm,
                                                         NodeSubset past,
                                                         NodeSubset future) {
    LaggedJointDistribution j;
    j.past = past;
    j.future = future;
    j.total = tm.state_count();

    const int fb = future.size();
    std::vector<std::uint64_t> keys;
    keys.reserve(tm.state_count());
    for (GlobalState s = 0; s < tm.state_count(); ++s) {
        const std::uint64_t p = detail::compact_bits(s, past.mask);
        const std::uint64_t f = detail::compact_bits(tm.next[s], future.mask);
        keys.push_back((p << fb) | f);
    }
    std::sort(keys.begin(), keys.end());
    for (std::size_t i = 0; i < keys.size();) {
        std::size_t rep = i;
        while (rep < keys.size() && keys[rep] == keys[i]) ++rep;
        j.cells.push_back({std::uint32_t(keys[i] >> fb),
                           std::uint32_t(keys[i] & ((std::uint64_t(1) << fb) - 1)),
                           std::uint32_t(rep - i)});
        i = rep;
    }
    return j;
}

// Mutual information between the past and future blocks of a lagged joint.
inline double lagged_mutual_information(const LaggedJointDistribution& j) {
    const std::uint32_t total = j.total;
    double h_joint = 0.0;
    for (const auto& c : j.cells) h_joint += detail::xlog2x(c.count);
    h_joint = std::log2(double(total)) - h_joint / double(total);

    // cells are sorted by past index first: run-length for the past marginal
    double acc_past = 0.0;
    std::uint32_t run = 0;
    for (std::size_t i = 0; i < j.cells.size(); ++i) {
        run += j.cells[i].count;
        if (i + 1 == j.cells.size() ||
            j.cells[i + 1].past_idx != j.cells[i].past_idx) {
            acc_past += detail::xlog2x(run);
            run = 0;
        }
    }
    const double h_past = std::log2(double(total)) - acc_past / double(total);

    std::vector<std::uint32_t> fbins(std::size_t(1) << j.future.size(), 0);
    for (const auto& c : j.cells) fbins[c.future_idx] += c.count;
    const double h_future = detail::entropy_of_counts(fbins, total);

    return h_past + h_future - h_joint;
}

inline double lagged_mutual_information(const TransitionMap& tm, NodeSubset past,
                                        NodeSubset future) {
    return lagged_mutual_information(lagged_joint_distribution(tm, past, future));
}

}  // namespace bnevo
