#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "bnevo/rng.hpp"

namespace bnevo {

// Global configuration of the whole network, node i's state held in bit i.
using GlobalState = std::uint32_t;

inline constexpr int kDefaultNodes = 12;
inline constexpr int kDefaultInputs = 5;
inline constexpr int kMaxNodes = 16;
inline constexpr int kMaxInputs = 5;

// Truth table of a single node, 2^k entries packed with entry e at bit e.
struct NodeGenome {
    std::uint32_t table = 0;

    bool entry(int e) const { return (table >> e) & 1u; }
    void set_entry(int e, bool v) {
        table = v ? (table | (1u << e)) : (table & ~(1u << e));
    }

    bool operator==(const NodeGenome&) const = default;
};

// A ring-lattice boolean network. Node i reads the k nodes at ring offsets
// -floor(k/2) .. +(k-1-floor(k/2)) from itself (for k=5: -2,-1,0,+1,+2); the
// topology is identical for every network so genomes stay crossover-compatible.
struct BooleanNetwork {
    int num_nodes = kDefaultNodes;
    int num_inputs = kDefaultInputs;
    std::vector<NodeGenome> genomes;

    BooleanNetwork() : genomes(kDefaultNodes) {}
    BooleanNetwork(int nodes, int inputs)
        : num_nodes(nodes), num_inputs(inputs), genomes(std::size_t(nodes)) {
        assert(nodes >= 1 && nodes <= kMaxNodes);
        assert(inputs >= 1 && inputs <= kMaxInputs);
    }

    int table_size() const { return 1 << num_inputs; }
    GlobalState state_count() const { return GlobalState(1) << num_nodes; }
    std::uint32_t table_mask() const {
        return table_size() == 32 ? 0xffffffffu : ((1u << table_size()) - 1u);
    }

    bool operator==(const BooleanNetwork&) const = default;
};

// Packs the states of node's parents into a truth-table index, most negative
// ring offset as the most significant bit.
inline int input_index(const BooleanNetwork& net, GlobalState state, int node) {
    assert(node >= 0 && node < net.num_nodes);
    const int lo = net.num_inputs / 2;
    int idx = 0;
    for (int p = 0; p < net.num_inputs; ++p) {
        const int neighbor = (node - lo + p + 2 * net.num_nodes) % net.num_nodes;
        idx = (idx << 1) | int((state >> neighbor) & 1u);
    }
    return idx;
}

// Synchronous update of every node.
inline GlobalState step(const BooleanNetwork& net, GlobalState state) {
    GlobalState out = 0;
    for (int i = 0; i < net.num_nodes; ++i) {
        if (net.genomes[std::size_t(i)].entry(input_index(net, state, i)))
            out |= GlobalState(1) << i;
    }
    return out;
}

// Deterministic successor of every global state; rows of the one-hot
// transition matrix collapsed to indices.
struct TransitionMap {
    int num_nodes = kDefaultNodes;
    std::vector<GlobalState> next;

    GlobalState state_count() const { return GlobalState(1) << num_nodes; }
};

inline TransitionMap transition_map(const BooleanNetwork& net) {
    TransitionMap tm;
    tm.num_nodes = net.num_nodes;
    const GlobalState count = net.state_count();
    tm.next.resize(count);

    // parent ids per node, hoisted out of the state loop
    std::vector<int> parents(std::size_t(net.num_nodes) * net.num_inputs);
    const int lo = net.num_inputs / 2;
    for (int i = 0; i < net.num_nodes; ++i)
        for (int p = 0; p < net.num_inputs; ++p)
            parents[std::size_t(i) * net.num_inputs + p] =
                (i - lo + p + 2 * net.num_nodes) % net.num_nodes;

    for (GlobalState s = 0; s < count; ++s) {
        GlobalState out = 0;
        const int* par = parents.data();
        for (int i = 0; i < net.num_nodes; ++i) {
            int idx = 0;
            for (int p = 0; p < net.num_inputs; ++p)
                idx = (idx << 1) | int((s >> par[p]) & 1u);
            par += net.num_inputs;
            if (net.genomes[std::size_t(i)].entry(idx)) out |= GlobalState(1) << i;
        }
        tm.next[s] = out;
    }
    return tm;
}

// Every truth-table bit an independent fair coin from the stream.
inline BooleanNetwork random_network(Rng& rng, int num_nodes = kDefaultNodes,
                                     int num_inputs = kDefaultInputs) {
    BooleanNetwork net(num_nodes, num_inputs);
    for (auto& g : net.genomes)
        for (int e = 0; e < net.table_size(); ++e)
            g.set_entry(e, random_bit(rng));
    return net;
}

}  // namespace bnevo
