#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "bnevo/core.hpp"
#include "bnevo/info.hpp"

namespace bnevo {

// Symmetric effective-connectivity matrix: entry (i, j) is the total lagged
// predictive information flowing between nodes i and j in both directions.
// Diagonal unused (zero).
struct EffectiveMatrix {
    int num_nodes = kDefaultNodes;
    std::vector<double> weights;  // row-major num_nodes x num_nodes

    double at(int i, int j) const {
        return weights[std::size_t(i) * num_nodes + std::size_t(j)];
    }
    double& at(int i, int j) {
        return weights[std::size_t(i) * num_nodes + std::size_t(j)];
    }
};

struct Bipartition {
    NodeSubset alpha, beta;

    bool valid(int num_nodes) const {
        return !alpha.empty() && !beta.empty() && (alpha.mask & beta.mask) == 0 &&
               (alpha.mask | beta.mask) == NodeSubset::full(num_nodes).mask;
    }
};

class EigenSolveError : public std::runtime_error {
  public:
    explicit EigenSolveError(const std::string& what) : std::runtime_error(what) {}
};

inline EffectiveMatrix effective_matrix(const TransitionMap& tm) {
    EffectiveMatrix em;
    em.num_nodes = tm.num_nodes;
    em.weights.assign(std::size_t(tm.num_nodes) * tm.num_nodes, 0.0);
    for (int i = 0; i < tm.num_nodes; ++i) {
        for (int j = i + 1; j < tm.num_nodes; ++j) {
            const double w =
                lagged_mutual_information(tm, NodeSubset::single(i),
                                          NodeSubset::single(j)) +
                lagged_mutual_information(tm, NodeSubset::single(j),
                                          NodeSubset::single(i));
            em.at(i, j) = w;
            em.at(j, i) = w;
        }
    }
    return em;
}

// Spectral bipartition via the Fiedler vector of the weighted graph Laplacian.
// Independent noise in (0, 1e-6) is added per undirected edge so the graph is
// connected; nodes with nonnegative vector entries form alpha, and a split at
// the median entry is the fallback when one side comes out empty.
inline Bipartition fiedler_bipartition(const EffectiveMatrix& em,
                                       std::uint64_t noise_seed) {
    const int n = em.num_nodes;
    assert(n >= 2);
    Rng rng = make_rng(noise_seed);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double w = em.at(i, j) + 1e-6 * uniform_open(rng);
            m(i, j) = w;
            m(j, i) = w;
        }

    Eigen::MatrixXd lap = -m;
    for (int i = 0; i < n; ++i) lap(i, i) = m.row(i).sum();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
    const auto dump_matrix = [&] {
        std::ostringstream os;
        os << lap;
        return os.str();
    };
    if (solver.info() != Eigen::Success)
        throw EigenSolveError("eigen decomposition failed on Laplacian:\n" +
                              dump_matrix());
    const Eigen::VectorXd fiedler = solver.eigenvectors().col(1);
    const double lambda = solver.eigenvalues()(1);
    if ((lap * fiedler - lambda * fiedler).norm() >= 1e-8)
        throw EigenSolveError("Fiedler eigenpair residual above 1e-8 on:\n" +
                              dump_matrix());

    Bipartition part;
    for (int i = 0; i < n; ++i) {
        if (fiedler(i) >= 0.0)
            part.alpha.mask |= 1u << i;
        else
            part.beta.mask |= 1u << i;
    }
    if (part.alpha.empty() || part.beta.empty()) {
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return fiedler(a) < fiedler(b); });
        part.alpha.mask = part.beta.mask = 0;
        for (int i = 0; i < n; ++i) {
            if (i < n / 2)
                part.beta.mask |= 1u << order[std::size_t(i)];
            else
                part.alpha.mask |= 1u << order[std::size_t(i)];
        }
    }
    return part;
}

// Whole-minus-sum integrated information across a bipartition; can go
// negative when the parts share dynamic redundancy.
inline double phi_wms(const TransitionMap& tm, const Bipartition& part) {
    assert(part.valid(tm.num_nodes));
    const NodeSubset full = NodeSubset::full(tm.num_nodes);
    return lagged_mutual_information(tm, full, full) -
           lagged_mutual_information(tm, part.alpha, part.alpha) -
           lagged_mutual_information(tm, part.beta, part.beta);
}

// Redundancy-corrected integrated information: whole-minus-sum plus the
// minimum lagged mutual information over all four ordered block pairs.
inline double phi_r(const TransitionMap& tm, const Bipartition& part) {
    assert(part.valid(tm.num_nodes));
    const NodeSubset blocks[2] = {part.alpha, part.beta};
    double min_mi = std::numeric_limits<double>::infinity();
    for (const NodeSubset& g : blocks)
        for (const NodeSubset& d : blocks)
            min_mi = std::min(min_mi, lagged_mutual_information(tm, g, d));
    return phi_wms(tm, part) + min_mi;
}

struct IntegratedInformation {
    Bipartition partition;
    double phi_wms_bits = 0.0;
    double phi_r_bits = 0.0;
};

inline IntegratedInformation integrated_information(const TransitionMap& tm,
                                                    std::uint64_t noise_seed) {
    IntegratedInformation out;
    out.partition = fiedler_bipartition(effective_matrix(tm), noise_seed);
    out.phi_wms_bits = phi_wms(tm, out.partition);
    out.phi_r_bits = phi_r(tm, out.partition);
    return out;
}

inline IntegratedInformation integrated_information(const BooleanNetwork& net,
                                                    std::uint64_t noise_seed) {
    return integrated_information(transition_map(net), noise_seed);
}

}  // namespace bnevo
