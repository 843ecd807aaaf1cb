// Smallest useful tour of the library: make a random network, measure its
// higher-order information structure, and print the integrated-information
// summary for its spectral bipartition.

#include <cstdio>

#include "bnevo/analysis.hpp"
#include "bnevo/core.hpp"
#include "bnevo/dynamics.hpp"
#include "bnevo/info.hpp"
#include "bnevo/phi.hpp"

int main() {
    using namespace bnevo;

    Rng rng = make_rng(42);
    const BooleanNetwork net = random_network(rng);
    const TransitionMap tm = transition_map(net);
    const CountDistribution dist = intervention_distribution(tm);

    std::printf("O-information    %+.4f bits\n", o_information(dist));
    std::printf("TSE complexity   %.4f bits\n",
                tse_complexity(dist, 75, make_rng(1)));
    std::printf("joint entropy    %.4f bits\n",
                marginal_entropy(dist, NodeSubset::full(net.num_nodes)));

    const AttractorReport attr = find_attractors(tm);
    std::printf("attractors       %d (mean transient %.3f)\n",
                attr.attractor_count, attr.mean_transient);
    std::printf("Derrida          %.4f\n",
                derrida_coefficient(net, 2000, make_rng(2)));

    const IntegratedInformation ii = integrated_information(tm, 3);
    std::printf("phi_wms / phi_r  %.4f / %.4f bits\n", ii.phi_wms_bits,
                ii.phi_r_bits);
    return 0;
}
