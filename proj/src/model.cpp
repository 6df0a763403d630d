#include "gridgen/model.hpp"

#include <cmath>
#include <vector>

namespace gridgen {

double hamiltonian(const ObservableVector& x, const ParameterVector& beta) {
    double h = 0;
    for (std::size_t i = 0; i < kObservableCount; ++i) {
        if (!std::isfinite(x[i]) || !std::isfinite(beta[i]))
            throw NumericError("hamiltonian requires finite observables and parameters");
        h += beta[i] * x[i];
    }
    return h;
}

ObservableDelta toggle_delta(const LabeledGraph& g, std::uint32_t i, std::uint32_t j) {
    const bool present = g.has_edge(i, j);  // validates the pair
    const double sign = present ? -1.0 : 1.0;

    ObservableDelta delta;
    delta[edge_type_index(g.type_of(i), g.type_of(j))] = sign;

    thread_local std::vector<std::uint32_t> shared;
    g.common_neighbors_into(i, j, shared);
    const auto shared_count = static_cast<std::uint64_t>(shared.size());

    // Each common neighbor w closes one triangle over the toggled edge.
    delta[kT1] = sign * static_cast<double>(shared_count);

    // t2 change: the toggled edge is the base of C(L, 2) 2-triangles, and each
    // side edge (i,w), (j,w) gains/loses one shared partner. When the edge is
    // currently present, the stored counts for the side edges include the
    // partner contributed by (i, j) itself, so subtract it to get the count in
    // the graph without the edge.
    std::uint64_t side = 0;
    for (std::uint32_t w : shared) side += g.common_neighbors(i, w) + g.common_neighbors(j, w);
    if (present) side -= 2 * shared_count;
    const std::uint64_t base = shared_count * (shared_count - 1) / 2;

    delta[kT2] = sign * static_cast<double>(base + side);
    return delta;
}

double log_acceptance_ratio(const ObservableDelta& delta, const ParameterVector& beta) {
    double r = 0;
    for (std::size_t i = 0; i < kObservableCount; ++i) r += beta[i] * delta[i];
    return r;
}

}  // namespace gridgen
