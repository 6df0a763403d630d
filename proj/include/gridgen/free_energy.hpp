#pragma once

#include <array>
#include <cstdint>

#include "gridgen/graph.hpp"
#include "gridgen/random.hpp"

namespace gridgen {

// Node counts per bus type.
struct TypeCensus {
    std::uint64_t p = 0;
    std::uint64_t l = 0;
    std::uint64_t i = 0;

    std::uint64_t total() const { return p + l + i; }
    std::uint64_t count(BusType t) const;

    static TypeCensus of(const LabeledGraph& g);
};

// Maximum number of edges with the given endpoint-type pair: |a|*|b| for
// distinct types, |a|*(|a|-1)/2 for a same-type pair (unordered node pairs).
std::uint64_t max_edges(const TypeCensus& census, BusType a, BusType b);
std::uint64_t max_edges(const TypeCensus& census, std::size_t pair_index);

// Inverts the edges-only model's moment equations: beta_i = ln(x_i / (M_i - x_i)).
// Targets at 0 or >= M_i are a BoundaryError (the parameter would be infinite).
std::array<double, kEdgeTypeCount> closed_form_parameters(
    const std::array<double, kEdgeTypeCount>& targets, const TypeCensus& census);

// E[e_i] = M_i * sigma(beta_i); exact for the edges-only model, where pair
// occupancies are independent Bernoullis.
std::array<double, kEdgeTypeCount> exact_mean(const std::array<double, kEdgeTypeCount>& beta,
                                              const TypeCensus& census);

// Draws one graph from the edges-only model: every candidate pair included
// independently with probability sigma(beta of its type pair). Nodes are laid
// out as census.p generators, then census.l loads, then census.i
// interconnections. The draw may be disconnected.
LabeledGraph sample_simple_model(const std::array<double, kEdgeTypeCount>& beta,
                                 const TypeCensus& census, Rng& rng);

}  // namespace gridgen
