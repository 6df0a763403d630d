#include "gridgen/free_energy.hpp"

#include <cmath>
#include <string>

namespace gridgen {

std::uint64_t TypeCensus::count(BusType t) const {
    switch (t) {
        case BusType::Generator: return p;
        case BusType::Load: return l;
        case BusType::Interconnection: return i;
    }
    return 0;
}

TypeCensus TypeCensus::of(const LabeledGraph& g) {
    TypeCensus c;
    for (std::uint32_t node = 0; node < g.node_count(); ++node) {
        switch (g.type_of(node)) {
            case BusType::Generator: ++c.p; break;
            case BusType::Load: ++c.l; break;
            case BusType::Interconnection: ++c.i; break;
        }
    }
    return c;
}

std::uint64_t max_edges(const TypeCensus& census, BusType a, BusType b) {
    const std::uint64_t na = census.count(a);
    const std::uint64_t nb = census.count(b);
    if (a == b) return na * (na - (na > 0 ? 1 : 0)) / 2;
    return na * nb;
}

std::uint64_t max_edges(const TypeCensus& census, std::size_t pair_index) {
    const auto [a, b] = edge_type_pair(pair_index);
    return max_edges(census, a, b);
}

std::array<double, kEdgeTypeCount> closed_form_parameters(
    const std::array<double, kEdgeTypeCount>& targets, const TypeCensus& census) {
    std::array<double, kEdgeTypeCount> beta{};
    for (std::size_t idx = 0; idx < kEdgeTypeCount; ++idx) {
        const double capacity = static_cast<double>(max_edges(census, idx));
        const double target = targets[idx];
        if (capacity == 0.0 && target == 0.0) {
            beta[idx] = 0.0;  // no candidate pairs of this type; any value is vacuous
            continue;
        }
        if (!(target > 0.0) || !(target < capacity))
            throw BoundaryError("target for " + std::string(kEdgeTypeNames[idx]) +
                                " must lie strictly between 0 and " + std::to_string(capacity));
        beta[idx] = std::log(target / (capacity - target));
    }
    return beta;
}

std::array<double, kEdgeTypeCount> exact_mean(const std::array<double, kEdgeTypeCount>& beta,
                                              const TypeCensus& census) {
    std::array<double, kEdgeTypeCount> mean{};
    for (std::size_t idx = 0; idx < kEdgeTypeCount; ++idx) {
        const double capacity = static_cast<double>(max_edges(census, idx));
        mean[idx] = capacity / (1.0 + std::exp(-beta[idx]));
    }
    return mean;
}

LabeledGraph sample_simple_model(const std::array<double, kEdgeTypeCount>& beta,
                                 const TypeCensus& census, Rng& rng) {
    std::vector<BusType> types;
    types.reserve(census.total());
    types.insert(types.end(), census.p, BusType::Generator);
    types.insert(types.end(), census.l, BusType::Load);
    types.insert(types.end(), census.i, BusType::Interconnection);

    std::array<double, kEdgeTypeCount> prob{};
    for (std::size_t idx = 0; idx < kEdgeTypeCount; ++idx)
        prob[idx] = 1.0 / (1.0 + std::exp(-beta[idx]));

    LabeledGraph g(std::move(types));
    const std::uint32_t n = g.node_count();
    for (std::uint32_t i = 0; i + 1 < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            if (rng.uniform01() < prob[edge_type_index(g.type_of(i), g.type_of(j))])
                g.add_edge(i, j);
    return g;
}

}  // namespace gridgen
