#pragma once

#include <array>
#include <cstdint>

#include "gridgen/graph.hpp"
#include "gridgen/statistics.hpp"

namespace gridgen {

// Coefficients of the Hamiltonian, index-aligned with ObservableVector.
struct ParameterVector {
    std::array<double, kObservableCount> v{};

    double& operator[](std::size_t i) { return v[i]; }
    double operator[](std::size_t i) const { return v[i]; }
    bool operator==(const ParameterVector&) const = default;
};

// Which Hamiltonian is in play: all eight terms, or the edge-count-only
// ablation (triangle coefficients pinned to zero and never updated).
enum class Model { full, edges_only };

inline constexpr std::size_t active_term_count(Model m) {
    return m == Model::full ? kObservableCount : kEdgeTypeCount;
}

// Change in the observable vector caused by one edge toggle.
struct ObservableDelta {
    std::array<double, kObservableCount> v{};

    double& operator[](std::size_t i) { return v[i]; }
    double operator[](std::size_t i) const { return v[i]; }
    bool operator==(const ObservableDelta&) const = default;
};

// H(x) = sum_i beta_i * x_i. Non-finite inputs are a NumericError.
double hamiltonian(const ObservableVector& x, const ParameterVector& beta);

// Observable change if edge (i, j) were toggled; g itself is not modified.
ObservableDelta toggle_delta(const LabeledGraph& g, std::uint32_t i, std::uint32_t j);

// sum_i beta_i * delta_i; the acceptance probability is min(1, exp(result)).
double log_acceptance_ratio(const ObservableDelta& delta, const ParameterVector& beta);

inline void apply_delta(ObservableVector& x, const ObservableDelta& d) {
    for (std::size_t i = 0; i < kObservableCount; ++i) x[i] += d[i];
}

}  // namespace gridgen
