#pragma once

#include <cstdint>
#include <vector>

#include "gridgen/graph.hpp"
#include "gridgen/model.hpp"
#include "gridgen/statistics.hpp"

namespace gridgen {

struct SamplerConfig {
    std::uint64_t steps = 5'000'000;
    // Retention threshold on the edge symmetric-difference scale is
    // ceil(thinning_multiplier * n); the default 1.0 is adjacency-matrix
    // Hamming distance 2n. Zero retains every accepted state.
    double thinning_multiplier = 1.0;
    std::uint64_t max_samples = 1100;
    std::uint64_t seed = 0;
};

// Thinned, connected samples drawn at fixed parameters, with the statistics
// row of every member.
struct Ensemble {
    std::vector<LabeledGraph> members;
    std::vector<GridReport> reports;
};

// Per-column mean and unbiased standard deviation over ensemble members
// (std = 0 for a single member).
struct AggregateReport {
    GridReport mean;
    GridReport stddev;
    std::size_t count = 0;
};

// Runs the connected-graph chain from g0 with fixed beta. After every
// accepted move, the state is retained iff its edge symmetric difference
// from the last retained graph reaches the thinning threshold; g0 itself is
// never included. Stops after cfg.steps proposals or cfg.max_samples
// retained samples.
Ensemble sample_chain(const LabeledGraph& g0, const ParameterVector& beta,
                      const SamplerConfig& cfg);

AggregateReport ensemble_report(const Ensemble& e);

}  // namespace gridgen
