#pragma once

#include <cstdint>
#include <utility>

#include "gridgen/graph.hpp"
#include "gridgen/model.hpp"
#include "gridgen/random.hpp"

namespace gridgen {

enum class StepResult {
    accepted_add,
    accepted_remove,
    rejected,             // Metropolis-Hastings rejection
    rejected_disconnect,  // removal would split the graph
};

inline bool accepted(StepResult r) {
    return r == StepResult::accepted_add || r == StepResult::accepted_remove;
}

// Single-edge-toggle Metropolis-Hastings chain restricted to connected
// graphs. One step: draw a uniform node pair; a removal that disconnects the
// graph is rejected outright; otherwise accept with min(1, exp(beta . delta)).
// Observables are maintained incrementally. Used with fixed parameters for
// sampling and with dynamically adjusted parameters for estimation.
class ConnectedChain {
public:
    ConnectedChain(LabeledGraph g, ParameterVector beta, std::uint64_t seed);

    StepResult step();

    const LabeledGraph& graph() const { return g_; }
    const ObservableVector& current_observables() const { return x_; }

    const ParameterVector& parameters() const { return beta_; }
    void set_parameters(const ParameterVector& beta) { beta_ = beta; }

    std::uint64_t proposals() const { return proposals_; }
    std::uint64_t accepted_moves() const { return accepted_; }
    std::uint64_t removal_proposals() const { return removal_proposals_; }
    std::uint64_t connectivity_rejections() const { return connectivity_rejections_; }

    // Node pair of the most recent proposal.
    std::pair<std::uint32_t, std::uint32_t> last_pair() const { return last_pair_; }

private:
    LabeledGraph g_;
    ObservableVector x_;
    ParameterVector beta_;
    Rng rng_;
    std::pair<std::uint32_t, std::uint32_t> last_pair_{0, 0};
    std::uint64_t proposals_ = 0;
    std::uint64_t accepted_ = 0;
    std::uint64_t removal_proposals_ = 0;
    std::uint64_t connectivity_rejections_ = 0;
};

}  // namespace gridgen
