#include "gridgen/chain.hpp"

#include <cmath>

namespace gridgen {

ConnectedChain::ConnectedChain(LabeledGraph g, ParameterVector beta, std::uint64_t seed)
    : g_(std::move(g)), beta_(beta), rng_(seed) {
    if (g_.node_count() < 2) throw InvalidNodeError("chain needs at least two nodes");
    if (!g_.is_connected()) throw DisconnectedError("chain must start from a connected graph");
    x_ = observables(g_);
}

StepResult ConnectedChain::step() {
    ++proposals_;
    const auto [i, j] = rng_.node_pair(g_.node_count());
    last_pair_ = {i, j};

    const bool removal = g_.has_edge(i, j);
    if (removal) {
        ++removal_proposals_;
        if (!g_.removal_keeps_connected(i, j)) {
            ++connectivity_rejections_;
            return StepResult::rejected_disconnect;
        }
    }

    const ObservableDelta delta = toggle_delta(g_, i, j);
    const double log_ratio = log_acceptance_ratio(delta, beta_);
    if (log_ratio < 0.0 && rng_.uniform01() >= std::exp(log_ratio)) return StepResult::rejected;

    g_.toggle_edge(i, j);
    apply_delta(x_, delta);
    ++accepted_;
    return removal ? StepResult::accepted_remove : StepResult::accepted_add;
}

}  // namespace gridgen
