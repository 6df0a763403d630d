#include "gridgen/estimator.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "gridgen/chain.hpp"

namespace gridgen {

namespace {

void validate(const EEConfig& cfg) {
    if (cfg.total_steps == 0) throw EmptyInputError("total_steps must be positive");
    if (cfg.update_period == 0) throw EmptyInputError("update_period must be positive");
    if (cfg.total_steps < cfg.update_period)
        throw EmptyInputError("total_steps below update_period: the trace would be empty");
    if (!(cfg.alpha > 0) || !(cfg.c > 0)) throw NumericError("alpha and c must be positive");
    if (!(cfg.burn_in_fraction >= 0) || !(cfg.burn_in_fraction < 1))
        throw NumericError("burn_in_fraction must lie in [0, 1)");
}

int sign_of(double gap) { return gap > 0 ? 1 : (gap < 0 ? -1 : 0); }

}  // namespace

ParameterVector update_parameters(const ParameterVector& beta, const ObservableVector& target,
                                  const ObservableVector& current, const EEConfig& cfg) {
    ParameterVector next = beta;
    const std::size_t active = active_term_count(cfg.model);
    for (std::size_t k = 0; k < active; ++k) {
        const int dir = sign_of(target[k] - current[k]);
        if (dir != 0) next[k] += cfg.alpha * std::max(std::abs(next[k]), cfg.c) * dir;
    }
    if (cfg.enforce_triangle_sign && next[kT1] * next[kT2] > 0) {
        if (std::abs(next[kT1]) <= std::abs(next[kT2])) next[kT1] = 0;
        else next[kT2] = 0;
    }
    return next;
}

ChainTrace estimate(const LabeledGraph& g0, const EEConfig& cfg, const ParameterVector& beta0) {
    validate(cfg);

    ParameterVector beta = beta0;
    if (cfg.model == Model::edges_only) beta[kT1] = beta[kT2] = 0;

    ConnectedChain chain(g0, beta, cfg.seed);
    const ObservableVector target = observables(g0);

    ChainTrace trace;
    trace.steps.reserve(cfg.total_steps / cfg.update_period);
    trace.betas.reserve(cfg.total_steps / cfg.update_period);

    for (std::uint64_t t = 1; t <= cfg.total_steps; ++t) {
        chain.step();
        if (t % cfg.update_period == 0) {
            beta = update_parameters(beta, target, chain.current_observables(), cfg);
            chain.set_parameters(beta);
            trace.steps.push_back(t);
            trace.betas.push_back(beta);
        }
    }

    trace.proposals = chain.proposals();
    trace.accepted = chain.accepted_moves();
    trace.removal_proposals = chain.removal_proposals();
    trace.connectivity_rejections = chain.connectivity_rejections();

    // Mean of the recorded trajectory past the burn-in point.
    const double cutoff = cfg.burn_in_fraction * static_cast<double>(cfg.total_steps);
    ParameterVector mean;
    std::size_t kept = 0;
    for (std::size_t idx = 0; idx < trace.steps.size(); ++idx) {
        if (static_cast<double>(trace.steps[idx]) <= cutoff) continue;
        for (std::size_t k = 0; k < kObservableCount; ++k) mean[k] += trace.betas[idx][k];
        ++kept;
    }
    if (kept == 0) throw EmptyInputError("no recorded updates past the burn-in point");
    for (std::size_t k = 0; k < kObservableCount; ++k) mean[k] /= static_cast<double>(kept);
    trace.final_estimate = mean;
    return trace;
}

void write_trace_csv(std::ostream& out, const ChainTrace& trace) {
    out << "step,beta_pp,beta_pl,beta_pi,beta_ll,beta_li,beta_ii,beta_t1,beta_t2\n";
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        out << trace.steps[i];
        for (std::size_t k = 0; k < kObservableCount; ++k) out << ',' << trace.betas[i][k];
        out << '\n';
    }
}

}  // namespace gridgen
