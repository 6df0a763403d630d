#include "gridgen/sampler.hpp"

#include <cmath>

#include "gridgen/chain.hpp"

namespace gridgen {

Ensemble sample_chain(const LabeledGraph& g0, const ParameterVector& beta,
                      const SamplerConfig& cfg) {
    if (cfg.steps == 0) throw EmptyInputError("sampler needs at least one step");
    if (!(cfg.thinning_multiplier >= 0)) throw NumericError("thinning_multiplier must be >= 0");

    ConnectedChain chain(g0, beta, cfg.seed);
    const auto threshold = static_cast<std::uint64_t>(
        std::ceil(cfg.thinning_multiplier * static_cast<double>(g0.node_count())));

    Ensemble ensemble;
    LabeledGraph last_retained = g0;
    // Symmetric difference between the chain state and last_retained,
    // maintained per accepted toggle instead of recomputed.
    std::uint64_t diff = 0;

    for (std::uint64_t t = 0; t < cfg.steps && ensemble.members.size() < cfg.max_samples; ++t) {
        if (!accepted(chain.step())) continue;
        const auto [i, j] = chain.last_pair();
        const bool now_matches = chain.graph().has_edge(i, j) == last_retained.has_edge(i, j);
        if (now_matches) --diff; else ++diff;
        if (diff >= threshold) {
            last_retained = chain.graph();
            diff = 0;
            ensemble.members.push_back(last_retained);
            ensemble.reports.push_back(compute_report(last_retained));
        }
    }
    return ensemble;
}

AggregateReport ensemble_report(const Ensemble& e) {
    if (e.members.empty()) throw EmptyInputError("ensemble is empty");

    AggregateReport agg;
    agg.count = e.members.size();
    const double n = static_cast<double>(agg.count);

    std::array<double, GridReport::kColumns> mean{};
    for (const GridReport& r : e.reports) {
        const auto cols = r.columns();
        for (std::size_t c = 0; c < cols.size(); ++c) mean[c] += cols[c];
    }
    for (double& v : mean) v /= n;

    std::array<double, GridReport::kColumns> var{};
    if (agg.count > 1) {
        for (const GridReport& r : e.reports) {
            const auto cols = r.columns();
            for (std::size_t c = 0; c < cols.size(); ++c) {
                const double d = cols[c] - mean[c];
                var[c] += d * d;
            }
        }
        for (double& v : var) v /= (n - 1.0);
    }

    agg.mean = GridReport::from_columns(mean);
    std::array<double, GridReport::kColumns> sd{};
    for (std::size_t c = 0; c < sd.size(); ++c) sd[c] = std::sqrt(var[c]);
    agg.stddev = GridReport::from_columns(sd);
    return agg;
}

}  // namespace gridgen
