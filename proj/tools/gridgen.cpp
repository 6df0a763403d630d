// gridgen — batch pipeline for synthetic transmission-grid topologies:
// analyze a MATPOWER case, estimate ERG parameters on the space of connected
// graphs, sample a thinned ensemble, or solve the edges-only model in closed
// form. Stages compose through files (manifest JSON, beta JSON, CSV reports).

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "gridgen/estimator.hpp"
#include "gridgen/free_energy.hpp"
#include "gridgen/manifest.hpp"
#include "gridgen/matpower.hpp"
#include "gridgen/sampler.hpp"
#include "gridgen/statistics.hpp"

namespace fs = std::filesystem;
using namespace gridgen;

namespace {

fs::path resolve_outdir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("GRIDGEN_OUTPUT_DIR"); env && *env) return env;
    return ".";
}

std::string stem_of(const std::string& path) { return fs::path(path).stem().string(); }

BuiltGraph load_case(const std::string& path, bool include_oos) {
    GraphBuildOptions options;
    options.include_out_of_service = include_oos;
    return to_labeled_graph(load_matpower_file(path), options);
}

// Closed-form edge parameters as the starting point; coordinates whose target
// sits on the boundary (count 0 or at capacity) start at 0 instead.
ParameterVector default_beta0(const LabeledGraph& g) {
    const auto census = TypeCensus::of(g);
    const auto counts = edge_type_counts(g);
    ParameterVector beta0;
    for (std::size_t idx = 0; idx < kEdgeTypeCount; ++idx) {
        const auto capacity = max_edges(census, idx);
        if (counts[idx] > 0 && counts[idx] < capacity)
            beta0[idx] = std::log(static_cast<double>(counts[idx]) /
                                  static_cast<double>(capacity - counts[idx]));
    }
    return beta0;
}

void write_text_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path.string());
    out << text;
}

int run_analyze(const std::string& input, const std::string& outdir_flag, bool include_oos) {
    const auto built = load_case(input, include_oos);
    const auto outdir = resolve_outdir(outdir_flag);
    fs::create_directories(outdir);

    const auto report = compute_report(built.graph);
    const auto name = stem_of(input);
    const std::string csv = report_csv_header() + report_csv_row(name, report);
    write_text_file(outdir / (name + "_report.csv"), csv);

    write_manifest_file(outdir / (name + "_manifest.json"),
                        make_manifest(built.graph, built.bus_ids, {input, 0, std::nullopt}));

    std::cout << csv;
    return 0;
}

int run_estimate(const std::string& input, const std::string& outdir_flag, bool include_oos,
                 const EEConfig& cfg) {
    const auto built = load_case(input, include_oos);
    if (!built.graph.is_connected())
        throw DisconnectedError("estimation requires a connected reference grid: " + input);

    const auto trace = estimate(built.graph, cfg, default_beta0(built.graph));

    const auto outdir = resolve_outdir(outdir_flag);
    fs::create_directories(outdir);
    const auto name = stem_of(input);

    std::ofstream trace_out(outdir / (name + "_trace.csv"), std::ios::binary);
    write_trace_csv(trace_out, trace);
    write_beta_file(outdir / (name + "_beta.json"), trace.final_estimate, cfg.model);

    const double pct = 100.0 / static_cast<double>(trace.proposals);
    std::cout << "steps: " << trace.proposals << "\n"
              << "accepted moves: " << trace.accepted << " ("
              << static_cast<double>(trace.accepted) * pct << "%)\n"
              << "connectivity rejections: " << trace.connectivity_rejections << " ("
              << static_cast<double>(trace.connectivity_rejections) * pct << "%)\n";
    std::cout << "beta:";
    for (std::size_t k = 0; k < active_term_count(cfg.model); ++k)
        std::cout << ' ' << kObservableNames[k] << '=' << trace.final_estimate[k];
    std::cout << '\n';
    return 0;
}

int run_sample(const std::string& manifest_path, const std::string& beta_path,
               const std::string& outdir_flag, SamplerConfig cfg, unsigned chains) {
    const auto manifest = read_manifest_file(manifest_path);
    const auto g0 = manifest_to_graph(manifest);
    if (!g0.is_connected())
        throw DisconnectedError("sampling requires a connected reference grid");
    const auto [beta, model] = read_beta_file(beta_path);
    for (double b : beta.v)
        if (!std::isfinite(b)) throw NumericError("beta file contains a non-finite value");

    Ensemble ensemble;
    if (chains <= 1) {
        ensemble = sample_chain(g0, beta, cfg);
    } else {
        // Independent chains on worker seeds; merge is stable in chain order.
        const std::uint64_t per_chain = (cfg.max_samples + chains - 1) / chains;
        std::vector<std::future<Ensemble>> futures;
        for (unsigned c = 0; c < chains; ++c) {
            SamplerConfig chain_cfg = cfg;
            chain_cfg.max_samples = per_chain;
            chain_cfg.seed = Rng::stream_seed(cfg.seed, c);
            futures.push_back(std::async(std::launch::async, [g0, beta, chain_cfg] {
                return sample_chain(g0, beta, chain_cfg);
            }));
        }
        for (auto& f : futures) {
            auto part = f.get();
            for (std::size_t s = 0; s < part.members.size(); ++s) {
                if (ensemble.members.size() >= cfg.max_samples) break;
                ensemble.members.push_back(std::move(part.members[s]));
                ensemble.reports.push_back(part.reports[s]);
            }
        }
    }
    if (ensemble.members.empty())
        throw EmptyInputError("no samples retained; raise --steps or lower --thin");

    const auto outdir = resolve_outdir(outdir_flag);
    const auto sample_dir = outdir / "samples";
    fs::create_directories(sample_dir);

    std::vector<std::string> sample_files;
    for (std::size_t s = 0; s < ensemble.members.size(); ++s) {
        char name[32];
        std::snprintf(name, sizeof(name), "sample_%04zu.edges", s);
        std::ofstream out(sample_dir / name, std::ios::binary);
        write_edge_list(out, ensemble.members[s]);
        sample_files.push_back(std::string("samples/") + name);
    }

    const auto aggregate = ensemble_report(ensemble);
    std::string csv = report_csv_header();
    for (std::size_t s = 0; s < ensemble.reports.size(); ++s) {
        char name[32];
        std::snprintf(name, sizeof(name), "sample_%04zu", s);
        csv += report_csv_row(name, ensemble.reports[s]);
    }
    csv += report_csv_row("sample_avg", aggregate.mean);
    csv += report_csv_row("sample_std", aggregate.stddev);
    write_text_file(outdir / "ensemble_report.csv", csv);

    // Ensemble manifest: provenance plus the retained sample files.
    std::string files_json = "[";
    for (std::size_t s = 0; s < sample_files.size(); ++s)
        files_json += (s ? std::string(", \"") : std::string("\"")) + sample_files[s] + "\"";
    files_json += "]";
    write_text_file(outdir / "ensemble_manifest.json",
                    std::string("{\n  \"reference_manifest\": \"") + manifest_path +
                        "\",\n  \"beta_file\": \"" + beta_path + "\",\n  \"seed\": " +
                        std::to_string(cfg.seed) + ",\n  \"chains\": " + std::to_string(chains) +
                        ",\n  \"count\": " + std::to_string(sample_files.size()) +
                        ",\n  \"samples\": " + files_json + "\n}\n");

    std::cout << report_csv_header() << report_csv_row("sample_avg", aggregate.mean)
              << report_csv_row("sample_std", aggregate.stddev);
    std::cout << "retained " << ensemble.members.size() << " samples\n";
    return 0;
}

int run_closed_form(const std::string& input, const std::string& outdir_flag, bool include_oos) {
    const auto built = load_case(input, include_oos);
    const auto census = TypeCensus::of(built.graph);
    const auto counts = edge_type_counts(built.graph);

    std::array<double, kEdgeTypeCount> targets{};
    for (std::size_t idx = 0; idx < kEdgeTypeCount; ++idx)
        targets[idx] = static_cast<double>(counts[idx]);

    const auto beta6 = closed_form_parameters(targets, census);
    const auto recovered = exact_mean(beta6, census);

    ParameterVector beta;
    for (std::size_t idx = 0; idx < kEdgeTypeCount; ++idx) beta[idx] = beta6[idx];

    const auto outdir = resolve_outdir(outdir_flag);
    fs::create_directories(outdir);
    const auto name = stem_of(input);
    write_beta_file(outdir / (name + "_closed_form.json"), beta, Model::edges_only);

    std::string table = "observable,target,max_edges,beta,recovered_mean\n";
    for (std::size_t idx = 0; idx < kEdgeTypeCount; ++idx) {
        table += std::string(kEdgeTypeNames[idx]) + "," + std::to_string(counts[idx]) + "," +
                 std::to_string(max_edges(census, idx)) + "," + std::to_string(beta6[idx]) + "," +
                 std::to_string(recovered[idx]) + "\n";
    }
    write_text_file(outdir / (name + "_closed_form.csv"), table);

    std::cout << table;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Synthetic transmission-grid topology generation via exponential random graphs"};
    app.require_subcommand(1);

    std::string input, outdir, manifest_path, beta_path;
    bool include_oos = true;

    auto add_case_options = [&](CLI::App* cmd) {
        cmd->add_option("case", input, "MATPOWER case file")->required();
        cmd->add_option("-o,--outdir", outdir, "output directory (default: $GRIDGEN_OUTPUT_DIR or .)");
        cmd->add_flag("--include-oos-branches,!--no-include-oos-branches", include_oos,
                      "keep out-of-service branches and generators (default: on)");
    };

    auto* analyze = app.add_subcommand("analyze", "statistics battery + manifest for a case");
    add_case_options(analyze);

    EEConfig ee;
    auto* est = app.add_subcommand("estimate", "estimate ERG parameters on connected graphs");
    add_case_options(est);
    est->add_option("--T", ee.total_steps, "chain steps")
        ->default_val(std::uint64_t{20'000'000})
        ->check(CLI::PositiveNumber);
    est->add_option("--alpha", ee.alpha, "learning rate")->default_val(0.001);
    est->add_option("--c", ee.c, "update floor")->default_val(0.001);
    est->add_option("--theta", ee.update_period, "steps between parameter updates")
        ->default_val(std::uint64_t{100})
        ->check(CLI::PositiveNumber);
    est->add_option("--burn-in", ee.burn_in_fraction, "trajectory fraction discarded")
        ->default_val(0.75);
    est->add_option("--seed", ee.seed, "RNG seed")->default_val(std::uint64_t{0});
    std::string model_name = "full";
    est->add_option("--model", model_name, "full (8-term) or edges (6-term)")
        ->check(CLI::IsMember({"full", "edges"}));
    est->add_flag("--enforce-triangle-sign", ee.enforce_triangle_sign,
                  "project updates onto beta_t1 * beta_t2 <= 0");

    SamplerConfig sc;
    unsigned chains = 1;
    auto* sample = app.add_subcommand("sample", "draw a thinned ensemble at fixed parameters");
    sample->add_option("--manifest", manifest_path, "reference manifest JSON")->required();
    sample->add_option("--beta", beta_path, "parameter JSON")->required();
    sample->add_option("-o,--outdir", outdir, "output directory");
    sample->add_option("--steps", sc.steps, "chain steps")
        ->default_val(std::uint64_t{5'000'000})
        ->check(CLI::PositiveNumber);
    sample->add_option("--max-samples", sc.max_samples, "stop after this many samples")
        ->default_val(std::uint64_t{1100})
        ->check(CLI::PositiveNumber);
    sample->add_option("--thin", sc.thinning_multiplier,
                       "retention threshold multiplier (x n, symmetric-difference scale)")
        ->default_val(1.0)
        ->check(CLI::NonNegativeNumber);
    sample->add_option("--seed", sc.seed, "RNG seed")->default_val(std::uint64_t{0});
    sample->add_option("--chains", chains, "independent chains run in parallel")
        ->default_val(1u)
        ->check(CLI::PositiveNumber);

    auto* closed = app.add_subcommand("closed-form", "edges-only model parameters in closed form");
    add_case_options(closed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze)) return run_analyze(input, outdir, include_oos);
        if (app.got_subcommand(est)) {
            ee.model = model_name == "edges" ? Model::edges_only : Model::full;
            return run_estimate(input, outdir, include_oos, ee);
        }
        if (app.got_subcommand(sample)) return run_sample(manifest_path, beta_path, outdir, sc, chains);
        if (app.got_subcommand(closed)) return run_closed_form(input, outdir, include_oos);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
