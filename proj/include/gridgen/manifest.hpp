#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gridgen/graph.hpp"
#include "gridgen/model.hpp"
#include "gridgen/statistics.hpp"

namespace gridgen {

struct Provenance {
    std::string source;                   // file the topology came from, or generator tag
    std::uint64_t seed = 0;               // 0 when no randomness was involved
    std::optional<ParameterVector> beta;  // parameters used to generate, if any
};

// Serializable description of a labeled topology.
struct GraphManifest {
    std::uint32_t n = 0;
    std::vector<long long> bus_ids;  // node -> original bus number (node index if synthetic)
    std::vector<BusType> types;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // i < j, sorted
    Provenance provenance;
};

GraphManifest make_manifest(const LabeledGraph& g, std::vector<long long> bus_ids,
                            Provenance provenance);

std::string manifest_to_json(const GraphManifest& manifest);

// Parses and validates (edge list free of duplicates/self-pairs, ids in
// range); malformed input is a ParseError, inconsistent content a
// ValidationError.
GraphManifest manifest_from_json(const std::string& text);

LabeledGraph manifest_to_graph(const GraphManifest& manifest);

void write_manifest_file(const std::filesystem::path& path, const GraphManifest& manifest);
GraphManifest read_manifest_file(const std::filesystem::path& path);

// CSV report rows with the fixed statistics header.
std::string report_csv_header();
std::string report_csv_row(std::string_view name, const GridReport& report);

// Plain edge list, one "i j" pair per line, 0-based.
void write_edge_list(std::ostream& out, const LabeledGraph& g);

// beta <-> JSON. Accepts six- or eight-coefficient objects; missing triangle
// coefficients read as zero.
std::string beta_to_json(const ParameterVector& beta, Model model);
std::pair<ParameterVector, Model> beta_from_json(const std::string& text);
void write_beta_file(const std::filesystem::path& path, const ParameterVector& beta, Model model);
std::pair<ParameterVector, Model> read_beta_file(const std::filesystem::path& path);

}  // namespace gridgen
