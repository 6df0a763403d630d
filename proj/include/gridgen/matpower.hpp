#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "gridgen/graph.hpp"

namespace gridgen {

// Raw numeric tables of a MATPOWER case. Column meanings follow the MATPOWER
// case format; only the columns named below are interpreted here.
struct MatpowerCase {
    using Table = std::vector<std::vector<double>>;
    Table bus;     // [0] bus id, [1] type code, [2] Pd (MW), [3] Qd (MVAr), ...
    Table gen;     // [0] bus id, ..., [7] status
    Table branch;  // [0] from bus, [1] to bus, ..., [10] status
};

// Extracts the mpc.bus / mpc.gen / mpc.branch matrices. '%' comments are
// stripped; rows end at ';' or a newline. A missing matrix or a non-numeric
// cell is a ParseError (the latter carries the line number).
MatpowerCase parse_matpower(std::string_view text);

MatpowerCase load_matpower_file(const std::filesystem::path& path);

struct GraphBuildOptions {
    // When false, branches with status 0 are dropped and out-of-service
    // entries in the gen table do not mark their bus as a generator.
    bool include_out_of_service = true;
};

// A graph plus the original bus numbering (node k <-> bus_ids[k]).
struct BuiltGraph {
    LabeledGraph graph;
    std::vector<long long> bus_ids;
};

// One node per bus. Type: Generator if the bus appears in the gen table,
// else Interconnection if Pd = 0 and Qd = 0 (exact comparison), else Load.
// Branches collapse to simple undirected edges; self-loops are dropped.
BuiltGraph to_labeled_graph(const MatpowerCase& mpc, const GraphBuildOptions& options = {});

}  // namespace gridgen
