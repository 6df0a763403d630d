#include "gridgen/matpower.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace gridgen {

namespace {

std::size_t line_of(std::string_view text, std::size_t pos) {
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + pos, '\n'));
}

bool identifier_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Locates `mpc.<name> = [ ... ];` and returns the span between the brackets.
std::pair<std::size_t, std::size_t> matrix_span(std::string_view text, std::string_view name) {
    const std::string token = "mpc." + std::string(name);
    std::size_t pos = 0;
    while ((pos = text.find(token, pos)) != std::string_view::npos) {
        const std::size_t end = pos + token.size();
        if (end < text.size() && identifier_char(text[end])) {  // e.g. mpc.gencost, mpc.bus_name
            pos = end;
            continue;
        }
        std::size_t cursor = end;
        while (cursor < text.size() && std::isspace(static_cast<unsigned char>(text[cursor])))
            ++cursor;
        if (cursor >= text.size() || text[cursor] != '=') {
            pos = end;
            continue;
        }
        ++cursor;
        while (cursor < text.size() && std::isspace(static_cast<unsigned char>(text[cursor])))
            ++cursor;
        if (cursor >= text.size() || text[cursor] != '[')
            throw ParseError("expected '[' after mpc." + std::string(name) + " =",
                             line_of(text, cursor < text.size() ? cursor : text.size() - 1));
        const std::size_t open = cursor + 1;
        const std::size_t close = text.find(']', open);
        if (close == std::string_view::npos)
            throw ParseError("unterminated matrix mpc." + std::string(name), line_of(text, open));
        return {open, close};
    }
    throw ParseError("required matrix mpc." + std::string(name) + " not found");
}

MatpowerCase::Table parse_matrix(std::string_view text, std::string_view name) {
    const auto [begin, end] = matrix_span(text, name);
    MatpowerCase::Table table;
    std::vector<double> row;

    std::size_t pos = begin;
    while (pos < end) {
        const char c = text[pos];
        if (c == '%') {  // comment to end of line
            while (pos < end && text[pos] != '\n') ++pos;
            continue;
        }
        if (c == ';' || c == '\n') {
            if (!row.empty()) {
                table.push_back(std::move(row));
                row.clear();
            }
            ++pos;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            ++pos;
            continue;
        }
        std::size_t token_end = pos;
        while (token_end < end && !std::isspace(static_cast<unsigned char>(text[token_end])) &&
               text[token_end] != ';' && text[token_end] != ',' && text[token_end] != '%')
            ++token_end;
        double value = 0;
        const auto [parsed, ec] = std::from_chars(text.data() + pos, text.data() + token_end, value);
        if (ec != std::errc{} || parsed != text.data() + token_end)
            throw ParseError("non-numeric cell '" + std::string(text.substr(pos, token_end - pos)) +
                                 "' in mpc." + std::string(name),
                             line_of(text, pos));
        row.push_back(value);
        pos = token_end;
    }
    if (!row.empty()) table.push_back(std::move(row));
    return table;
}

}  // namespace

MatpowerCase parse_matpower(std::string_view text) {
    MatpowerCase mpc;
    mpc.bus = parse_matrix(text, "bus");
    mpc.gen = parse_matrix(text, "gen");
    mpc.branch = parse_matrix(text, "branch");
    return mpc;
}

MatpowerCase load_matpower_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_matpower(buffer.str());
}

BuiltGraph to_labeled_graph(const MatpowerCase& mpc, const GraphBuildOptions& options) {
    constexpr std::size_t kPd = 2, kQd = 3;
    constexpr std::size_t kGenStatus = 7, kBranchStatus = 10;

    BuiltGraph built;
    std::unordered_map<long long, std::uint32_t> node_of;
    node_of.reserve(mpc.bus.size());

    std::vector<double> pd, qd;
    for (const auto& row : mpc.bus) {
        if (row.empty()) continue;
        const auto bus_id = static_cast<long long>(row[0]);
        if (node_of.contains(bus_id))
            throw ValidationError("duplicate bus id " + std::to_string(bus_id));
        node_of.emplace(bus_id, static_cast<std::uint32_t>(built.bus_ids.size()));
        built.bus_ids.push_back(bus_id);
        pd.push_back(row.size() > kPd ? row[kPd] : 0.0);
        qd.push_back(row.size() > kQd ? row[kQd] : 0.0);
    }

    std::unordered_set<long long> generator_buses;
    for (const auto& row : mpc.gen) {
        if (row.empty()) continue;
        if (!options.include_out_of_service && row.size() > kGenStatus && row[kGenStatus] <= 0)
            continue;
        const auto bus_id = static_cast<long long>(row[0]);
        if (!node_of.contains(bus_id))
            throw ValidationError("gen entry references unknown bus " + std::to_string(bus_id));
        generator_buses.insert(bus_id);
    }

    std::vector<BusType> types(built.bus_ids.size(), BusType::Load);
    for (std::size_t k = 0; k < built.bus_ids.size(); ++k) {
        if (generator_buses.contains(built.bus_ids[k])) types[k] = BusType::Generator;
        else if (pd[k] == 0.0 && qd[k] == 0.0) types[k] = BusType::Interconnection;
    }

    LabeledGraph g(std::move(types));
    for (const auto& row : mpc.branch) {
        if (row.size() < 2) continue;
        if (!options.include_out_of_service && row.size() > kBranchStatus &&
            row[kBranchStatus] <= 0)
            continue;
        const auto from = static_cast<long long>(row[0]);
        const auto to = static_cast<long long>(row[1]);
        if (from == to) continue;  // self-loop branches are dropped
        const auto it_from = node_of.find(from);
        const auto it_to = node_of.find(to);
        if (it_from == node_of.end() || it_to == node_of.end())
            throw ValidationError("branch references unknown bus " +
                                  std::to_string(it_from == node_of.end() ? from : to));
        g.add_edge(it_from->second, it_to->second);  // parallel branches collapse
    }

    built.graph = std::move(g);
    return built;
}

}  // namespace gridgen
