#include "gridgen/manifest.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

namespace gridgen {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_real(double value) {
    std::ostringstream out;
    out.precision(4);
    out << value;
    return out.str();
}

constexpr const char* kBetaKeys[kObservableCount] = {"pp", "pl", "pi", "ll",
                                                     "li", "ii", "t1", "t2"};

}  // namespace

GraphManifest make_manifest(const LabeledGraph& g, std::vector<long long> bus_ids,
                            Provenance provenance) {
    GraphManifest m;
    m.n = g.node_count();
    if (bus_ids.empty()) {
        m.bus_ids.resize(m.n);
        for (std::uint32_t k = 0; k < m.n; ++k) m.bus_ids[k] = k;
    } else {
        if (bus_ids.size() != m.n)
            throw DimensionError("bus id map size does not match node count");
        m.bus_ids = std::move(bus_ids);
    }
    m.types = g.types();
    m.edges = g.edges();
    m.provenance = std::move(provenance);
    return m;
}

std::string manifest_to_json(const GraphManifest& manifest) {
    ordered_json j;
    j["n"] = manifest.n;
    j["bus_ids"] = manifest.bus_ids;
    std::string type_string;
    type_string.reserve(manifest.types.size());
    for (BusType t : manifest.types) type_string.push_back(bus_type_char(t));
    j["types"] = type_string;
    auto& edges = j["edges"] = ordered_json::array();
    for (const auto& [a, b] : manifest.edges) edges.push_back({a, b});
    ordered_json prov;
    prov["source"] = manifest.provenance.source;
    prov["seed"] = manifest.provenance.seed;
    if (manifest.provenance.beta) {
        ordered_json beta;
        for (std::size_t k = 0; k < kObservableCount; ++k)
            beta[kBetaKeys[k]] = (*manifest.provenance.beta)[k];
        prov["beta"] = beta;
    }
    j["provenance"] = prov;
    return j.dump(2) + "\n";
}

GraphManifest manifest_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed manifest JSON: ") + e.what());
    }
    GraphManifest m;
    try {
        m.n = j.at("n").get<std::uint32_t>();
        m.bus_ids = j.at("bus_ids").get<std::vector<long long>>();
        const auto type_string = j.at("types").get<std::string>();
        m.types.reserve(type_string.size());
        for (char c : type_string) m.types.push_back(bus_type_from_char(c));
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ValidationError("edge entry is not a pair");
            m.edges.emplace_back(e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>());
        }
        if (j.contains("provenance")) {
            const auto& prov = j["provenance"];
            m.provenance.source = prov.value("source", std::string{});
            m.provenance.seed = prov.value("seed", std::uint64_t{0});
            if (prov.contains("beta")) {
                ParameterVector beta;
                for (std::size_t k = 0; k < kObservableCount; ++k)
                    beta[k] = prov["beta"].value(kBetaKeys[k], 0.0);
                m.provenance.beta = beta;
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("manifest field error: ") + e.what());
    }

    if (m.types.size() != m.n) throw ValidationError("type string length does not match n");
    if (m.bus_ids.size() != m.n) throw ValidationError("bus id map length does not match n");
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (auto& [a, b] : m.edges) {
        if (a == b) throw ValidationError("manifest contains a self-loop edge");
        if (a >= m.n || b >= m.n) throw ValidationError("manifest edge references node out of range");
        if (a > b) std::swap(a, b);
        if (!seen.emplace(a, b).second) throw ValidationError("manifest contains a duplicate edge");
    }
    return m;
}

LabeledGraph manifest_to_graph(const GraphManifest& manifest) {
    LabeledGraph g(manifest.types);
    for (const auto& [a, b] : manifest.edges) g.add_edge(a, b);
    return g;
}

void write_manifest_file(const std::filesystem::path& path, const GraphManifest& manifest) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write manifest: " + path.string());
    out << manifest_to_json(manifest);
}

GraphManifest read_manifest_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open manifest: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return manifest_from_json(buffer.str());
}

std::string report_csv_header() {
    std::string header = "name";
    for (const char* column : GridReport::column_names()) {
        header += ',';
        header += column;
    }
    header += '\n';
    return header;
}

std::string report_csv_row(std::string_view name, const GridReport& report) {
    std::string row(name);
    const auto cols = report.columns();
    // Integer-valued columns print as integers; the rest at table precision.
    for (std::size_t c = 0; c < cols.size(); ++c) {
        row += ',';
        const double v = cols[c];
        if (v == std::floor(v) && std::abs(v) < 1e15)
            row += std::to_string(static_cast<long long>(v));
        else
            row += format_real(v);
    }
    row += '\n';
    return row;
}

void write_edge_list(std::ostream& out, const LabeledGraph& g) {
    for (const auto& [a, b] : g.edges()) out << a << ' ' << b << '\n';
}

std::string beta_to_json(const ParameterVector& beta, Model model) {
    ordered_json j;
    j["model"] = model == Model::full ? "full" : "edges";
    ordered_json values;
    for (std::size_t k = 0; k < active_term_count(model); ++k) values[kBetaKeys[k]] = beta[k];
    j["beta"] = values;
    return j.dump(2) + "\n";
}

std::pair<ParameterVector, Model> beta_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed beta JSON: ") + e.what());
    }
    ParameterVector beta;
    Model model = Model::full;
    try {
        if (j.contains("model")) {
            const auto name = j["model"].get<std::string>();
            if (name == "full") model = Model::full;
            else if (name == "edges") model = Model::edges_only;
            else throw ValidationError("unknown model name '" + name + "'");
        }
        const auto& values = j.at("beta");
        for (std::size_t k = 0; k < kObservableCount; ++k) beta[k] = values.value(kBetaKeys[k], 0.0);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("beta field error: ") + e.what());
    }
    if (!j.contains("model") && beta[kT1] == 0.0 && beta[kT2] == 0.0) model = Model::edges_only;
    return {beta, model};
}

void write_beta_file(const std::filesystem::path& path, const ParameterVector& beta, Model model) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write beta file: " + path.string());
    out << beta_to_json(beta, model);
}

std::pair<ParameterVector, Model> read_beta_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open beta file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return beta_from_json(buffer.str());
}

}  // namespace gridgen
