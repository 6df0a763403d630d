#include "gridgen/graph.hpp"

#include <algorithm>
#include <string>

namespace gridgen {

const char* const kEdgeTypeNames[kEdgeTypeCount] = {"PP", "PL", "PI", "LL", "LI", "II"};

char bus_type_char(BusType t) {
    switch (t) {
        case BusType::Generator: return 'P';
        case BusType::Load: return 'L';
        case BusType::Interconnection: return 'I';
    }
    throw InvalidNodeError("invalid bus type");
}

BusType bus_type_from_char(char c) {
    switch (c) {
        case 'P': return BusType::Generator;
        case 'L': return BusType::Load;
        case 'I': return BusType::Interconnection;
    }
    throw ValidationError(std::string("unknown bus type character '") + c + "'");
}

std::size_t edge_type_index(BusType a, BusType b) {
    auto lo = static_cast<std::size_t>(std::min(a, b));
    auto hi = static_cast<std::size_t>(std::max(a, b));
    // (0,0)->0 (0,1)->1 (0,2)->2 (1,1)->3 (1,2)->4 (2,2)->5
    return lo * 3 - lo * (lo - 1) / 2 + (hi - lo);
}

std::pair<BusType, BusType> edge_type_pair(std::size_t index) {
    static constexpr std::pair<BusType, BusType> table[kEdgeTypeCount] = {
        {BusType::Generator, BusType::Generator},
        {BusType::Generator, BusType::Load},
        {BusType::Generator, BusType::Interconnection},
        {BusType::Load, BusType::Load},
        {BusType::Load, BusType::Interconnection},
        {BusType::Interconnection, BusType::Interconnection},
    };
    return table[index];
}

LabeledGraph::LabeledGraph(std::vector<BusType> types)
    : types_(std::move(types)), adj_(types_.size()) {}

void LabeledGraph::check_nodes(std::uint32_t i, std::uint32_t j) const {
    if (i == j)
        throw InvalidNodeError("self-loops are not allowed (node " + std::to_string(i) + ")");
    if (i >= node_count() || j >= node_count())
        throw InvalidNodeError("node id out of range: (" + std::to_string(i) + ", " +
                               std::to_string(j) + ") with n=" + std::to_string(node_count()));
}

bool LabeledGraph::has_edge(std::uint32_t i, std::uint32_t j) const {
    check_nodes(i, j);
    const auto& a = adj_[degree(i) <= degree(j) ? i : j];
    const std::uint32_t target = degree(i) <= degree(j) ? j : i;
    return std::binary_search(a.begin(), a.end(), target);
}

EdgePresence LabeledGraph::toggle_edge(std::uint32_t i, std::uint32_t j) {
    check_nodes(i, j);
    auto& ai = adj_[i];
    auto it = std::lower_bound(ai.begin(), ai.end(), j);
    if (it != ai.end() && *it == j) {
        ai.erase(it);
        auto& aj = adj_[j];
        aj.erase(std::lower_bound(aj.begin(), aj.end(), i));
        --m_;
        return EdgePresence::removed;
    }
    ai.insert(it, j);
    auto& aj = adj_[j];
    aj.insert(std::lower_bound(aj.begin(), aj.end(), i), i);
    ++m_;
    return EdgePresence::added;
}

bool LabeledGraph::add_edge(std::uint32_t i, std::uint32_t j) {
    check_nodes(i, j);
    auto& ai = adj_[i];
    auto it = std::lower_bound(ai.begin(), ai.end(), j);
    if (it != ai.end() && *it == j) return false;
    ai.insert(it, j);
    auto& aj = adj_[j];
    aj.insert(std::lower_bound(aj.begin(), aj.end(), i), i);
    ++m_;
    return true;
}

namespace {

// Scratch buffers for the traversals below; per-thread so concurrent readers
// of distinct graphs stay independent.
thread_local std::vector<std::uint32_t> bfs_queue;
thread_local std::vector<char> bfs_seen;

}  // namespace

bool LabeledGraph::is_connected() const {
    const std::uint32_t n = node_count();
    if (n == 0) return true;
    bfs_seen.assign(n, 0);
    bfs_queue.clear();
    bfs_queue.push_back(0);
    bfs_seen[0] = 1;
    std::size_t head = 0;
    std::uint32_t reached = 1;
    while (head < bfs_queue.size()) {
        const std::uint32_t u = bfs_queue[head++];
        for (std::uint32_t v : adj_[u]) {
            if (!bfs_seen[v]) {
                bfs_seen[v] = 1;
                ++reached;
                bfs_queue.push_back(v);
            }
        }
    }
    return reached == n;
}

bool LabeledGraph::removal_keeps_connected(std::uint32_t i, std::uint32_t j) const {
    if (!has_edge(i, j))
        throw MissingEdgeError("edge (" + std::to_string(i) + ", " + std::to_string(j) +
                               ") is not present");
    // Degree-1 endpoints would be isolated outright.
    if (degree(i) == 1 || degree(j) == 1) return false;
    const std::uint32_t n = node_count();
    bfs_seen.assign(n, 0);
    bfs_queue.clear();
    bfs_queue.push_back(i);
    bfs_seen[i] = 1;
    std::size_t head = 0;
    while (head < bfs_queue.size()) {
        const std::uint32_t u = bfs_queue[head++];
        for (std::uint32_t v : adj_[u]) {
            if (u == i && v == j) continue;  // the excluded edge
            if (v == j) return true;
            if (!bfs_seen[v]) {
                bfs_seen[v] = 1;
                bfs_queue.push_back(v);
            }
        }
    }
    return false;
}

std::uint64_t LabeledGraph::common_neighbors(std::uint32_t i, std::uint32_t j) const {
    check_nodes(i, j);
    const auto& a = adj_[i];
    const auto& b = adj_[j];
    std::uint64_t count = 0;
    std::size_t x = 0, y = 0;
    while (x < a.size() && y < b.size()) {
        if (a[x] < b[y]) ++x;
        else if (a[x] > b[y]) ++y;
        else { ++count; ++x; ++y; }
    }
    return count;
}

void LabeledGraph::common_neighbors_into(std::uint32_t i, std::uint32_t j,
                                         std::vector<std::uint32_t>& out) const {
    check_nodes(i, j);
    out.clear();
    const auto& a = adj_[i];
    const auto& b = adj_[j];
    std::size_t x = 0, y = 0;
    while (x < a.size() && y < b.size()) {
        if (a[x] < b[y]) ++x;
        else if (a[x] > b[y]) ++y;
        else { out.push_back(a[x]); ++x; ++y; }
    }
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> LabeledGraph::edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    out.reserve(m_);
    for (std::uint32_t i = 0; i < node_count(); ++i)
        for (std::uint32_t j : adj_[i])
            if (j > i) out.emplace_back(i, j);
    return out;
}

std::uint64_t edge_symmetric_difference(const LabeledGraph& a, const LabeledGraph& b) {
    if (a.node_count() != b.node_count())
        throw DimensionError("graphs have different node counts: " +
                             std::to_string(a.node_count()) + " vs " +
                             std::to_string(b.node_count()));
    std::uint64_t diff = 0;
    for (std::uint32_t i = 0; i < a.node_count(); ++i) {
        const auto& na = a.neighbors(i);
        const auto& nb = b.neighbors(i);
        std::size_t x = 0, y = 0;
        while (x < na.size() && y < nb.size()) {
            if (na[x] < nb[y]) { diff += na[x] > i; ++x; }
            else if (na[x] > nb[y]) { diff += nb[y] > i; ++y; }
            else { ++x; ++y; }
        }
        for (; x < na.size(); ++x) diff += na[x] > i;
        for (; y < nb.size(); ++y) diff += nb[y] > i;
    }
    return diff;
}

}  // namespace gridgen
