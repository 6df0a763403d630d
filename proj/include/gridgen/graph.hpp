#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gridgen/errors.hpp"

namespace gridgen {

// The three bus classes of a transmission grid.
enum class BusType : std::uint8_t { Generator = 0, Load = 1, Interconnection = 2 };

char bus_type_char(BusType t);
BusType bus_type_from_char(char c);

// Canonical index of an unordered bus-type pair: PP, PL, PI, LL, LI, II.
std::size_t edge_type_index(BusType a, BusType b);

// Inverse of edge_type_index.
std::pair<BusType, BusType> edge_type_pair(std::size_t index);

inline constexpr std::size_t kEdgeTypeCount = 6;

extern const char* const kEdgeTypeNames[kEdgeTypeCount];  // "PP", "PL", ...

enum class EdgePresence { added, removed };

// Simple undirected graph with a bus-type label per node. Neighbor lists are
// kept sorted so common-neighbor intersection runs in O(deg_i + deg_j); that
// intersection is the inner loop of every chain step.
class LabeledGraph {
public:
    LabeledGraph() = default;
    explicit LabeledGraph(std::vector<BusType> types);

    std::uint32_t node_count() const { return static_cast<std::uint32_t>(types_.size()); }
    std::uint64_t edge_count() const { return m_; }

    BusType type_of(std::uint32_t i) const { return types_[i]; }
    const std::vector<BusType>& types() const { return types_; }

    bool has_edge(std::uint32_t i, std::uint32_t j) const;

    // Flips the presence of edge (i, j). Returns whether the edge was added
    // or removed. i == j or an out-of-range id is an InvalidNodeError.
    EdgePresence toggle_edge(std::uint32_t i, std::uint32_t j);

    // Inserts edge (i, j) if absent; returns false if it was already there.
    bool add_edge(std::uint32_t i, std::uint32_t j);

    const std::vector<std::uint32_t>& neighbors(std::uint32_t i) const { return adj_[i]; }
    std::uint32_t degree(std::uint32_t i) const { return static_cast<std::uint32_t>(adj_[i].size()); }

    bool is_connected() const;

    // True iff j stays reachable from i once edge (i, j) is excluded. The
    // graph is not modified. Edge absent -> MissingEdgeError.
    bool removal_keeps_connected(std::uint32_t i, std::uint32_t j) const;

    // |N_i ∩ N_j|; (i, j) need not be an edge.
    std::uint64_t common_neighbors(std::uint32_t i, std::uint32_t j) const;

    // Same intersection, materialized into `out` (cleared first).
    void common_neighbors_into(std::uint32_t i, std::uint32_t j,
                               std::vector<std::uint32_t>& out) const;

    // All edges as (i, j) with i < j, lexicographically sorted.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

    bool operator==(const LabeledGraph&) const = default;

private:
    void check_nodes(std::uint32_t i, std::uint32_t j) const;

    std::uint64_t m_ = 0;
    std::vector<BusType> types_;
    std::vector<std::vector<std::uint32_t>> adj_;
};

// |E_a △ E_b| for two graphs on the same node count; the adjacency-matrix
// Hamming distance is exactly twice this value.
std::uint64_t edge_symmetric_difference(const LabeledGraph& a, const LabeledGraph& b);

}  // namespace gridgen
