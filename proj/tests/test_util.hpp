#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "gridgen/graph.hpp"
#include "gridgen/random.hpp"
#include "gridgen/statistics.hpp"

// Brute-force reference implementations and fixture builders. Everything here
// recomputes from the definition (matrix-style loops, explicit enumeration)
// so library results are checked against an independent path.
namespace gridgen::testutil {

using EdgeList = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

inline LabeledGraph make_graph(std::vector<BusType> types, const EdgeList& edges) {
    LabeledGraph g(std::move(types));
    for (const auto& [a, b] : edges) g.add_edge(a, b);
    return g;
}

inline std::vector<BusType> uniform_types(std::uint32_t n, BusType t) {
    return std::vector<BusType>(n, t);
}

// P, L, I, P, L, I, ... starting at `offset`.
inline std::vector<BusType> cycled_types(std::uint32_t n, std::uint32_t offset = 0) {
    std::vector<BusType> types(n);
    for (std::uint32_t i = 0; i < n; ++i) types[i] = static_cast<BusType>((i + offset) % 3);
    return types;
}

inline LabeledGraph path_graph(std::uint32_t n, BusType t = BusType::Load) {
    EdgeList edges;
    for (std::uint32_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return make_graph(uniform_types(n, t), edges);
}

inline LabeledGraph complete_graph(std::uint32_t n, BusType t = BusType::Load) {
    EdgeList edges;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return make_graph(uniform_types(n, t), edges);
}

inline LabeledGraph star_graph(std::uint32_t n, BusType t = BusType::Load) {
    EdgeList edges;
    for (std::uint32_t i = 1; i < n; ++i) edges.emplace_back(0, i);
    return make_graph(uniform_types(n, t), edges);
}

// Graph from an edge bitmask over the pairs (0,1), (0,2), ..., (n-2, n-1) in
// lexicographic order.
inline LabeledGraph graph_from_mask(std::uint32_t n, std::uint64_t mask,
                                    const std::vector<BusType>& types) {
    LabeledGraph g(types);
    std::size_t bit = 0;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j, ++bit)
            if (mask & (1ULL << bit)) g.add_edge(i, j);
    return g;
}

inline std::uint64_t mask_of_graph(const LabeledGraph& g) {
    const std::uint32_t n = g.node_count();
    std::uint64_t mask = 0;
    std::size_t bit = 0;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j, ++bit)
            if (g.has_edge(i, j)) mask |= 1ULL << bit;
    return mask;
}

inline std::uint64_t pair_count(std::uint32_t n) {
    return static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

// Spanning tree plus `extra` random chords; always connected.
inline LabeledGraph random_connected_graph(Rng& rng, std::uint32_t n, std::uint32_t extra,
                                           std::vector<BusType> types) {
    LabeledGraph g(std::move(types));
    for (std::uint32_t i = 1; i < n; ++i)
        g.add_edge(static_cast<std::uint32_t>(rng.below(i)), i);
    for (std::uint32_t k = 0; k < extra; ++k) {
        const auto [a, b] = rng.node_pair(n);
        g.add_edge(a, b);
    }
    return g;
}

inline LabeledGraph random_graph(Rng& rng, std::uint32_t n, double edge_prob,
                                 std::vector<BusType> types) {
    LabeledGraph g(std::move(types));
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            if (rng.uniform01() < edge_prob) g.add_edge(i, j);
    return g;
}

// ---- brute-force oracles ----

inline std::uint64_t brute_choose(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k == 0) return 1;
    return brute_choose(n - 1, k - 1) + brute_choose(n - 1, k);
}

// Ordered-triple sum of A_ij A_jl A_li divided by 6 (distinct 3-cliques).
inline std::uint64_t brute_triangles(const LabeledGraph& g) {
    const std::uint32_t n = g.node_count();
    std::uint64_t ordered = 0;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            for (std::uint32_t l = 0; l < n; ++l)
                if (i != j && j != l && l != i && g.has_edge(i, j) && g.has_edge(j, l) &&
                    g.has_edge(l, i))
                    ++ordered;
    return ordered / 6;
}

// k-triangles by explicit enumeration: for each edge, count the k-subsets of
// nodes adjacent to both endpoints.
inline std::uint64_t brute_k_triangles(const LabeledGraph& g, unsigned k) {
    const std::uint32_t n = g.node_count();
    std::uint64_t total = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            if (!g.has_edge(i, j)) continue;
            std::vector<std::uint32_t> shared;
            for (std::uint32_t w = 0; w < n; ++w)
                if (w != i && w != j && g.has_edge(i, w) && g.has_edge(j, w)) shared.push_back(w);
            if (shared.size() > 20) return ~0ULL;  // fixture too large for enumeration
            for (std::uint64_t mask = 0; mask < (1ULL << shared.size()); ++mask)
                if (static_cast<unsigned>(__builtin_popcountll(mask)) == k) ++total;
        }
    }
    return total;
}

// Eq.-style series: 3 t1 - t2/zeta + t3/zeta^2 - ... through t_{n-2}.
inline double series_alternating(const LabeledGraph& g, double zeta) {
    const std::uint32_t n = g.node_count();
    double sum = 3.0 * static_cast<double>(brute_triangles(g));
    double denom = zeta;
    double sign = -1.0;
    for (unsigned k = 2; k + 2 <= n; ++k) {
        sum += sign * static_cast<double>(brute_k_triangles(g, k)) / denom;
        denom *= zeta;
        sign = -sign;
    }
    return sum;
}

inline ObservableVector brute_observables(const LabeledGraph& g) {
    ObservableVector x;
    const std::uint32_t n = g.node_count();
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            if (g.has_edge(i, j)) x[edge_type_index(g.type_of(i), g.type_of(j))] += 1.0;
    x[kT1] = static_cast<double>(brute_triangles(g));
    x[kT2] = static_cast<double>(brute_k_triangles(g, 2));
    return x;
}

// All-pairs shortest paths by Floyd-Warshall; entries of `kInf` mean no path.
inline std::vector<std::vector<double>> floyd_distances(const LabeledGraph& g) {
    const std::uint32_t n = g.node_count();
    constexpr double kInf = 1e18;
    std::vector<std::vector<double>> d(n, std::vector<double>(n, kInf));
    for (std::uint32_t i = 0; i < n; ++i) d[i][i] = 0;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            if (i != j && g.has_edge(i, j)) d[i][j] = 1;
    for (std::uint32_t k = 0; k < n; ++k)
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

}  // namespace gridgen::testutil
