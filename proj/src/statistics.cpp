#include "gridgen/statistics.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <algorithm>
#include <cmath>
#include <vector>

namespace gridgen {

const char* const kObservableNames[kObservableCount] = {"e_pp", "e_pl", "e_pi", "e_ll",
                                                        "e_li", "e_ii", "t1",   "t2"};

std::array<std::uint64_t, kEdgeTypeCount> edge_type_counts(const LabeledGraph& g) {
    std::array<std::uint64_t, kEdgeTypeCount> counts{};
    for (std::uint32_t i = 0; i < g.node_count(); ++i)
        for (std::uint32_t j : g.neighbors(i))
            if (j > i) ++counts[edge_type_index(g.type_of(i), g.type_of(j))];
    return counts;
}

std::uint64_t triangle_count(const LabeledGraph& g) {
    std::uint64_t incidences = 0;  // sum over edges of shared-neighbor counts
    for (std::uint32_t i = 0; i < g.node_count(); ++i)
        for (std::uint32_t j : g.neighbors(i))
            if (j > i) incidences += g.common_neighbors(i, j);
    return incidences / 3;
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return result;
}

}  // namespace

std::uint64_t k_triangle_count(const LabeledGraph& g, unsigned k) {
    if (k < 2) throw NumericError("k_triangle_count requires k >= 2; use triangle_count for t1");
    std::uint64_t total = 0;
    for (std::uint32_t i = 0; i < g.node_count(); ++i)
        for (std::uint32_t j : g.neighbors(i))
            if (j > i) total += binomial(g.common_neighbors(i, j), k);
    return total;
}

double alternating_k_triangles(const LabeledGraph& g, double zeta) {
    if (!(zeta > 0)) throw NumericError("alternating_k_triangles requires zeta > 0");
    const double q = 1.0 - 1.0 / zeta;
    double sum = 0;
    for (std::uint32_t i = 0; i < g.node_count(); ++i)
        for (std::uint32_t j : g.neighbors(i))
            if (j > i) {
                const auto shared = g.common_neighbors(i, j);
                if (shared > 0) sum += 1.0 - std::pow(q, static_cast<double>(shared));
            }
    return zeta * sum;
}

double clustering_coefficient(const LabeledGraph& g) {
    const std::uint32_t n = g.node_count();
    if (n == 0) return 0.0;
    double sum = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        const std::uint32_t deg = g.degree(i);
        if (deg < 2) continue;
        // Edges among the neighborhood: every edge (i,j) contributes the
        // common-neighbor count, which double-counts the neighbor pairs.
        std::uint64_t wedge_hits = 0;
        for (std::uint32_t j : g.neighbors(i)) wedge_hits += g.common_neighbors(i, j);
        sum += static_cast<double>(wedge_hits) /
               (static_cast<double>(deg) * static_cast<double>(deg - 1));
    }
    return sum / static_cast<double>(n);
}

namespace {

// Distances from `source` via BFS; returns (sum of finite distances,
// max distance, number of reached nodes).
struct BfsSummary {
    std::uint64_t distance_sum;
    std::uint32_t eccentricity;
    std::uint32_t reached;
};

BfsSummary bfs_distances(const LabeledGraph& g, std::uint32_t source,
                         std::vector<std::uint32_t>& dist, std::vector<std::uint32_t>& queue) {
    constexpr std::uint32_t kUnreached = 0xffffffffu;
    dist.assign(g.node_count(), kUnreached);
    queue.clear();
    queue.push_back(source);
    dist[source] = 0;
    std::size_t head = 0;
    BfsSummary s{0, 0, 1};
    while (head < queue.size()) {
        const std::uint32_t u = queue[head++];
        for (std::uint32_t v : g.neighbors(u)) {
            if (dist[v] == kUnreached) {
                dist[v] = dist[u] + 1;
                s.distance_sum += dist[v];
                s.eccentricity = std::max(s.eccentricity, dist[v]);
                ++s.reached;
                queue.push_back(v);
            }
        }
    }
    return s;
}

}  // namespace

double average_path_length(const LabeledGraph& g) {
    const std::uint32_t n = g.node_count();
    if (n < 2) return 0.0;
    std::vector<std::uint32_t> dist, queue;
    std::uint64_t total = 0;
    for (std::uint32_t s = 0; s < n; ++s) {
        const auto summary = bfs_distances(g, s, dist, queue);
        if (summary.reached != n)
            throw DisconnectedError("average path length undefined: graph is disconnected");
        total += summary.distance_sum;
    }
    return static_cast<double>(total) /
           (static_cast<double>(n) * static_cast<double>(n - 1));
}

std::uint32_t diameter(const LabeledGraph& g) {
    const std::uint32_t n = g.node_count();
    if (n < 2) return 0;
    std::vector<std::uint32_t> dist, queue;
    std::uint32_t d = 0;
    for (std::uint32_t s = 0; s < n; ++s) {
        const auto summary = bfs_distances(g, s, dist, queue);
        if (summary.reached != n)
            throw DisconnectedError("diameter undefined: graph is disconnected");
        d = std::max(d, summary.eccentricity);
    }
    return d;
}

namespace {

double lambda2_dense(const LabeledGraph& g) {
    const std::uint32_t n = g.node_count();
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
    for (std::uint32_t i = 0; i < n; ++i) {
        lap(i, i) = static_cast<double>(g.degree(i));
        for (std::uint32_t j : g.neighbors(i)) lap(i, j) = -1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(1);
}

// Inverse power iteration on the complement of the constant vector: CG-solves
// L y = x with both sides projected off span{1}, which is exact for connected
// graphs (kernel = span{1}).
double lambda2_iterative(const LabeledGraph& g) {
    const std::uint32_t n = g.node_count();
    Eigen::SparseMatrix<double> lap(n, n);
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(2 * g.edge_count() + n);
    for (std::uint32_t i = 0; i < n; ++i) {
        trip.emplace_back(i, i, static_cast<double>(g.degree(i)));
        for (std::uint32_t j : g.neighbors(i)) trip.emplace_back(i, j, -1.0);
    }
    lap.setFromTriplets(trip.begin(), trip.end());

    const auto deflate = [n](Eigen::VectorXd& x) { x.array() -= x.mean(); };

    Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper> cg;
    cg.setTolerance(1e-10);
    cg.compute(lap);

    Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(n, 1.0, 2.0);  // deterministic start
    deflate(x);
    x.normalize();
    double lambda = x.dot(lap * x);
    for (int iter = 0; iter < 200; ++iter) {
        Eigen::VectorXd y = cg.solveWithGuess(x, Eigen::VectorXd(x / std::max(lambda, 1e-12)));
        deflate(y);
        const double norm = y.norm();
        if (norm == 0.0) break;
        x = y / norm;
        const double next = x.dot(lap * x);
        if (std::abs(next - lambda) < 1e-9 * std::max(1.0, std::abs(next))) {
            lambda = next;
            break;
        }
        lambda = next;
    }
    return lambda;
}

}  // namespace

double algebraic_connectivity(const LabeledGraph& g) {
    const std::uint32_t n = g.node_count();
    if (n < 2) return 0.0;
    if (!g.is_connected()) return 0.0;
    if (n <= 3000) return lambda2_dense(g);
    return lambda2_iterative(g);
}

std::array<double, 3> degree_by_type(const LabeledGraph& g) {
    std::array<double, 3> degree_sum{};
    std::array<double, 3> node_count{};
    for (std::uint32_t i = 0; i < g.node_count(); ++i) {
        const auto t = static_cast<std::size_t>(g.type_of(i));
        degree_sum[t] += g.degree(i);
        node_count[t] += 1;
    }
    std::array<double, 3> avg{};
    for (std::size_t t = 0; t < 3; ++t) avg[t] = node_count[t] > 0 ? degree_sum[t] / node_count[t] : 0.0;
    return avg;
}

ObservableVector observables(const LabeledGraph& g) {
    ObservableVector x;
    const auto counts = edge_type_counts(g);
    for (std::size_t i = 0; i < kEdgeTypeCount; ++i) x[i] = static_cast<double>(counts[i]);
    x[kT1] = static_cast<double>(triangle_count(g));
    x[kT2] = static_cast<double>(k_triangle_count(g, 2));
    return x;
}

const std::array<const char*, GridReport::kColumns>& GridReport::column_names() {
    static const std::array<const char*, kColumns> names = {
        "n",       "m",       "k_avg", "k_p", "k_l",     "k_i",        "share_p", "share_l",
        "share_i", "t1",      "t2",    "lambda2", "clustering", "apl",     "d_max"};
    return names;
}

std::array<double, GridReport::kColumns> GridReport::columns() const {
    return {n,       m,       k_avg, k_p, k_l,     k_i,        share_p, share_l,
            share_i, t1,      t2,    lambda2, clustering, apl,     d_max};
}

GridReport GridReport::from_columns(const std::array<double, kColumns>& c) {
    GridReport r;
    r.n = c[0]; r.m = c[1]; r.k_avg = c[2]; r.k_p = c[3]; r.k_l = c[4]; r.k_i = c[5];
    r.share_p = c[6]; r.share_l = c[7]; r.share_i = c[8]; r.t1 = c[9]; r.t2 = c[10];
    r.lambda2 = c[11]; r.clustering = c[12]; r.apl = c[13]; r.d_max = c[14];
    return r;
}

GridReport compute_report(const LabeledGraph& g) {
    GridReport r;
    const double n = static_cast<double>(g.node_count());
    r.n = n;
    r.m = static_cast<double>(g.edge_count());
    r.k_avg = n > 0 ? 2.0 * r.m / n : 0.0;
    const auto per_type = degree_by_type(g);
    r.k_p = per_type[0];
    r.k_l = per_type[1];
    r.k_i = per_type[2];
    std::array<double, 3> counts{};
    for (std::uint32_t i = 0; i < g.node_count(); ++i)
        counts[static_cast<std::size_t>(g.type_of(i))] += 1;
    r.share_p = n > 0 ? counts[0] / n : 0.0;
    r.share_l = n > 0 ? counts[1] / n : 0.0;
    r.share_i = n > 0 ? counts[2] / n : 0.0;
    r.t1 = static_cast<double>(triangle_count(g));
    r.t2 = static_cast<double>(k_triangle_count(g, 2));
    r.lambda2 = algebraic_connectivity(g);
    r.clustering = clustering_coefficient(g);
    r.apl = average_path_length(g);
    r.d_max = static_cast<double>(diameter(g));
    return r;
}

}  // namespace gridgen
