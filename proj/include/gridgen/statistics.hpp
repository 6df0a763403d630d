#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "gridgen/graph.hpp"

namespace gridgen {

// Index layout shared by ObservableVector and ParameterVector.
enum ObsIndex : std::size_t {
    kEPP = 0,
    kEPL = 1,
    kEPI = 2,
    kELL = 3,
    kELI = 4,
    kEII = 5,
    kT1 = 6,
    kT2 = 7,
};

inline constexpr std::size_t kObservableCount = 8;

extern const char* const kObservableNames[kObservableCount];  // "e_pp", ..., "t1", "t2"

// The 8 Hamiltonian statistics (e_PP, e_PL, e_PI, e_LL, e_LI, e_II, t1, t2),
// stored as reals so they combine directly with parameters.
struct ObservableVector {
    std::array<double, kObservableCount> v{};

    double& operator[](std::size_t i) { return v[i]; }
    double operator[](std::size_t i) const { return v[i]; }
    bool operator==(const ObservableVector&) const = default;
};

std::array<std::uint64_t, kEdgeTypeCount> edge_type_counts(const LabeledGraph& g);

// Number of distinct 3-cliques (t1). Equals (1/3) * sum over edges of the
// endpoints' common-neighbor count.
std::uint64_t triangle_count(const LabeledGraph& g);

// t_k = sum over edges (i,j) of C(L_ij, k); k >= 2 (use triangle_count for the
// plain count — the k=1 column of this sum is 3*t1).
std::uint64_t k_triangle_count(const LabeledGraph& g, unsigned k);

// Alternating k-triangles statistic u_zeta:
//   3*t1 - t2/zeta + t3/zeta^2 - ... through t_{n-2}.
// Evaluated per edge via the equivalent geometric form
//   zeta * sum_{(i,j) in E} (1 - (1 - 1/zeta)^{L_ij}).
double alternating_k_triangles(const LabeledGraph& g, double zeta);

// Mean of the local clustering coefficients; nodes of degree < 2 contribute 0.
double clustering_coefficient(const LabeledGraph& g);

double average_path_length(const LabeledGraph& g);

std::uint32_t diameter(const LabeledGraph& g);

// Second-smallest Laplacian eigenvalue. Returns 0 for disconnected graphs.
double algebraic_connectivity(const LabeledGraph& g);

// (<k_P>, <k_L>, <k_I>); a type with no nodes yields 0.
std::array<double, 3> degree_by_type(const LabeledGraph& g);

ObservableVector observables(const LabeledGraph& g);

// One row of the statistics battery reported for every grid or sample.
struct GridReport {
    double n = 0;
    double m = 0;
    double k_avg = 0;
    double k_p = 0;
    double k_l = 0;
    double k_i = 0;
    double share_p = 0;
    double share_l = 0;
    double share_i = 0;
    double t1 = 0;
    double t2 = 0;
    double lambda2 = 0;
    double clustering = 0;
    double apl = 0;
    double d_max = 0;

    static constexpr std::size_t kColumns = 15;
    static const std::array<const char*, kColumns>& column_names();
    std::array<double, kColumns> columns() const;
    static GridReport from_columns(const std::array<double, kColumns>& cols);
};

GridReport compute_report(const LabeledGraph& g);

}  // namespace gridgen
