#include <doctest.h>

#include <cmath>

#include "gridgen/free_energy.hpp"
#include "gridgen/statistics.hpp"
#include "test_util.hpp"

using namespace gridgen;
namespace tu = gridgen::testutil;

namespace {

// Reference-grid targets used throughout: 300-node census and its six
// edge-type counts.
const TypeCensus kCensus300{69, 204, 27};
const std::array<double, 6> kTargets300{8, 110, 9, 240, 35, 7};

}  // namespace

TEST_CASE("max_edges") {
    CHECK(max_edges(kCensus300, BusType::Generator, BusType::Load) == 14076);
    CHECK(max_edges(kCensus300, BusType::Generator, BusType::Generator) == 2346);
    CHECK(max_edges(kCensus300, BusType::Load, BusType::Load) == 20706);
    CHECK(max_edges(kCensus300, BusType::Interconnection, BusType::Interconnection) == 351);

    const TypeCensus no_gens{0, 10, 5};
    CHECK(max_edges(no_gens, BusType::Generator, BusType::Load) == 0);
    CHECK(max_edges(no_gens, BusType::Generator, BusType::Generator) == 0);

    // Index-based overload agrees with the type-pair one.
    for (std::size_t idx = 0; idx < kEdgeTypeCount; ++idx) {
        const auto [a, b] = edge_type_pair(idx);
        CHECK(max_edges(kCensus300, idx) == max_edges(kCensus300, a, b));
    }
}

TEST_CASE("closed_form_parameters reproduces the reference values") {
    const auto beta = closed_form_parameters(kTargets300, kCensus300);
    CHECK(beta[0] == doctest::Approx(-5.68).epsilon(0.002));
    CHECK(beta[1] == doctest::Approx(-4.84).epsilon(0.002));
    CHECK(beta[2] == doctest::Approx(-5.33).epsilon(0.002));
    CHECK(beta[3] == doctest::Approx(-4.45).epsilon(0.002));
    CHECK(beta[4] == doctest::Approx(-5.05).epsilon(0.002));
    CHECK(beta[5] == doctest::Approx(-3.89).epsilon(0.002));
}

TEST_CASE("closed_form_parameters boundary handling") {
    // Half occupancy -> zero parameter.
    std::array<double, 6> half{};
    for (std::size_t i = 0; i < 6; ++i) half[i] = max_edges(kCensus300, i) / 2.0;
    for (double b : closed_form_parameters(half, kCensus300)) CHECK(b == doctest::Approx(0.0));

    auto zero = kTargets300;
    zero[3] = 0;
    CHECK_THROWS_AS(closed_form_parameters(zero, kCensus300), BoundaryError);

    auto full = kTargets300;
    full[0] = 2346;
    CHECK_THROWS_AS(closed_form_parameters(full, kCensus300), BoundaryError);

    // A type with no candidate pairs is fine as long as its target is zero.
    const TypeCensus no_ii{10, 20, 1};
    std::array<double, 6> t{3, 40, 2, 50, 4, 0};
    CHECK_NOTHROW(closed_form_parameters(t, no_ii));
}

TEST_CASE("exact_mean and closed form invert each other") {
    std::array<double, 6> zeros{};
    const auto at_zero = exact_mean(zeros, kCensus300);
    for (std::size_t i = 0; i < 6; ++i)
        CHECK(at_zero[i] == doctest::Approx(max_edges(kCensus300, i) / 2.0));

    const auto beta = closed_form_parameters(kTargets300, kCensus300);
    const auto recovered = exact_mean(beta, kCensus300);
    for (std::size_t i = 0; i < 6; ++i)
        CHECK(recovered[i] == doctest::Approx(kTargets300[i]).epsilon(1e-9));

    std::array<double, 6> very_negative;
    very_negative.fill(-50.0);
    for (double m : exact_mean(very_negative, kCensus300)) CHECK(m == doctest::Approx(0.0));

    // And the other direction, on arbitrary finite parameters.
    std::array<double, 6> arbitrary{-3.0, -1.2, 0.4, -2.5, 1.7, -0.3};
    const auto mean = exact_mean(arbitrary, kCensus300);
    const auto back = closed_form_parameters(mean, kCensus300);
    for (std::size_t i = 0; i < 6; ++i)
        CHECK(back[i] == doctest::Approx(arbitrary[i]).epsilon(1e-9));
}

TEST_CASE("sample_simple_model extremes") {
    const TypeCensus census{3, 4, 3};
    Rng rng(7);

    std::array<double, 6> frozen;
    frozen.fill(-50.0);
    CHECK(sample_simple_model(frozen, census, rng).edge_count() == 0);

    std::array<double, 6> saturated;
    saturated.fill(50.0);
    const auto full = sample_simple_model(saturated, census, rng);
    CHECK(full.edge_count() == tu::pair_count(10));
}

TEST_CASE("sample_simple_model at beta zero on loads is G(n, 1/2)") {
    const TypeCensus census{0, 12, 0};
    std::array<double, 6> beta{};
    Rng rng(11);
    double total = 0;
    const int draws = 4000;
    for (int d = 0; d < draws; ++d)
        total += static_cast<double>(sample_simple_model(beta, census, rng).edge_count());
    const double mean = total / draws;
    const double expected = 12.0 * 11.0 / 4.0;  // 33
    const double se = std::sqrt(66.0 * 0.25 / draws);
    CHECK(std::abs(mean - expected) < 4 * se);
}

TEST_CASE("empirical observable means match exact_mean per type") {
    const TypeCensus census{5, 9, 4};
    const std::array<double, 6> beta{-1.0, -2.0, -0.5, -1.5, 0.3, -2.5};
    const auto expected = exact_mean(beta, census);

    Rng rng(13);
    std::array<double, 6> sum{};
    std::array<double, 6> sum_sq{};
    const int draws = 3000;
    for (int d = 0; d < draws; ++d) {
        const auto g = sample_simple_model(beta, census, rng);
        const auto counts = edge_type_counts(g);
        for (std::size_t i = 0; i < 6; ++i) {
            sum[i] += static_cast<double>(counts[i]);
            sum_sq[i] += static_cast<double>(counts[i]) * static_cast<double>(counts[i]);
        }
    }
    for (std::size_t i = 0; i < 6; ++i) {
        const double mean = sum[i] / draws;
        const double var = (sum_sq[i] - draws * mean * mean) / (draws - 1);
        const double se = std::sqrt(std::max(var, 1e-12) / draws);
        CHECK(std::abs(mean - expected[i]) < 3.5 * se + 1e-9);
    }
}
