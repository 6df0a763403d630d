#include <doctest.h>

#include <string>

#include "gridgen/free_energy.hpp"
#include "gridgen/matpower.hpp"
#include "gridgen/statistics.hpp"
#include "test_util.hpp"

using namespace gridgen;

namespace {

const std::string kMiniCase = R"(function mpc = mini
mpc.version = '2';
mpc.baseMVA = 100;
% three buses, one generator, duplicated branch
mpc.bus = [
	1  3  0   0  0 0 1 1 0 135 1 1.1 0.9;
	2  1  10  5  0 0 1 1 0 135 1 1.1 0.9;
	3  1  0   0  0 0 1 1 0 135 1 1.1 0.9;
];
mpc.gen = [
	1  50 0 30 -30 1 100 1 100 10;
];
mpc.gencost = [
	2 0 0 3 0.01 40 0;
];
mpc.branch = [
	1 2 0.01 0.05 0 250 250 250 0 0 1 -360 360;
	2 3 0.01 0.05 0 250 250 250 0 0 1 -360 360;
	2 3 0.02 0.06 0 250 250 250 0 0 1 -360 360;
];
)";

}  // namespace

TEST_CASE("parse_matpower extracts the three tables") {
    const auto mpc = parse_matpower(kMiniCase);
    CHECK(mpc.bus.size() == 3);
    CHECK(mpc.gen.size() == 1);
    CHECK(mpc.branch.size() == 3);
    CHECK(mpc.bus[1][2] == doctest::Approx(10.0));
    CHECK(mpc.branch[2][1] == doctest::Approx(3.0));
    // mpc.gencost must not shadow mpc.gen (identifier boundary).
    CHECK(mpc.gen[0][0] == doctest::Approx(1.0));
}

TEST_CASE("parse_matpower error paths") {
    std::string no_branch = kMiniCase;
    const auto pos = no_branch.find("mpc.branch");
    no_branch = no_branch.substr(0, pos);
    CHECK_THROWS_WITH_AS(parse_matpower(no_branch),
                         doctest::Contains("mpc.branch"), ParseError);

    std::string bad_cell = kMiniCase;
    bad_cell.replace(bad_cell.find("10  5"), 2, "xx");
    try {
        parse_matpower(bad_cell);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 7);  // the load bus row
        CHECK(std::string(e.what()).find("xx") != std::string::npos);
    }
}

TEST_CASE("to_labeled_graph applies the bus-type rules and dedups branches") {
    const auto mpc = parse_matpower(kMiniCase);
    const auto built = to_labeled_graph(mpc);
    const auto& g = built.graph;

    REQUIRE(g.node_count() == 3);
    CHECK(g.type_of(0) == BusType::Generator);       // in the gen list
    CHECK(g.type_of(1) == BusType::Load);            // Pd > 0
    CHECK(g.type_of(2) == BusType::Interconnection); // Pd = Qd = 0
    CHECK(g.edge_count() == 2);                      // parallel branch collapsed
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK(built.bus_ids == std::vector<long long>{1, 2, 3});
}

TEST_CASE("gen list takes precedence over demand") {
    std::string text = kMiniCase;
    // Give the generator bus a demand; it must stay a Generator.
    text.replace(text.find("1  3  0   0"), std::string("1  3  0   0").size(), "1  3  7   2");
    const auto built = to_labeled_graph(parse_matpower(text));
    CHECK(built.graph.type_of(0) == BusType::Generator);
}

TEST_CASE("branch referencing an unknown bus") {
    std::string text = kMiniCase;
    text.replace(text.find("2 3 0.02"), std::string("2 3").size(), "2 9");
    CHECK_THROWS_AS(to_labeled_graph(parse_matpower(text)), ValidationError);
}

TEST_CASE("toy 12-bus fixture end to end") {
    const auto mpc = load_matpower_file("tests/data/case_toy12.m");
    CHECK(mpc.bus.size() == 12);
    CHECK(mpc.gen.size() == 3);
    CHECK(mpc.branch.size() == 19);

    const auto built = to_labeled_graph(mpc);
    const auto& g = built.graph;
    REQUIRE(g.node_count() == 12);
    // Self-loop dropped, one parallel pair collapsed; status ignored by default.
    CHECK(g.edge_count() == 17);
    CHECK(g.is_connected());

    const auto census = TypeCensus::of(g);
    CHECK(census.p == 3);
    CHECK(census.l == 6);
    CHECK(census.i == 3);

    const auto counts = edge_type_counts(g);
    CHECK(counts == std::array<std::uint64_t, 6>{1, 4, 3, 2, 6, 1});
    CHECK(triangle_count(g) == 4);
    CHECK(k_triangle_count(g, 2) == 1);

    GraphBuildOptions in_service_only;
    in_service_only.include_out_of_service = false;
    const auto active = to_labeled_graph(mpc, in_service_only);
    CHECK(active.graph.edge_count() == 16);
    CHECK(triangle_count(active.graph) == 3);
}
