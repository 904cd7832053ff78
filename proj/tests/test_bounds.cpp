#include <doctest.h>

#include "oracles.hpp"
#include "tess/bounds.hpp"
#include "tess/corpus.hpp"
#include "tess/solver.hpp"

using namespace tess;

TEST_SUITE("bounds") {

TEST_CASE("upper bound examples") {
    auto d = upper_bounds(diamond_graph(), true);
    CHECK(d.upper_edge == 3);
    CHECK(d.upper_kg == 2);
    CHECK(d.upper == 2);
    CHECK(d.upper_edge_exact);
    CHECK(d.upper_kg_exact);
    auto c5 = upper_bounds(cycle_graph(5), true);
    CHECK(c5.upper_edge == 3);
    CHECK(c5.upper_kg == 3);
    auto k4 = upper_bounds(complete_graph(4), true);
    CHECK(k4.upper_kg == 1);
    CHECK(k4.upper == 1);
}

TEST_CASE("heuristic bounds are valid and never exact") {
    Rng rng(51);
    for (int i = 0; i < 80; ++i) {
        Graph g = random_graph(rng.between(1, 14), 0.4, rng);
        auto r = upper_bounds(g, false);
        CHECK_FALSE(r.upper_edge_exact);
        CHECK(validate_cover(g, r.edge_witness).ok());
        CHECK(validate_cover(g, r.kg_witness).ok());
        CHECK(r.upper == std::min(r.upper_edge, r.upper_kg));
        CHECK(r.upper_edge <= g.max_degree() + 1);
        CHECK(r.lower <= r.upper);
    }
}

TEST_CASE("lower bound examples") {
    CHECK(lower_bound(Graph(3)) == 0);
    CHECK(lower_bound(complete_graph(3)) == 1);
    CHECK(lower_bound(diamond_graph()) == 2);
    CHECK(lower_bound(cycle_graph(5)) == 3);
    CHECK(lower_bound(star_graph(5)) == 5);
    CHECK(lower_bound(petersen_graph()) == 3);
}

TEST_CASE("triangle free tessellation number") {
    CHECK(triangle_free_tessellation_number(cycle_graph(5)).value == 3);
    CHECK(triangle_free_tessellation_number(star_graph(3)).value == 3);
    auto p = triangle_free_tessellation_number(petersen_graph());
    CHECK(p.value == 4);
    CHECK(p.exact);
    CHECK_THROWS_AS(triangle_free_tessellation_number(complete_graph(3)), Error);
    auto bip = triangle_free_tessellation_number(complete_bipartite(3, 4));
    CHECK(bip.value == 4);
    CHECK(bip.exact);
}

}
