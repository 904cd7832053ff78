#include <doctest.h>

#include "oracles.hpp"
#include "tess/corpus.hpp"
#include "tess/graph.hpp"

using namespace tess;

TEST_SUITE("graph") {

TEST_CASE("edge list parsing") {
    CHECK(parse_edge_list("3 3\n0 1\n1 2\n0 2") == complete_graph(3));
    CHECK(parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0") == cycle_graph(4));
    CHECK(parse_edge_list("\n2 1\n\n1 0\n") == complete_graph(2));
    CHECK(parse_edge_list("0 0\n").order() == 0);
}

TEST_CASE("edge list errors name the line") {
    auto line_of = [](const char* text) -> std::size_t {
        try {
            parse_edge_list(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("2 2\n0 1\n0 1") == 3);
    CHECK(line_of("3 1\n1 1") == 2);
    CHECK(line_of("3 1\n0 3") == 2);
    CHECK(line_of("3 1\n0 x") == 2);
    CHECK(line_of("3 2\n0 1") == 3);
    CHECK(line_of("three") == 1);
    CHECK(line_of("2 1\n0 1\n1 0") != 0);
}

TEST_CASE("constructor rejects bad edges") {
    CHECK_THROWS_AS(Graph(2, {Edge(0, 0)}), Error);
    CHECK_THROWS_AS(Graph(2, {Edge(0, 1), Edge(1, 0)}), Error);
    CHECK_THROWS_AS(Graph(2, {Edge(0, 2)}), Error);
}

TEST_CASE("edge indexing follows lexicographic order") {
    Graph g = petersen_graph();
    auto edges = g.edges();
    REQUIRE(edges.size() == 15);
    CHECK(std::is_sorted(edges.begin(), edges.end()));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        CHECK(g.edge_index(edges[i].u, edges[i].v) == i);
        CHECK(g.edge_index(edges[i].v, edges[i].u) == i);
    }
    CHECK_FALSE(g.edge_index(0, 0));
    CHECK(g.max_degree() == 3);
}

TEST_CASE("named graphs") {
    CHECK(complete_graph(5).size() == 10);
    CHECK(cycle_graph(6).size() == 6);
    CHECK(path_graph(4).size() == 3);
    CHECK(star_graph(3).degree(0) == 3);
    CHECK(complete_bipartite(2, 3).size() == 6);
    Graph d = diamond_graph();
    CHECK(d.size() == 5);
    CHECK_FALSE(d.adjacent(2, 3));
    Graph u = disjoint_union(complete_graph(3), complete_graph(2));
    CHECK(u.order() == 5);
    CHECK(u.adjacent(3, 4));
    CHECK_FALSE(u.adjacent(2, 3));
}

TEST_CASE("induced subgraph renumbers in the given order") {
    Graph g = cycle_graph(5);
    std::vector<Vertex> keep{3, 2, 1};
    Graph h = g.induced(keep);
    CHECK(h == path_graph(3));
}

TEST_CASE("graph6 round trips") {
    CHECK(format_graph6(complete_graph(4)) == "C~");
    CHECK(parse_graph6("C~") == complete_graph(4));
    CHECK(parse_graph6(">>graph6<<C~\n") == complete_graph(4));
    CHECK(parse_graph("C~") == complete_graph(4));
    Rng rng(7);
    for (int n : {0, 1, 5, 30, 62, 63, 64, 100}) {
        Graph g = random_graph(n, 0.3, rng);
        CHECK(parse_graph6(format_graph6(g)) == g);
        CHECK(parse_graph(format_edge_list(g)) == g);
    }
    CHECK_THROWS_AS(parse_graph6("C"), ParseError);
    CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);
}

TEST_CASE("multigraph merges parallel pairs") {
    Multigraph h(3);
    h.add_edge(0, 1);
    h.add_edge(1, 0, 2);
    h.add_edge(1, 2);
    CHECK(h.links().size() == 2);
    CHECK(h.multiplicity(0, 1) == 3);
    CHECK(h.multiplicity(2, 1) == 1);
    CHECK(h.multiplicity(0, 2) == 0);
    CHECK(h.occurrence_count() == 4);
    CHECK_THROWS_AS(h.add_edge(1, 1), Error);
    CHECK_THROWS_AS(h.add_edge(0, 3), Error);
}

}
