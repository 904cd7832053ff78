#include <doctest.h>

#include "oracles.hpp"
#include "tess/clique_graph.hpp"
#include "tess/coloring.hpp"
#include "tess/corpus.hpp"
#include "tess/tessellation.hpp"

using namespace tess;

namespace {

TessellationCover cover(std::vector<std::vector<Clique>> parts) {
    TessellationCover c;
    for (auto& p : parts) c.tessellations.emplace_back(std::move(p));
    return c;
}

}  // namespace

TEST_SUITE("tessellation") {

TEST_CASE("tessellation normalizes its cliques") {
    Tessellation t({{3, 2}, {1}, {1, 0}});
    CHECK(t.cliques() == std::vector<Clique>{{0, 1}, {2, 3}});
}

TEST_CASE("single tessellation validation") {
    Graph c4 = cycle_graph(4);
    CHECK(validate_tessellation(c4, Tessellation({{0, 1}, {2, 3}})).ok());
    auto overlap = validate_tessellation(c4, Tessellation({{0, 1}, {1, 2}}));
    REQUIRE_FALSE(overlap.ok());
    CHECK(overlap.first().kind == Violation::Kind::Overlap);
    CHECK(overlap.first().u == 1);
    auto missing = validate_tessellation(c4, Tessellation({{0, 1, 2}}));
    REQUIRE_FALSE(missing.ok());
    CHECK(missing.first().kind == Violation::Kind::NonClique);
    CHECK(Edge(missing.first().u, missing.first().v) == Edge(0, 2));
    auto range = validate_tessellation(c4, Tessellation({{0, 7}}));
    REQUIRE_FALSE(range.ok());
    CHECK(range.first().kind == Violation::Kind::OutOfRange);
}

TEST_CASE("tessellation edges") {
    CHECK(tessellation_edges(cycle_graph(4), Tessellation({{0, 1}, {2, 3}})) == std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK(tessellation_edges(complete_graph(3), Tessellation({{0, 1, 2}})).size() == 3);
    CHECK(tessellation_edges(petersen_graph(), Tessellation()).empty());
    CHECK_THROWS_AS(tessellation_edges(cycle_graph(4), Tessellation({{0, 2}})), Error);
}

TEST_CASE("cover validation") {
    Graph c4 = cycle_graph(4);
    CHECK(validate_cover(c4, cover({{{0, 1}, {2, 3}}, {{1, 2}, {0, 3}}})).ok());
    CHECK(validate_cover(complete_graph(3), cover({{{0, 1, 2}}})).ok());
    auto r = validate_cover(c4, cover({{{0, 1}, {2, 3}}}));
    REQUIRE(r.violations.size() == 2);
    CHECK(r.violations[0].kind == Violation::Kind::Uncovered);
    CHECK(Edge(r.violations[0].u, r.violations[0].v) == Edge(0, 3));
    CHECK(Edge(r.violations[1].u, r.violations[1].v) == Edge(1, 2));
    CHECK(validate_cover(Graph(3), TessellationCover{}).ok());
    CHECK_FALSE(validate_cover(c4, cover({{{0, 2}}, {{0, 1}, {2, 3}}, {{1, 2}, {0, 3}}})).ok());
}

TEST_CASE("validation agrees with the independent checker") {
    Rng rng(31);
    for (int i = 0; i < 300; ++i) {
        Graph g = random_graph(rng.between(2, 8), 0.6, rng);
        TessellationCover c;
        const int k = rng.between(1, 3);
        for (int j = 0; j < k; ++j) {
            std::vector<Clique> parts;
            std::vector<Vertex> vs;
            for (Vertex v = 0; v < g.order(); ++v)
                if (rng.chance(0.7)) vs.push_back(v);
            while (!vs.empty()) {
                const auto take = std::min<std::size_t>(vs.size(), static_cast<std::size_t>(rng.between(1, 3)));
                parts.emplace_back(vs.end() - static_cast<std::ptrdiff_t>(take), vs.end());
                vs.resize(vs.size() - take);
            }
            c.tessellations.emplace_back(parts);
        }
        CHECK(validate_cover(g, c).ok() == oracle::cover_is_valid(g, c));
    }
}

TEST_CASE("exposed maximal cliques") {
    CHECK(exposed_maximal_cliques(complete_graph(3), cover({{{0, 1, 2}}})).empty());
    Graph d = diamond_graph();
    auto exposed = exposed_maximal_cliques(d, cover({{{0, 1, 2}}, {{0, 3}}, {{1, 3}}}));
    CHECK(exposed == std::vector<Clique>{{0, 1, 3}});
    CHECK(exposed_maximal_cliques(cycle_graph(4), cover({{{0, 1}, {2, 3}}, {{1, 2}, {0, 3}}})).empty());
    CHECK_THROWS_AS(exposed_maximal_cliques(cycle_graph(4), cover({{{0, 1}}})), Error);
}

TEST_CASE("cover from an edge coloring") {
    Graph c4 = cycle_graph(4);
    auto c = cover_from_edge_coloring(c4, EdgeColoring{{0, 1, 1, 0}, 2});
    CHECK(c == cover({{{0, 1}, {2, 3}}, {{0, 3}, {1, 2}}}));
    CHECK(cover_from_edge_coloring(complete_graph(3), edge_coloring_delta_plus_one(complete_graph(3))).size() == 3);
    Graph s = star_graph(3);
    auto sc = cover_from_edge_coloring(s, bipartite_edge_coloring(s));
    CHECK(sc.size() == 3);
    CHECK(validate_cover(s, sc).ok());
    CHECK_THROWS_AS(cover_from_edge_coloring(c4, EdgeColoring{{0, 0, 1, 1}, 2}), Error);
}

TEST_CASE("cover from a clique graph coloring") {
    Graph d = diamond_graph();
    auto kd = clique_graph(d);
    CHECK(cover_from_kg_coloring(d, kd, VertexColoring{{0, 1}, 2}) == cover({{{0, 1, 2}}, {{0, 1, 3}}}));
    Graph k3 = complete_graph(3);
    CHECK(cover_from_kg_coloring(k3, clique_graph(k3), VertexColoring{{0}, 1}).size() == 1);
    Graph c5 = cycle_graph(5);
    auto k5 = clique_graph(c5);
    auto c = cover_from_kg_coloring(c5, k5, exact_chromatic_number(k5.kg).coloring);
    CHECK(c.size() == 3);
    CHECK(validate_cover(c5, c).ok());
    CHECK_THROWS_AS(cover_from_kg_coloring(d, kd, VertexColoring{{0, 0}, 1}), Error);
}

TEST_CASE("coloring covers always validate") {
    Rng rng(32);
    for (int i = 0; i < 100; ++i) {
        Graph g = random_graph(rng.between(1, 14), 0.4, rng);
        CHECK(oracle::cover_is_valid(g, cover_from_edge_coloring(g, edge_coloring_delta_plus_one(g))));
        auto kg = clique_graph(g);
        CHECK(oracle::cover_is_valid(g, cover_from_kg_coloring(g, kg, greedy_vertex_coloring(kg.kg))));
    }
}

}
