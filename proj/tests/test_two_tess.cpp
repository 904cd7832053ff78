#include <doctest.h>

#include "oracles.hpp"
#include "tess/clique_graph.hpp"
#include "tess/corpus.hpp"
#include "tess/isomorphism.hpp"
#include "tess/solver.hpp"
#include "tess/two_tess.hpp"

using namespace tess;

namespace {

Graph root_as_graph(const SimpleRoot& r) { return r.root; }

void check_yes(const Graph& g, const TwoTessResult& r) {
    REQUIRE(r.decision);
    REQUIRE(r.cover);
    CHECK(r.cover->size() <= 2);
    CHECK(oracle::cover_is_valid(g, *r.cover));
    CHECK(r.witness == TwoTessWitness::None);
    REQUIRE(r.root);
    REQUIRE(r.root_sides);
    for (const auto& l : r.root->root.links()) {
        const bool u_left = std::binary_search(r.root_sides->left.begin(), r.root_sides->left.end(), l.u);
        const bool v_left = std::binary_search(r.root_sides->left.begin(), r.root_sides->left.end(), l.v);
        CHECK(u_left != v_left);
    }
}

}  // namespace

TEST_SUITE("two-tess") {

TEST_CASE("line graphs of multigraphs") {
    Multigraph p4(4);
    p4.add_edge(0, 1);
    p4.add_edge(1, 2);
    p4.add_edge(2, 3);
    CHECK(line_graph(p4) == path_graph(3));
    Multigraph k13(4);
    for (int v = 1; v <= 3; ++v) k13.add_edge(0, v);
    CHECK(line_graph(k13) == complete_graph(3));
    Multigraph dbl(2);
    dbl.add_edge(0, 1, 2);
    CHECK(line_graph(dbl) == complete_graph(2));
    Multigraph triple(2);
    triple.add_edge(0, 1, 3);
    CHECK(true_twin_classes(line_graph(triple)) == std::vector<std::vector<Vertex>>{{0, 1, 2}});
}

TEST_CASE("simple root recognition") {
    auto p3 = recognize_line_graph_simple(path_graph(3));
    REQUIRE(p3);
    CHECK(are_isomorphic(root_as_graph(*p3), path_graph(4)));
    auto k3 = recognize_line_graph_simple(complete_graph(3));
    REQUIRE(k3);
    CHECK(are_isomorphic(k3->root, star_graph(3)));
    auto c4 = recognize_line_graph_simple(cycle_graph(4));
    REQUIRE(c4);
    CHECK(are_isomorphic(c4->root, cycle_graph(4)));
    CHECK_FALSE(recognize_line_graph_simple(star_graph(3)));
    CHECK_FALSE(recognize_line_graph_simple(disjoint_union(complete_graph(2), complete_graph(2))));
}

TEST_CASE("recognized roots reproduce the input") {
    Rng rng(61);
    for (int i = 0; i < 200; ++i) {
        Graph h = random_connected_graph(rng.between(2, 12), 0.35, rng);
        Graph g = simple_line_graph(h);
        if (g.order() == 0) continue;
        auto r = recognize_line_graph_simple(g);
        REQUIRE(r);
        REQUIRE(r->edge_of.size() == static_cast<std::size_t>(g.order()));
        for (Vertex a = 0; a < g.order(); ++a)
            for (Vertex b = a + 1; b < g.order(); ++b) {
                const Edge& x = r->edge_of[static_cast<std::size_t>(a)];
                const Edge& y = r->edge_of[static_cast<std::size_t>(b)];
                const bool share = x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
                CHECK(share == g.adjacent(a, b));
            }
    }
}

TEST_CASE("decision examples") {
    auto d = is_two_tessellable(diamond_graph());
    check_yes(diamond_graph(), d);
    TessellationCover expected;
    expected.tessellations = {Tessellation({{0, 1, 2}}), Tessellation({{0, 1, 3}})};
    CHECK(*d.cover == expected);

    auto c5 = is_two_tessellable(cycle_graph(5));
    CHECK_FALSE(c5.decision);
    CHECK(c5.witness == TwoTessWitness::RootNonBipartite);
    CHECK(c5.witness_component == 0);
    CHECK_FALSE(c5.cover);

    check_yes(complete_graph(3), is_two_tessellable(complete_graph(3)));
    check_yes(complete_graph(4), is_two_tessellable(complete_graph(4)));
    check_yes(Graph(0), is_two_tessellable(Graph(0)));
    check_yes(Graph(3), is_two_tessellable(Graph(3)));

    auto claw = is_two_tessellable(star_graph(3));
    CHECK_FALSE(claw.decision);
    CHECK(claw.witness == TwoTessWitness::NotLineGraph);

    CHECK(two_tess_reference(diamond_graph()));
    CHECK_FALSE(two_tess_reference(cycle_graph(5)));
    CHECK(two_tess_reference(complete_graph(4)));
}

TEST_CASE("witness component is the smallest vertex of the failing part") {
    Graph g = disjoint_union(diamond_graph(), cycle_graph(5));
    auto r = is_two_tessellable(g);
    CHECK_FALSE(r.decision);
    CHECK(r.witness_component == 4);
}

TEST_CASE("twin classes collapse before recognition") {
    Multigraph h(4);
    h.add_edge(0, 1, 3);
    h.add_edge(1, 2, 2);
    h.add_edge(2, 3);
    h.add_edge(3, 0, 2);
    Graph g = line_graph(h);
    check_yes(g, is_two_tessellable(g));
    h.add_edge(0, 2);
    Graph odd = line_graph(h);
    auto r = is_two_tessellable(odd);
    CHECK_FALSE(r.decision);
    CHECK(r.witness == TwoTessWitness::RootNonBipartite);
}

TEST_CASE("agrees with the reference on small graphs") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : connected_graphs(n)) {
            auto r = is_two_tessellable(g);
            CHECK(r.decision == two_tess_reference(g));
            CHECK(r.decision == oracle::is_bipartite(oracle::clique_graph(g)));
            if (r.decision) check_yes(g, r);
        }
}

TEST_CASE("random line graphs of bipartite multigraphs are accepted") {
    Rng rng(62);
    for (int i = 0; i < 200; ++i) {
        Multigraph h = random_bipartite_multigraph(rng.between(1, 6), rng.between(1, 6), rng.between(1, 12), 3, rng);
        Graph g = line_graph(h);
        auto r = is_two_tessellable(g);
        check_yes(g, r);
    }
}

TEST_CASE("random graphs agree with the reference") {
    Rng rng(63);
    for (int i = 0; i < 300; ++i) {
        Graph g = random_graph(rng.between(1, 11), 0.2 + 0.6 * rng.chance(0.5), rng);
        auto r = is_two_tessellable(g);
        CHECK(r.decision == two_tess_reference(g));
        if (r.decision) {
            check_yes(g, r);
        } else if (g.order() <= 8) {
            CHECK(min_cover_exact(g).t_number >= 3);
        }
    }
}

}
