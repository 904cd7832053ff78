#include <doctest.h>

#include "oracles.hpp"
#include "tess/bounds.hpp"
#include "tess/clique_graph.hpp"
#include "tess/constructions.hpp"
#include "tess/corpus.hpp"
#include "tess/isomorphism.hpp"
#include "tess/solver.hpp"
#include "tess/structure.hpp"

using namespace tess;

namespace {

NaeInstance nae(int vars, std::vector<std::array<int, 3>> clauses) {
    NaeInstance inst;
    inst.var_count = vars;
    for (const auto& c : clauses) {
        std::array<Literal, 3> lits;
        for (std::size_t i = 0; i < 3; ++i) lits[i] = Literal{std::abs(c[i]) - 1, c[i] < 0};
        inst.clauses.push_back(lits);
    }
    return inst;
}

// Evaluates every assignment directly from the clause literals.
bool nae_oracle(const NaeInstance& inst) {
    for (std::uint32_t a = 0; a < (1u << inst.var_count); ++a) {
        bool ok = true;
        for (const auto& c : inst.clauses) {
            int trues = 0;
            for (const auto& l : c) trues += ((a >> l.var & 1) != 0) != l.negated;
            if (trues == 0 || trues == 3) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

int cliques_containing(const Graph& g, Vertex v) {
    int k = 0;
    for (const auto& c : maximal_cliques(g)) k += std::binary_search(c.begin(), c.end(), v);
    return k;
}

// Middle triangle 0,1,2 with one external triangle hanging off each corner.
GadgetSpec three_slot_gadget() {
    std::vector<Edge> e{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}, {1, 5}, {1, 6}, {5, 6}, {2, 7}, {2, 8}, {7, 8}};
    GadgetSpec s;
    s.graph = Graph(9, e);
    s.middle_triangle = {0, 1, 2};
    s.external_triangles = {{0, 3, 4}, {1, 5, 6}, {2, 7, 8}};
    s.attachment_vertices = {{3, 4}, {5, 6}, {7, 8}};
    return s;
}

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("nae parsing and formatting") {
    auto inst = parse_nae("c example\np nae3 3 2\n1 -2 3 0\n-1 2 -3\n");
    CHECK(inst == nae(3, {{1, -2, 3}, {-1, 2, -3}}));
    CHECK(parse_nae(format_nae(inst)) == inst);
    CHECK_THROWS_AS(parse_nae("p nae3 2 1\n1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_nae("p nae3 2 1\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_nae("1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_nae("p nae3 2 2\n1 2 -1\n"), ParseError);
    CHECK_THROWS_AS(validate(nae(1, {{1, 2, 1}})), Error);
}

TEST_CASE("nae brute force") {
    CHECK(nae_brute_force(nae(3, {{1, 2, 3}})));
    CHECK_FALSE(nae_brute_force(nae(1, {{1, 1, 1}})));
    CHECK(nae_brute_force(nae(3, {{1, 2, 3}, {-1, -2, -3}})));
    CHECK(nae_brute_force(nae(0, {})));
    CHECK_THROWS_AS(nae_brute_force(nae(26, {})), Error);
    Rng rng(71);
    for (int i = 0; i < 200; ++i) {
        auto inst = random_nae_instance(rng.between(3, 6), rng.between(0, 8), rng);
        CHECK(nae_brute_force(inst) == nae_oracle(inst));
    }
}

TEST_CASE("c1 star") {
    Graph h = c1_add_star(cycle_graph(5), 3);
    CHECK(h.order() == 8);
    CHECK(h.adjacent(5, 0));
    CHECK(h.degree(5) == 3);
    CHECK(c1_add_star(path_graph(3), 2).adjacent(3, 0));
    CHECK_THROWS_AS(c1_add_star(Graph(0), 1), Error);
    CHECK_THROWS_AS(c1_add_star(path_graph(3), 0), Error);
    CHECK(min_cover_exact(c1_add_star(path_graph(3), 2)).t_number == 2);
    CHECK(min_cover_exact(h).t_number == 3);
}

TEST_CASE("c2 pendants") {
    Graph d = c2_add_pendants(diamond_graph(), 2, 2);
    CHECK(d.order() == 5);
    CHECK(cliques_containing(d, 2) == 2);
    CHECK(c2_add_pendants(complete_graph(3), 0, 1) == complete_graph(3));
    Graph c = c2_add_pendants(cycle_graph(5), 0, 3);
    CHECK(c.order() == 6);
    CHECK(cliques_containing(c, 0) == 3);
}

TEST_CASE("c3 gadget replacement") {
    GadgetSpec one;
    one.graph = complete_graph(4);
    one.middle_triangle = {0, 1, 2};
    one.external_triangles = {{1, 2, 3}};
    one.attachment_vertices = {{2, 3}};
    Graph k2 = c3_gadget_replace(complete_graph(2), one);
    CHECK(k2.order() == 2 * 4 - 2);
    CHECK(k2.size() == 2 * 6 - 1);

    GadgetSpec three = three_slot_gadget();
    Graph k3 = c3_gadget_replace(complete_graph(3), three);
    CHECK(k3.order() == 3 * 9 - 6);
    CHECK(k3.size() == 3 * 12 - 3);
    CHECK(c3_gadget_replace(Graph(0), three).order() == 0);
    CHECK_THROWS_AS(c3_gadget_replace(star_graph(4), three), Error);
    CHECK(c3_gadget_replace(complete_graph(3), three) == k3);
}

TEST_CASE("gadget validation") {
    GadgetSpec bad = three_slot_gadget();
    bad.external_triangles[0] = {0, 3, 5};
    CHECK_THROWS_AS(validate(bad), Error);
    bad = three_slot_gadget();
    bad.attachment_vertices[0] = {3, 3};
    CHECK_THROWS_AS(validate(bad), Error);
    bad = three_slot_gadget();
    bad.attachment_vertices.pop_back();
    CHECK_THROWS_AS(validate(bad), Error);
}

TEST_CASE("gadget verification") {
    // Three single-edge tessellations cover K3 without holding the triangle.
    GadgetSpec k3;
    k3.graph = complete_graph(3);
    k3.middle_triangle = {0, 1, 2};
    CHECK(verify_gadget(k3) == false);

    GadgetSpec two;
    two.graph = Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3}});
    two.middle_triangle = {0, 1, 2};
    two.external_triangles = {{3, 4, 5}};
    two.attachment_vertices = {{4, 5}};
    CHECK(verify_gadget(two) == false);

    GadgetSpec heavy;
    heavy.graph = Graph(7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}});
    heavy.middle_triangle = {0, 1, 2};
    CHECK_THROWS_AS(verify_gadget(heavy), Error);
}

TEST_CASE("c4 vertex counts") {
    CHECK(c4_fixed_t(complete_graph(2), {0, 1}, 4).order() == 24);
    CHECK(c4_fixed_t(complete_graph(2), {}, 4).order() == 2 + 12);
    Graph h = c4_fixed_t(complete_graph(3), {1}, 5);
    const int c0 = 3 + 1;
    for (int c = c0; c < c0 + 3; ++c) CHECK(h.degree(c) == 1 + 4);
    CHECK_THROWS_AS(c4_fixed_t(complete_graph(3), {1}, 3), Error);
    CHECK_THROWS_AS(c4_fixed_t(complete_graph(3), {1, 1}, 4), Error);
    CHECK_THROWS_AS(c4_fixed_t(complete_graph(3), {3}, 4), Error);
    for (int t = 4; t <= 6; ++t)
        for (int f = 0; f <= 3; ++f) {
            std::vector<Vertex> fs;
            for (int i = 0; i < f; ++i) fs.push_back(i);
            const int expected = 3 + f + 3 + 3 * (t - 1) + f * (t - 3) + f * (t - 3) * (t - 1);
            CHECK(c4_fixed_t(complete_graph(3), fs, t).order() == expected);
        }
}

TEST_CASE("c5 chordal (2,1) graphs") {
    auto a = c5_chordal21(complete_graph(3));
    CHECK(a.graph.order() == 19);
    CHECK(is_chordal(a.graph));
    CHECK(oracle::is_chordal(a.graph));
    CHECK(verify_kl_partition(a.graph, a.stables, a.cliques));
    CHECK(a.stables.size() == 2);
    CHECK(a.cliques.size() == 1);
    auto c5 = c5_chordal21(cycle_graph(5));
    CHECK(c5.graph.order() == 29);
    CHECK(verify_kl_partition(c5.graph, c5.stables, c5.cliques));
    CHECK_THROWS_AS(c5_chordal21(cycle_graph(4)), Error);
}

TEST_CASE("c6 (1,2) graphs") {
    auto a = c6_12graph(complete_graph(3));
    CHECK(a.graph.order() == 20);
    CHECK(a.stables.size() == 1);
    CHECK(a.cliques.size() == 2);
    CHECK(verify_kl_partition(a.graph, a.stables, a.cliques));
    CHECK_THROWS_AS(c6_12graph(cycle_graph(4)), Error);
}

TEST_CASE("c7 clique graph of an instance") {
    Graph one = c7_nae_to_kg(nae(1, {}));
    CHECK(one.order() == 3);
    CHECK(one.size() == 3);
    Graph three = c7_nae_to_kg(nae(3, {{1, 2, 3}}));
    CHECK(three.order() == 10);
    CHECK(three.size() == 15);
    CHECK(c7_nae_to_kg(nae(0, {})).order() == 1);
}

TEST_CASE("c8 layouts") {
    Graph g = c8_kg_to_graph(nae(3, {{1, 2, 3}}));
    CHECK(g.order() == 3 + 4 + 3);
    CHECK(is_diamond_free(g));
    CHECK(c8_kg_to_graph(nae(2, {})).order() == 2 + 4);
    CHECK(c8_kg_to_graph(nae(1, {})).order() == 4);
    CHECK(c8_kg_to_graph(nae(0, {})).order() == 1);
    CHECK_THROWS_AS(c8_kg_to_graph(nae(2, {{1, 1, 2}})), Error);
}

TEST_CASE("c8 output is diamond free with small diameter and the right clique graph") {
    Rng rng(72);
    for (int i = 0; i < 60; ++i) {
        auto inst = random_nae_instance(rng.between(3, 4), rng.between(1, 3), rng);
        Graph g = c8_kg_to_graph(inst);
        CHECK(is_diamond_free(g));
        CHECK(oracle::is_diamond_free(g));
        CHECK(diameter(g) <= 5);
        Graph k = c7_nae_to_kg(inst);
        CHECK(are_isomorphic(clique_graph(g).kg, k));
        CHECK((exact_chromatic_number(k).coloring.count <= 3) == nae_oracle(inst));
    }
}

}
