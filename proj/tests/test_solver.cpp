#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "tess/clique_graph.hpp"
#include "tess/coloring.hpp"
#include "tess/corpus.hpp"
#include "tess/solver.hpp"
#include "tess/structure.hpp"

using namespace tess;

namespace {

std::set<std::vector<Edge>> edge_sets(const Graph& g, const TessellationCatalog& c) {
    std::set<std::vector<Edge>> out;
    for (const auto& t : c.tessellations) out.insert(tessellation_edges(g, t));
    return out;
}

// Every clique partition of V(g), by brute force, reduced to its edge set.
void all_partitions(const Graph& g, Vertex v, std::vector<Clique>& parts, std::set<std::vector<Edge>>& out) {
    if (v == g.order()) {
        std::vector<Edge> edges;
        for (const auto& p : parts)
            for (std::size_t a = 0; a < p.size(); ++a)
                for (std::size_t b = a + 1; b < p.size(); ++b) edges.emplace_back(p[a], p[b]);
        std::sort(edges.begin(), edges.end());
        out.insert(edges);
        return;
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!std::all_of(parts[i].begin(), parts[i].end(), [&](Vertex u) { return g.adjacent(u, v); })) continue;
        parts[i].push_back(v);
        all_partitions(g, v + 1, parts, out);
        parts[i].pop_back();
    }
    parts.push_back({v});
    all_partitions(g, v + 1, parts, out);
    parts.pop_back();
}

std::set<std::vector<Edge>> maximal_partition_edge_sets(const Graph& g) {
    std::set<std::vector<Edge>> all;
    std::vector<Clique> parts;
    all_partitions(g, 0, parts, all);
    std::set<std::vector<Edge>> out;
    for (const auto& a : all) {
        bool dominated = false;
        for (const auto& b : all)
            if (a != b && std::includes(b.begin(), b.end(), a.begin(), a.end())) dominated = true;
        if (!dominated) out.insert(a);
    }
    return out;
}

}  // namespace

TEST_SUITE("solver") {

TEST_CASE("edge set operations") {
    EdgeSet a(130), b(130);
    a.set(3);
    a.set(70);
    a.set(129);
    b.set(70);
    CHECK(a.count() == 3);
    CHECK(a.first() == 3);
    CHECK(a.next(3) == 70);
    CHECK(a.next(129) == 130);
    CHECK(b.is_subset_of(a));
    CHECK_FALSE(a.is_subset_of(b));
    CHECK(a.intersection_count(b) == 1);
    EdgeSet c = a;
    c.subtract(b);
    CHECK_FALSE(c.intersects(b));
    c.flip();
    CHECK(c.count() == 128);
    CHECK(EdgeSet(5).none());
}

TEST_CASE("catalog examples") {
    auto k3 = enumerate_tessellations(complete_graph(3));
    REQUIRE(k3.size() == 1);
    CHECK(k3.tessellations[0] == Tessellation({{0, 1, 2}}));
    auto c4 = enumerate_tessellations(cycle_graph(4));
    CHECK(c4.size() == 2);
    CHECK(edge_sets(cycle_graph(4), c4) ==
          std::set<std::vector<Edge>>{{Edge(0, 1), Edge(2, 3)}, {Edge(0, 3), Edge(1, 2)}});
    auto p3 = enumerate_tessellations(path_graph(3));
    CHECK(p3.size() == 2);
    CHECK(enumerate_tessellations(Graph(3)).size() == 1);
}

TEST_CASE("catalog order and cap") {
    auto cat = enumerate_tessellations(petersen_graph());
    for (std::size_t i = 0; i + 1 < cat.size(); ++i) CHECK(cat.edge_sets[i].count() >= cat.edge_sets[i + 1].count());
    CHECK_THROWS_AS(enumerate_tessellations(petersen_graph(), cat.size() - 1), CapacityError);
    CHECK_NOTHROW(enumerate_tessellations(petersen_graph(), cat.size()));
}

TEST_CASE("catalog equals the maximal clique partitions found by brute force") {
    Rng rng(41);
    for (int i = 0; i < 80; ++i) {
        Graph g = random_graph(rng.between(1, 8), 0.3 + 0.4 * rng.chance(0.5), rng);
        auto cat = enumerate_tessellations(g);
        CHECK(edge_sets(g, cat) == maximal_partition_edge_sets(g));
        CHECK(edge_sets(g, cat).size() == cat.size());
        for (std::size_t j = 0; j < cat.size(); ++j) {
            CHECK(validate_tessellation(g, cat.tessellations[j]).ok());
            CHECK(cat.edge_sets[j].count() == tessellation_edges(g, cat.tessellations[j]).size());
        }
    }
}

TEST_CASE("avoiding catalog never holds the avoided set") {
    Graph k4 = complete_graph(4);
    const Clique avoid{0, 1, 2};
    auto cat = enumerate_tessellations_avoiding(k4, avoid);
    for (const auto& t : cat.tessellations)
        for (const auto& q : t.cliques()) CHECK_FALSE(std::includes(q.begin(), q.end(), avoid.begin(), avoid.end()));
    CHECK(cat.size() > 0);
    bool has_013 = false;
    for (const auto& t : cat.tessellations)
        if (t == Tessellation({{0, 1, 3}})) has_013 = true;
    CHECK(has_013);
}

TEST_CASE("minimum cover examples") {
    CHECK(min_cover_exact(complete_graph(3)).t_number == 1);
    auto c5 = min_cover_exact(cycle_graph(5));
    CHECK(c5.t_number == 3);
    CHECK(c5.optimal);
    CHECK(validate_cover(cycle_graph(5), c5.cover).ok());
    CHECK(min_cover_exact(diamond_graph()).t_number == 2);
    CHECK(min_cover_exact(Graph(4)).t_number == 0);
    CHECK(min_cover_exact(petersen_graph()).t_number == 4);
    CHECK(min_cover_exact(star_graph(5)).t_number == 5);
}

TEST_CASE("minimum cover matches the edge labeling oracle") {
    Rng rng(42);
    for (int i = 0; i < 120; ++i) {
        Graph g = random_graph(rng.between(1, 7), 0.3 + 0.5 * rng.chance(0.5), rng);
        auto r = min_cover_exact(g);
        REQUIRE(r.optimal);
        CHECK(oracle::cover_is_valid(g, r.cover));
        CHECK(static_cast<int>(r.cover.size()) == r.t_number);
        CHECK(r.t_number == oracle::tessellation_number(g));
    }
}

TEST_CASE("exhausted budget reports a non optimal cover") {
    Graph g = mycielskian(mycielskian(complete_graph(2)));
    auto r = min_cover_exact(g, {1, kDefaultCatalogCap});
    CHECK(validate_cover(g, r.cover).ok());
    auto capped = min_cover_exact(g, {kDefaultSearchBudget, 1});
    CHECK_FALSE(capped.optimal);
    CHECK(validate_cover(g, capped.cover).ok());
}

TEST_CASE("t-tessellability examples") {
    auto c4 = is_t_tessellable(cycle_graph(4), 2);
    CHECK(c4.decision == Decision::Yes);
    REQUIRE(c4.cover);
    CHECK(c4.cover->size() <= 2);
    CHECK(validate_cover(cycle_graph(4), *c4.cover).ok());
    auto c5 = is_t_tessellable(cycle_graph(5), 2);
    CHECK(c5.decision == Decision::No);
    CHECK_FALSE(c5.cover);
    Graph cluster = disjoint_union(complete_graph(3), complete_graph(4));
    CHECK(is_t_tessellable(cluster, 1).decision == Decision::Yes);
    CHECK(is_t_tessellable(Graph(3), 0).decision == Decision::Yes);
    CHECK(is_t_tessellable(path_graph(3), 0).decision == Decision::No);
    CHECK(is_t_tessellable(path_graph(3), 1).decision == Decision::No);
    CHECK(is_t_tessellable(petersen_graph(), 3).decision == Decision::No);
    CHECK_THROWS_AS(is_t_tessellable(path_graph(3), -1), Error);
}

TEST_CASE("t-tessellability is monotone and agrees with the minimum") {
    Rng rng(43);
    for (int i = 0; i < 60; ++i) {
        Graph g = random_graph(rng.between(2, 7), 0.5, rng);
        const int t = min_cover_exact(g).t_number;
        for (int k = 0; k <= t + 1; ++k) {
            auto r = is_t_tessellable(g, k);
            CHECK(r.decision == (k >= t ? Decision::Yes : Decision::No));
            if (r.cover) {
                CHECK(static_cast<int>(r.cover->size()) <= k);
                CHECK(validate_cover(g, *r.cover).ok());
            }
        }
    }
}

TEST_CASE("greedy cover") {
    CHECK(greedy_cover(complete_graph(3)).size() == 1);
    CHECK(greedy_cover(cycle_graph(4)).size() == 2);
    CHECK(greedy_cover(star_graph(3)).size() == 3);
    Rng rng(44);
    for (int i = 0; i < 100; ++i) {
        Graph g = random_graph(rng.between(1, 25), 0.3, rng);
        CHECK(validate_cover(g, greedy_cover(g)).ok());
    }
}

TEST_CASE("minimum cover enumeration visits distinct minimum covers") {
    std::vector<TessellationCover> seen;
    auto t = for_each_min_cover(cycle_graph(4), [&](const TessellationCover& c) {
        seen.push_back(c);
        return true;
    });
    CHECK(t == 2);
    CHECK(seen.size() == 1);
    seen.clear();
    CHECK(for_each_min_cover(path_graph(3), [&](const TessellationCover& c) {
              seen.push_back(c);
              return true;
          }) == 2);
    CHECK(seen.size() == 1);
    seen.clear();
    // C5: three matching tessellations, the edge left over by a 2-matching is unique
    CHECK(for_each_min_cover(cycle_graph(5), [&](const TessellationCover& c) {
              CHECK(validate_cover(cycle_graph(5), c).ok());
              CHECK(c.size() == 3);
              seen.push_back(c);
              return true;
          }) == 3);
    std::set<std::vector<std::vector<Clique>>> distinct;
    for (const auto& c : seen) {
        std::vector<std::vector<Clique>> key;
        for (const auto& tt : c.tessellations) key.push_back(tt.cliques());
        std::sort(key.begin(), key.end());
        distinct.insert(key);
    }
    CHECK(distinct.size() == seen.size());
    int calls = 0;
    for_each_min_cover(cycle_graph(5), [&](const TessellationCover&) { return ++calls < 1; });
    CHECK(calls == 1);
}

TEST_CASE("exposed clique properties") {
    CHECK(exists_min_cover_without_exposed(diamond_graph()) == true);
    CHECK(exists_min_cover_without_exposed(cycle_graph(4)) == true);
    CHECK(exists_min_cover_without_exposed(cycle_graph(5)) == true);
    CHECK(all_min_covers_need_cliqueless_tessellation(complete_graph(3)) == false);
    CHECK(all_min_covers_need_cliqueless_tessellation(diamond_graph()) == false);
    CHECK(all_min_covers_need_cliqueless_tessellation(cycle_graph(4)) == false);
}

}
