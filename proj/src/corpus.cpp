#include "tess/corpus.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "tess/isomorphism.hpp"
#include "tess/structure.hpp"
#include "tess/two_tess.hpp"

namespace tess {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw Error("Rng::below needs a positive bound");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
}

int Rng::between(int lo, int hi) {
    if (hi < lo) throw Error("Rng::between needs lo <= hi");
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

bool Rng::chance(double p) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return unit < p;
}

Graph random_graph(int n, double p, Rng& rng) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph random_connected_graph(int n, double p, Rng& rng) {
    while (true) {
        Graph g = random_graph(n, p, rng);
        if (is_connected(g)) return g;
    }
}

Multigraph random_bipartite_multigraph(int left, int right, int links, int max_multiplicity, Rng& rng) {
    if (left < 1 || right < 1) throw Error("random_bipartite_multigraph needs nonempty sides");
    Multigraph h(left + right);
    for (int i = 0; i < links; ++i) {
        const int a = rng.between(0, left - 1);
        const int b = left + rng.between(0, right - 1);
        h.add_edge(a, b, rng.between(1, max_multiplicity));
    }
    return h;
}

namespace {

template <class Accept>
Graph random_filtered(int n, double p, Rng& rng, Accept accept) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng.below(i)]);
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    std::vector<Edge> edges;
    for (const Edge& e : pairs) {
        if (!rng.chance(p)) continue;
        if (!accept(adj, e)) continue;
        adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
        adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
        edges.push_back(e);
    }
    return Graph(n, edges);
}

std::vector<Vertex> common_neighbors(const std::vector<std::vector<char>>& adj, const Edge& e) {
    std::vector<Vertex> out;
    for (std::size_t w = 0; w < adj.size(); ++w)
        if (adj[static_cast<std::size_t>(e.u)][w] && adj[static_cast<std::size_t>(e.v)][w]) out.push_back(static_cast<Vertex>(w));
    return out;
}

}  // namespace

Graph random_diamond_free_graph(int n, double p, Rng& rng) {
    return random_filtered(n, p, rng, [](const std::vector<std::vector<char>>& adj, const Edge& e) {
        // Adding uv creates a diamond through uv itself, or through an
        // existing edge uw or vw that gains a second common neighbor.
        auto common = common_neighbors(adj, e);
        for (std::size_t i = 0; i < common.size(); ++i)
            for (std::size_t j = i + 1; j < common.size(); ++j)
                if (!adj[static_cast<std::size_t>(common[i])][static_cast<std::size_t>(common[j])]) return false;
        for (Vertex end : {e.u, e.v}) {
            const Vertex other = end == e.u ? e.v : e.u;
            for (std::size_t w = 0; w < adj.size(); ++w) {
                if (!adj[static_cast<std::size_t>(end)][w] || !adj[static_cast<std::size_t>(other)][w]) continue;
                // Edge end-w gets new common neighbor `other`; it must be
                // adjacent to every old common neighbor of end and w.
                for (std::size_t x = 0; x < adj.size(); ++x)
                    if (x != static_cast<std::size_t>(other) && adj[static_cast<std::size_t>(end)][x] && adj[w][x] &&
                        !adj[static_cast<std::size_t>(other)][x])
                        return false;
            }
        }
        return true;
    });
}

Graph random_triangle_free_connected_graph(int n, double p, Rng& rng) {
    while (true) {
        Graph g = random_filtered(n, p, rng, [](const std::vector<std::vector<char>>& adj, const Edge& e) {
            return common_neighbors(adj, e).empty();
        });
        if (is_connected(g)) return g;
    }
}

NaeInstance random_nae_instance(int var_count, int clause_count, Rng& rng) {
    if (var_count < 1 && clause_count > 0) throw Error("clauses need at least one variable");
    NaeInstance out;
    out.var_count = var_count;
    for (int c = 0; c < clause_count; ++c) {
        std::array<Literal, 3> clause;
        for (std::size_t i = 0; i < 3;) {
            Literal l{rng.between(0, var_count - 1), rng.chance(0.5)};
            if (std::find(clause.begin(), clause.begin() + static_cast<std::ptrdiff_t>(i), l) != clause.begin() + static_cast<std::ptrdiff_t>(i))
                continue;
            clause[i++] = l;
        }
        out.clauses.push_back(clause);
    }
    return out;
}

std::vector<Graph> connected_graphs(int n) {
    if (n < 1 || n > 8) throw Error("connected_graphs supports 1 <= n <= 8");
    std::map<std::vector<std::uint64_t>, Graph> level;
    level.emplace(canonical_form(Graph(1)).code, Graph(1));
    for (int k = 2; k <= n; ++k) {
        std::map<std::vector<std::uint64_t>, Graph> next;
        for (const auto& [code, g] : level) {
            const auto base = g.edges();
            for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << (k - 1)); ++subset) {
                std::vector<Edge> edges = base;
                for (int v = 0; v < k - 1; ++v)
                    if (subset >> v & 1) edges.emplace_back(v, k - 1);
                Graph h(k, edges);
                auto form = canonical_form(h);
                if (next.count(form.code)) continue;
                next.emplace(form.code, canonical_graph(h));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    for (auto& [code, g] : level) out.push_back(std::move(g));
    return out;
}

std::vector<CorpusFile> generate_corpus(std::uint64_t seed, const CorpusSpec& spec) {
    Rng rng(seed);
    std::vector<CorpusFile> files;
    auto add = [&](std::string name, const Graph& g) { files.push_back({std::move(name) + ".txt", format_edge_list(g)}); };
    const double densities[] = {0.2, 0.4, 0.6, 0.8};
    for (double p : densities) {
        for (int i = 0; i < spec.random_per_density; ++i) {
            const int n = rng.between(2, spec.random_max_order);
            add("er_p" + std::to_string(static_cast<int>(p * 100)) + "_" + std::to_string(i), random_graph(n, p, rng));
        }
    }
    for (int i = 0; i < spec.line_graphs; ++i) {
        auto h = random_bipartite_multigraph(rng.between(1, 4), rng.between(1, 4), rng.between(1, 6), 3, rng);
        add("line_" + std::to_string(i), line_graph(h));
    }
    for (int i = 0; i < spec.diamond_free; ++i) {
        const int n = rng.between(3, spec.random_max_order);
        add("diamond_free_" + std::to_string(i), random_diamond_free_graph(n, 0.5, rng));
    }
    for (int n = 1; n <= spec.all_connected_max_order; ++n) {
        auto all = connected_graphs(n);
        for (std::size_t i = 0; i < all.size(); ++i) add("connected_n" + std::to_string(n) + "_" + std::to_string(i), all[i]);
    }
    return files;
}

}  // namespace tess
