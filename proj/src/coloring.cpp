#include "tess/coloring.hpp"

#include <algorithm>

#include "tess/structure.hpp"

namespace tess {

bool is_proper(const Graph& g, const VertexColoring& c) {
    if (c.colors.size() != static_cast<std::size_t>(g.order())) return false;
    for (int col : c.colors)
        if (col < 0 || col >= c.count) return false;
    for (Edge e : g.edges())
        if (c.colors[static_cast<std::size_t>(e.u)] == c.colors[static_cast<std::size_t>(e.v)]) return false;
    return true;
}

bool is_proper(const Graph& g, const EdgeColoring& c) {
    if (c.colors.size() != g.size()) return false;
    for (int col : c.colors)
        if (col < 0 || col >= c.count) return false;
    for (Vertex v = 0; v < g.order(); ++v) {
        std::vector<int> seen;
        for (Vertex w : g.neighbors(v)) seen.push_back(c.colors[*g.edge_index(v, w)]);
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    }
    return true;
}

namespace {

// Relabels colors to 0..k-1 in order of first occurrence.
int compress_colors(std::vector<int>& colors) {
    std::vector<int> remap;
    for (int& c : colors) {
        if (static_cast<std::size_t>(c) >= remap.size()) remap.resize(static_cast<std::size_t>(c) + 1, -1);
        auto& r = remap[static_cast<std::size_t>(c)];
        if (r < 0) r = static_cast<int>(std::count_if(remap.begin(), remap.end(), [](int x) { return x >= 0; }));
        c = r;
    }
    return static_cast<int>(std::count_if(remap.begin(), remap.end(), [](int x) { return x >= 0; }));
}

std::vector<Vertex> greedy_clique(const Graph& g) {
    std::vector<Vertex> best;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) + 1 <= static_cast<int>(best.size())) continue;
        std::vector<Vertex> cand(g.neighbors(v).begin(), g.neighbors(v).end());
        std::stable_sort(cand.begin(), cand.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        std::vector<Vertex> clique{v};
        for (Vertex w : cand) {
            if (std::all_of(clique.begin(), clique.end(), [&](Vertex x) { return g.adjacent(x, w); })) clique.push_back(w);
        }
        if (clique.size() > best.size()) best = std::move(clique);
    }
    return best;
}

class ColoringSearch {
public:
    ColoringSearch(const Graph& g, std::uint64_t budget)
        : g_(g), n_(g.order()), budget_(budget), color_(static_cast<std::size_t>(n_), -1), sat_(static_cast<std::size_t>(n_), 0) {}

    ExactColoring<VertexColoring> run() {
        ExactColoring<VertexColoring> out;
        if (n_ == 0) {
            out.exact = true;
            return out;
        }
        VertexColoring greedy = greedy_vertex_coloring(g_);
        best_ = greedy.colors;
        best_count_ = greedy.count;
        width_ = best_count_ + 1;
        counts_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(width_), 0);

        auto clique = greedy_clique(g_);
        lower_ = static_cast<int>(clique.size());
        int used = 0;
        for (Vertex v : clique) assign(v, used++);
        if (best_count_ > lower_) dsatur(static_cast<int>(clique.size()), used);
        for (Vertex v : clique) unassign(v);

        out.lower_bound = lower_;
        out.exact = !aborted_ || best_count_ == lower_;
        if (out.exact) {
            out.lower_bound = best_count_;
            if (lex_least(0, 0)) best_ = lex_;
        }
        out.coloring.colors = best_;
        out.coloring.count = compress_colors(out.coloring.colors);
        out.nodes = nodes_;
        return out;
    }

private:
    int& count(Vertex v, int c) { return counts_[static_cast<std::size_t>(v) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(c)]; }

    void assign(Vertex v, int c) {
        color_[static_cast<std::size_t>(v)] = c;
        for (Vertex w : g_.neighbors(v))
            if (count(w, c)++ == 0) ++sat_[static_cast<std::size_t>(w)];
    }

    void unassign(Vertex v) {
        int c = color_[static_cast<std::size_t>(v)];
        for (Vertex w : g_.neighbors(v))
            if (--count(w, c) == 0) --sat_[static_cast<std::size_t>(w)];
        color_[static_cast<std::size_t>(v)] = -1;
    }

    void dsatur(int colored, int used) {
        if (aborted_ || best_count_ == lower_) return;
        if (++nodes_ > budget_) {
            aborted_ = true;
            return;
        }
        if (colored == n_) {
            if (used < best_count_) {
                best_count_ = used;
                best_ = color_;
            }
            return;
        }
        Vertex pick = -1;
        for (Vertex v = 0; v < n_; ++v) {
            if (color_[static_cast<std::size_t>(v)] >= 0) continue;
            if (pick < 0 || sat_[static_cast<std::size_t>(v)] > sat_[static_cast<std::size_t>(pick)] ||
                (sat_[static_cast<std::size_t>(v)] == sat_[static_cast<std::size_t>(pick)] && g_.degree(v) > g_.degree(pick))) {
                pick = v;
            }
        }
        int limit = std::min(used, best_count_ - 2);
        for (int c = 0; c <= limit; ++c) {
            if (count(pick, c) != 0) continue;
            assign(pick, c);
            dsatur(colored + 1, std::max(used, c + 1));
            unassign(pick);
            if (aborted_ || best_count_ == lower_) return;
            limit = std::min(used, best_count_ - 2);
        }
    }

    // Index-order search with forward checking for the lexicographically
    // least coloring using best_count_ colors. Shares the node budget.
    bool lex_least(Vertex v, int used) {
        if (++nodes_ > budget_ + budget_ / 2) return false;
        if (v == n_) {
            lex_ = color_;
            return true;
        }
        int limit = std::min(used, best_count_ - 1);
        for (int c = 0; c <= limit; ++c) {
            if (count(v, c) != 0) continue;
            assign(v, c);
            bool viable = true;
            for (Vertex w : g_.neighbors(v)) {
                if (w > v && sat_[static_cast<std::size_t>(w)] >= best_count_) {
                    viable = false;
                    break;
                }
            }
            bool found = viable && lex_least(v + 1, std::max(used, c + 1));
            unassign(v);
            if (found) return true;
        }
        return false;
    }

    const Graph& g_;
    int n_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    int width_ = 0;
    int lower_ = 0;
    int best_count_ = 0;
    std::vector<int> color_;
    std::vector<int> sat_;
    std::vector<int> counts_;
    std::vector<int> best_;
    std::vector<int> lex_;
};

}  // namespace

VertexColoring greedy_vertex_coloring(const Graph& g) {
    auto [order, degen] = degeneracy_order(g);
    VertexColoring out;
    out.colors.assign(static_cast<std::size_t>(g.order()), -1);
    std::vector<char> taken;
    for (Vertex v : order) {
        taken.assign(static_cast<std::size_t>(g.degree(v)) + 1, 0);
        for (Vertex w : g.neighbors(v)) {
            int c = out.colors[static_cast<std::size_t>(w)];
            if (c >= 0 && c < static_cast<int>(taken.size())) taken[static_cast<std::size_t>(c)] = 1;
        }
        int c = 0;
        while (taken[static_cast<std::size_t>(c)]) ++c;
        out.colors[static_cast<std::size_t>(v)] = c;
        out.count = std::max(out.count, c + 1);
    }
    return out;
}

ExactColoring<VertexColoring> exact_chromatic_number(const Graph& g, std::uint64_t budget) {
    return ColoringSearch(g, budget).run();
}

Graph mycielskian(const Graph& g) {
    const int n = g.order();
    std::vector<Edge> edges = g.edges();
    for (Edge e : g.edges()) {
        edges.emplace_back(e.u, n + e.v);
        edges.emplace_back(e.v, n + e.u);
    }
    for (int i = 0; i < n; ++i) edges.emplace_back(n + i, 2 * n);
    return Graph(2 * n + 1, edges);
}

namespace {

// Per-vertex color slots: at(v, c) is the neighbor joined to v by a c-colored
// edge, or -1 when c is free at v.
class EdgePalette {
public:
    EdgePalette(const Graph& g, int colors)
        : g_(g), colors_(colors), at_(static_cast<std::size_t>(g.order()) * static_cast<std::size_t>(colors), -1),
          edge_color_(g.size(), -1) {}

    Vertex& at(Vertex v, int c) { return at_[static_cast<std::size_t>(v) * static_cast<std::size_t>(colors_) + static_cast<std::size_t>(c)]; }
    bool free(Vertex v, int c) { return at(v, c) < 0; }
    int first_free(Vertex v) {
        for (int c = 0; c < colors_; ++c)
            if (free(v, c)) return c;
        throw Error("no free color");
    }
    int color(Vertex u, Vertex v) const { return edge_color_[*g_.edge_index(u, v)]; }

    void set(Vertex u, Vertex v, int c) {
        auto idx = *g_.edge_index(u, v);
        int old = edge_color_[idx];
        if (old >= 0) {
            at(u, old) = -1;
            at(v, old) = -1;
        }
        edge_color_[idx] = c;
        if (c >= 0) {
            at(u, c) = v;
            at(v, c) = u;
        }
    }

    // Swaps colors a and b along the alternating path leaving `start` on an a-edge.
    void flip_path(Vertex start, int a, int b) {
        std::vector<std::pair<Vertex, Vertex>> path;
        std::vector<int> cols;
        Vertex x = start;
        int want = a;
        while (true) {
            Vertex y = at(x, want);
            if (y < 0) break;
            path.emplace_back(x, y);
            cols.push_back(want);
            x = y;
            want = want == a ? b : a;
        }
        for (auto [p, q] : path) set(p, q, -1);
        for (std::size_t i = 0; i < path.size(); ++i) set(path[i].first, path[i].second, cols[i] == a ? b : a);
    }

    EdgeColoring finish() {
        EdgeColoring out;
        out.colors = edge_color_;
        out.count = compress_colors(out.colors);
        return out;
    }

private:
    const Graph& g_;
    int colors_;
    std::vector<Vertex> at_;
    std::vector<int> edge_color_;
};

EdgeColoring misra_gries(const Graph& g) {
    const int palette = g.max_degree() + 1;
    EdgePalette pal(g, palette);
    std::vector<char> in_fan(static_cast<std::size_t>(g.order()), 0);
    for (Edge e : g.edges()) {
        const Vertex u = e.u;
        // Maximal fan of u starting at v.
        std::vector<Vertex> fan{e.v};
        in_fan[static_cast<std::size_t>(e.v)] = 1;
        bool grown = true;
        while (grown) {
            grown = false;
            for (Vertex x : g.neighbors(u)) {
                if (in_fan[static_cast<std::size_t>(x)]) continue;
                int cx = pal.color(u, x);
                if (cx >= 0 && pal.free(fan.back(), cx)) {
                    fan.push_back(x);
                    in_fan[static_cast<std::size_t>(x)] = 1;
                    grown = true;
                    break;
                }
            }
        }
        for (Vertex x : fan) in_fan[static_cast<std::size_t>(x)] = 0;

        const int c = pal.first_free(u);
        const int d = pal.first_free(fan.back());
        if (c != d) pal.flip_path(u, d, c);

        // Longest usable prefix ending at a vertex where d is free.
        std::size_t w = fan.size();
        for (std::size_t i = 0; i < fan.size(); ++i) {
            if (i > 0) {
                int ci = pal.color(u, fan[i]);
                if (ci < 0 || !pal.free(fan[i - 1], ci)) break;
            }
            if (pal.free(fan[i], d)) {
                w = i;
                break;
            }
        }
        if (w == fan.size()) throw Error("edge coloring invariant violated");
        for (std::size_t i = 0; i < w; ++i) {
            int next = pal.color(u, fan[i + 1]);
            pal.set(u, fan[i + 1], -1);
            pal.set(u, fan[i], next);
        }
        pal.set(u, fan[w], d);
    }
    return pal.finish();
}

}  // namespace

EdgeColoring bipartite_edge_coloring(const Graph& g) {
    if (!is_bipartite(g)) throw Error("bipartite_edge_coloring: graph is not bipartite");
    const int palette = std::max(1, g.max_degree());
    EdgePalette pal(g, palette);
    for (Edge e : g.edges()) {
        int a = pal.first_free(e.u);
        int b = pal.first_free(e.v);
        if (!pal.free(e.v, a)) pal.flip_path(e.v, a, b);
        pal.set(e.u, e.v, a);
    }
    return pal.finish();
}

EdgeColoring edge_coloring_delta_plus_one(const Graph& g) {
    if (is_bipartite(g)) return bipartite_edge_coloring(g);
    return misra_gries(g);
}

Graph simple_line_graph(const Graph& g) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < g.order(); ++v) {
        auto nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                edges.emplace_back(static_cast<Vertex>(*g.edge_index(v, nb[i])), static_cast<Vertex>(*g.edge_index(v, nb[j])));
    }
    return Graph(static_cast<int>(g.size()), edges);
}

ExactColoring<EdgeColoring> exact_chromatic_index(const Graph& g, std::uint64_t budget) {
    auto vc = exact_chromatic_number(simple_line_graph(g), budget);
    ExactColoring<EdgeColoring> out;
    out.coloring.colors = std::move(vc.coloring.colors);
    out.coloring.count = vc.coloring.count;
    out.exact = vc.exact;
    out.lower_bound = std::max(vc.lower_bound, g.max_degree());
    out.nodes = vc.nodes;
    return out;
}

}  // namespace tess
