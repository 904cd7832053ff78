#include "tess/two_tess.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

#include "tess/clique_graph.hpp"
#include "tess/coloring.hpp"

namespace tess {

std::string_view to_string(TwoTessWitness w) {
    switch (w) {
        case TwoTessWitness::None: return "none";
        case TwoTessWitness::NonCliqueTwinClass: return "non_clique_twin_class";
        case TwoTessWitness::NotLineGraph: return "not_line_graph";
        case TwoTessWitness::RootNonBipartite: return "root_non_bipartite";
    }
    return "none";
}

Graph line_graph(const Multigraph& h) {
    std::vector<std::vector<Vertex>> at(static_cast<std::size_t>(h.order()));
    Vertex next = 0;
    for (const auto& link : h.links()) {
        for (int k = 0; k < link.multiplicity; ++k, ++next) {
            at[static_cast<std::size_t>(link.u)].push_back(next);
            at[static_cast<std::size_t>(link.v)].push_back(next);
        }
    }
    std::vector<Edge> edges;
    for (const auto& list : at)
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i + 1; j < list.size(); ++j) edges.emplace_back(list[i], list[j]);
    // Parallel occurrences meet at both endpoints.
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(next, edges);
}

namespace {

std::uint64_t key(Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}

// Incremental root construction for one connected component.
class Recognizer {
public:
    explicit Recognizer(const Graph& g)
        : g_(g), pos_(static_cast<std::size_t>(g.order()), -1), edge_of_(static_cast<std::size_t>(g.order())) {}

    bool run(Vertex start) {
        order_.assign(1, start);
        pos_[static_cast<std::size_t>(start)] = 0;
        for (std::size_t head = 0; head < order_.size(); ++head) {
            for (Vertex w : g_.neighbors(order_[head])) {
                if (pos_[static_cast<std::size_t>(w)] >= 0) continue;
                pos_[static_cast<std::size_t>(w)] = static_cast<int>(order_.size());
                order_.push_back(w);
            }
        }
        deg_.assign(2, 0);
        roots_ = 2;
        present_.clear();
        apply(start, {0, 1, false});
        definitive_ = false;
        return extend(1);
    }

    const std::vector<Vertex>& order() const noexcept { return order_; }
    int root_order() const noexcept { return roots_; }
    std::pair<Vertex, Vertex> edge_of(Vertex v) const { return edge_of_[static_cast<std::size_t>(v)]; }

private:
    struct Placement {
        Vertex x;
        Vertex y;
        bool fresh;
    };

    bool incident(Vertex s, Vertex x) const {
        const auto& e = edge_of_[static_cast<std::size_t>(s)];
        return e.first == x || e.second == x;
    }

    bool valid(const std::vector<Vertex>& s, const Placement& p) const {
        if (p.fresh) {
            if (s.size() != static_cast<std::size_t>(deg_[static_cast<std::size_t>(p.x)])) return false;
            return std::all_of(s.begin(), s.end(), [&](Vertex w) { return incident(w, p.x); });
        }
        if (p.x == p.y || present_.count(key(p.x, p.y))) return false;
        if (s.size() != static_cast<std::size_t>(deg_[static_cast<std::size_t>(p.x)] + deg_[static_cast<std::size_t>(p.y)])) return false;
        return std::all_of(s.begin(), s.end(), [&](Vertex w) { return incident(w, p.x) || incident(w, p.y); });
    }

    std::vector<Placement> candidates(Vertex v) const {
        std::vector<Vertex> s;
        const int pv = pos_[static_cast<std::size_t>(v)];
        for (Vertex w : g_.neighbors(v))
            if (pos_[static_cast<std::size_t>(w)] < pv) s.push_back(w);
        std::vector<Placement> fresh;
        std::vector<Placement> old;
        const auto [a, b] = edge_of_[static_cast<std::size_t>(s.front())];
        for (Vertex x : {a, b}) {
            auto t = std::find_if(s.begin(), s.end(), [&](Vertex w) { return !incident(w, x); });
            if (t == s.end()) {
                Placement p{x, roots_, true};
                if (valid(s, p)) fresh.push_back(p);
                continue;
            }
            const auto [c, d] = edge_of_[static_cast<std::size_t>(*t)];
            for (Vertex y : {c, d}) {
                Placement p{x, y, false};
                if (valid(s, p)) old.push_back(p);
            }
        }
        fresh.insert(fresh.end(), old.begin(), old.end());
        return fresh;
    }

    void apply(Vertex v, const Placement& p) {
        if (p.fresh) {
            deg_.push_back(0);
            ++roots_;
        }
        edge_of_[static_cast<std::size_t>(v)] = {p.x, p.y};
        ++deg_[static_cast<std::size_t>(p.x)];
        ++deg_[static_cast<std::size_t>(p.y)];
        present_.insert(key(p.x, p.y));
    }

    void undo(Vertex, const Placement& p) {
        present_.erase(key(p.x, p.y));
        --deg_[static_cast<std::size_t>(p.x)];
        --deg_[static_cast<std::size_t>(p.y)];
        if (p.fresh) {
            deg_.pop_back();
            --roots_;
        }
    }

    bool extend(std::size_t k) {
        while (k < order_.size()) {
            const Vertex v = order_[k];
            auto cands = candidates(v);
            if (roots_ <= 4) {
                // Small roots are not determined by their line graphs.
                for (const auto& p : cands) {
                    apply(v, p);
                    if (extend(k + 1)) return true;
                    undo(v, p);
                    if (definitive_) return false;
                }
                return false;
            }
            if (cands.empty()) {
                definitive_ = true;
                return false;
            }
            apply(v, cands.front());
            ++k;
        }
        return true;
    }

    const Graph& g_;
    std::vector<int> pos_;
    std::vector<std::pair<Vertex, Vertex>> edge_of_;
    std::vector<Vertex> order_;
    std::vector<int> deg_;
    int roots_ = 0;
    std::unordered_set<std::uint64_t> present_;
    bool definitive_ = false;
};

struct SmallEntry {
    bool two_tessellable = false;
    bool line = false;
    int root_order = 0;
    int left_count = 0;  // root vertices below this are on the left side
    std::vector<std::pair<Vertex, Vertex>> edge_of;
};

constexpr int kSmall = 4;

int pair_bit(int i, int j) {
    // Pairs of {0..3} in lexicographic order.
    static constexpr std::array<std::array<int, 4>, 4> bit{{{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}}};
    return bit[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

// Root read off a two-tessellation cover: one root vertex per clique of each
// tessellation, plus a private vertex wherever a vertex is a singleton.
SmallEntry root_from_cover(const Graph& q, const TessellationCover& cover) {
    SmallEntry e;
    const int n = q.order();
    std::vector<int> x(static_cast<std::size_t>(n), -1);
    std::vector<int> y(static_cast<std::size_t>(n), -1);
    int next = 0;
    auto assign = [&](const Tessellation& t, std::vector<int>& side) {
        for (const Clique& c : t.cliques()) {
            for (Vertex v : c) side[static_cast<std::size_t>(v)] = next;
            ++next;
        }
        for (auto& s : side)
            if (s < 0) s = next++;
    };
    assign(cover.tessellations.size() > 0 ? cover.tessellations[0] : Tessellation{}, x);
    e.left_count = next;
    assign(cover.tessellations.size() > 1 ? cover.tessellations[1] : Tessellation{}, y);
    e.root_order = next;
    for (Vertex v = 0; v < n; ++v) e.edge_of.emplace_back(x[static_cast<std::size_t>(v)], y[static_cast<std::size_t>(v)]);
    return e;
}

const std::vector<SmallEntry>& small_table() {
    static const std::vector<SmallEntry> table = [] {
        std::vector<SmallEntry> out((kSmall + 1) * 64);
        for (int n = 2; n <= kSmall; ++n) {
            int valid = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) valid |= 1 << pair_bit(i, j);
            for (int mask = 0; mask < 64; ++mask) {
                if ((mask & ~valid) != 0) continue;
                std::vector<Edge> edges;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (mask >> pair_bit(i, j) & 1) edges.emplace_back(i, j);
                Graph q(n, edges);
                if (!is_connected(q)) continue;
                SmallEntry& e = out[static_cast<std::size_t>(n * 64 + mask)];
                e.line = recognize_line_graph_simple(q).has_value();
                auto kg = clique_graph(q);
                auto sides = is_bipartite(kg.kg);
                if (!sides) continue;
                VertexColoring coloring{std::vector<int>(kg.cliques.size(), 0), 2};
                for (Vertex c : sides->right) coloring.colors[static_cast<std::size_t>(c)] = 1;
                auto cover = cover_from_kg_coloring(q, kg, coloring);
                bool line = e.line;
                e = root_from_cover(q, cover);
                e.line = line;
                e.two_tessellable = true;
            }
        }
        return out;
    }();
    return table;
}

}  // namespace

std::optional<SimpleRoot> recognize_line_graph_simple(const Graph& g) {
    if (g.order() == 0) return SimpleRoot{Graph(0), {}};
    if (!is_connected(g)) return std::nullopt;
    Recognizer rec(g);
    if (!rec.run(0)) return std::nullopt;
    SimpleRoot out{Graph(0), {}};
    std::vector<Edge> edges;
    for (Vertex v = 0; v < g.order(); ++v) {
        auto [x, y] = rec.edge_of(v);
        out.edge_of.emplace_back(x, y);
        edges.emplace_back(x, y);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) return std::nullopt;
    out.root = Graph(rec.root_order(), edges);
    return out;
}

TwoTessResult is_two_tessellable(const Graph& g) {
    const int n = g.order();
    TwoTessResult result;

    auto classes = true_twin_classes(g);
    std::vector<int> class_of(static_cast<std::size_t>(n), -1);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        for (Vertex v : classes[c]) {
            class_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
            if (v != classes[c].front() && !g.adjacent(v, classes[c].front())) {
                result.witness = TwoTessWitness::NonCliqueTwinClass;
                result.witness_component = classes[c].front();
                return result;
            }
        }
    }

    // Quotient by twin classes.
    const int qn = static_cast<int>(classes.size());
    std::vector<Edge> qedges;
    std::vector<int> seen(static_cast<std::size_t>(qn), -1);
    for (int c = 0; c < qn; ++c) {
        for (Vertex w : g.neighbors(classes[static_cast<std::size_t>(c)].front())) {
            int d = class_of[static_cast<std::size_t>(w)];
            if (d <= c || seen[static_cast<std::size_t>(d)] == c) continue;
            seen[static_cast<std::size_t>(d)] = c;
            qedges.emplace_back(c, d);
        }
    }
    const Graph q(qn, qedges);

    RootGraph root;
    std::vector<std::pair<Vertex, Vertex>> links;  // global root pairs, one per quotient vertex
    std::vector<int> link_class;
    std::vector<char> root_left;
    std::vector<Clique> first;
    std::vector<Clique> second;
    Recognizer recognizer(q);

    for (const auto& comp : connected_components(q)) {
        const auto& members = classes[static_cast<std::size_t>(comp.front())];
        const int base = static_cast<int>(root_left.size());
        if (comp.size() == 1) {
            if (members.size() < 2) continue;
            // A clique is the line graph of a star.
            root_left.push_back(1);
            for (Vertex v : members) {
                root_left.push_back(0);
                links.emplace_back(base, static_cast<Vertex>(root_left.size() - 1));
                link_class.push_back(-1 - v);
            }
            first.push_back(members);
            continue;
        }

        std::vector<std::pair<Vertex, Vertex>> local(comp.size());
        std::vector<char> left;
        if (comp.size() <= static_cast<std::size_t>(kSmall)) {
            int mask = 0;
            for (std::size_t i = 0; i < comp.size(); ++i)
                for (std::size_t j = i + 1; j < comp.size(); ++j)
                    if (q.adjacent(comp[i], comp[j])) mask |= 1 << pair_bit(static_cast<int>(i), static_cast<int>(j));
            const SmallEntry& e = small_table()[comp.size() * 64 + static_cast<std::size_t>(mask)];
            if (!e.two_tessellable) {
                result.witness = e.line ? TwoTessWitness::RootNonBipartite : TwoTessWitness::NotLineGraph;
                result.witness_component = members.front();
                return result;
            }
            local = e.edge_of;
            for (int r = 0; r < e.root_order; ++r) left.push_back(r < e.left_count ? 1 : 0);
        } else {
            if (!recognizer.run(comp.front())) {
                result.witness = TwoTessWitness::NotLineGraph;
                result.witness_component = members.front();
                return result;
            }
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < comp.size(); ++i) {
                local[i] = recognizer.edge_of(comp[i]);
                edges.emplace_back(local[i].first, local[i].second);
            }
            auto sides = is_bipartite(Graph(recognizer.root_order(), edges));
            if (!sides) {
                result.witness = TwoTessWitness::RootNonBipartite;
                result.witness_component = members.front();
                return result;
            }
            left.assign(static_cast<std::size_t>(recognizer.root_order()), 0);
            for (Vertex r : sides->left) left[static_cast<std::size_t>(r)] = 1;
        }

        // Stars of the root become cliques of g.
        std::vector<Clique> star(left.size());
        for (std::size_t i = 0; i < comp.size(); ++i) {
            const auto& cls = classes[static_cast<std::size_t>(comp[i])];
            for (Vertex r : {local[i].first, local[i].second})
                star[static_cast<std::size_t>(r)].insert(star[static_cast<std::size_t>(r)].end(), cls.begin(), cls.end());
            links.emplace_back(base + local[i].first, base + local[i].second);
            link_class.push_back(comp[i]);
        }
        std::vector<Clique> a;
        std::vector<Clique> b;
        for (std::size_t r = 0; r < star.size(); ++r) {
            if (star[r].size() < 2) continue;
            std::sort(star[r].begin(), star[r].end());
            (left[r] ? a : b).push_back(std::move(star[r]));
        }
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (b < a) {
            std::swap(a, b);
            for (auto& s : left) s = static_cast<char>(!s);
        }
        root_left.insert(root_left.end(), left.begin(), left.end());
        first.insert(first.end(), a.begin(), a.end());
        second.insert(second.end(), b.begin(), b.end());
    }

    root.root = Multigraph(static_cast<int>(root_left.size()));
    for (std::size_t i = 0; i < links.size(); ++i) {
        int c = link_class[i];
        if (c < 0) {
            root.root.add_edge(links[i].first, links[i].second);
            root.edge_map.push_back(-1 - c);
            continue;
        }
        const auto& cls = classes[static_cast<std::size_t>(c)];
        root.root.add_edge(links[i].first, links[i].second, static_cast<int>(cls.size()));
        root.edge_map.insert(root.edge_map.end(), cls.begin(), cls.end());
    }
    Bipartition sides;
    for (std::size_t r = 0; r < root_left.size(); ++r) (root_left[r] ? sides.left : sides.right).push_back(static_cast<Vertex>(r));

    TessellationCover cover;
    if (!first.empty()) cover.tessellations.emplace_back(std::move(first));
    if (!second.empty()) cover.tessellations.emplace_back(std::move(second));
    result.decision = true;
    result.cover = std::move(cover);
    result.root = std::move(root);
    result.root_sides = std::move(sides);
    return result;
}

bool two_tess_reference(const Graph& g, std::size_t clique_cap) {
    return is_bipartite(clique_graph(g, clique_cap).kg).has_value();
}

}  // namespace tess
