#include "tess/structure.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <unordered_map>

namespace tess {

std::pair<std::vector<Vertex>, int> degeneracy_order(const Graph& g) {
    const int n = g.order();
    std::vector<int> deg(static_cast<std::size_t>(n));
    int maxdeg = 0;
    for (Vertex v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = g.degree(v);
        maxdeg = std::max(maxdeg, g.degree(v));
    }
    // Bucket queue keyed by current degree; each bucket kept as a sorted-ish
    // stack so ties resolve to the lowest index first.
    std::vector<std::vector<Vertex>> buckets(static_cast<std::size_t>(maxdeg) + 1);
    for (Vertex v = n - 1; v >= 0; --v) buckets[static_cast<std::size_t>(deg[static_cast<std::size_t>(v)])].push_back(v);
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> removal;
    removal.reserve(static_cast<std::size_t>(n));
    int degeneracy = 0;
    int low = 0;
    for (int step = 0; step < n; ++step) {
        low = std::max(0, low - 1);
        Vertex v = -1;
        while (v < 0) {
            auto& bucket = buckets[static_cast<std::size_t>(low)];
            while (!bucket.empty()) {
                Vertex cand = bucket.back();
                bucket.pop_back();
                if (!removed[static_cast<std::size_t>(cand)] && deg[static_cast<std::size_t>(cand)] == low) {
                    v = cand;
                    break;
                }
            }
            if (v < 0) ++low;
        }
        removed[static_cast<std::size_t>(v)] = 1;
        degeneracy = std::max(degeneracy, low);
        removal.push_back(v);
        for (Vertex w : g.neighbors(v)) {
            auto& d = deg[static_cast<std::size_t>(w)];
            if (!removed[static_cast<std::size_t>(w)]) {
                --d;
                buckets[static_cast<std::size_t>(d)].push_back(w);
            }
        }
    }
    std::reverse(removal.begin(), removal.end());
    return {removal, degeneracy};
}

namespace {

std::vector<Vertex> intersect_sorted(const std::vector<Vertex>& a, std::span<const Vertex> b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

class CliqueEnumerator {
public:
    CliqueEnumerator(const Graph& g, std::size_t cap) : g_(g), cap_(cap) {}

    void expand(std::vector<Vertex>& r, std::vector<Vertex> p, std::vector<Vertex> x) {
        if (p.empty()) {
            if (x.empty()) {
                if (out.size() >= cap_) {
                    throw CapacityError("maximal clique count exceeds cap of " + std::to_string(cap_));
                }
                Clique c = r;
                std::sort(c.begin(), c.end());
                out.push_back(std::move(c));
            }
            return;
        }
        // Tomita pivot: the vertex of P u X with most neighbors in P.
        Vertex pivot = -1;
        std::size_t best = 0;
        for (const auto* set : {&p, &x}) {
            for (Vertex u : *set) {
                auto nb = g_.neighbors(u);
                std::size_t count = 0;
                auto it = nb.begin();
                for (Vertex w : p) {
                    it = std::lower_bound(it, nb.end(), w);
                    if (it != nb.end() && *it == w) ++count;
                }
                if (pivot < 0 || count > best) {
                    pivot = u;
                    best = count;
                }
            }
        }
        auto pivot_nb = g_.neighbors(pivot);
        std::vector<Vertex> candidates;
        std::set_difference(p.begin(), p.end(), pivot_nb.begin(), pivot_nb.end(), std::back_inserter(candidates));
        for (Vertex v : candidates) {
            auto nb = g_.neighbors(v);
            r.push_back(v);
            expand(r, intersect_sorted(p, nb), intersect_sorted(x, nb));
            r.pop_back();
            p.erase(std::lower_bound(p.begin(), p.end(), v));
            x.insert(std::lower_bound(x.begin(), x.end(), v), v);
        }
    }

    std::vector<Clique> out;

private:
    const Graph& g_;
    std::size_t cap_;
};

}  // namespace

std::vector<Clique> maximal_cliques(const Graph& g, std::size_t cap) {
    const int n = g.order();
    auto [order, degen] = degeneracy_order(g);
    std::vector<int> position(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

    CliqueEnumerator enumerator(g, cap);
    std::vector<Vertex> r;
    // Eppstein-Loffler-Strash outer loop: later neighbors form P, earlier form X.
    for (int i = n - 1; i >= 0; --i) {
        Vertex v = order[static_cast<std::size_t>(i)];
        std::vector<Vertex> p;
        std::vector<Vertex> x;
        for (Vertex w : g.neighbors(v)) {
            (position[static_cast<std::size_t>(w)] < i ? p : x).push_back(w);
        }
        r.assign(1, v);
        enumerator.expand(r, std::move(p), std::move(x));
    }
    std::sort(enumerator.out.begin(), enumerator.out.end());
    return std::move(enumerator.out);
}

bool is_clique(const Graph& g, std::span<const Vertex> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j] || !g.adjacent(vertices[i], vertices[j])) return false;
    return true;
}

bool is_independent(const Graph& g, std::span<const Vertex> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j])) return false;
    return true;
}

bool is_triangle_free(const Graph& g) {
    for (Edge e : g.edges()) {
        auto a = g.neighbors(e.u);
        auto b = g.neighbors(e.v);
        auto i = a.begin();
        auto j = b.begin();
        while (i != a.end() && j != b.end()) {
            if (*i == *j) return false;
            if (*i < *j) ++i; else ++j;
        }
    }
    return true;
}

bool is_diamond_free(const Graph& g) {
    // A diamond exists iff some edge has two nonadjacent common neighbors.
    for (Edge e : g.edges()) {
        std::vector<Vertex> common;
        auto a = g.neighbors(e.u);
        auto b = g.neighbors(e.v);
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        if (!is_clique(g, common)) return false;
    }
    return true;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
    const int n = g.order();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        if (side[static_cast<std::size_t>(s)] >= 0) continue;
        side[static_cast<std::size_t>(s)] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            for (Vertex w : g.neighbors(v)) {
                auto& sw = side[static_cast<std::size_t>(w)];
                if (sw < 0) {
                    sw = 1 - side[static_cast<std::size_t>(v)];
                    queue.push_back(w);
                } else if (sw == side[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition out;
    for (Vertex v = 0; v < n; ++v) (side[static_cast<std::size_t>(v)] == 0 ? out.left : out.right).push_back(v);
    return out;
}

bool is_chordal(const Graph& g) {
    const int n = g.order();
    if (n == 0) return true;
    // Maximum cardinality search with bucket lists.
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<Vertex>> buckets(static_cast<std::size_t>(n) + 1);
    for (Vertex v = n - 1; v >= 0; --v) buckets[0].push_back(v);
    std::vector<Vertex> visit;
    visit.reserve(static_cast<std::size_t>(n));
    int top = 0;
    for (int step = 0; step < n; ++step) {
        Vertex v = -1;
        while (v < 0) {
            auto& bucket = buckets[static_cast<std::size_t>(top)];
            while (!bucket.empty()) {
                Vertex cand = bucket.back();
                bucket.pop_back();
                if (!done[static_cast<std::size_t>(cand)] && weight[static_cast<std::size_t>(cand)] == top) {
                    v = cand;
                    break;
                }
            }
            if (v < 0) --top;
        }
        done[static_cast<std::size_t>(v)] = 1;
        visit.push_back(v);
        for (Vertex w : g.neighbors(v)) {
            if (done[static_cast<std::size_t>(w)]) continue;
            int wt = ++weight[static_cast<std::size_t>(w)];
            buckets[static_cast<std::size_t>(wt)].push_back(w);
            top = std::max(top, wt);
        }
    }
    // The reverse visit order is a perfect elimination ordering iff g is chordal.
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(visit[static_cast<std::size_t>(i)])] = i;
    for (Vertex v = 0; v < n; ++v) {
        // Earlier-visited neighbors must form a clique; check against the latest of them.
        Vertex parent = -1;
        for (Vertex w : g.neighbors(v)) {
            if (pos[static_cast<std::size_t>(w)] < pos[static_cast<std::size_t>(v)] &&
                (parent < 0 || pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(parent)])) {
                parent = w;
            }
        }
        if (parent < 0) continue;
        for (Vertex w : g.neighbors(v)) {
            if (w != parent && pos[static_cast<std::size_t>(w)] < pos[static_cast<std::size_t>(v)] && !g.adjacent(w, parent)) return false;
        }
    }
    return true;
}

std::vector<std::vector<Vertex>> true_twin_classes(const Graph& g) {
    const int n = g.order();
    auto mix = [](std::uint64_t h, std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL + h;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    };
    // Order-independent hash of the closed neighborhood: sum of mixed ids.
    std::vector<std::uint64_t> key(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        std::uint64_t h = mix(0, static_cast<std::uint64_t>(v));
        for (Vertex w : g.neighbors(v)) h += mix(0, static_cast<std::uint64_t>(w));
        key[static_cast<std::size_t>(v)] = mix(h, static_cast<std::uint64_t>(g.degree(v)));
    }
    auto closed_equal = [&](Vertex a, Vertex b) {
        if (g.degree(a) != g.degree(b) || !g.adjacent(a, b)) return false;
        auto na = g.neighbors(a);
        auto nb = g.neighbors(b);
        // N[a] = N[b] with a in N(b) and b in N(a): compare N(a) - b with N(b) - a.
        auto i = na.begin();
        auto j = nb.begin();
        while (true) {
            if (i != na.end() && *i == b) ++i;
            if (j != nb.end() && *j == a) ++j;
            if (i == na.end() || j == nb.end()) return i == na.end() && j == nb.end();
            if (*i != *j) return false;
            ++i;
            ++j;
        }
    };

    std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;  // key -> class ids
    std::vector<std::vector<Vertex>> classes;
    for (Vertex v = 0; v < n; ++v) {
        auto& ids = buckets[key[static_cast<std::size_t>(v)]];
        bool placed = false;
        for (std::size_t id : ids) {
            if (closed_equal(classes[id].front(), v)) {
                classes[id].push_back(v);
                placed = true;
                break;
            }
        }
        if (!placed) {
            ids.push_back(classes.size());
            classes.push_back({v});
        }
    }
    return classes;
}

bool is_cluster_graph(const Graph& g) {
    for (const auto& comp : connected_components(g)) {
        std::size_t k = comp.size();
        std::size_t edges = 0;
        for (Vertex v : comp) edges += static_cast<std::size_t>(g.degree(v));
        if (edges != k * (k - 1)) return false;
    }
    return true;
}

bool verify_kl_partition(const Graph& g, const std::vector<std::vector<Vertex>>& stables,
                         const std::vector<std::vector<Vertex>>& cliques) {
    std::vector<int> seen(static_cast<std::size_t>(g.order()), 0);
    for (const auto* family : {&stables, &cliques}) {
        for (const auto& part : *family) {
            for (Vertex v : part) {
                if (v < 0 || v >= g.order()) throw Error("partition vertex " + std::to_string(v) + " out of range");
                if (seen[static_cast<std::size_t>(v)]++) throw Error("vertex " + std::to_string(v) + " appears in two parts");
            }
        }
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!seen[static_cast<std::size_t>(v)]) throw Error("vertex " + std::to_string(v) + " missing from partition");
    }
    return std::all_of(stables.begin(), stables.end(), [&](const auto& s) { return is_independent(g, s); }) &&
           std::all_of(cliques.begin(), cliques.end(), [&](const auto& c) { return is_clique(g, c); });
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    const int n = g.order();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<Vertex> comp{s};
        seen[static_cast<std::size_t>(s)] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (Vertex w : g.neighbors(comp[head])) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return g.order() > 0 && connected_components(g).size() == 1; }

int diameter(const Graph& g) {
    const int n = g.order();
    if (!is_connected(g)) return -1;
    int best = 0;
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::deque<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<std::size_t>(s)] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(v)) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    best = std::max(best, dist[static_cast<std::size_t>(w)]);
                    queue.push_back(w);
                }
            }
        }
    }
    return best;
}

}  // namespace tess
