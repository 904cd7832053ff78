#include "tess/tessellation.hpp"

#include <algorithm>

#include "tess/clique_graph.hpp"
#include "tess/coloring.hpp"
#include "tess/structure.hpp"

namespace tess {

Tessellation::Tessellation(std::vector<Clique> cliques) {
    for (auto& c : cliques) {
        if (c.size() < 2) continue;
        std::sort(c.begin(), c.end());
        cliques_.push_back(std::move(c));
    }
    std::sort(cliques_.begin(), cliques_.end());
}

std::string Violation::describe() const {
    std::string where = tessellation >= 0 ? "tessellation " + std::to_string(tessellation) + ": " : "";
    switch (kind) {
        case Kind::OutOfRange: return where + "vertex " + std::to_string(u) + " out of range";
        case Kind::Overlap: return where + "cliques overlap at vertex " + std::to_string(u);
        case Kind::NonClique: return where + "not a clique, missing edge " + std::to_string(u) + "-" + std::to_string(v);
        case Kind::Uncovered: return "edge " + std::to_string(u) + "-" + std::to_string(v) + " is not covered";
    }
    return where;
}

namespace {

void check_tessellation(const Graph& g, const Tessellation& t, int index, std::vector<Violation>& out) {
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    for (const Clique& c : t.cliques()) {
        bool in_range = true;
        for (Vertex v : c) {
            if (v < 0 || v >= g.order()) {
                out.push_back({Violation::Kind::OutOfRange, index, v, -1});
                in_range = false;
                continue;
            }
            if (used[static_cast<std::size_t>(v)]) out.push_back({Violation::Kind::Overlap, index, v, -1});
            used[static_cast<std::size_t>(v)] = 1;
        }
        if (!in_range) continue;
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                if (c[i] != c[j] && !g.adjacent(c[i], c[j])) out.push_back({Violation::Kind::NonClique, index, c[i], c[j]});
    }
}

// Marks edges of g lying inside one clique of t; ignores out-of-range entries.
void mark_edges(const Graph& g, const Tessellation& t, std::vector<char>& covered) {
    for (const Clique& c : t.cliques())
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                if (auto idx = g.edge_index(c[i], c[j])) covered[*idx] = 1;
}

}  // namespace

ValidationReport validate_tessellation(const Graph& g, const Tessellation& t) {
    ValidationReport report;
    check_tessellation(g, t, -1, report.violations);
    return report;
}

std::vector<Edge> tessellation_edges(const Graph& g, const Tessellation& t) {
    auto report = validate_tessellation(g, t);
    if (!report.ok()) throw Error("invalid tessellation: " + report.first().describe());
    std::vector<Edge> out;
    for (const Clique& c : t.cliques())
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j) out.emplace_back(c[i], c[j]);
    std::sort(out.begin(), out.end());
    return out;
}

ValidationReport validate_cover(const Graph& g, const TessellationCover& c) {
    ValidationReport report;
    std::vector<char> covered(g.size(), 0);
    for (std::size_t i = 0; i < c.tessellations.size(); ++i) {
        check_tessellation(g, c.tessellations[i], static_cast<int>(i), report.violations);
        mark_edges(g, c.tessellations[i], covered);
    }
    auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (!covered[i]) report.violations.push_back({Violation::Kind::Uncovered, -1, edges[i].u, edges[i].v});
    return report;
}

std::vector<Clique> exposed_maximal_cliques(const Graph& g, const TessellationCover& c) {
    auto report = validate_cover(g, c);
    if (!report.ok()) throw Error("invalid cover: " + report.first().describe());
    std::vector<std::vector<int>> owner(c.size(), std::vector<int>(static_cast<std::size_t>(g.order()), -1));
    for (std::size_t t = 0; t < c.size(); ++t) {
        const auto& cliques = c.tessellations[t].cliques();
        for (std::size_t k = 0; k < cliques.size(); ++k)
            for (Vertex v : cliques[k]) owner[t][static_cast<std::size_t>(v)] = static_cast<int>(k);
    }
    std::vector<Clique> exposed;
    for (Clique& k : maximal_cliques(g)) {
        if (k.size() < 2) {
            // No edges to cover: exposed only when there is no tessellation at all.
            if (c.size() == 0) exposed.push_back(std::move(k));
            continue;
        }
        bool covered = std::any_of(owner.begin(), owner.end(), [&](const std::vector<int>& own) {
            int id = own[static_cast<std::size_t>(k.front())];
            return id >= 0 && std::all_of(k.begin(), k.end(), [&](Vertex v) { return own[static_cast<std::size_t>(v)] == id; });
        });
        if (!covered) exposed.push_back(std::move(k));
    }
    return exposed;
}

TessellationCover cover_from_edge_coloring(const Graph& g, const EdgeColoring& coloring) {
    if (!is_proper(g, coloring)) throw Error("cover_from_edge_coloring: improper edge coloring");
    std::vector<std::vector<Clique>> classes(static_cast<std::size_t>(coloring.count));
    auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        classes[static_cast<std::size_t>(coloring.colors[i])].push_back({edges[i].u, edges[i].v});
    TessellationCover cover;
    for (auto& cls : classes)
        if (!cls.empty()) cover.tessellations.emplace_back(std::move(cls));
    return cover;
}

TessellationCover cover_from_kg_coloring(const Graph& g, const CliqueGraphResult& kg, const VertexColoring& coloring) {
    if (!is_proper(kg.kg, coloring)) throw Error("cover_from_kg_coloring: improper coloring of K(G)");
    std::vector<std::vector<Clique>> classes(static_cast<std::size_t>(coloring.count));
    for (std::size_t i = 0; i < kg.cliques.size(); ++i) {
        for (Vertex v : kg.cliques[i])
            if (v < 0 || v >= g.order()) throw Error("cover_from_kg_coloring: clique vertex out of range");
        classes[static_cast<std::size_t>(coloring.colors[i])].push_back(kg.cliques[i]);
    }
    TessellationCover cover;
    for (auto& cls : classes) cover.tessellations.emplace_back(std::move(cls));
    return cover;
}

}  // namespace tess
