#include "tess/bounds.hpp"

#include <algorithm>

#include "tess/clique_graph.hpp"

namespace tess {

BoundsReport upper_bounds(const Graph& g, bool exact, std::uint64_t budget, std::size_t clique_cap) {
    BoundsReport report;
    auto kg = clique_graph(g, clique_cap);

    EdgeColoring edge_coloring;
    VertexColoring kg_coloring;
    if (exact) {
        auto ei = exact_chromatic_index(g, budget);
        edge_coloring = std::move(ei.coloring);
        report.upper_edge_exact = ei.exact;
        auto cn = exact_chromatic_number(kg.kg, budget);
        kg_coloring = std::move(cn.coloring);
        report.upper_kg_exact = cn.exact;
    } else {
        edge_coloring = edge_coloring_delta_plus_one(g);
        kg_coloring = greedy_vertex_coloring(kg.kg);
    }
    report.edge_witness = cover_from_edge_coloring(g, edge_coloring);
    report.kg_witness = cover_from_kg_coloring(g, kg, kg_coloring);
    report.upper_edge = static_cast<int>(report.edge_witness.size());
    report.upper_kg = static_cast<int>(report.kg_witness.size());
    for (const auto* w : {&report.edge_witness, &report.kg_witness}) {
        auto check = validate_cover(g, *w);
        if (!check.ok()) throw Error("bound witness does not validate: " + check.first().describe());
    }
    report.upper = std::min(report.upper_edge, report.upper_kg);
    report.lower = lower_bound(g, clique_cap);
    return report;
}

int lower_bound(const Graph& g, std::size_t clique_cap) {
    if (g.size() == 0) return 0;
    if (is_cluster_graph(g)) return 1;
    int bound = is_bipartite(clique_graph(g, clique_cap).kg) ? 2 : 3;
    if (is_triangle_free(g)) bound = std::max(bound, g.max_degree());
    return bound;
}

TriangleFreeResult triangle_free_tessellation_number(const Graph& g, std::uint64_t budget) {
    if (!is_triangle_free(g)) throw Error("triangle_free_tessellation_number: input has a triangle");
    TriangleFreeResult out;
    auto ei = exact_chromatic_index(g, budget);
    out.coloring = std::move(ei.coloring);
    out.value = out.coloring.count;
    out.exact = ei.exact;
    out.lower = ei.exact ? out.value : std::max(ei.lower_bound, g.max_degree());
    return out;
}

}  // namespace tess
