#pragma once

#include <cstdint>

#include "tess/coloring.hpp"
#include "tess/graph.hpp"
#include "tess/structure.hpp"
#include "tess/tessellation.hpp"

namespace tess {

/// Lower and upper bounds on T(g) with their witness covers. An `*_exact` flag is set only
/// when the value is the proven chromatic index or chromatic number.
struct BoundsReport {
    int lower = 0;
    int upper_edge = 0;
    bool upper_edge_exact = false;
    int upper_kg = 0;
    bool upper_kg_exact = false;
    int upper = 0;
    TessellationCover edge_witness;
    TessellationCover kg_witness;
};

/// Upper bounds from an edge coloring of g and a vertex coloring of K(g).
/// With `exact`, both colorings come from the budgeted exact searches.
BoundsReport upper_bounds(const Graph& g, bool exact, std::uint64_t budget = kDefaultSearchBudget,
                          std::size_t clique_cap = kDefaultCliqueCap);

/// 0 if edgeless, 1 if a cluster graph, 2 if K(g) is bipartite, 3 otherwise;
/// at least Δ when g is triangle-free.
int lower_bound(const Graph& g, std::size_t clique_cap = kDefaultCliqueCap);

struct TriangleFreeResult {
    int value = 0;        // χ′(g) when exact, otherwise an upper bound
    int lower = 0;        // proven lower bound on χ′(g)
    bool exact = false;
    EdgeColoring coloring;
};

/// T(g) = χ′(g) for triangle-free g. Throws Error when g has a triangle.
TriangleFreeResult triangle_free_tessellation_number(const Graph& g, std::uint64_t budget = kDefaultSearchBudget);

}  // namespace tess
