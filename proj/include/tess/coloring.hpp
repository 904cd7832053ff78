#pragma once

#include <cstdint>
#include <vector>

#include "tess/graph.hpp"

namespace tess {

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

/// colors[v] in [0, count).
struct VertexColoring {
    std::vector<int> colors;
    int count = 0;

    friend bool operator==(const VertexColoring&, const VertexColoring&) = default;
};

/// colors[i] is the color of the i-th edge of Graph::edges().
struct EdgeColoring {
    std::vector<int> colors;
    int count = 0;

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

/// Result of a budgeted exact search. `coloring` is always proper; it is a
/// minimum coloring only when `exact` is set. `lower_bound` is proven.
template <class Coloring>
struct ExactColoring {
    Coloring coloring;
    bool exact = false;
    int lower_bound = 0;
    std::uint64_t nodes = 0;
};

bool is_proper(const Graph& g, const VertexColoring& c);
bool is_proper(const Graph& g, const EdgeColoring& c);

/// Smallest-last greedy; uses at most degeneracy + 1 colors.
VertexColoring greedy_vertex_coloring(const Graph& g);

/// DSATUR branch and bound with a greedy clique lower bound. When solved,
/// the returned witness is the lexicographically least minimum coloring.
ExactColoring<VertexColoring> exact_chromatic_number(const Graph& g, std::uint64_t budget = kDefaultSearchBudget);

/// Mycielski construction: originals 0..n-1, shadows n..2n-1, apex 2n.
Graph mycielskian(const Graph& g);

/// Proper edge coloring with at most Δ+1 colors: König alternating paths on
/// bipartite inputs (exactly Δ colors), Misra-Gries fan rotation otherwise.
EdgeColoring edge_coloring_delta_plus_one(const Graph& g);

/// Exactly Δ colors. Throws Error when g is not bipartite.
EdgeColoring bipartite_edge_coloring(const Graph& g);

/// Chromatic index as the chromatic number of the line graph.
ExactColoring<EdgeColoring> exact_chromatic_index(const Graph& g, std::uint64_t budget = kDefaultSearchBudget);

/// Line graph of a simple graph; vertex i is the i-th edge of g.edges().
Graph simple_line_graph(const Graph& g);

}  // namespace tess
