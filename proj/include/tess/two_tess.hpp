#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "tess/graph.hpp"
#include "tess/structure.hpp"
#include "tess/tessellation.hpp"

namespace tess {

/// Line graph of a multigraph. Vertex i is the i-th edge occurrence, taking
/// links in order and each link's copies consecutively.
Graph line_graph(const Multigraph& h);

/// A multigraph root of a graph. edge_map[i] is the vertex of the input graph
/// carried by the i-th edge occurrence of `root`.
struct RootGraph {
    Multigraph root;
    std::vector<Vertex> edge_map;
};

/// Simple root of a connected line graph together with, for every vertex of
/// g, the root edge it stands for. Grows the root one vertex at a time in BFS
/// order; while the root has at most four vertices every consistent placement
/// is tried, after that the placement is unique. K3 yields K1,3.
struct SimpleRoot {
    Graph root;
    std::vector<Edge> edge_of;
};

std::optional<SimpleRoot> recognize_line_graph_simple(const Graph& g);

enum class TwoTessWitness { None, NonCliqueTwinClass, NotLineGraph, RootNonBipartite };

std::string_view to_string(TwoTessWitness w);

struct TwoTessResult {
    bool decision = false;
    std::optional<TessellationCover> cover;  // yes only, at most two tessellations
    std::optional<RootGraph> root;            // yes only; isolated vertices carry no edge
    std::optional<Bipartition> root_sides;    // yes only
    TwoTessWitness witness = TwoTessWitness::None;
    Vertex witness_component = -1;  // smallest vertex of the rejected component
};

/// Linear-time decision of T(g) <= 2 with a constructive cover.
TwoTessResult is_two_tessellable(const Graph& g);

/// Bipartiteness of K(g).
bool two_tess_reference(const Graph& g, std::size_t clique_cap = kDefaultCliqueCap);

}  // namespace tess
