#pragma once

#include <cstdint>
#include <vector>

#include "tess/graph.hpp"

namespace tess {

/// Canonical labeling for graphs with at most 64 vertices.
///
/// Color refinement plus individualization; the code is the maximum
/// row-major adjacency matrix over all leaves of the search tree, so two
/// graphs are isomorphic iff their codes match.
struct CanonicalForm {
    std::vector<Vertex> labeling;       // labeling[new] = old vertex
    std::vector<std::uint64_t> code;    // row masks of the relabeled graph
};

CanonicalForm canonical_form(const Graph& g);

/// The graph relabeled by its canonical labeling.
Graph canonical_graph(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace tess
