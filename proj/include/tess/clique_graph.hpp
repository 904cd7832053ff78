#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tess/graph.hpp"
#include "tess/structure.hpp"

namespace tess {

/// K(G) together with its vertex-to-clique correspondence: kg vertex i is
/// cliques[i], and cliques follow maximal_cliques() order.
struct CliqueGraphResult {
    Graph kg;
    std::vector<Clique> cliques;
};

/// Builds K(G) from per-vertex clique membership lists.
CliqueGraphResult clique_graph(const Graph& g, std::size_t cap = kDefaultCliqueCap);

/// |cliques[i] ∩ cliques[j]| for every edge (i, j) of K(G).
std::map<Edge, int> kg_intersection_sizes(const CliqueGraphResult& r);

}  // namespace tess
