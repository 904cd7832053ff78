#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tess/graph.hpp"

namespace tess {

inline constexpr std::size_t kDefaultCliqueCap = 100000;

/// Inclusion-maximal cliques of g, each sorted, the list sorted
/// lexicographically. Isolated vertices yield singleton cliques.
///
/// Bron-Kerbosch with Tomita pivoting over a degeneracy ordering. Throws
/// CapacityError once more than `cap` cliques have been found.
std::vector<Clique> maximal_cliques(const Graph& g, std::size_t cap = kDefaultCliqueCap);

bool is_clique(const Graph& g, std::span<const Vertex> vertices);
bool is_independent(const Graph& g, std::span<const Vertex> vertices);

bool is_triangle_free(const Graph& g);

/// True iff g has no induced K4 minus an edge.
bool is_diamond_free(const Graph& g);

struct Bipartition {
    std::vector<Vertex> left;
    std::vector<Vertex> right;
};

/// Two-coloring by BFS; the lowest vertex of every component goes left.
std::optional<Bipartition> is_bipartite(const Graph& g);

/// Maximum cardinality search followed by a perfect-elimination check.
bool is_chordal(const Graph& g);

/// Classes of vertices with equal closed neighborhoods, each sorted, ordered
/// by smallest member.
std::vector<std::vector<Vertex>> true_twin_classes(const Graph& g);

/// True iff every connected component is complete.
bool is_cluster_graph(const Graph& g);

/// Throws Error if the sets do not partition V(g).
bool verify_kl_partition(const Graph& g, const std::vector<std::vector<Vertex>>& stables,
                         const std::vector<std::vector<Vertex>>& cliques);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Largest shortest-path distance; -1 for disconnected or empty graphs.
int diameter(const Graph& g);

/// Smallest-last ordering; returns the order (first = removed last) and the degeneracy.
std::pair<std::vector<Vertex>, int> degeneracy_order(const Graph& g);

}  // namespace tess
