#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tess {

using Vertex = int;

/// Unordered vertex pair, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted vertex list; every pair adjacent in the host graph.
using Clique = std::vector<Vertex>;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by readers; carries the 1-based line number of the offending input.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Raised when an enumeration or search exceeds a configured limit.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Simple undirected graph on vertices [0, n). Immutable after construction.
///
/// Neighbor lists are sorted. Edges are indexed 0..m-1 in lexicographic
/// (u, v) order, which is the order returned by edges().
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    /// Throws Error on loops, duplicate edges or out-of-range endpoints.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    std::size_t size() const noexcept { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    int max_degree() const noexcept;
    bool adjacent(Vertex u, Vertex v) const;

    std::vector<Edge> edges() const;
    /// Position of {u, v} in edges(), or nullopt when not an edge.
    std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

    /// Subgraph induced by `vertices` (renumbered in the given order).
    Graph induced(std::span<const Vertex> vertices) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    void index_edges();

    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::size_t> upper_offset_;  // edges (a, b) with a < v come before v's block
    std::size_t m_ = 0;
};

/// Undirected multigraph without loops. Parallel edges are stored as one
/// pair with a multiplicity; edge occurrences are numbered in storage order,
/// multiplicity-expanded.
class Multigraph {
public:
    struct Link {
        Vertex u = 0;
        Vertex v = 0;
        int multiplicity = 1;
    };

    Multigraph() = default;
    explicit Multigraph(int n) : n_(n) {}

    /// Adds `multiplicity` parallel copies of {u, v}; merges with an existing pair.
    void add_edge(Vertex u, Vertex v, int multiplicity = 1);

    int order() const noexcept { return n_; }
    std::span<const Link> links() const noexcept { return links_; }
    std::size_t occurrence_count() const noexcept;
    int multiplicity(Vertex u, Vertex v) const;

private:
    int n_ = 0;
    std::vector<Link> links_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);  // center 0
Graph complete_bipartite(int a, int b);
Graph petersen_graph();
Graph diamond_graph();  // 0 and 1 adjacent to all; 2, 3 nonadjacent
Graph disjoint_union(const Graph& a, const Graph& b);

/// Edge-list text: "n m" then m lines "u v".
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

/// graph6; short and long size forms, optional ">>graph6<<" header.
Graph parse_graph6(std::string_view text);
std::string format_graph6(const Graph& g);

/// Dispatches on content: graph6 when the first non-blank line is not "n m".
Graph parse_graph(std::string_view text);

}  // namespace tess
