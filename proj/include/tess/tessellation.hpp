#pragma once

#include <string>
#include <vector>

#include "tess/graph.hpp"

namespace tess {

/// Vertex-disjoint cliques of a host graph. Vertices not listed are implicit
/// singletons, so one-vertex cliques are never stored.
class Tessellation {
public:
    Tessellation() = default;
    /// Sorts each clique, drops singletons and orders cliques by first vertex.
    explicit Tessellation(std::vector<Clique> cliques);

    const std::vector<Clique>& cliques() const noexcept { return cliques_; }
    bool empty() const noexcept { return cliques_.empty(); }

    friend bool operator==(const Tessellation&, const Tessellation&) = default;

private:
    std::vector<Clique> cliques_;
};

/// Ordered list of tessellations.
struct TessellationCover {
    std::vector<Tessellation> tessellations;

    std::size_t size() const noexcept { return tessellations.size(); }
    friend bool operator==(const TessellationCover&, const TessellationCover&) = default;
};

struct Violation {
    enum class Kind { OutOfRange, Overlap, NonClique, Uncovered };

    Kind kind;
    int tessellation = -1;  // index within the cover, -1 for cover-level findings
    Vertex u = -1;          // shared vertex, out-of-range vertex, or edge endpoint
    Vertex v = -1;          // second endpoint for NonClique / Uncovered

    std::string describe() const;
    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Outcome of a validation; `first()` is the first finding in scan order.
struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    const Violation& first() const { return violations.front(); }
};

ValidationReport validate_tessellation(const Graph& g, const Tessellation& t);

/// Edges with both endpoints in one clique of t, sorted. Throws Error when t is invalid.
std::vector<Edge> tessellation_edges(const Graph& g, const Tessellation& t);

/// Checks every tessellation, then that their edge sets union to E(g).
/// Runs in O(t (n + m)).
ValidationReport validate_cover(const Graph& g, const TessellationCover& c);

/// Maximal cliques whose edges lie in no single tessellation of c. With an
/// empty cover every maximal clique is exposed, singletons included.
/// Throws Error when c does not validate.
std::vector<Clique> exposed_maximal_cliques(const Graph& g, const TessellationCover& c);

struct VertexColoring;
struct EdgeColoring;
struct CliqueGraphResult;

/// One tessellation of matched pairs per color class. Throws Error on an
/// improper coloring.
TessellationCover cover_from_edge_coloring(const Graph& g, const EdgeColoring& coloring);

/// One tessellation per color class of K(G): the maximal cliques of that color.
/// Throws Error on an improper coloring.
TessellationCover cover_from_kg_coloring(const Graph& g, const CliqueGraphResult& kg, const VertexColoring& coloring);

}  // namespace tess
