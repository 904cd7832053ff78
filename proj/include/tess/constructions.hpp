#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tess/coloring.hpp"
#include "tess/graph.hpp"

namespace tess {

struct Literal {
    int var = 0;
    bool negated = false;

    friend bool operator==(const Literal&, const Literal&) = default;
};

struct NaeInstance {
    int var_count = 0;
    std::vector<std::array<Literal, 3>> clauses;

    friend bool operator==(const NaeInstance&, const NaeInstance&) = default;
};

/// Throws Error on out-of-range variables or a negative variable count.
void validate(const NaeInstance& instance);

/// "p nae3 <vars> <clauses>" followed by one clause per line: three signed
/// 1-based literals, optionally terminated by 0. Lines starting with 'c' are
/// comments. Throws ParseError.
NaeInstance parse_nae(std::string_view text);
std::string format_nae(const NaeInstance& instance);

/// Some assignment gives every clause a true and a false literal.
/// Throws Error when var_count > 25.
bool nae_brute_force(const NaeInstance& instance);

/// A candidate replacement gadget.
struct GadgetSpec {
    Graph graph;
    Clique middle_triangle;
    std::vector<Clique> external_triangles;
    std::vector<std::array<Vertex, 2>> attachment_vertices;  // one pair per external triangle
};

/// Throws Error unless every listed triangle is a triangle of the graph and
/// each attachment pair is two distinct vertices of its triangle.
void validate(const GadgetSpec& spec);

/// True iff every cover of the gadget with at most three tessellations has
/// one tessellation holding the middle triangle and every external triangle
/// inside its cliques. Throws Error when the gadget is not 3-tessellable;
/// nullopt when the search budget runs out.
///
/// A counterexample cover can be enlarged tessellation by tessellation while
/// each one still misses a triangle, so it suffices to search covers drawn
/// from the tessellations that are maximal among those missing a given
/// target triangle.
std::optional<bool> verify_gadget(const GadgetSpec& spec, std::uint64_t budget = kDefaultSearchBudget);

/// Adds a star with chi_prime leaves, one leaf identified with the
/// lowest-index vertex of minimum degree. The center is vertex n, the new
/// leaves follow. Throws Error when g is empty or chi_prime < 1.
Graph c1_add_star(const Graph& g, int chi_prime);

/// Adds pendants to v until v lies in chi_kg maximal cliques. Pendants are
/// numbered from n upward.
Graph c2_add_pendants(const Graph& g, Vertex v, int chi_kg);

/// One gadget copy per vertex of g (copy i occupies a block in vertex order
/// before identification). Edges of g are processed in order; each uses the
/// lowest unused external triangle on both sides and identifies the
/// attachment pairs elementwise. Vertices are then renumbered in order of
/// first appearance. Throws Error when a vertex has more neighbors than the
/// gadget has external triangles.
Graph c3_gadget_replace(const Graph& g, const GadgetSpec& spec);

/// Layout: g's vertices, U, c1..c3, the w_{j,l} (j major), then pendants of
/// c1, c2, c3 and of each w in that order. Throws Error when t < 4 or f has
/// repeated or out-of-range vertices.
Graph c4_fixed_t(const Graph& g, const std::vector<Vertex>& f, int t);

struct AnnotatedGraph {
    Graph graph;
    std::vector<std::vector<Vertex>> stables;
    std::vector<std::vector<Vertex>> cliques;
};

/// Layout: V(g), then one vertex per edge of g in edges() order, then u,
/// then three pendants per vertex of g and three for u. Annotated as a
/// (2,1)-partition. Throws Error on bipartite input.
AnnotatedGraph c5_chordal21(const Graph& g);

/// Layout: V(g), edge vertices, u, two pendants per vertex of g, three for
/// u, then u' and its three pendants. Annotated as a (1,2)-partition.
/// Throws Error on bipartite input.
AnnotatedGraph c6_12graph(const Graph& g);

/// Layout: literals x_i = 2i and not-x_i = 2i+1, then u = 2n, then three
/// vertices per clause in literal order.
Graph c7_nae_to_kg(const NaeInstance& instance);

/// Layout: the clique C on vertices 0..n-1, then per clause its center and
/// three leaves in literal order, then per variable a pendant at its C vertex
/// for each literal that occurs in no clause (positive first). With a single
/// variable one more pendant stands in for C. Throws Error when a clause
/// repeats a literal.
Graph c8_kg_to_graph(const NaeInstance& instance);

}  // namespace tess
