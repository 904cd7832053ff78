#include "tess/clique_graph.hpp"

#include <algorithm>

namespace tess {

namespace {

std::vector<std::vector<int>> memberships(int n, const std::vector<Clique>& cliques) {
    std::vector<std::vector<int>> member(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < cliques.size(); ++i)
        for (Vertex v : cliques[i]) member[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
    return member;
}

}  // namespace

CliqueGraphResult clique_graph(const Graph& g, std::size_t cap) {
    CliqueGraphResult out;
    out.cliques = maximal_cliques(g, cap);
    auto member = memberships(g.order(), out.cliques);
    std::vector<Edge> edges;
    for (const auto& list : member)
        for (std::size_t a = 0; a < list.size(); ++a)
            for (std::size_t b = a + 1; b < list.size(); ++b) edges.emplace_back(list[a], list[b]);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    out.kg = Graph(static_cast<int>(out.cliques.size()), edges);
    return out;
}

std::map<Edge, int> kg_intersection_sizes(const CliqueGraphResult& r) {
    int n = 0;
    for (const auto& c : r.cliques)
        if (!c.empty()) n = std::max(n, c.back() + 1);
    std::map<Edge, int> sizes;
    for (const auto& list : memberships(n, r.cliques))
        for (std::size_t a = 0; a < list.size(); ++a)
            for (std::size_t b = a + 1; b < list.size(); ++b) ++sizes[Edge(list[a], list[b])];
    return sizes;
}

}  // namespace tess
