#include "tess/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace tess {

Graph::Graph(int n) : adj_(static_cast<std::size_t>(n)) {
    if (n < 0) throw Error("negative vertex count");
    index_edges();
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v >= n) {
            throw Error("edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " out of range");
        }
        if (e.u == e.v) throw Error("loop at vertex " + std::to_string(e.u));
        adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        auto dup = std::adjacent_find(list.begin(), list.end());
        if (dup != list.end()) {
            Vertex v = static_cast<Vertex>(&list - adj_.data());
            throw Error("duplicate edge " + std::to_string(std::min(v, *dup)) + " " +
                        std::to_string(std::max(v, *dup)));
        }
    }
    m_ = edges.size();
    index_edges();
}

void Graph::index_edges() {
    upper_offset_.assign(adj_.size() + 1, 0);
    for (std::size_t v = 0; v < adj_.size(); ++v) {
        const auto& list = adj_[v];
        auto above = list.end() - std::upper_bound(list.begin(), list.end(), static_cast<Vertex>(v));
        upper_offset_[v + 1] = upper_offset_[v] + static_cast<std::size_t>(above);
    }
}

int Graph::max_degree() const noexcept {
    int best = 0;
    for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
    return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& a = adj_[static_cast<std::size_t>(u)];
    const auto& b = adj_[static_cast<std::size_t>(v)];
    return a.size() <= b.size() ? std::binary_search(a.begin(), a.end(), v)
                                : std::binary_search(b.begin(), b.end(), u);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (std::size_t u = 0; u < adj_.size(); ++u) {
        for (Vertex v : adj_[u]) {
            if (v > static_cast<Vertex>(u)) out.emplace_back(static_cast<Vertex>(u), v);
        }
    }
    return out;
}

std::optional<std::size_t> Graph::edge_index(Vertex u, Vertex v) const {
    if (u == v || u < 0 || v < 0 || u >= order() || v >= order()) return std::nullopt;
    if (u > v) std::swap(u, v);
    const auto& list = adj_[static_cast<std::size_t>(u)];
    auto first_upper = std::upper_bound(list.begin(), list.end(), u);
    auto it = std::lower_bound(first_upper, list.end(), v);
    if (it == list.end() || *it != v) return std::nullopt;
    return upper_offset_[static_cast<std::size_t>(u)] + static_cast<std::size_t>(it - first_upper);
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
    std::vector<int> local(adj_.size(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) local[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (Vertex w : neighbors(vertices[i])) {
            int j = local[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i)) edges.emplace_back(static_cast<Vertex>(i), j);
        }
    }
    return Graph(static_cast<int>(vertices.size()), edges);
}

namespace {

std::uint64_t pair_key(Vertex u, Vertex v) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) | static_cast<std::uint32_t>(v);
}

}  // namespace

void Multigraph::add_edge(Vertex u, Vertex v, int multiplicity) {
    if (u == v) throw Error("multigraph loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw Error("multigraph edge out of range");
    if (multiplicity < 1) throw Error("multiplicity must be positive");
    if (u > v) std::swap(u, v);
    auto [it, inserted] = index_.try_emplace(pair_key(u, v), links_.size());
    if (!inserted) {
        links_[it->second].multiplicity += multiplicity;
        return;
    }
    links_.push_back({u, v, multiplicity});
}

std::size_t Multigraph::occurrence_count() const noexcept {
    std::size_t total = 0;
    for (const Link& l : links_) total += static_cast<std::size_t>(l.multiplicity);
    return total;
}

int Multigraph::multiplicity(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    auto it = index_.find(pair_key(u, v));
    return it == index_.end() ? 0 : links_[it->second].multiplicity;
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph star_graph(int leaves) {
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph(leaves + 1, edges);
}

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph(a + b, edges);
}

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, edges);
}

Graph diamond_graph() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    for (Edge e : b.edges()) edges.emplace_back(e.u + a.order(), e.v + a.order());
    return Graph(a.order() + b.order(), edges);
}

namespace {

struct LineReader {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line_no = 0;

    // Next non-blank line, trimmed; nullopt at end of input.
    std::optional<std::string_view> next() {
        while (pos < text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(pos, end - pos);
            pos = end + 1;
            ++line_no;
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
            while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
            if (!line.empty()) return line;
        }
        return std::nullopt;
    }
};

// Parses exactly two nonnegative integers separated by whitespace.
std::optional<std::pair<long long, long long>> two_ints(std::string_view line) {
    long long vals[2];
    const char* p = line.data();
    const char* end = line.data() + line.size();
    for (long long& val : vals) {
        while (p < end && (*p == ' ' || *p == '\t')) ++p;
        auto [next, ec] = std::from_chars(p, end, val);
        if (ec != std::errc() || next == p) return std::nullopt;
        p = next;
    }
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    if (p != end) return std::nullopt;
    return std::pair{vals[0], vals[1]};
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    LineReader reader{text};
    auto header = reader.next();
    if (!header) throw ParseError(reader.line_no == 0 ? 1 : reader.line_no, "missing header \"n m\"");
    auto hm = two_ints(*header);
    if (!hm || hm->first < 0 || hm->second < 0) throw ParseError(reader.line_no, "malformed header, expected \"n m\"");
    const long long n = hm->first;
    const long long m = hm->second;
    if (n > 100'000'000) throw ParseError(reader.line_no, "vertex count too large");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::vector<std::size_t> line_of;
    line_of.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        auto line = reader.next();
        if (!line) throw ParseError(reader.line_no + 1, "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        auto uv = two_ints(*line);
        if (!uv) throw ParseError(reader.line_no, "malformed edge line");
        auto [u, v] = *uv;
        if (u == v) throw ParseError(reader.line_no, "loop at vertex " + std::to_string(u));
        if (u >= n || v >= n) throw ParseError(reader.line_no, "vertex index out of range (n = " + std::to_string(n) + ")");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        line_of.push_back(reader.line_no);
    }
    if (reader.next()) throw ParseError(reader.line_no, "unexpected content after " + std::to_string(m) + " edges");

    std::vector<std::size_t> order(edges.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (edges[order[i]] == edges[order[i - 1]]) {
            const Edge& e = edges[order[i]];
            throw ParseError(line_of[order[i]], "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
        }
    }
    return Graph(static_cast<int>(n), edges);
}

std::string format_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (Edge e : g.edges()) {
        out += std::to_string(e.u);
        out += ' ';
        out += std::to_string(e.v);
        out += '\n';
    }
    return out;
}

Graph parse_graph6(std::string_view text) {
    LineReader reader{text};
    auto line_opt = reader.next();
    if (!line_opt) throw ParseError(1, "empty graph6 input");
    std::string_view line = *line_opt;
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());

    std::size_t pos = 0;
    auto byte = [&]() -> int {
        if (pos >= line.size()) throw ParseError(reader.line_no, "truncated graph6 data");
        int c = static_cast<unsigned char>(line[pos++]);
        if (c < 63 || c > 126) throw ParseError(reader.line_no, "invalid graph6 byte");
        return c - 63;
    };

    long long n = 0;
    if (!line.empty() && line[0] == 126) {
        ++pos;
        int words = 3;
        if (line.size() > 1 && line[1] == 126) {
            ++pos;
            words = 6;
        }
        for (int i = 0; i < words; ++i) n = (n << 6) | byte();
    } else {
        n = byte();
    }
    if (n > 100'000) throw ParseError(reader.line_no, "graph6 vertex count too large");

    std::vector<Edge> edges;
    int bits_left = 0;
    int current = 0;
    for (long long j = 1; j < n; ++j) {
        for (long long i = 0; i < j; ++i) {
            if (bits_left == 0) {
                current = byte();
                bits_left = 6;
            }
            --bits_left;
            if ((current >> bits_left) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    if (pos != line.size()) throw ParseError(reader.line_no, "trailing graph6 data");
    if (reader.next()) throw ParseError(reader.line_no, "graph6 reader expects a single graph");
    return Graph(static_cast<int>(n), edges);
}

std::string format_graph6(const Graph& g) {
    std::string out;
    const long long n = g.order();
    if (n <= 62) {
        out += static_cast<char>(63 + n);
    } else if (n <= 258047) {
        out += static_cast<char>(126);
        for (int s = 12; s >= 0; s -= 6) out += static_cast<char>(63 + ((n >> s) & 63));
    } else {
        out += static_cast<char>(126);
        out += static_cast<char>(126);
        for (int s = 30; s >= 0; s -= 6) out += static_cast<char>(63 + ((n >> s) & 63));
    }
    int acc = 0;
    int used = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++used == 6) {
                out += static_cast<char>(63 + acc);
                acc = 0;
                used = 0;
            }
        }
    }
    if (used > 0) out += static_cast<char>(63 + (acc << (6 - used)));
    return out;
}

Graph parse_graph(std::string_view text) {
    LineReader probe{text};
    auto first = probe.next();
    if (first && !two_ints(*first) && first->find(' ') == std::string_view::npos) return parse_graph6(text);
    return parse_edge_list(text);
}

}  // namespace tess
