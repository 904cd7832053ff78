#include "tess/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "tess/solver.hpp"
#include "tess/structure.hpp"

namespace tess {

void validate(const NaeInstance& instance) {
    if (instance.var_count < 0) throw Error("negative variable count");
    for (std::size_t c = 0; c < instance.clauses.size(); ++c)
        for (const Literal& l : instance.clauses[c])
            if (l.var < 0 || l.var >= instance.var_count)
                throw Error("clause " + std::to_string(c) + " uses variable " + std::to_string(l.var) + " out of range");
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::optional<long long> to_int(std::string_view s) {
    long long v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
    return v;
}

}  // namespace

NaeInstance parse_nae(std::string_view text) {
    NaeInstance out;
    bool have_header = false;
    long long expected = 0;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == 'c') continue;
        if (tokens.front() == "p") {
            if (have_header) throw ParseError(line_no, "duplicate header");
            if (tokens.size() != 4 || tokens[1] != "nae3") throw ParseError(line_no, "expected \"p nae3 <vars> <clauses>\"");
            auto vars = to_int(tokens[2]);
            auto clauses = to_int(tokens[3]);
            if (!vars || !clauses || *vars < 0 || *clauses < 0 || *vars > 1'000'000)
                throw ParseError(line_no, "malformed header counts");
            out.var_count = static_cast<int>(*vars);
            expected = *clauses;
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(line_no, "clause before header");
        if (tokens.size() == 4 && tokens[3] == "0") tokens.pop_back();
        if (tokens.size() != 3) throw ParseError(line_no, "a clause needs exactly three literals");
        std::array<Literal, 3> clause;
        for (std::size_t i = 0; i < 3; ++i) {
            auto lit = to_int(tokens[i]);
            if (!lit || *lit == 0) throw ParseError(line_no, "malformed literal \"" + std::string(tokens[i]) + "\"");
            long long var = *lit < 0 ? -*lit : *lit;
            if (var > out.var_count) throw ParseError(line_no, "variable " + std::to_string(var) + " exceeds declared count");
            clause[i] = Literal{static_cast<int>(var - 1), *lit < 0};
        }
        out.clauses.push_back(clause);
    }
    if (!have_header) throw ParseError(line_no, "missing header \"p nae3 <vars> <clauses>\"");
    if (static_cast<long long>(out.clauses.size()) != expected)
        throw ParseError(line_no, "header declares " + std::to_string(expected) + " clauses, found " + std::to_string(out.clauses.size()));
    return out;
}

std::string format_nae(const NaeInstance& instance) {
    std::ostringstream os;
    os << "p nae3 " << instance.var_count << ' ' << instance.clauses.size() << '\n';
    for (const auto& clause : instance.clauses) {
        for (const Literal& l : clause) os << (l.negated ? -(l.var + 1) : l.var + 1) << ' ';
        os << "0\n";
    }
    return os.str();
}

bool nae_brute_force(const NaeInstance& instance) {
    validate(instance);
    if (instance.var_count > 25) throw Error("nae_brute_force supports at most 25 variables");
    const std::uint32_t limit = std::uint32_t{1} << instance.var_count;
    for (std::uint32_t assignment = 0; assignment < limit; ++assignment) {
        bool ok = std::all_of(instance.clauses.begin(), instance.clauses.end(), [&](const std::array<Literal, 3>& c) {
            bool seen[2] = {false, false};
            for (const Literal& l : c) seen[((assignment >> l.var) & 1) ^ (l.negated ? 1 : 0)] = true;
            return seen[0] && seen[1];
        });
        if (ok) return true;
    }
    return false;
}

void validate(const GadgetSpec& spec) {
    auto check_triangle = [&](const Clique& t, const std::string& what) {
        if (t.size() != 3) throw Error(what + " must have three vertices");
        for (Vertex v : t)
            if (v < 0 || v >= spec.graph.order()) throw Error(what + " has a vertex out of range");
        if (!is_clique(spec.graph, t) || t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
            throw Error(what + " is not a triangle of the gadget");
    };
    check_triangle(spec.middle_triangle, "middle triangle");
    if (spec.attachment_vertices.size() != spec.external_triangles.size())
        throw Error("one attachment pair is needed per external triangle");
    for (std::size_t i = 0; i < spec.external_triangles.size(); ++i) {
        const Clique& t = spec.external_triangles[i];
        check_triangle(t, "external triangle " + std::to_string(i));
        const auto& [a, b] = spec.attachment_vertices[i];
        if (a == b || std::find(t.begin(), t.end(), a) == t.end() || std::find(t.begin(), t.end(), b) == t.end())
            throw Error("attachment pair " + std::to_string(i) + " must be two vertices of its triangle");
    }
}

std::optional<bool> verify_gadget(const GadgetSpec& spec, std::uint64_t budget) {
    validate(spec);
    const Graph& g = spec.graph;
    SolveOptions options;
    options.budget = budget;
    auto three = is_t_tessellable(g, 3, options);
    if (three.decision == Decision::Unknown) return std::nullopt;
    if (three.decision == Decision::No) throw Error("gadget graph is not 3-tessellable");

    std::vector<Clique> targets{spec.middle_triangle};
    targets.insert(targets.end(), spec.external_triangles.begin(), spec.external_triangles.end());
    TessellationCatalog missing;
    std::vector<std::pair<Tessellation, EdgeSet>> pool;
    for (const Clique& target : targets) {
        auto part = enumerate_tessellations_avoiding(g, target, options.catalog_cap);
        for (std::size_t i = 0; i < part.size(); ++i) pool.emplace_back(part.tessellations[i], part.edge_sets[i]);
    }
    std::sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) {
        std::size_t ca = a.second.count();
        std::size_t cb = b.second.count();
        if (ca != cb) return ca > cb;
        return a.first.cliques() < b.first.cliques();
    });
    pool.erase(std::unique(pool.begin(), pool.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
               pool.end());
    for (auto& [t, s] : pool) {
        missing.tessellations.push_back(std::move(t));
        missing.edge_sets.push_back(std::move(s));
    }
    auto counterexample = cover_from_catalog(g, missing, 3, budget);
    if (counterexample.decision == Decision::Unknown) return std::nullopt;
    return counterexample.decision == Decision::No;
}

Graph c1_add_star(const Graph& g, int chi_prime) {
    if (g.order() == 0) throw Error("c1_add_star needs a nonempty graph");
    if (chi_prime < 1) throw Error("c1_add_star needs chi_prime >= 1");
    const int n = g.order();
    Vertex target = 0;
    for (Vertex v = 1; v < n; ++v)
        if (g.degree(v) < g.degree(target)) target = v;
    std::vector<Edge> edges = g.edges();
    const Vertex center = n;
    edges.emplace_back(center, target);
    for (int i = 1; i < chi_prime; ++i) edges.emplace_back(center, n + i);
    return Graph(n + chi_prime, edges);
}

Graph c2_add_pendants(const Graph& g, Vertex v, int chi_kg) {
    if (v < 0 || v >= g.order()) throw Error("c2_add_pendants: vertex out of range");
    Graph h = g;
    auto cliques_at = [&](const Graph& x) {
        auto all = maximal_cliques(x);
        return std::count_if(all.begin(), all.end(), [&](const Clique& c) { return std::binary_search(c.begin(), c.end(), v); });
    };
    while (cliques_at(h) < chi_kg) {
        std::vector<Edge> edges = h.edges();
        edges.emplace_back(v, h.order());
        h = Graph(h.order() + 1, edges);
    }
    return h;
}

Graph c3_gadget_replace(const Graph& g, const GadgetSpec& spec) {
    validate(spec);
    const int k = spec.graph.order();
    const std::size_t slots = spec.external_triangles.size();
    for (Vertex v = 0; v < g.order(); ++v)
        if (static_cast<std::size_t>(g.degree(v)) > slots)
            throw Error("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) + " but the gadget has " +
                        std::to_string(slots) + " external triangles");

    // Union-find over copy vertices.
    std::vector<int> parent(static_cast<std::size_t>(g.order() * k));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    };
    std::vector<std::size_t> used(static_cast<std::size_t>(g.order()), 0);
    for (const Edge& e : g.edges()) {
        const auto& pu = spec.attachment_vertices[used[static_cast<std::size_t>(e.u)]++];
        const auto& pv = spec.attachment_vertices[used[static_cast<std::size_t>(e.v)]++];
        unite(e.u * k + pu[0], e.v * k + pv[0]);
        unite(e.u * k + pu[1], e.v * k + pv[1]);
    }

    std::vector<int> label(parent.size(), -1);
    int next = 0;
    for (std::size_t x = 0; x < parent.size(); ++x) {
        int r = find(static_cast<int>(x));
        if (label[static_cast<std::size_t>(r)] < 0) label[static_cast<std::size_t>(r)] = next++;
    }
    std::vector<Edge> edges;
    for (Vertex c = 0; c < g.order(); ++c)
        for (const Edge& e : spec.graph.edges())
            edges.emplace_back(label[static_cast<std::size_t>(find(c * k + e.u))], label[static_cast<std::size_t>(find(c * k + e.v))]);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const Edge& e : edges)
        if (e.u == e.v) throw Error("identification collapsed an edge of the gadget");
    return Graph(next, edges);
}

Graph c4_fixed_t(const Graph& g, const std::vector<Vertex>& f, int t) {
    if (t < 4) throw Error("c4_fixed_t needs t >= 4");
    std::vector<char> in_f(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : f) {
        if (v < 0 || v >= g.order()) throw Error("c4_fixed_t: vertex of F out of range");
        if (in_f[static_cast<std::size_t>(v)]++) throw Error("c4_fixed_t: vertex repeated in F");
    }
    const int n = g.order();
    const int fs = static_cast<int>(f.size());
    const int u0 = n;
    const int c0 = u0 + fs;
    const int w0 = c0 + 3;
    const int ws = fs * (t - 3);
    int next = w0 + ws;
    std::vector<Edge> edges = g.edges();
    for (int i = 0; i < fs; ++i)
        for (int j = i + 1; j < fs; ++j) edges.emplace_back(u0 + i, u0 + j);
    for (int c = 0; c < 3; ++c)
        for (int i = 0; i < fs; ++i) edges.emplace_back(c0 + c, u0 + i);
    for (int j = 0; j < fs; ++j) {
        edges.emplace_back(f[static_cast<std::size_t>(j)], u0 + j);
        for (int l = 0; l < t - 3; ++l) {
            const int w = w0 + j * (t - 3) + l;
            edges.emplace_back(w, f[static_cast<std::size_t>(j)]);
            edges.emplace_back(w, u0 + j);
        }
    }
    for (int c = 0; c < 3; ++c)
        for (int p = 0; p < t - 1; ++p) edges.emplace_back(c0 + c, next++);
    for (int w = w0; w < w0 + ws; ++w)
        for (int p = 0; p < t - 1; ++p) edges.emplace_back(w, next++);
    return Graph(next, edges);
}

namespace {

void require_non_bipartite(const Graph& g, const char* who) {
    if (is_bipartite(g)) throw Error(std::string(who) + " needs a non-bipartite graph");
}

}  // namespace

AnnotatedGraph c5_chordal21(const Graph& g) {
    require_non_bipartite(g, "c5_chordal21");
    const int n = g.order();
    const auto ge = g.edges();
    const int m = static_cast<int>(ge.size());
    const int u = n + m;
    int next = u + 1;
    std::vector<Edge> edges;
    AnnotatedGraph out{Graph(0), {{}, {}}, {{}}};
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) edges.emplace_back(n + i, n + j);
        edges.emplace_back(n + i, ge[static_cast<std::size_t>(i)].u);
        edges.emplace_back(n + i, ge[static_cast<std::size_t>(i)].v);
        edges.emplace_back(n + i, u);
        out.cliques[0].push_back(n + i);
    }
    for (Vertex v = 0; v <= n; ++v) {
        const Vertex owner = v == n ? u : v;
        out.stables[0].push_back(owner);
        for (int p = 0; p < 3; ++p) {
            out.stables[1].push_back(next);
            edges.emplace_back(owner, next++);
        }
    }
    out.graph = Graph(next, edges);
    return out;
}

AnnotatedGraph c6_12graph(const Graph& g) {
    require_non_bipartite(g, "c6_12graph");
    const int n = g.order();
    const auto ge = g.edges();
    const int m = static_cast<int>(ge.size());
    const int u = n + m;
    int next = u + 1;
    std::vector<Edge> edges;
    AnnotatedGraph out{Graph(0), {{}}, {{}, {}}};
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) edges.emplace_back(n + i, n + j);
        edges.emplace_back(n + i, ge[static_cast<std::size_t>(i)].u);
        edges.emplace_back(n + i, ge[static_cast<std::size_t>(i)].v);
        edges.emplace_back(n + i, u);
        out.cliques[0].push_back(n + i);
    }
    out.cliques[0].push_back(u);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w = v + 1; w < n; ++w) edges.emplace_back(v, w);
        for (int p = 0; p < 2; ++p) {
            out.stables[0].push_back(next);
            edges.emplace_back(v, next++);
        }
    }
    for (int p = 0; p < 3; ++p) {
        out.stables[0].push_back(next);
        edges.emplace_back(u, next++);
    }
    const Vertex u2 = next++;
    for (Vertex v = 0; v < n; ++v) {
        edges.emplace_back(u2, v);
        out.cliques[1].push_back(v);
    }
    out.cliques[1].push_back(u2);
    for (int p = 0; p < 3; ++p) {
        out.stables[0].push_back(next);
        edges.emplace_back(u2, next++);
    }
    out.graph = Graph(next, edges);
    return out;
}

Graph c7_nae_to_kg(const NaeInstance& instance) {
    validate(instance);
    const int n = instance.var_count;
    const int u = 2 * n;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(2 * i, 2 * i + 1);
        edges.emplace_back(2 * i, u);
        edges.emplace_back(2 * i + 1, u);
    }
    int next = u + 1;
    for (const auto& clause : instance.clauses) {
        const int base = next;
        next += 3;
        edges.emplace_back(base, base + 1);
        edges.emplace_back(base, base + 2);
        edges.emplace_back(base + 1, base + 2);
        for (int k = 0; k < 3; ++k) {
            const Literal& l = clause[static_cast<std::size_t>(k)];
            edges.emplace_back(2 * l.var + (l.negated ? 1 : 0), base + k);
        }
    }
    return Graph(next, edges);
}

Graph c8_kg_to_graph(const NaeInstance& instance) {
    validate(instance);
    const int n = instance.var_count;
    if (n == 0) return Graph(1);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);

    std::vector<std::vector<Vertex>> literal_clique(static_cast<std::size_t>(2 * n));
    int next = n;
    for (std::size_t c = 0; c < instance.clauses.size(); ++c) {
        const auto& clause = instance.clauses[c];
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                if (clause[static_cast<std::size_t>(a)] == clause[static_cast<std::size_t>(b)])
                    throw Error("clause " + std::to_string(c) + " repeats a literal");
        const Vertex center = next++;
        for (const Literal& l : clause) {
            const Vertex leaf = next++;
            edges.emplace_back(center, leaf);
            literal_clique[static_cast<std::size_t>(2 * l.var + (l.negated ? 1 : 0))].push_back(leaf);
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int side = 0; side < 2; ++side) {
            auto& members = literal_clique[static_cast<std::size_t>(2 * i + side)];
            if (members.empty()) members.push_back(next++);
            members.push_back(i);
            for (std::size_t a = 0; a < members.size(); ++a)
                for (std::size_t b = a + 1; b < members.size(); ++b) edges.emplace_back(members[a], members[b]);
        }
    }
    if (n == 1) edges.emplace_back(0, next++);
    return Graph(next, edges);
}

}  // namespace tess
