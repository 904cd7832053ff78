#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tess/bounds.hpp"
#include "tess/clique_graph.hpp"
#include "tess/constructions.hpp"
#include "tess/solver.hpp"
#include "tess/two_tess.hpp"

namespace py = pybind11;
using namespace tess;

namespace {

using CoverList = std::vector<std::vector<Clique>>;

CoverList to_list(const TessellationCover& c) {
    CoverList out;
    for (const auto& t : c.tessellations) out.push_back(t.cliques());
    return out;
}

TessellationCover from_list(const CoverList& list) {
    TessellationCover c;
    for (const auto& t : list) c.tessellations.emplace_back(t);
    return c;
}

Graph make_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    std::vector<Edge> edges;
    for (auto [u, v] : pairs) edges.emplace_back(u, v);
    return Graph(n, edges);
}

std::vector<std::pair<Vertex, Vertex>> edge_pairs(const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
    return out;
}

NaeInstance make_nae(int var_count, const std::vector<std::array<int, 3>>& clauses) {
    NaeInstance inst;
    inst.var_count = var_count;
    for (const auto& c : clauses) {
        std::array<Literal, 3> clause;
        for (std::size_t i = 0; i < 3; ++i) {
            if (c[i] == 0) throw Error("literals are signed 1-based integers");
            clause[i] = Literal{std::abs(c[i]) - 1, c[i] < 0};
        }
        inst.clauses.push_back(clause);
    }
    return inst;
}

py::dict annotated(const AnnotatedGraph& a) {
    py::dict d;
    d["graph"] = a.graph;
    d["stables"] = a.stables;
    d["cliques"] = a.cliques;
    return d;
}

const char* decision_name(Decision d) {
    switch (d) {
        case Decision::Yes: return "yes";
        case Decision::No: return "no";
        case Decision::Unknown: return "unknown";
    }
    return "unknown";
}

}  // namespace

PYBIND11_MODULE(_tesscover, m) {
    m.doc() = "Tessellation covers of graphs";

    py::register_exception<Error>(m, "TessError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def("edges", &edge_pairs)
        .def("neighbors", [](const Graph& g, Vertex v) {
            if (v < 0 || v >= g.order()) throw py::index_error("vertex out of range");
            auto span = g.neighbors(v);
            return std::vector<Vertex>(span.begin(), span.end());
        })
        .def("adjacent", &Graph::adjacent)
        .def("to_edge_list", [](const Graph& g) { return format_edge_list(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
        });

    m.def("parse_graph", [](const std::string& text) { return parse_graph(text); }, py::arg("text"),
          "Edge list or graph6 text.");

    m.def("min_cover_exact",
          [](const Graph& g, std::uint64_t budget, std::size_t catalog_cap) {
              SolveResult r = min_cover_exact(g, {budget, catalog_cap});
              py::dict d;
              d["t_number"] = r.t_number;
              d["optimal"] = r.optimal;
              d["cover"] = to_list(r.cover);
              d["nodes"] = r.stats.nodes;
              d["catalog_size"] = r.stats.catalog_size;
              return d;
          },
          py::arg("g"), py::arg("budget") = kDefaultSearchBudget, py::arg("catalog_cap") = kDefaultCatalogCap);

    m.def("is_t_tessellable",
          [](const Graph& g, int t, std::uint64_t budget) {
              auto r = is_t_tessellable(g, t, {budget, kDefaultCatalogCap});
              py::object cover = py::none();
              if (r.cover) cover = py::cast(to_list(*r.cover));
              return py::make_tuple(decision_name(r.decision), cover);
          },
          py::arg("g"), py::arg("t"), py::arg("budget") = kDefaultSearchBudget);

    m.def("greedy_cover", [](const Graph& g) { return to_list(greedy_cover(g)); });

    m.def("validate_cover", [](const Graph& g, const CoverList& cover) {
        std::vector<std::string> out;
        for (const auto& v : validate_cover(g, from_list(cover)).violations) out.push_back(v.describe());
        return out;
    });

    m.def("is_two_tessellable", [](const Graph& g) {
        auto r = is_two_tessellable(g);
        py::dict d;
        d["decision"] = r.decision;
        d["witness"] = std::string(to_string(r.witness));
        d["cover"] = r.cover ? py::cast(to_list(*r.cover)) : py::none();
        return d;
    });

    m.def("two_tess_reference", [](const Graph& g) { return two_tess_reference(g); });

    m.def("line_graph", [](int n, const std::vector<std::tuple<Vertex, Vertex, int>>& links) {
        Multigraph h(n);
        for (auto [u, v, k] : links) h.add_edge(u, v, k);
        return line_graph(h);
    }, py::arg("n"), py::arg("links"), "Line graph of a multigraph given as (u, v, multiplicity) links.");

    m.def("clique_graph", [](const Graph& g) {
        auto r = clique_graph(g);
        return py::make_tuple(r.kg, r.cliques);
    });

    m.def("upper_bounds",
          [](const Graph& g, bool exact, std::uint64_t budget) {
              auto r = upper_bounds(g, exact, budget);
              py::dict d;
              d["lower"] = r.lower;
              d["upper_edge"] = r.upper_edge;
              d["upper_edge_exact"] = r.upper_edge_exact;
              d["upper_kg"] = r.upper_kg;
              d["upper_kg_exact"] = r.upper_kg_exact;
              d["upper"] = r.upper;
              d["edge_witness"] = to_list(r.edge_witness);
              d["kg_witness"] = to_list(r.kg_witness);
              return d;
          },
          py::arg("g"), py::arg("exact") = false, py::arg("budget") = kDefaultSearchBudget);

    m.def("lower_bound", [](const Graph& g) { return lower_bound(g); });

    m.def("exact_chromatic_number",
          [](const Graph& g, std::uint64_t budget) {
              auto r = exact_chromatic_number(g, budget);
              return py::make_tuple(r.coloring.count, r.exact, r.coloring.colors);
          },
          py::arg("g"), py::arg("budget") = kDefaultSearchBudget);

    m.def("exact_chromatic_index",
          [](const Graph& g, std::uint64_t budget) {
              auto r = exact_chromatic_index(g, budget);
              return py::make_tuple(r.coloring.count, r.exact, r.coloring.colors);
          },
          py::arg("g"), py::arg("budget") = kDefaultSearchBudget);

    m.def("c1_add_star", &c1_add_star, py::arg("g"), py::arg("chi_prime"));
    m.def("c2_add_pendants", &c2_add_pendants, py::arg("g"), py::arg("v"), py::arg("chi_kg"));
    m.def("c4_fixed_t", &c4_fixed_t, py::arg("g"), py::arg("f"), py::arg("t"));
    m.def("c5_chordal21", [](const Graph& g) { return annotated(c5_chordal21(g)); });
    m.def("c6_12graph", [](const Graph& g) { return annotated(c6_12graph(g)); });
    m.def("c7_nae_to_kg", [](int vars, const std::vector<std::array<int, 3>>& clauses) {
        return c7_nae_to_kg(make_nae(vars, clauses));
    }, py::arg("var_count"), py::arg("clauses"));
    m.def("c8_kg_to_graph", [](int vars, const std::vector<std::array<int, 3>>& clauses) {
        return c8_kg_to_graph(make_nae(vars, clauses));
    }, py::arg("var_count"), py::arg("clauses"));
    m.def("nae_brute_force", [](int vars, const std::vector<std::array<int, 3>>& clauses) {
        return nae_brute_force(make_nae(vars, clauses));
    }, py::arg("var_count"), py::arg("clauses"));
}
