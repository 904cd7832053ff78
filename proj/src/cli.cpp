#include "tess/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "tess/bounds.hpp"
#include "tess/clique_graph.hpp"
#include "tess/constructions.hpp"
#include "tess/corpus.hpp"
#include "tess/io.hpp"
#include "tess/two_tess.hpp"

namespace tess {

namespace {

std::string read_text(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error("cannot write " + path);
    os << text;
    if (!os) throw Error("failed writing " + path);
}

const std::string& input(const RunConfig& c, std::size_t i, const char* what) {
    if (c.inputs.size() <= i) throw Error(std::string("missing input: ") + what);
    return c.inputs[i];
}

Graph read_graph(const RunConfig& c, std::size_t i = 0) {
    const auto& path = input(c, i, "graph");
    try {
        return parse_graph(read_text(path));
    } catch (const ParseError& e) {
        throw Error(path + ": " + e.what());
    }
}

SolveOptions options_of(const RunConfig& c) {
    SolveOptions o;
    o.budget = c.budget;
    o.catalog_cap = c.catalog_cap;
    return o;
}

GadgetSpec parse_gadget(const json& j) {
    GadgetSpec spec;
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    spec.graph = Graph(j.at("n").get<int>(), edges);
    spec.middle_triangle = j.at("middle").get<Clique>();
    spec.external_triangles = j.at("external").get<std::vector<Clique>>();
    for (const auto& a : j.at("attachments")) spec.attachment_vertices.push_back({a.at(0).get<Vertex>(), a.at(1).get<Vertex>()});
    return spec;
}

std::vector<Vertex> range(int from, int to) {
    std::vector<Vertex> out;
    for (int v = from; v < to; ++v) out.push_back(v);
    return out;
}

json generate(const RunConfig& c, Graph& result) {
    const std::string& which = c.construction;
    json roles = json::object();
    json annotation = json::object();
    if (which == "c7" || which == "c8") {
        auto inst = parse_nae(read_text(input(c, 0, "NAE instance")));
        const int n = inst.var_count;
        const int k = static_cast<int>(inst.clauses.size());
        if (which == "c7") {
            result = c7_nae_to_kg(inst);
            roles["literals"] = range(0, 2 * n);
            roles["u"] = 2 * n;
            roles["clause_vertices"] = range(2 * n + 1, 2 * n + 1 + 3 * k);
        } else {
            result = c8_kg_to_graph(inst);
            roles["clique_c"] = range(0, n);
            json centers = json::array();
            json leaves = json::array();
            for (int i = 0; i < k; ++i) {
                centers.push_back(n + 4 * i);
                for (int l = 1; l <= 3; ++l) leaves.push_back(n + 4 * i + l);
            }
            roles["centers"] = centers;
            roles["leaves"] = leaves;
            roles["pendants"] = range(n + 4 * k, result.order());
        }
    } else {
        Graph g = read_graph(c);
        const int n = g.order();
        if (which == "c1") {
            int chi = c.chi ? *c.chi : exact_chromatic_index(g, c.budget).coloring.count;
            result = c1_add_star(g, chi);
            roles["center"] = n;
            roles["new_leaves"] = range(n + 1, result.order());
            annotation["chi_prime"] = chi;
        } else if (which == "c2") {
            if (!c.vertex) throw Error("c2 needs --vertex");
            int chi = c.chi ? *c.chi : exact_chromatic_number(clique_graph(g, c.clique_cap).kg, c.budget).coloring.count;
            result = c2_add_pendants(g, *c.vertex, chi);
            roles["pendants"] = range(n, result.order());
            annotation["chi_kg"] = chi;
        } else if (which == "c3") {
            if (!c.gadget) throw Error("c3 needs --gadget");
            result = c3_gadget_replace(g, parse_gadget(json::parse(read_text(*c.gadget))));
        } else if (which == "c4") {
            if (!c.t) throw Error("c4 needs --t");
            result = c4_fixed_t(g, c.subset, *c.t);
            const int f = static_cast<int>(c.subset.size());
            const int t = *c.t;
            roles["u"] = range(n, n + f);
            roles["c"] = range(n + f, n + f + 3);
            roles["w"] = range(n + f + 3, n + f + 3 + f * (t - 3));
            roles["pendants"] = range(n + f + 3 + f * (t - 3), result.order());
        } else if (which == "c5" || which == "c6") {
            auto a = which == "c5" ? c5_chordal21(g) : c6_12graph(g);
            result = a.graph;
            annotation["partition"] = {{"stables", a.stables}, {"cliques", a.cliques}};
            roles["original"] = range(0, n);
            roles["edge_vertices"] = range(n, n + static_cast<int>(g.size()));
            roles["u"] = n + static_cast<int>(g.size());
        } else {
            throw Error("unknown construction \"" + which + "\"");
        }
    }
    annotation["schema"] = kSchemaVersion;
    annotation["construction"] = which;
    annotation["n"] = result.order();
    annotation["m"] = result.size();
    annotation["roles"] = roles;
    if (!c.output) annotation["edge_list"] = format_edge_list(result);
    return annotation;
}

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
    json doc;
    int status = kExitOk;
    const std::string& cmd = c.command;
    bool output_is_document = true;

    if (cmd == "solve") {
        Graph g = read_graph(c);
        if (c.t) {
            auto r = is_t_tessellable(g, *c.t, options_of(c));
            doc = decision_document(*c.t, r);
            if (r.decision == Decision::No) status = kExitNo;
            if (r.decision == Decision::Unknown) {
                err << "undecided within the search budget\n";
                status = kExitError;
            }
        } else {
            auto r = min_cover_exact(g, options_of(c));
            doc = solve_document(r);
            if (!r.optimal) err << "search budget or catalog cap exceeded; cover is not proven optimal\n";
        }
    } else if (cmd == "check") {
        Graph g = read_graph(c);
        auto cover = parse_cover_document(json::parse(read_text(input(c, 1, "cover"))));
        auto report = validate_cover(g, cover);
        std::vector<Clique> exposed;
        if (report.ok()) exposed = exposed_maximal_cliques(g, cover);
        doc = validation_document(report, exposed);
        if (!report.ok()) {
            err << "invalid cover: " << report.first().describe() << '\n';
            status = kExitError;
        }
    } else if (cmd == "bounds") {
        doc = bounds_document(upper_bounds(read_graph(c), c.exact, c.budget, c.clique_cap));
    } else if (cmd == "2tess") {
        auto r = is_two_tessellable(read_graph(c));
        doc = two_tess_document(r);
        if (!r.decision) status = kExitNo;
    } else if (cmd == "kgraph") {
        doc = clique_graph_document(clique_graph(read_graph(c), c.clique_cap));
    } else if (cmd == "color") {
        Graph g = read_graph(c);
        doc = {{"schema", kSchemaVersion}};
        const bool both = !c.color_edges && !c.color_vertices;
        if (both || c.color_vertices) {
            if (c.exact) {
                auto v = exact_chromatic_number(g, c.budget);
                doc["vertex"] = {{"coloring", v.coloring}, {"exact", v.exact}, {"lower_bound", v.lower_bound}};
            } else {
                doc["vertex"] = {{"coloring", greedy_vertex_coloring(g)}, {"exact", false}};
            }
        }
        if (both || c.color_edges) {
            if (c.exact) {
                auto e = exact_chromatic_index(g, c.budget);
                doc["edge"] = {{"coloring", e.coloring}, {"exact", e.exact}, {"lower_bound", e.lower_bound}};
            } else {
                doc["edge"] = {{"coloring", edge_coloring_delta_plus_one(g)}, {"exact", false}};
            }
        }
    } else if (cmd == "gen") {
        Graph result(0);
        doc = generate(c, result);
        if (c.output) write_text(*c.output, format_edge_list(result));
        output_is_document = false;
    } else if (cmd == "corpus") {
        if (!c.output) throw Error("corpus needs --output <directory>");
        std::filesystem::create_directories(*c.output);
        auto files = generate_corpus(c.seed);
        for (const auto& f : files) write_text((std::filesystem::path(*c.output) / f.name).string(), f.contents);
        doc = {{"schema", kSchemaVersion}, {"seed", c.seed}, {"files", files.size()}, {"directory", *c.output}};
        output_is_document = false;
    } else {
        throw Error("unknown command \"" + cmd + "\"");
    }

    const std::string text = doc.dump(2) + "\n";
    if (c.output && output_is_document) {
        write_text(*c.output, text);
    } else {
        out << text;
    }
    return status;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.budget == 0) throw Error("--budget must be positive");
        if (config.catalog_cap == 0) throw Error("--catalog-cap must be positive");
        if (config.clique_cap == 0) throw Error("--clique-cap must be positive");
        if (config.threads < 1) throw Error("--threads must be positive");
        return dispatch(config, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

}  // namespace tess
