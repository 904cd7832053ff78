#include "tess/io.hpp"

namespace tess {

void to_json(json& j, const Tessellation& t) { j = t.cliques(); }

void from_json(const json& j, Tessellation& t) { t = Tessellation(j.get<std::vector<Clique>>()); }

void to_json(json& j, const TessellationCover& c) {
    j = json::array();
    for (const auto& t : c.tessellations) j.push_back(t);
}

void from_json(const json& j, TessellationCover& c) {
    if (!j.is_array()) throw Error("tessellations must be an array");
    c.tessellations.clear();
    for (const auto& t : j) c.tessellations.push_back(t.get<Tessellation>());
}

namespace {

const char* kind_name(Violation::Kind k) {
    switch (k) {
        case Violation::Kind::OutOfRange: return "out_of_range";
        case Violation::Kind::Overlap: return "overlap";
        case Violation::Kind::NonClique: return "non_clique";
        case Violation::Kind::Uncovered: return "uncovered";
    }
    return "unknown";
}

Violation::Kind parse_kind(const std::string& s) {
    if (s == "out_of_range") return Violation::Kind::OutOfRange;
    if (s == "overlap") return Violation::Kind::Overlap;
    if (s == "non_clique") return Violation::Kind::NonClique;
    if (s == "uncovered") return Violation::Kind::Uncovered;
    throw Error("unknown violation kind \"" + s + "\"");
}

void check_schema(const json& j) {
    if (!j.is_object()) throw Error("expected a JSON object");
    if (j.contains("schema") && j.at("schema") != kSchemaVersion)
        throw Error("unsupported schema version " + j.at("schema").dump());
}

TwoTessWitness parse_witness(const std::string& s) {
    for (auto w : {TwoTessWitness::None, TwoTessWitness::NonCliqueTwinClass, TwoTessWitness::NotLineGraph,
                   TwoTessWitness::RootNonBipartite})
        if (to_string(w) == s) return w;
    throw Error("unknown witness \"" + s + "\"");
}

}  // namespace

void to_json(json& j, const Violation& v) {
    j = {{"kind", kind_name(v.kind)}, {"tessellation", v.tessellation}, {"u", v.u}, {"v", v.v}, {"message", v.describe()}};
}

void from_json(const json& j, Violation& v) {
    v.kind = parse_kind(j.at("kind").get<std::string>());
    v.tessellation = j.at("tessellation").get<int>();
    v.u = j.at("u").get<Vertex>();
    v.v = j.at("v").get<Vertex>();
}

void to_json(json& j, const VertexColoring& c) { j = {{"count", c.count}, {"colors", c.colors}}; }

void from_json(const json& j, VertexColoring& c) {
    c.count = j.at("count").get<int>();
    c.colors = j.at("colors").get<std::vector<int>>();
}

void to_json(json& j, const EdgeColoring& c) { j = {{"count", c.count}, {"colors", c.colors}}; }

void from_json(const json& j, EdgeColoring& c) {
    c.count = j.at("count").get<int>();
    c.colors = j.at("colors").get<std::vector<int>>();
}

void to_json(json& j, const Bipartition& b) { j = {{"left", b.left}, {"right", b.right}}; }

void from_json(const json& j, Bipartition& b) {
    b.left = j.at("left").get<std::vector<Vertex>>();
    b.right = j.at("right").get<std::vector<Vertex>>();
}

void to_json(json& j, const RootGraph& r) {
    json links = json::array();
    for (const auto& l : r.root.links()) links.push_back({l.u, l.v, l.multiplicity});
    j = {{"n", r.root.order()}, {"links", links}, {"edge_map", r.edge_map}};
}

void from_json(const json& j, RootGraph& r) {
    r.root = Multigraph(j.at("n").get<int>());
    for (const auto& l : j.at("links")) r.root.add_edge(l.at(0).get<Vertex>(), l.at(1).get<Vertex>(), l.at(2).get<int>());
    r.edge_map = j.at("edge_map").get<std::vector<Vertex>>();
}

json cover_document(const TessellationCover& c, int n) {
    return {{"schema", kSchemaVersion}, {"n", n}, {"tessellations", c}};
}

TessellationCover parse_cover_document(const json& j) {
    check_schema(j);
    return j.at("tessellations").get<TessellationCover>();
}

json solve_document(const SolveResult& r) {
    return {{"schema", kSchemaVersion},
            {"t_number", r.t_number},
            {"optimal", r.optimal},
            {"tessellations", r.cover},
            {"stats", {{"nodes", r.stats.nodes}, {"catalog_size", r.stats.catalog_size}}}};
}

SolveResult parse_solve_document(const json& j) {
    check_schema(j);
    SolveResult r;
    r.t_number = j.at("t_number").get<int>();
    r.optimal = j.at("optimal").get<bool>();
    r.cover = j.at("tessellations").get<TessellationCover>();
    r.stats.nodes = j.at("stats").at("nodes").get<std::uint64_t>();
    r.stats.catalog_size = j.at("stats").at("catalog_size").get<std::size_t>();
    return r;
}

std::string_view to_string(Decision d) {
    switch (d) {
        case Decision::Yes: return "yes";
        case Decision::No: return "no";
        case Decision::Unknown: return "unknown";
    }
    return "unknown";
}

Decision parse_decision(std::string_view s) {
    if (s == "yes") return Decision::Yes;
    if (s == "no") return Decision::No;
    if (s == "unknown") return Decision::Unknown;
    throw Error("unknown decision \"" + std::string(s) + "\"");
}

json decision_document(int t, const TessellabilityResult& r) {
    json j = {{"schema", kSchemaVersion},
              {"t", t},
              {"decision", to_string(r.decision)},
              {"stats", {{"nodes", r.stats.nodes}, {"catalog_size", r.stats.catalog_size}}}};
    if (r.cover) j["tessellations"] = *r.cover;
    return j;
}

json bounds_document(const BoundsReport& r) {
    return {{"schema", kSchemaVersion},
            {"lower", r.lower},
            {"upper_edge", r.upper_edge},
            {"upper_edge_exact", r.upper_edge_exact},
            {"upper_kg", r.upper_kg},
            {"upper_kg_exact", r.upper_kg_exact},
            {"upper", r.upper},
            {"edge_witness", r.edge_witness},
            {"kg_witness", r.kg_witness}};
}

BoundsReport parse_bounds_document(const json& j) {
    check_schema(j);
    BoundsReport r;
    r.lower = j.at("lower").get<int>();
    r.upper_edge = j.at("upper_edge").get<int>();
    r.upper_edge_exact = j.at("upper_edge_exact").get<bool>();
    r.upper_kg = j.at("upper_kg").get<int>();
    r.upper_kg_exact = j.at("upper_kg_exact").get<bool>();
    r.upper = j.at("upper").get<int>();
    r.edge_witness = j.at("edge_witness").get<TessellationCover>();
    r.kg_witness = j.at("kg_witness").get<TessellationCover>();
    return r;
}

json two_tess_document(const TwoTessResult& r) {
    json j = {{"schema", kSchemaVersion}, {"decision", r.decision ? "yes" : "no"}, {"witness", to_string(r.witness)}};
    if (r.witness_component >= 0) j["witness_component"] = r.witness_component;
    if (r.cover) j["tessellations"] = *r.cover;
    if (r.root) j["root"] = *r.root;
    if (r.root_sides) j["root_sides"] = *r.root_sides;
    return j;
}

TwoTessResult parse_two_tess_document(const json& j) {
    check_schema(j);
    TwoTessResult r;
    r.decision = parse_decision(j.at("decision").get<std::string>()) == Decision::Yes;
    r.witness = parse_witness(j.at("witness").get<std::string>());
    if (j.contains("witness_component")) r.witness_component = j.at("witness_component").get<Vertex>();
    if (j.contains("tessellations")) r.cover = j.at("tessellations").get<TessellationCover>();
    if (j.contains("root")) r.root = j.at("root").get<RootGraph>();
    if (j.contains("root_sides")) r.root_sides = j.at("root_sides").get<Bipartition>();
    return r;
}

json validation_document(const ValidationReport& report, const std::vector<Clique>& exposed) {
    json j = {{"schema", kSchemaVersion}, {"valid", report.ok()}, {"violations", report.violations}};
    if (report.ok()) j["exposed_maximal_cliques"] = exposed;
    return j;
}

json clique_graph_document(const CliqueGraphResult& r) {
    json edges = json::array();
    for (const Edge& e : r.kg.edges()) edges.push_back({e.u, e.v});
    return {{"schema", kSchemaVersion}, {"n", r.kg.order()}, {"edges", edges}, {"cliques", r.cliques}};
}

}  // namespace tess
