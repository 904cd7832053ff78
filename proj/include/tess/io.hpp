#pragma once

#include <json.hpp>

#include "tess/bounds.hpp"
#include "tess/clique_graph.hpp"
#include "tess/coloring.hpp"
#include "tess/graph.hpp"
#include "tess/solver.hpp"
#include "tess/tessellation.hpp"
#include "tess/two_tess.hpp"

namespace tess {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

void to_json(json& j, const Tessellation& t);
void from_json(const json& j, Tessellation& t);

/// Bare cover array; the documents below add "schema" and "n".
void to_json(json& j, const TessellationCover& c);
void from_json(const json& j, TessellationCover& c);

void to_json(json& j, const Violation& v);
void from_json(const json& j, Violation& v);

void to_json(json& j, const VertexColoring& c);
void from_json(const json& j, VertexColoring& c);
void to_json(json& j, const EdgeColoring& c);
void from_json(const json& j, EdgeColoring& c);

void to_json(json& j, const Bipartition& b);
void from_json(const json& j, Bipartition& b);

void to_json(json& j, const RootGraph& r);
void from_json(const json& j, RootGraph& r);

/// {"schema":1,"n":..,"tessellations":[[[0,1,2],...],...]}. "schema" may be
/// absent when reading; any other version is rejected.
json cover_document(const TessellationCover& c, int n);
TessellationCover parse_cover_document(const json& j);

json solve_document(const SolveResult& r);
SolveResult parse_solve_document(const json& j);

json decision_document(int t, const TessellabilityResult& r);

json bounds_document(const BoundsReport& r);
BoundsReport parse_bounds_document(const json& j);

json two_tess_document(const TwoTessResult& r);
TwoTessResult parse_two_tess_document(const json& j);

json validation_document(const ValidationReport& report, const std::vector<Clique>& exposed);

json clique_graph_document(const CliqueGraphResult& r);

std::string_view to_string(Decision d);
Decision parse_decision(std::string_view s);

}  // namespace tess
