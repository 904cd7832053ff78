#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tess/coloring.hpp"
#include "tess/solver.hpp"
#include "tess/structure.hpp"

namespace tess {

struct RunConfig {
    std::string command;       // solve, check, bounds, 2tess, kgraph, color, gen, corpus
    std::string construction;  // c1..c8 for gen
    std::vector<std::string> inputs;
    std::optional<std::string> output;
    std::optional<int> t;
    std::uint64_t budget = kDefaultSearchBudget;
    std::size_t catalog_cap = kDefaultCatalogCap;
    std::size_t clique_cap = kDefaultCliqueCap;
    bool exact = false;
    bool color_edges = false;  // color: neither flag means both
    bool color_vertices = false;
    int threads = 1;
    std::uint64_t seed = 0;

    // gen parameters
    std::optional<Vertex> vertex;
    std::optional<int> chi;
    std::vector<Vertex> subset;
    std::optional<std::string> gadget;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

/// Executes one command. JSON goes to `out` (or to the --output file),
/// diagnostics to `err`. Returns 0 on success, 1 when a decision command
/// answers no, 2 on errors, invalid covers and undecided searches.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace tess
