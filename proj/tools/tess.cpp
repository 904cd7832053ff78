#include <CLI11.hpp>

#include <iostream>
#include <thread>

#include "tess/cli.hpp"

int main(int argc, char** argv) {
    tess::RunConfig config;
    config.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

    CLI::App app{"Tessellation covers of graphs"};
    app.require_subcommand(1);

    std::vector<std::string> positional;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--input,-i", config.inputs, "Input file(s); '-' reads standard input");
        sub->add_option("inputs", positional, "Input files after --input ones");
        sub->add_option("--output,-o", config.output, "Write the result here instead of standard output");
        sub->add_option("--budget", config.budget, "Search node budget")->capture_default_str();
        sub->add_option("--catalog-cap", config.catalog_cap, "Maximum tessellation catalog size")->capture_default_str();
        sub->add_option("--clique-cap", config.clique_cap, "Maximum number of maximal cliques")->capture_default_str();
        sub->add_flag("--exact", config.exact, "Use exact colorings");
        sub->add_option("--threads", config.threads, "Worker threads (results do not depend on it)");
        sub->add_option("--seed", config.seed, "Seed for random generation")->capture_default_str();
        sub->add_option("--t", config.t, "Target number of tessellations");
    };

    auto* solve = app.add_subcommand("solve", "Minimum tessellation cover, or decide T(G) <= t with --t");
    auto* check = app.add_subcommand("check", "Validate a cover: graph then cover JSON");
    auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds with witness covers");
    auto* two = app.add_subcommand("2tess", "Decide 2-tessellability");
    auto* kgraph = app.add_subcommand("kgraph", "Clique graph K(G)");
    auto* color = app.add_subcommand("color", "Vertex and edge colorings");
    auto* gen = app.add_subcommand("gen", "Run a construction c1..c8");
    auto* corpus = app.add_subcommand("corpus", "Write the seeded test corpus into --output");
    gen->add_option("construction", config.construction, "c1 .. c8")->required()->check(
        CLI::IsMember({"c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8"}));
    for (auto* sub : {solve, check, bounds, two, kgraph, color, gen, corpus}) common(sub);
    color->add_flag("--edges", config.color_edges, "Edge coloring only");
    color->add_flag("--vertices", config.color_vertices, "Vertex coloring only");
    gen->add_option("--vertex", config.vertex, "Vertex for c2");
    gen->add_option("--chi", config.chi, "Chromatic index (c1) or chromatic number of K(G) (c2)");
    gen->add_option("--subset", config.subset, "Vertex subset F for c4");
    gen->add_option("--gadget", config.gadget, "Gadget JSON for c3");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    config.command = app.get_subcommands().front()->get_name();
    config.inputs.insert(config.inputs.end(), positional.begin(), positional.end());
    return tess::run(config, std::cout, std::cerr);
}
