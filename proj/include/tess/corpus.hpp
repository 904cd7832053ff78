#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tess/constructions.hpp"
#include "tess/graph.hpp"

namespace tess {

/// Seeded generator with its own bounded draws, so sequences do not depend
/// on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    int between(int lo, int hi);
    /// True with probability p.
    bool chance(double p);

private:
    std::mt19937_64 engine_;
};

/// Erdős–Rényi G(n, p).
Graph random_graph(int n, double p, Rng& rng);

/// G(n, p) conditioned on being connected by retrying.
Graph random_connected_graph(int n, double p, Rng& rng);

/// `links` random pairs between sides of the given sizes, each with
/// multiplicity in [1, max_multiplicity]. Repeated pairs merge.
Multigraph random_bipartite_multigraph(int left, int right, int links, int max_multiplicity, Rng& rng);

/// Adds edges in random order, skipping any that would create a diamond.
Graph random_diamond_free_graph(int n, double p, Rng& rng);

/// Adds edges in random order, skipping any that would create a triangle,
/// then retries until connected.
Graph random_triangle_free_connected_graph(int n, double p, Rng& rng);

NaeInstance random_nae_instance(int var_count, int clause_count, Rng& rng);

/// Every connected graph on n vertices up to isomorphism, each in canonical
/// labeling, ordered by canonical code. Supports n <= 8.
std::vector<Graph> connected_graphs(int n);

struct CorpusFile {
    std::string name;
    std::string contents;
};

struct CorpusSpec {
    int random_per_density = 10;
    int random_max_order = 9;
    int line_graphs = 20;
    int diamond_free = 20;
    int all_connected_max_order = 7;
};

/// Edge-list files; identical seeds give identical output.
std::vector<CorpusFile> generate_corpus(std::uint64_t seed, const CorpusSpec& spec = {});

}  // namespace tess
