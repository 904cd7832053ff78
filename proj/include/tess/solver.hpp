#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tess/coloring.hpp"
#include "tess/graph.hpp"
#include "tess/tessellation.hpp"

namespace tess {

inline constexpr std::size_t kDefaultCatalogCap = 200000;

/// Fixed-width bitset over edge indices.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    std::size_t count() const;
    bool none() const;
    std::size_t bits() const noexcept { return bits_; }
    /// First set index, or bits() when empty.
    std::size_t first() const;
    /// First set index after i, or bits().
    std::size_t next(std::size_t i) const;

    bool is_subset_of(const EdgeSet& other) const;
    bool intersects(const EdgeSet& other) const;
    std::size_t intersection_count(const EdgeSet& other) const;

    EdgeSet& operator&=(const EdgeSet& o);
    EdgeSet& operator|=(const EdgeSet& o);
    EdgeSet& subtract(const EdgeSet& o);
    EdgeSet& flip();

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Every edge-maximal tessellation of a host graph, with its edge set.
/// Sorted by descending edge count, then lexicographically by cliques.
struct TessellationCatalog {
    std::vector<Tessellation> tessellations;
    std::vector<EdgeSet> edge_sets;

    std::size_t size() const noexcept { return tessellations.size(); }
};

/// A tessellation is edge-maximal iff no two of its parts (singletons
/// included) can be merged into one clique; the enumeration backtracks over
/// clique partitions and prunes parts that can no longer grow but are already
/// mergeable. Requires at most 64 vertices; throws CapacityError when the
/// catalog would exceed `cap`.
TessellationCatalog enumerate_tessellations(const Graph& g, std::size_t cap = kDefaultCatalogCap);

/// Tessellations with no clique containing all of `avoid`, maximal among
/// such tessellations under edge inclusion. Same order and limits as above.
TessellationCatalog enumerate_tessellations_avoiding(const Graph& g, const Clique& avoid,
                                                     std::size_t cap = kDefaultCatalogCap);

struct SolveOptions {
    std::uint64_t budget = kDefaultSearchBudget;
    std::size_t catalog_cap = kDefaultCatalogCap;
};

struct SolveStats {
    std::uint64_t nodes = 0;
    std::size_t catalog_size = 0;
};

struct SolveResult {
    int t_number = 0;
    TessellationCover cover;
    bool optimal = false;
    SolveStats stats;
};

/// Minimum tessellation cover by set-cover branch and bound over the catalog.
/// When the budget or catalog cap is exceeded, returns the best cover found
/// with optimal = false.
SolveResult min_cover_exact(const Graph& g, const SolveOptions& options = {});

enum class Decision { Yes, No, Unknown };

struct TessellabilityResult {
    Decision decision = Decision::Unknown;
    std::optional<TessellationCover> cover;  // set iff decision == Yes; size <= t
    SolveStats stats;
};

/// Searches for a cover of at most `max_size` members of `catalog`.
TessellabilityResult cover_from_catalog(const Graph& g, const TessellationCatalog& catalog, int max_size,
                                        std::uint64_t budget = kDefaultSearchBudget);

/// Three-valued t-tessellability.
TessellabilityResult is_t_tessellable(const Graph& g, int t, const SolveOptions& options = {});

/// Repeated greedy passes; each pass grows disjoint cliques vertex by vertex,
/// adding the neighbor that covers the most still-uncovered edges.
TessellationCover greedy_cover(const Graph& g);

/// Calls `visit` for every minimum cover drawn from the catalog, each exactly
/// once; `visit` returns false to stop early. Returns nullopt when T(G) could
/// not be established or the enumeration ran out of budget, otherwise the
/// minimum size.
std::optional<int> for_each_min_cover(const Graph& g, const std::function<bool(const TessellationCover&)>& visit,
                                      const SolveOptions& options = {});

/// True iff some minimum cover exposes no maximal clique; nullopt when unknown.
std::optional<bool> exists_min_cover_without_exposed(const Graph& g, const SolveOptions& options = {});

/// True iff every minimum cover has a tessellation that contains none of the
/// maximal cliques (of size at least two) of g; nullopt when unknown.
std::optional<bool> all_min_covers_need_cliqueless_tessellation(const Graph& g, const SolveOptions& options = {});

}  // namespace tess
