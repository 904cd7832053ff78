#include "tess/solver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "tess/clique_graph.hpp"
#include "tess/structure.hpp"
#include "tess/two_tess.hpp"

namespace tess {

std::size_t EdgeSet::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool EdgeSet::none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t EdgeSet::first() const { return bits_ == 0 ? 0 : (test(0) ? 0 : next(0)); }

std::size_t EdgeSet::next(std::size_t i) const {
    ++i;
    if (i >= bits_) return bits_;
    std::size_t w = i >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (i & 63));
    while (true) {
        if (word) return std::min(bits_, (w << 6) + static_cast<std::size_t>(std::countr_zero(word)));
        if (++w >= words_.size()) return bits_;
        word = words_[w];
    }
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

bool EdgeSet::intersects(const EdgeSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

std::size_t EdgeSet::intersection_count(const EdgeSet& other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
}

EdgeSet& EdgeSet::operator&=(const EdgeSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

EdgeSet& EdgeSet::subtract(const EdgeSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
}

EdgeSet& EdgeSet::flip() {
    for (auto& w : words_) w = ~w;
    if (bits_ & 63) words_.back() &= (std::uint64_t{1} << (bits_ & 63)) - 1;
    return *this;
}

namespace {

using Mask = std::uint64_t;

EdgeSet edge_set_of(const Graph& g, const Tessellation& t) {
    EdgeSet s(g.size());
    for (const Clique& c : t.cliques())
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j) s.set(*g.edge_index(c[i], c[j]));
    return s;
}

class PartitionEnumerator {
public:
    PartitionEnumerator(const Graph& g, std::size_t cap, Mask avoid = 0)
        : g_(g), n_(g.order()), cap_(cap), avoid_(avoid), adj_(static_cast<std::size_t>(n_), 0) {
        if (n_ > 64) throw CapacityError("tessellation enumeration supports at most 64 vertices");
        for (Vertex v = 0; v < n_; ++v)
            for (Vertex w : g.neighbors(v)) adj_[static_cast<std::size_t>(v)] |= Mask{1} << w;
    }

    std::vector<std::vector<Mask>> run() {
        dfs(0);
        return std::move(found_);
    }

private:
    static Mask above(int v) { return v >= 63 ? 0 : ~Mask{0} << (v + 1); }

    bool forbidden(Mask part) const { return avoid_ != 0 && (part & avoid_) == avoid_; }

    bool mergeable(std::size_t a, std::size_t b) const {
        return (members_[b] & ~common_[a]) == 0 && !forbidden(members_[a] | members_[b]);
    }

    // After vertex v is placed: a part is closed once no later vertex is adjacent
    // to all its members. Two closed parts that are mergeable can never become
    // unmergeable, so the branch cannot yield an edge-maximal partition.
    bool closed_pair_exists(int v) const {
        const Mask future = above(v);
        for (std::size_t a = 0; a < members_.size(); ++a) {
            if (common_[a] & future) continue;
            for (std::size_t b = a + 1; b < members_.size(); ++b) {
                if ((common_[b] & future) == 0 && mergeable(a, b)) return true;
            }
        }
        return false;
    }

    void dfs(int v) {
        if (v == n_) {
            for (std::size_t a = 0; a < members_.size(); ++a)
                for (std::size_t b = a + 1; b < members_.size(); ++b)
                    if (mergeable(a, b)) return;
            if (found_.size() >= cap_) throw CapacityError("tessellation catalog exceeds cap of " + std::to_string(cap_));
            found_.push_back(members_);
            return;
        }
        const Mask bit = Mask{1} << v;
        for (std::size_t i = 0; i < members_.size(); ++i) {
            if (!(common_[i] & bit)) continue;
            Mask saved_members = members_[i];
            Mask saved_common = common_[i];
            members_[i] |= bit;
            common_[i] &= adj_[static_cast<std::size_t>(v)];
            if (!forbidden(members_[i]) && !closed_pair_exists(v)) dfs(v + 1);
            members_[i] = saved_members;
            common_[i] = saved_common;
        }
        members_.push_back(bit);
        common_.push_back(adj_[static_cast<std::size_t>(v)]);
        if (!closed_pair_exists(v)) dfs(v + 1);
        members_.pop_back();
        common_.pop_back();
    }

    const Graph& g_;
    int n_;
    std::size_t cap_;
    Mask avoid_;
    std::vector<Mask> adj_;
    std::vector<Mask> members_;
    std::vector<Mask> common_;
    std::vector<std::vector<Mask>> found_;
};

Clique mask_to_clique(Mask m) {
    Clique c;
    while (m) {
        c.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return c;
}

}  // namespace

namespace {

TessellationCatalog build_catalog(const Graph& g, const std::vector<std::vector<Mask>>& partitions) {
    std::vector<std::pair<Tessellation, EdgeSet>> items;
    items.reserve(partitions.size());
    for (const auto& parts : partitions) {
        std::vector<Clique> cliques;
        for (Mask m : parts)
            if (std::popcount(m) >= 2) cliques.push_back(mask_to_clique(m));
        Tessellation t(std::move(cliques));
        EdgeSet s = edge_set_of(g, t);
        items.emplace_back(std::move(t), std::move(s));
    }
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        std::size_t ca = a.second.count();
        std::size_t cb = b.second.count();
        if (ca != cb) return ca > cb;
        return a.first.cliques() < b.first.cliques();
    });
    TessellationCatalog catalog;
    for (auto& [t, s] : items) {
        catalog.tessellations.push_back(std::move(t));
        catalog.edge_sets.push_back(std::move(s));
    }
    return catalog;
}

}  // namespace

TessellationCatalog enumerate_tessellations(const Graph& g, std::size_t cap) {
    return build_catalog(g, PartitionEnumerator(g, cap).run());
}

TessellationCatalog enumerate_tessellations_avoiding(const Graph& g, const Clique& avoid, std::size_t cap) {
    if (g.order() > 64) throw CapacityError("tessellation enumeration supports at most 64 vertices");
    Mask mask = 0;
    for (Vertex v : avoid) {
        if (v < 0 || v >= g.order()) throw Error("avoided clique vertex out of range");
        mask |= Mask{1} << v;
    }
    if (std::popcount(mask) < 2) throw Error("avoided clique needs at least two vertices");
    return build_catalog(g, PartitionEnumerator(g, cap, mask).run());
}

TessellationCover greedy_cover(const Graph& g) {
    const int n = g.order();
    std::vector<char> covered(g.size(), 0);
    std::size_t remaining = g.size();
    TessellationCover cover;
    std::vector<int> part(static_cast<std::size_t>(n));
    while (remaining > 0) {
        std::fill(part.begin(), part.end(), -1);
        std::vector<Clique> cliques;
        for (Vertex v = 0; v < n; ++v) {
            if (part[static_cast<std::size_t>(v)] >= 0) continue;
            Clique clique{v};
            part[static_cast<std::size_t>(v)] = static_cast<int>(cliques.size());
            while (true) {
                Vertex best = -1;
                int best_gain = 0;
                for (Vertex w : g.neighbors(clique.front())) {
                    if (part[static_cast<std::size_t>(w)] >= 0) continue;
                    int gain = 0;
                    bool fits = true;
                    for (Vertex x : clique) {
                        auto idx = g.edge_index(x, w);
                        if (!idx) {
                            fits = false;
                            break;
                        }
                        if (!covered[*idx]) ++gain;
                    }
                    if (fits && gain > best_gain) {
                        best = w;
                        best_gain = gain;
                    }
                }
                if (best < 0) break;
                part[static_cast<std::size_t>(best)] = static_cast<int>(cliques.size());
                clique.push_back(best);
            }
            cliques.push_back(std::move(clique));
        }
        for (const Clique& c : cliques)
            for (std::size_t i = 0; i < c.size(); ++i)
                for (std::size_t j = i + 1; j < c.size(); ++j) {
                    auto idx = *g.edge_index(c[i], c[j]);
                    if (!covered[idx]) {
                        covered[idx] = 1;
                        --remaining;
                    }
                }
        cover.tessellations.emplace_back(std::move(cliques));
    }
    return cover;
}

namespace {

// Set-cover branch and bound over a tessellation catalog.
//
// Branches on the uncovered edge contained in the fewest catalog sets. The
// k-th alternative forbids alternatives 0..k-1 inside its subtree, so every
// family of sets is visited at most once. The lower bound is a greedy set of
// pairwise conflicting uncovered edges (no catalog set holds two of them).
// Siblings compared for domination; a larger window prunes more but costs
// quadratic time on wide branches.
constexpr std::size_t kDominationWindow = 64;

class CoverSearch {
public:
    enum class Mode { Minimize, Enumerate };

    CoverSearch(const Graph& g, const TessellationCatalog& catalog, std::uint64_t budget)
        : g_(g), catalog_(catalog), m_(g.size()), budget_(budget), forbidden_(catalog.size(), 0), containing_(m_), conflict_(m_, EdgeSet(m_)) {
        for (std::size_t s = 0; s < catalog.size(); ++s) {
            const EdgeSet& set = catalog.edge_sets[s];
            for (std::size_t e = set.first(); e < m_; e = set.next(e)) {
                containing_[e].push_back(s);
                conflict_[e] |= set;
            }
        }
        for (auto& c : conflict_) c.flip();
    }

    // Finds a cover smaller than `bound`; returns false if none exists or on abort.
    bool minimize(std::size_t bound, bool stop_at_first) {
        mode_ = Mode::Minimize;
        best_size_ = bound;
        stop_at_first_ = stop_at_first;
        EdgeSet all(m_);
        all.flip();
        search(all);
        return !best_.empty() || (m_ == 0 && bound > 0);
    }

    // Visits every cover with exactly `size` sets.
    void enumerate(std::size_t size, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
        mode_ = Mode::Enumerate;
        best_size_ = size + 1;
        visit_ = &visit;
        EdgeSet all(m_);
        all.flip();
        search(all);
    }

    bool aborted() const noexcept { return aborted_; }
    bool stopped() const noexcept { return stopped_; }
    std::uint64_t nodes() const noexcept { return nodes_; }
    const std::vector<std::size_t>& best() const noexcept { return best_; }

    std::size_t lower_bound(const EdgeSet& uncovered) const {
        EdgeSet candidates = uncovered;
        std::size_t count = 0;
        for (std::size_t e = candidates.first(); e < m_; e = candidates.next(e)) {
            ++count;
            candidates &= conflict_[e];
        }
        return count;
    }

private:
    void search(const EdgeSet& uncovered) {
        if (aborted_ || stopped_) return;
        if (uncovered.none()) {
            if (mode_ == Mode::Enumerate) {
                if (chosen_.size() + 1 == best_size_ && !(*visit_)(chosen_)) stopped_ = true;
                return;
            }
            if (chosen_.size() < best_size_) {
                best_size_ = chosen_.size();
                best_ = chosen_;
                if (stop_at_first_) stopped_ = true;
            }
            return;
        }
        if (chosen_.size() + lower_bound(uncovered) >= best_size_) return;
        if (++nodes_ > budget_) {
            aborted_ = true;
            return;
        }

        std::size_t pick = m_;
        for (std::size_t e = uncovered.first(); e < m_; e = uncovered.next(e)) {
            if (pick == m_ || containing_[e].size() < containing_[pick].size()) pick = e;
        }

        if (best_size_ - chosen_.size() == 2) {
            // One more set must cover everything that is left.
            for (std::size_t s : containing_[pick]) {
                if (forbidden_[s] || !uncovered.is_subset_of(catalog_.edge_sets[s])) continue;
                chosen_.push_back(s);
                EdgeSet none(m_);
                search(none);
                chosen_.pop_back();
                if (stopped_ || best_size_ - chosen_.size() < 2) break;
            }
            return;
        }

        std::vector<std::size_t> tried;
        std::vector<EdgeSet> tried_restricted;
        for (std::size_t s : containing_[pick]) {
            if (forbidden_[s]) continue;
            EdgeSet restricted = catalog_.edge_sets[s];
            restricted &= uncovered;
            bool dominated = false;
            if (mode_ == Mode::Minimize) {
                const std::size_t limit = std::min(tried_restricted.size(), kDominationWindow);
                for (std::size_t i = 0; i < limit; ++i) {
                    if (restricted.is_subset_of(tried_restricted[i])) {
                        dominated = true;
                        break;
                    }
                }
            }
            if (!dominated) {
                EdgeSet rest = uncovered;
                rest.subtract(restricted);
                chosen_.push_back(s);
                search(rest);
                chosen_.pop_back();
                if (aborted_ || stopped_) break;
                tried_restricted.push_back(std::move(restricted));
            }
            forbidden_[s] = 1;
            tried.push_back(s);
        }
        for (std::size_t s : tried) forbidden_[s] = 0;
    }

    const Graph& g_;
    const TessellationCatalog& catalog_;
    std::size_t m_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    bool stopped_ = false;
    bool stop_at_first_ = false;
    Mode mode_ = Mode::Minimize;
    std::size_t best_size_ = 0;
    std::vector<char> forbidden_;
    std::vector<std::vector<std::size_t>> containing_;
    std::vector<EdgeSet> conflict_;
    std::vector<std::size_t> chosen_;
    std::vector<std::size_t> best_;
    const std::function<bool(const std::vector<std::size_t>&)>* visit_ = nullptr;
};

TessellationCover cover_of(const TessellationCatalog& catalog, const std::vector<std::size_t>& ids) {
    TessellationCover c;
    for (std::size_t id : ids) c.tessellations.push_back(catalog.tessellations[id]);
    return c;
}

// Greedy set cover over the catalog: largest marginal gain, lowest index on ties.
std::vector<std::size_t> catalog_greedy(const TessellationCatalog& catalog, std::size_t m) {
    EdgeSet uncovered(m);
    uncovered.flip();
    std::vector<std::size_t> chosen;
    while (!uncovered.none()) {
        std::size_t best = catalog.size();
        std::size_t gain = 0;
        for (std::size_t s = 0; s < catalog.size(); ++s) {
            std::size_t c = catalog.edge_sets[s].intersection_count(uncovered);
            if (c > gain) {
                gain = c;
                best = s;
            }
        }
        if (best == catalog.size()) break;
        chosen.push_back(best);
        uncovered.subtract(catalog.edge_sets[best]);
    }
    return chosen;
}

}  // namespace

SolveResult min_cover_exact(const Graph& g, const SolveOptions& options) {
    SolveResult result;
    if (g.size() == 0) {
        result.optimal = true;
        return result;
    }
    TessellationCover fallback = greedy_cover(g);
    TessellationCatalog catalog;
    try {
        catalog = enumerate_tessellations(g, options.catalog_cap);
    } catch (const CapacityError&) {
        result.t_number = static_cast<int>(fallback.size());
        result.cover = std::move(fallback);
        return result;
    }
    result.stats.catalog_size = catalog.size();

    auto seeded = catalog_greedy(catalog, g.size());
    std::size_t upper = std::min(seeded.size(), fallback.size());

    CoverSearch search(g, catalog, options.budget);
    // Bound upper + 1 so the reported cover is always the first optimum in
    // search order, even when a greedy cover is already optimal.
    search.minimize(upper + 1, false);
    result.stats.nodes = search.nodes();
    if (!search.best().empty()) {
        result.cover = cover_of(catalog, search.best());
    } else if (seeded.size() <= fallback.size()) {
        result.cover = cover_of(catalog, seeded);
    } else {
        result.cover = std::move(fallback);
    }
    result.t_number = static_cast<int>(result.cover.size());
    result.optimal = !search.aborted();
    return result;
}

TessellabilityResult cover_from_catalog(const Graph& g, const TessellationCatalog& catalog, int max_size,
                                        std::uint64_t budget) {
    if (max_size < 0) throw Error("cover_from_catalog: max_size must be nonnegative");
    TessellabilityResult result;
    result.stats.catalog_size = catalog.size();
    if (g.size() == 0) {
        result.decision = Decision::Yes;
        result.cover = TessellationCover{};
        return result;
    }
    CoverSearch search(g, catalog, budget);
    search.minimize(static_cast<std::size_t>(max_size) + 1, true);
    result.stats.nodes = search.nodes();
    if (!search.best().empty()) {
        result.decision = Decision::Yes;
        result.cover = cover_of(catalog, search.best());
    } else {
        result.decision = search.aborted() ? Decision::Unknown : Decision::No;
    }
    return result;
}

TessellabilityResult is_t_tessellable(const Graph& g, int t, const SolveOptions& options) {
    if (t < 0) throw Error("is_t_tessellable: t must be nonnegative");
    TessellabilityResult result;
    auto yes = [&](TessellationCover c) {
        result.decision = Decision::Yes;
        result.cover = std::move(c);
        return result;
    };
    if (g.size() == 0) return yes({});
    if (t == 0) {
        result.decision = Decision::No;
        return result;
    }

    // Constructive shortcuts: edge coloring, greedy.
    {
        auto ec = edge_coloring_delta_plus_one(g);
        if (ec.count <= t) return yes(cover_from_edge_coloring(g, ec));
        auto greedy = greedy_cover(g);
        if (static_cast<int>(greedy.size()) <= t) return yes(std::move(greedy));
    }
    // T(G) <= 2 has exact characterizations.
    if (t == 1) {
        if (!is_cluster_graph(g)) {
            result.decision = Decision::No;
            return result;
        }
        std::vector<Clique> parts;
        for (auto& comp : connected_components(g)) parts.push_back(std::move(comp));
        return yes(TessellationCover{{Tessellation(std::move(parts))}});
    }
    if (t == 2) {
        auto two = is_two_tessellable(g);
        if (two.decision) return yes(std::move(*two.cover));
        result.decision = Decision::No;
        return result;
    }

    TessellationCatalog catalog;
    try {
        catalog = enumerate_tessellations(g, options.catalog_cap);
    } catch (const CapacityError&) {
        return result;
    }
    return cover_from_catalog(g, catalog, t, options.budget);
}

std::optional<int> for_each_min_cover(const Graph& g, const std::function<bool(const TessellationCover&)>& visit,
                                      const SolveOptions& options) {
    auto solved = min_cover_exact(g, options);
    if (!solved.optimal) return std::nullopt;
    if (g.size() == 0) {
        visit(TessellationCover{});
        return 0;
    }
    TessellationCatalog catalog;
    try {
        catalog = enumerate_tessellations(g, options.catalog_cap);
    } catch (const CapacityError&) {
        return std::nullopt;
    }
    CoverSearch search(g, catalog, options.budget);
    std::function<bool(const std::vector<std::size_t>&)> adapter = [&](const std::vector<std::size_t>& ids) {
        return visit(cover_of(catalog, ids));
    };
    search.enumerate(static_cast<std::size_t>(solved.t_number), adapter);
    if (search.aborted()) return std::nullopt;
    return solved.t_number;
}

std::optional<bool> exists_min_cover_without_exposed(const Graph& g, const SolveOptions& options) {
    bool found = false;
    auto t = for_each_min_cover(
        g,
        [&](const TessellationCover& c) {
            found = exposed_maximal_cliques(g, c).empty();
            return !found;
        },
        options);
    if (found) return true;
    if (!t) return std::nullopt;
    return false;
}

std::optional<bool> all_min_covers_need_cliqueless_tessellation(const Graph& g, const SolveOptions& options) {
    std::vector<Clique> maximal;
    for (auto& k : maximal_cliques(g))
        if (k.size() >= 2) maximal.push_back(std::move(k));
    std::sort(maximal.begin(), maximal.end());
    bool counterexample = false;
    auto t = for_each_min_cover(
        g,
        [&](const TessellationCover& c) {
            bool every = std::all_of(c.tessellations.begin(), c.tessellations.end(), [&](const Tessellation& tess) {
                return std::any_of(tess.cliques().begin(), tess.cliques().end(),
                                   [&](const Clique& k) { return std::binary_search(maximal.begin(), maximal.end(), k); });
            });
            counterexample = every;
            return !every;
        },
        options);
    if (counterexample) return false;
    if (!t) return std::nullopt;
    return true;
}

}  // namespace tess
