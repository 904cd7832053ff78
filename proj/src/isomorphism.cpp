#include "tess/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace tess {

namespace {

using Cells = std::vector<std::vector<int>>;

class Canonizer {
public:
    explicit Canonizer(const Graph& g) : n_(g.order()), adj_(static_cast<std::size_t>(g.order()), 0) {
        if (n_ > 64) throw CapacityError("canonical form supports at most 64 vertices");
        for (Vertex v = 0; v < n_; ++v)
            for (Vertex w : g.neighbors(v)) adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << w;
    }

    CanonicalForm run() {
        Cells cells;
        if (n_ > 0) {
            cells.emplace_back();
            for (int v = 0; v < n_; ++v) cells.back().push_back(v);
        }
        search(std::move(cells));
        return {best_labeling_, best_code_};
    }

private:
    // Splits cells by neighbor counts into every other cell until stable.
    void refine(Cells& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
                std::uint64_t splitter = 0;
                for (int v : cells[s]) splitter |= std::uint64_t{1} << v;
                for (std::size_t c = 0; c < cells.size(); ++c) {
                    if (cells[c].size() < 2) continue;
                    std::map<int, std::vector<int>> groups;
                    for (int v : cells[c]) groups[std::popcount(adj_[static_cast<std::size_t>(v)] & splitter)].push_back(v);
                    if (groups.size() < 2) continue;
                    std::vector<std::vector<int>> parts;
                    for (auto& [count, members] : groups) parts.push_back(std::move(members));
                    cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
                    cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), parts.begin(), parts.end());
                    changed = true;
                    break;
                }
            }
        }
    }

    void search(Cells cells) {
        refine(cells);
        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (cells[i].size() > 1 && (target == cells.size() || cells[i].size() < cells[target].size())) target = i;
        }
        if (target == cells.size()) {
            leaf(cells);
            return;
        }
        const std::vector<int> members = cells[target];
        for (int v : members) {
            Cells next = cells;
            std::vector<int> rest;
            for (int w : members)
                if (w != v) rest.push_back(w);
            next[target] = {v};
            next.insert(next.begin() + static_cast<std::ptrdiff_t>(target) + 1, rest);
            search(std::move(next));
        }
    }

    void leaf(const Cells& cells) {
        std::vector<Vertex> labeling;
        labeling.reserve(static_cast<std::size_t>(n_));
        for (const auto& c : cells) labeling.push_back(c.front());
        std::vector<int> inverse(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) inverse[static_cast<std::size_t>(labeling[static_cast<std::size_t>(i)])] = i;
        std::vector<std::uint64_t> code(static_cast<std::size_t>(n_), 0);
        for (int i = 0; i < n_; ++i) {
            std::uint64_t row = adj_[static_cast<std::size_t>(labeling[static_cast<std::size_t>(i)])];
            std::uint64_t mapped = 0;
            while (row) {
                int w = std::countr_zero(row);
                row &= row - 1;
                mapped |= std::uint64_t{1} << inverse[static_cast<std::size_t>(w)];
            }
            code[static_cast<std::size_t>(i)] = mapped;
        }
        if (best_labeling_.empty() || code > best_code_) {
            best_code_ = std::move(code);
            best_labeling_ = std::move(labeling);
        }
    }

    int n_;
    std::vector<std::uint64_t> adj_;
    std::vector<Vertex> best_labeling_;
    std::vector<std::uint64_t> best_code_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return Canonizer(g).run(); }

Graph canonical_graph(const Graph& g) {
    auto form = canonical_form(g);
    std::vector<int> inverse(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) inverse[static_cast<std::size_t>(form.labeling[static_cast<std::size_t>(i)])] = i;
    std::vector<Edge> edges;
    for (Edge e : g.edges()) edges.emplace_back(inverse[static_cast<std::size_t>(e.u)], inverse[static_cast<std::size_t>(e.v)]);
    return Graph(g.order(), edges);
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<int> da, db;
    for (Vertex v = 0; v < a.order(); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a).code == canonical_form(b).code;
}

}  // namespace tess
