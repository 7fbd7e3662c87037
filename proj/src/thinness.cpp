#include "modkit/thinness.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

namespace modkit {

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

std::vector<int> positions_of(int n, std::span<const Vertex> order) {
    if (static_cast<int>(order.size()) != n) throw ArgumentError("order does not cover V(G)");
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        const Vertex v = order[static_cast<std::size_t>(i)];
        if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] >= 0) throw ArgumentError("order is not a permutation");
        pos[static_cast<std::size_t>(v)] = i;
    }
    return pos;
}

// DSATUR branch and bound over 64-bit adjacency masks.
class Colorer {
public:
    explicit Colorer(std::vector<Mask> adj) : adj_(std::move(adj)), n_(static_cast<int>(adj_.size())) {}

    std::vector<int> solve() {
        colors_.assign(static_cast<std::size_t>(n_), -1);
        best_k_ = n_ + 1;
        lower_ = greedy_clique();
        search(0, 0);
        return best_;
    }

private:
    int greedy_clique() const {
        int best = n_ > 0 ? 1 : 0;
        for (int s = 0; s < n_; ++s) {
            Mask cand = adj_[static_cast<std::size_t>(s)];
            int size = 1;
            while (cand) {
                int pick = -1, pick_deg = -1;
                for (Mask m = cand; m; m &= m - 1) {
                    const int v = std::countr_zero(m);
                    const int d = std::popcount(adj_[static_cast<std::size_t>(v)] & cand);
                    if (d > pick_deg) pick = v, pick_deg = d;
                }
                ++size;
                cand &= adj_[static_cast<std::size_t>(pick)];
            }
            best = std::max(best, size);
        }
        return best;
    }

    void search(int colored, int used) {
        if (done_ || used >= best_k_) return;
        if (colored == n_) {
            best_k_ = used;
            best_ = colors_;
            done_ = best_k_ <= lower_;
            return;
        }
        int pick = -1, pick_sat = -1, pick_deg = -1;
        Mask pick_forbidden = 0;
        for (int v = 0; v < n_; ++v) {
            if (colors_[static_cast<std::size_t>(v)] >= 0) continue;
            Mask forbidden = 0;
            int deg = 0;
            for (Mask m = adj_[static_cast<std::size_t>(v)]; m; m &= m - 1) {
                const int w = std::countr_zero(m);
                const int c = colors_[static_cast<std::size_t>(w)];
                if (c >= 0)
                    forbidden |= bit(c);
                else
                    ++deg;
            }
            const int sat = std::popcount(forbidden);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v, pick_sat = sat, pick_deg = deg, pick_forbidden = forbidden;
            }
        }
        for (int c = 0; c < used && !done_; ++c) {
            if (pick_forbidden & bit(c)) continue;
            colors_[static_cast<std::size_t>(pick)] = c;
            search(colored + 1, used);
        }
        if (!done_ && used + 1 < best_k_) {
            colors_[static_cast<std::size_t>(pick)] = used;
            search(colored + 1, used + 1);
        }
        colors_[static_cast<std::size_t>(pick)] = -1;
    }

    std::vector<Mask> adj_;
    int n_;
    std::vector<int> colors_;
    std::vector<int> best_;
    int best_k_ = 0;
    int lower_ = 0;
    bool done_ = false;
};

// Backward search for a consistent solution with at most k classes.
//
// Vertices are placed from the last position to the first. Placing u in
// front of the already placed set S makes F(u) = S - N(u) final. A later
// placed (smaller) vertex x may join the class of u iff N(x) misses F(u), so
// each class only needs the union of its members' F sets.
class ThinSearch {
public:
    ThinSearch(const std::vector<Mask>& adj, int k) : adj_(adj), n_(static_cast<int>(adj.size())), k_(k) {}

    bool run() {
        forbidden_.assign(static_cast<std::size_t>(k_), 0);
        class_of_.assign(static_cast<std::size_t>(n_), -1);
        back_order_.clear();
        return place(0);
    }

    // order[i] = i-th smallest vertex
    std::vector<Vertex> order() const { return {back_order_.rbegin(), back_order_.rend()}; }
    const std::vector<int>& class_of() const { return class_of_; }

private:
    std::vector<Mask> key(Mask placed) const {
        std::vector<Mask> key = forbidden_;
        std::sort(key.begin(), key.end());
        key.push_back(placed);
        return key;
    }

    bool place(Mask placed) {
        if (std::popcount(placed) == n_) return true;
        auto k = key(placed);
        if (failed_.contains(k)) return false;
        for (int u = 0; u < n_; ++u) {
            if (placed & bit(u)) continue;
            const Mask nu = adj_[static_cast<std::size_t>(u)];
            bool tried_empty = false;
            for (int c = 0; c < k_; ++c) {
                Mask& f = forbidden_[static_cast<std::size_t>(c)];
                if (f == 0) {
                    // Classes with nothing forbidden are interchangeable.
                    if (tried_empty) continue;
                    tried_empty = true;
                }
                if (nu & f) continue;
                const Mask saved = f;
                f |= placed & ~nu;
                class_of_[static_cast<std::size_t>(u)] = c;
                back_order_.push_back(u);
                if (place(placed | bit(u))) return true;
                back_order_.pop_back();
                class_of_[static_cast<std::size_t>(u)] = -1;
                f = saved;
            }
        }
        failed_.insert(std::move(k));
        return false;
    }

    const std::vector<Mask>& adj_;
    int n_;
    int k_;
    std::vector<Mask> forbidden_;
    std::vector<int> class_of_;
    std::vector<Vertex> back_order_;
    std::set<std::vector<Mask>> failed_;
};

Partition classes_from_labels(int n, const std::vector<int>& label) {
    Partition out;
    std::vector<int> slot;
    for (int v = 0; v < n; ++v) {
        const int c = label[static_cast<std::size_t>(v)];
        if (c >= static_cast<int>(slot.size())) slot.resize(static_cast<std::size_t>(c) + 1, -1);
        if (slot[static_cast<std::size_t>(c)] < 0) {
            slot[static_cast<std::size_t>(c)] = static_cast<int>(out.size());
            out.emplace_back(n);
        }
        out[static_cast<std::size_t>(slot[static_cast<std::size_t>(c)])].insert(v);
    }
    return out;
}

std::vector<Mask> checked_masks(const Graph& g, int guard, bool force, const char* what) {
    if (g.order() > guard && !force)
        throw GuardError(std::string(what) + ": n = " + std::to_string(g.order()) + " exceeds the guard of " +
                         std::to_string(guard));
    if (g.order() > 64) throw GuardError(std::string(what) + ": n exceeds the hard cap of 64");
    return g.masks();
}

}  // namespace

Graph incompatibility_graph(const Graph& g, std::span<const Vertex> order) {
    const int n = g.order();
    positions_of(n, order);
    Graph out(n);
    VertexSet after(n);
    // Walk from the back; `after` holds every vertex later than the current one.
    std::vector<VertexSet> later_non_nbrs(static_cast<std::size_t>(n));
    for (int j = n - 1; j >= 0; --j) {
        const Vertex v = order[static_cast<std::size_t>(j)];
        later_non_nbrs[static_cast<std::size_t>(j)] = after - g.neighbors(v);
        after.insert(v);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Vertex u = order[static_cast<std::size_t>(i)];
            if (g.neighbors(u).intersects(later_non_nbrs[static_cast<std::size_t>(j)]))
                out.add_edge(u, order[static_cast<std::size_t>(j)]);
        }
    return out;
}

bool is_consistent(const Graph& g, const ConsistentSolution& sol) {
    const int n = g.order();
    if (static_cast<int>(sol.order.size()) != n) return false;
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        const Vertex v = sol.order[static_cast<std::size_t>(i)];
        if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] >= 0) return false;
        pos[static_cast<std::size_t>(v)] = i;
    }
    std::vector<int> cls(static_cast<std::size_t>(n), -1);
    for (std::size_t c = 0; c < sol.classes.size(); ++c) {
        if (sol.classes[c].universe() != n || sol.classes[c].empty()) return false;
        for (Vertex v : sol.classes[c]) {
            if (cls[static_cast<std::size_t>(v)] >= 0) return false;
            cls[static_cast<std::size_t>(v)] = static_cast<int>(c);
        }
    }
    if (std::find(cls.begin(), cls.end(), -1) != cls.end()) return false;

    const auto& o = sol.order;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Vertex u = o[static_cast<std::size_t>(i)], v = o[static_cast<std::size_t>(j)];
            if (cls[static_cast<std::size_t>(u)] != cls[static_cast<std::size_t>(v)]) continue;
            for (int k = j + 1; k < n; ++k) {
                const Vertex w = o[static_cast<std::size_t>(k)];
                if (g.adjacent(u, w) && !g.adjacent(v, w)) return false;
            }
        }
    return true;
}

std::vector<int> optimal_coloring(const Graph& g, bool force) {
    return Colorer(checked_masks(g, 16, force, "chromatic_number")).solve();
}

int chromatic_number(const Graph& g, bool force) {
    const auto colors = optimal_coloring(g, force);
    int k = 0;
    for (int c : colors) k = std::max(k, c + 1);
    return k;
}

ThinnessResult thinness_exact(const Graph& g, bool force) {
    const auto adj = checked_masks(g, 9, force, "thinness_exact");
    const int n = g.order();
    if (n == 0) return {};
    for (int k = 1; k <= n; ++k) {
        ThinSearch search(adj, k);
        if (!search.run()) continue;
        ThinnessResult r;
        r.thinness = k;
        r.witness.order = search.order();
        r.witness.classes = classes_from_labels(n, search.class_of());
        // A witness may use fewer classes than the bound it was searched under
        // only if a smaller k had succeeded, which the loop rules out.
        return r;
    }
    throw Error("thinness_exact: no consistent solution found");
}

Graph reduce_interval_module(const Graph& g, const VertexSet& h) {
    if (h.universe() != g.order() || h.empty() || !is_module(g, h))
        throw ArgumentError("reduce_interval_module: set is not a module");
    if (!is_interval(induced_subgraph(g, h)))
        throw ArgumentError("reduce_interval_module: module does not induce an interval graph");
    if (is_complete(g, h)) return contract_module(g, h);
    auto [a, b] = least_nonadjacent_pair(g, h);
    VertexSet keep = g.vertices() - h;
    keep.insert(a);
    keep.insert(b);
    return induced_subgraph(g, keep);
}

Kernel thinness_kernel(const Graph& g) {
    if (g.order() == 0) throw ArgumentError("thinness_kernel: empty graph");
    Kernel out;
    out.partition = interval_mc(g);
    VertexSet kept(g.order());
    for (const auto& part : out.partition.parts) {
        if (is_complete(g, part)) {
            kept.insert(part.first());
        } else {
            auto [a, b] = least_nonadjacent_pair(g, part);
            kept.insert(a);
            kept.insert(b);
        }
    }
    out.origin = kept.members();
    out.graph = induced_subgraph(g, kept);
    return out;
}

NeighborhoodDiversity neighborhood_diversity(const Graph& g) {
    const int n = g.order();
    NeighborhoodDiversity out;
    std::vector<Vertex> reps;
    for (Vertex v = 0; v < n; ++v) {
        bool placed = false;
        for (std::size_t i = 0; i < reps.size() && !placed; ++i) {
            const Vertex r = reps[i];
            VertexSet nv = g.neighbors(v), nr = g.neighbors(r);
            nv.erase(r);
            nr.erase(v);
            if (nv == nr) {
                out.types[i].insert(v);
                placed = true;
            }
        }
        if (!placed) {
            reps.push_back(v);
            out.types.emplace_back(n);
            out.types.back().insert(v);
        }
    }
    out.nd = static_cast<int>(out.types.size());
    return out;
}

bool are_twins(const Graph& g, Vertex a, Vertex b) {
    return g.closed_neighbors(a) == g.closed_neighbors(b);
}

bool is_twin_cover(const Graph& g, const VertexSet& x) {
    if (x.universe() != g.order()) return false;
    for (auto [a, b] : g.edges())
        if (!x.contains(a) && !x.contains(b) && !are_twins(g, a, b)) return false;
    return true;
}

bool is_vertex_cover(const Graph& g, const VertexSet& x) {
    if (x.universe() != g.order()) return false;
    for (auto [a, b] : g.edges())
        if (!x.contains(a) && !x.contains(b)) return false;
    return true;
}

VertexSet twin_cover_exact(const Graph& g, bool force) {
    const int n = g.order();
    if (n > 16 && !force) throw GuardError("twin_cover_exact: n = " + std::to_string(n) + " exceeds the guard of 16");
    if (n > 30) throw GuardError("twin_cover_exact: n exceeds the hard cap of 30");
    std::vector<std::pair<Mask, Mask>> must;  // edges whose endpoints are not twins
    for (auto [a, b] : g.edges())
        if (!are_twins(g, a, b)) must.emplace_back(bit(a), bit(b));
    auto covers = [&](Mask x) {
        return std::all_of(must.begin(), must.end(), [&](auto e) { return (x & e.first) || (x & e.second); });
    };
    const Mask limit = n == 0 ? 1 : bit(n);
    for (int size = 0; size <= n; ++size) {
        // Gosper's hack: masks of popcount `size` in increasing order.
        Mask x = size == 0 ? 0 : (bit(size) - 1);
        while (x < limit) {
            if (covers(x)) {
                VertexSet out(n);
                for (Mask m = x; m; m &= m - 1) out.insert(std::countr_zero(m));
                return out;
            }
            if (x == 0) break;
            const Mask c = x & (~x + 1);
            const Mask r = x + c;
            x = (((r ^ x) >> 2) / c) | r;
        }
    }
    return g.vertices();
}

namespace {

class VertexCoverSearch {
public:
    explicit VertexCoverSearch(std::vector<Mask> adj) : adj_(std::move(adj)), n_(static_cast<int>(adj_.size())) {}

    Mask solve() {
        best_ = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
        best_size_ = n_;
        search(0, n_ == 64 ? ~Mask{0} : bit(n_) - 1);
        return best_;
    }

private:
    // Greedy maximal matching size on the remaining graph: a lower bound.
    int matching_bound(Mask alive) const {
        int m = 0;
        for (Mask rest = alive; rest;) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            const Mask nb = adj_[static_cast<std::size_t>(v)] & rest;
            if (nb) {
                rest &= ~bit(std::countr_zero(nb));
                ++m;
            }
        }
        return m;
    }

    void search(Mask chosen, Mask alive) {
        const int size = std::popcount(chosen);
        if (size + matching_bound(alive) >= best_size_ + (size == 0 && best_size_ == n_ ? 1 : 0)) {
            if (size + matching_bound(alive) >= best_size_) return;
        }
        int pick = -1, pick_deg = 0;
        for (Mask m = alive; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            const int d = std::popcount(adj_[static_cast<std::size_t>(v)] & alive);
            if (d > pick_deg) pick = v, pick_deg = d;
        }
        if (pick < 0) {
            if (size < best_size_) best_ = chosen, best_size_ = size;
            return;
        }
        const Mask nb = adj_[static_cast<std::size_t>(pick)] & alive;
        search(chosen | bit(pick), alive & ~bit(pick));
        search(chosen | nb, alive & ~nb & ~bit(pick));
    }

    std::vector<Mask> adj_;
    int n_;
    Mask best_ = 0;
    int best_size_ = 0;
};

}  // namespace

VertexSet vertex_cover_exact(const Graph& g, bool force) {
    const auto adj = checked_masks(g, 20, force, "vertex_cover_exact");
    const int n = g.order();
    const Mask m = VertexCoverSearch(adj).solve();
    VertexSet out(n);
    for (Mask r = m; r; r &= r - 1) out.insert(std::countr_zero(r));
    return out;
}

namespace {

bool clique_of_size(const std::vector<Mask>& adj, Mask cand, int need) {
    if (need <= 0) return true;
    if (std::popcount(cand) < need) return false;
    for (Mask rest = cand; rest;) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (clique_of_size(adj, rest & adj[static_cast<std::size_t>(v)], need - 1)) return true;
    }
    return false;
}

}  // namespace

bool irreducible_clique_exists(const Graph& g, std::span<const Vertex> order, int size) {
    const int n = g.order();
    if (n > 64) throw GuardError("irreducible_clique_exists: n exceeds the hard cap of 64");
    const auto pos = positions_of(n, order);
    const auto inc = incompatibility_graph(g, order).masks();
    Mask cand = 0;
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w = 0; w < n; ++w)
            if (w != v && pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)] && !g.adjacent(v, w)) {
                cand |= bit(v);
                break;
            }
    return clique_of_size(inc, cand, size);
}

}  // namespace modkit
