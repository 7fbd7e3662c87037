#include "modkit/sim_interval.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>

#include "modkit/modular_partition.hpp"

namespace modkit {

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

bool labels_meet(const std::vector<int>& a, const std::vector<int>& b) {
    auto i = a.begin(), j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return true;
        *i < *j ? ++i : ++j;
    }
    return false;
}

std::vector<int> labels_of(Mask m) {
    std::vector<int> out;
    for (; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
}

// Interval arrangements of t slots up to equivalence of their intersection
// pattern. Endpoints are events 1..2t; a slot may only open while none of
// its required partners has closed, and may only close once all of them
// have opened.
class Arranger {
public:
    using Accept = std::function<bool(const std::vector<Mask>& meet, const std::vector<Interval>& iv)>;

    Arranger(int t, std::vector<Mask> must_meet, std::vector<Mask> must_miss)
        : t_(t), must_meet_(std::move(must_meet)), must_miss_(std::move(must_miss)) {}

    bool run(const Accept& accept) {
        accept_ = &accept;
        meet_.assign(static_cast<std::size_t>(t_), 0);
        events_.clear();
        seen_.clear();
        return step(0, 0);
    }

private:
    bool step(Mask opened, Mask closed) {
        const Mask all = t_ == 64 ? ~Mask{0} : bit(t_) - 1;
        if (closed == all) {
            std::vector<Interval> iv(static_cast<std::size_t>(t_));
            for (std::size_t i = 0; i < events_.size(); ++i) {
                const int v = events_[i] >> 1;
                const int pos = static_cast<int>(i) + 1;
                if (events_[i] & 1)
                    iv[static_cast<std::size_t>(v)].hi = pos;
                else
                    iv[static_cast<std::size_t>(v)].lo = pos;
            }
            return (*accept_)(meet_, iv);
        }
        std::vector<Mask> key = meet_;
        key.push_back(opened);
        key.push_back(closed);
        if (!seen_.insert(std::move(key)).second) return false;

        const Mask open_now = opened & ~closed;
        for (int v = 0; v < t_; ++v) {
            if (opened & bit(v)) continue;
            const auto sv = static_cast<std::size_t>(v);
            if (must_meet_[sv] & closed) continue;
            if (must_miss_[sv] & open_now) continue;
            const auto saved = meet_;
            meet_[sv] |= open_now;
            for (Mask m = open_now; m; m &= m - 1) meet_[static_cast<std::size_t>(std::countr_zero(m))] |= bit(v);
            events_.push_back(v << 1);
            if (step(opened | bit(v), closed)) return true;
            events_.pop_back();
            meet_ = saved;
        }
        for (Mask m = open_now; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            if ((must_meet_[static_cast<std::size_t>(v)] & ~opened) != 0) continue;
            events_.push_back(v << 1 | 1);
            if (step(opened, closed | bit(v))) return true;
            events_.pop_back();
        }
        return false;
    }

    int t_;
    std::vector<Mask> must_meet_;
    std::vector<Mask> must_miss_;
    const Accept* accept_ = nullptr;
    std::vector<Mask> meet_;
    std::vector<int> events_;
    std::set<std::vector<Mask>> seen_;
};

// Label sets over 1..d such that adjacent vertices share a label and
// nonadjacent vertices with intersecting intervals share none. Vertices
// without neighbours get the empty set. New labels are introduced in
// increasing order, which removes the label permutation symmetry.
class LabelSolver {
public:
    LabelSolver(const std::vector<Mask>& adj, const std::vector<Mask>& meets, int d)
        : adj_(adj), meets_(meets), d_(d), n_(static_cast<int>(adj.size())) {}

    std::optional<std::vector<Mask>> solve() {
        labels_.assign(static_cast<std::size_t>(n_), 0);
        if (place(0, 0)) return labels_;
        return std::nullopt;
    }

private:
    bool place(int v, int used) {
        if (v == n_) return true;
        const auto sv = static_cast<std::size_t>(v);
        if (adj_[sv] == 0) return place(v + 1, used);
        const Mask universe = bit(d_) - 1;
        for (Mask s = 1; s <= universe; ++s) {
            const Mask fresh = s >> used;
            if (fresh & (fresh + 1)) continue;  // new labels must be used+1, used+2, ...
            if (!fits(v, s)) continue;
            labels_[sv] = s;
            if (place(v + 1, std::max(used, 64 - std::countl_zero(s)))) return true;
        }
        labels_[sv] = 0;
        return false;
    }

    bool fits(int v, Mask s) const {
        const auto sv = static_cast<std::size_t>(v);
        for (int u = 0; u < v; ++u) {
            const auto su = static_cast<std::size_t>(u);
            if (adj_[sv] & bit(u)) {
                if ((labels_[su] & s) == 0) return false;
            } else if ((meets_[sv] & bit(u)) && (labels_[su] & s) != 0) {
                return false;
            }
        }
        return true;
    }

    const std::vector<Mask>& adj_;
    const std::vector<Mask>& meets_;
    int d_;
    int n_;
    std::vector<Mask> labels_;
};

SimRep edgeless_rep(int n, int d) {
    SimRep rep;
    rep.d = d;
    for (int v = 0; v < n; ++v) rep.intervals.push_back({2 * v + 1, 2 * v + 2});
    rep.labels.assign(static_cast<std::size_t>(n), {});
    return rep;
}

std::optional<SimRep> interval_rep(const Graph& g, int d) {
    auto model = interval_model(g);
    if (!model) return std::nullopt;
    SimRep rep;
    rep.d = d;
    rep.intervals = std::move(*model);
    rep.labels.assign(static_cast<std::size_t>(g.order()), {1});
    return rep;
}

void check_guard(int n, int d, bool force, const char* what) {
    if (d < 0) throw ArgumentError(std::string(what) + ": d must be nonnegative");
    if (!force && n > 6)
        throw GuardError(std::string(what) + ": n = " + std::to_string(n) + " exceeds the guard of 6");
    if (!force && d > 3)
        throw GuardError(std::string(what) + ": d = " + std::to_string(d) + " exceeds the guard of 3");
    if (n > 12 || d > 16) throw GuardError(std::string(what) + ": instance exceeds the hard cap (n <= 12, d <= 16)");
}

}  // namespace

bool validate_sim_rep(const Graph& g, const SimRep& rep) {
    const int n = g.order();
    if (rep.d < 0) return false;
    if (static_cast<int>(rep.intervals.size()) != n || static_cast<int>(rep.labels.size()) != n) return false;
    for (int v = 0; v < n; ++v) {
        const auto& iv = rep.intervals[static_cast<std::size_t>(v)];
        if (iv.lo > iv.hi) return false;
        const auto& ls = rep.labels[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < ls.size(); ++i) {
            if (ls[i] < 1 || ls[i] > rep.d) return false;
            if (i > 0 && ls[i - 1] >= ls[i]) return false;
        }
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const auto su = static_cast<std::size_t>(u), sv = static_cast<std::size_t>(v);
            const bool both = rep.intervals[su].intersects(rep.intervals[sv]) && labels_meet(rep.labels[su], rep.labels[sv]);
            if (both != g.adjacent(u, v)) return false;
        }
    return true;
}

SimRep perturb_to_distinct(const SimRep& rep) {
    struct End {
        int coord;
        int side;  // 0 = left, 1 = right
        int v;
    };
    std::vector<End> ends;
    for (std::size_t v = 0; v < rep.intervals.size(); ++v) {
        ends.push_back({rep.intervals[v].lo, 0, static_cast<int>(v)});
        ends.push_back({rep.intervals[v].hi, 1, static_cast<int>(v)});
    }
    // At a shared coordinate lefts go first, so touching closed intervals keep meeting.
    std::sort(ends.begin(), ends.end(), [](const End& a, const End& b) {
        if (a.coord != b.coord) return a.coord < b.coord;
        if (a.side != b.side) return a.side < b.side;
        return a.v < b.v;
    });
    SimRep out = rep;
    for (std::size_t i = 0; i < ends.size(); ++i) {
        auto& iv = out.intervals[static_cast<std::size_t>(ends[i].v)];
        (ends[i].side == 0 ? iv.lo : iv.hi) = static_cast<int>(i) + 1;
    }
    return out;
}

namespace {

// Maximal cliques of a chordal graph from a maximum cardinality search, or
// nullopt when g is not chordal.
std::optional<std::vector<VertexSet>> chordal_cliques(const Graph& g, const VertexSet& scope) {
    const int n = g.order();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    VertexSet visited(n);
    std::vector<VertexSet> cands;
    for (int step = 0, total = scope.count(); step < total; ++step) {
        Vertex pick = -1;
        for (Vertex v : scope - visited)
            if (pick < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)]) pick = v;
        VertexSet c = g.neighbors(pick) & visited;
        if (!is_complete(g, c)) return std::nullopt;
        c.insert(pick);
        cands.push_back(std::move(c));
        visited.insert(pick);
        for (Vertex w : g.neighbors(pick) & scope) ++weight[static_cast<std::size_t>(w)];
    }
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < cands.size() && maximal; ++j)
            if (i != j && cands[i].subset_of(cands[j]) && (cands[i] != cands[j] || j < i)) maximal = false;
        if (maximal) out.push_back(cands[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Orders cliques so that each vertex lies in a consecutive run of them.
class CliquePath {
public:
    explicit CliquePath(const std::vector<VertexSet>& cliques) : cliques_(cliques), m_(static_cast<int>(cliques.size())) {}

    std::optional<std::vector<int>> solve() {
        if (m_ == 0) return std::vector<int>{};
        used_.resize(static_cast<std::size_t>(m_));
        for (int s = 0; s < m_; ++s) {
            used_.set(static_cast<std::size_t>(s));
            order_.push_back(s);
            VertexSet closed(cliques_[0].universe());
            if (extend(closed)) return order_;
            order_.pop_back();
            used_.reset(static_cast<std::size_t>(s));
        }
        return std::nullopt;
    }

private:
    bool extend(const VertexSet& closed) {
        if (static_cast<int>(order_.size()) == m_) return true;
        const int last = order_.back();
        if (failed_.contains({used_, last})) return false;
        const VertexSet& cur = cliques_[static_cast<std::size_t>(last)];
        VertexSet pending(cur.universe());
        for (int c = 0; c < m_; ++c)
            if (!used_.test(static_cast<std::size_t>(c))) pending |= cliques_[static_cast<std::size_t>(c)];
        // Vertices of the last clique that occur again must carry on into the next one.
        const VertexSet carry = cur & pending;
        for (int c = 0; c < m_; ++c) {
            if (used_.test(static_cast<std::size_t>(c))) continue;
            const VertexSet& next = cliques_[static_cast<std::size_t>(c)];
            if (!carry.subset_of(next) || next.intersects(closed)) continue;
            used_.set(static_cast<std::size_t>(c));
            order_.push_back(c);
            if (extend(closed | (cur - next))) return true;
            order_.pop_back();
            used_.reset(static_cast<std::size_t>(c));
        }
        failed_.insert({used_, last});
        return false;
    }

    const std::vector<VertexSet>& cliques_;
    int m_;
    boost::dynamic_bitset<> used_;
    std::vector<int> order_;
    std::set<std::pair<boost::dynamic_bitset<>, int>> failed_;
};

}  // namespace

std::optional<std::vector<Interval>> interval_model(const Graph& g) {
    const int n = g.order();
    std::vector<Interval> out(static_cast<std::size_t>(n));
    int offset = 0;
    for (const auto& comp : connected_components(g)) {
        auto cliques = chordal_cliques(g, comp);
        if (!cliques) return std::nullopt;
        auto order = CliquePath(*cliques).solve();
        if (!order) return std::nullopt;
        for (std::size_t i = 0; i < order->size(); ++i) {
            const int pos = offset + static_cast<int>(i) + 1;
            for (Vertex v : (*cliques)[static_cast<std::size_t>((*order)[i])]) {
                auto& iv = out[static_cast<std::size_t>(v)];
                if (iv.lo == 0) iv.lo = pos;
                iv.hi = pos;
            }
        }
        offset += static_cast<int>(order->size());
    }
    return out;
}

SiDecision si_decide(const Graph& g, int d, bool force) {
    const int n = g.order();
    check_guard(n, d, force, "si_decide");
    // Isolated vertices play no role in the search; they are parked as
    // points to the right with empty label sets.
    std::vector<Vertex> core;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) > 0) core.push_back(v);
    const int t = static_cast<int>(core.size());
    const Graph h = induced_subgraph(g, std::span<const Vertex>(core));
    const auto adj = h.masks();

    SiDecision out;
    Arranger arranger(t, adj, std::vector<Mask>(static_cast<std::size_t>(t), 0));
    arranger.run([&](const std::vector<Mask>& meet, const std::vector<Interval>& iv) {
        auto labels = LabelSolver(adj, meet, d).solve();
        if (!labels) return false;
        SimRep rep;
        rep.d = d;
        rep.intervals.resize(static_cast<std::size_t>(n));
        rep.labels.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < t; ++i) {
            const auto v = static_cast<std::size_t>(core[static_cast<std::size_t>(i)]);
            rep.intervals[v] = iv[static_cast<std::size_t>(i)];
            rep.labels[v] = labels_of((*labels)[static_cast<std::size_t>(i)]);
        }
        int pos = 2 * t;
        for (Vertex v = 0; v < n; ++v)
            if (g.degree(v) == 0) {
                ++pos;
                rep.intervals[static_cast<std::size_t>(v)] = {pos, pos};
            }
        out.feasible = true;
        out.witness = std::move(rep);
        return true;
    });
    return out;
}

SiResult si_exact(const Graph& g, bool force) {
    const int n = g.order();
    if (g.edge_count() == 0) return {0, edgeless_rep(n, 0)};
    if (auto rep = interval_rep(g, 1)) return {1, std::move(*rep)};
    for (int d = 2;; ++d) {
        auto r = si_decide(g, d, force);
        if (r.feasible) return {d, std::move(*r.witness)};
    }
}

SiDecision si_fpt(const Graph& g, int d, bool force) {
    const int n = g.order();
    if (d < 0) throw ArgumentError("si_fpt: d must be nonnegative");
    if (g.edge_count() == 0) return {true, edgeless_rep(n, d)};
    if (d == 0) return {};
    if (auto rep = interval_rep(g, d)) return {true, std::move(*rep)};
    if (d == 1) return {};

    // Components that are cliques are set aside and appended at the end.
    VertexSet core(n);
    std::vector<VertexSet> isolated;
    for (auto& comp : connected_components(g)) {
        if (is_complete(g, comp))
            isolated.push_back(std::move(comp));
        else
            core |= comp;
    }
    const auto core_list = core.members();
    const Graph h = induced_subgraph(g, core);
    const int hn = h.order();

    const auto partition = cluster_mc(h);
    const int k = partition.size();
    if (!force && k > 3) throw GuardError("si_fpt: cluster_mc = " + std::to_string(k) + " exceeds the guard of 3");
    if (!force && d > 3) throw GuardError("si_fpt: d = " + std::to_string(d) + " exceeds the guard of 3");
    if (k > 16 || d > 16) throw GuardError("si_fpt: instance exceeds the hard cap (cluster_mc <= 16, d <= 16)");

    // Each clique inside a module is represented by its least vertex.
    std::vector<std::vector<Vertex>> reps(static_cast<std::size_t>(k));
    std::vector<Vertex> rep_of(static_cast<std::size_t>(hn), -1);
    for (int i = 0; i < k; ++i)
        for (const auto& clique : connected_components(h, partition.parts[static_cast<std::size_t>(i)])) {
            reps[static_cast<std::size_t>(i)].push_back(clique.first());
            for (Vertex v : clique) rep_of[static_cast<std::size_t>(v)] = clique.first();
        }

    const Mask modes = bit(k);
    for (Mask mode = 0; mode < modes; ++mode) {
        // Kept vertices of the reduced instance, the slot carrying each, and
        // for split modules the pair of slots that must stay apart.
        std::vector<Vertex> kept;
        std::vector<int> slot_of;
        std::vector<std::pair<int, int>> apart;
        std::vector<int> split_module;
        bool skip = false;
        int t = 0;
        for (int i = 0; i < k && !skip; ++i) {
            const auto& r = reps[static_cast<std::size_t>(i)];
            const bool split = (mode & bit(i)) != 0;
            if (r.size() == 1) {
                if (split) skip = true;  // only one mode is meaningful for a single clique
                kept.push_back(r[0]);
                slot_of.push_back(t++);
            } else if (split) {
                kept.push_back(r[0]);
                slot_of.push_back(t++);
                kept.push_back(r[1]);
                slot_of.push_back(t++);
                apart.emplace_back(t - 2, t - 1);
                split_module.push_back(i);
            } else {
                if (static_cast<int>(r.size()) > d) skip = true;
                for (Vertex v : r) {
                    kept.push_back(v);
                    slot_of.push_back(t);
                }
                ++t;
            }
        }
        if (skip) continue;

        const int m = static_cast<int>(kept.size());
        std::vector<Mask> adj(static_cast<std::size_t>(m), 0);
        std::vector<Mask> must_meet(static_cast<std::size_t>(t), 0), must_miss(static_cast<std::size_t>(t), 0);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                if (a != b && h.adjacent(kept[static_cast<std::size_t>(a)], kept[static_cast<std::size_t>(b)])) {
                    adj[static_cast<std::size_t>(a)] |= bit(b);
                    must_meet[static_cast<std::size_t>(slot_of[static_cast<std::size_t>(a)])] |=
                        bit(slot_of[static_cast<std::size_t>(b)]);
                }
        for (auto [x, y] : apart) {
            must_miss[static_cast<std::size_t>(x)] |= bit(y);
            must_miss[static_cast<std::size_t>(y)] |= bit(x);
        }

        std::optional<SimRep> found;
        Arranger arranger(t, must_meet, must_miss);
        arranger.run([&](const std::vector<Mask>& slot_meet, const std::vector<Interval>& iv) {
            std::vector<Mask> meets(static_cast<std::size_t>(m), 0);
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) {
                    const int sa = slot_of[static_cast<std::size_t>(a)], sb = slot_of[static_cast<std::size_t>(b)];
                    if (a != b && (sa == sb || (slot_meet[static_cast<std::size_t>(sa)] & bit(sb))))
                        meets[static_cast<std::size_t>(a)] |= bit(b);
                }
            auto labels = LabelSolver(adj, meets, d).solve();
            if (!labels) return false;

            // Lift back to g. Coordinates are scaled so that the gap after
            // each right endpoint can hold the module members left out.
            const int scale = n + 1;
            std::vector<Interval> hiv(static_cast<std::size_t>(hn));
            std::vector<std::vector<int>> hlab(static_cast<std::size_t>(hn));
            for (int a = 0; a < m; ++a) {
                const auto v = static_cast<std::size_t>(kept[static_cast<std::size_t>(a)]);
                const auto& s = iv[static_cast<std::size_t>(slot_of[static_cast<std::size_t>(a)])];
                hiv[v] = {s.lo * scale, s.hi * scale};
                hlab[v] = labels_of((*labels)[static_cast<std::size_t>(a)]);
            }
            for (int i : split_module) {
                const auto& r = reps[static_cast<std::size_t>(i)];
                Vertex left = r[0];
                if (hiv[static_cast<std::size_t>(r[1])].hi < hiv[static_cast<std::size_t>(left)].lo) left = r[1];
                const Interval a = hiv[static_cast<std::size_t>(left)];
                for (std::size_t j = 2; j < r.size(); ++j) {
                    const int p = a.hi + static_cast<int>(j) - 1;
                    hiv[static_cast<std::size_t>(r[j])] = {p, p};
                    hlab[static_cast<std::size_t>(r[j])] = hlab[static_cast<std::size_t>(left)];
                }
            }
            SimRep rep;
            rep.d = d;
            rep.intervals.resize(static_cast<std::size_t>(n));
            rep.labels.resize(static_cast<std::size_t>(n));
            int right = 0;
            for (int v = 0; v < hn; ++v) {
                const auto r = static_cast<std::size_t>(rep_of[static_cast<std::size_t>(v)]);
                const auto gv = static_cast<std::size_t>(core_list[static_cast<std::size_t>(v)]);
                rep.intervals[gv] = hiv[r];
                rep.labels[gv] = hlab[r];
                right = std::max(right, hiv[r].hi);
            }
            for (const auto& clique : isolated) {
                ++right;
                for (Vertex v : clique) {
                    rep.intervals[static_cast<std::size_t>(v)] = {right, right};
                    rep.labels[static_cast<std::size_t>(v)] = {1};
                }
            }
            if (!validate_sim_rep(g, rep)) throw Error("si_fpt: lifted representation does not validate");
            found = std::move(rep);
            return true;
        });
        if (found) return {true, std::move(found)};
    }
    return {};
}

SimRep si_from_twin_cover(const Graph& g, const VertexSet& x) {
    const int n = g.order();
    if (x.universe() != n) throw ArgumentError("si_from_twin_cover: vertex set universe mismatch");
    // Checked inline to keep this module independent of the thinness code.
    for (auto [a, b] : g.edges())
        if (!x.contains(a) && !x.contains(b) && g.closed_neighbors(a) != g.closed_neighbors(b))
            throw ArgumentError("si_from_twin_cover: set is not a twin-cover");

    const auto xs = x.members();
    const int k = static_cast<int>(xs.size());
    std::vector<int> extra(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> labels(static_cast<std::size_t>(n));
    int e = 0;
    for (auto [a, b] : induced_subgraph(g, x).edges()) {
        ++e;
        labels[static_cast<std::size_t>(xs[static_cast<std::size_t>(a)])].push_back(e);
        labels[static_cast<std::size_t>(xs[static_cast<std::size_t>(b)])].push_back(e);
    }
    for (int i = 0; i < k; ++i) {
        extra[static_cast<std::size_t>(xs[static_cast<std::size_t>(i)])] = e + i + 1;
        labels[static_cast<std::size_t>(xs[static_cast<std::size_t>(i)])].push_back(e + i + 1);
    }

    std::vector<VertexSet> lonely, attached;
    for (auto& clique : connected_components(g, x.complement())) {
        if (g.neighbors(clique.first()).intersects(x))
            attached.push_back(std::move(clique));
        else
            lonely.push_back(std::move(clique));
    }
    const int a = static_cast<int>(lonely.size()), b = static_cast<int>(attached.size());

    SimRep rep;
    rep.d = std::max(1, e + k);
    rep.intervals.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < a; ++i)
        for (Vertex v : lonely[static_cast<std::size_t>(i)]) {
            rep.intervals[static_cast<std::size_t>(v)] = {i, i};
            labels[static_cast<std::size_t>(v)] = {1};
        }
    for (int j = 0; j < b; ++j)
        for (Vertex v : attached[static_cast<std::size_t>(j)]) {
            rep.intervals[static_cast<std::size_t>(v)] = {a + j, a + j};
            for (Vertex w : g.neighbors(v) & x) labels[static_cast<std::size_t>(v)].push_back(extra[static_cast<std::size_t>(w)]);
        }
    for (Vertex v : xs) rep.intervals[static_cast<std::size_t>(v)] = {a, a + std::max(b, 1) - 1};
    for (auto& ls : labels) std::sort(ls.begin(), ls.end());
    rep.labels = std::move(labels);
    return rep;
}

}  // namespace modkit
