#include "modkit/mim_width.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>

namespace modkit {

namespace {

using Mask = std::uint64_t;

// Set operations shared by the 64-bit fast path and the general path.
Mask minus(Mask a, Mask b) { return a & ~b; }
int size(Mask a) { return std::popcount(a); }
bool any(Mask a) { return a != 0; }
int first(Mask a) { return std::countr_zero(a); }
Mask single(Mask, int v) { return Mask{1} << v; }

VertexSet minus(const VertexSet& a, const VertexSet& b) { return a - b; }
int size(const VertexSet& a) { return a.count(); }
bool any(const VertexSet& a) { return !a.empty(); }
int first(const VertexSet& a) { return a.first(); }
VertexSet single(const VertexSet& like, int v) { return VertexSet(like.universe(), {v}); }

// Branch and bound over the A side of the cut: either some cut edge at the
// first live vertex a joins the matching, or a is dropped. Choosing ab kills
// every A vertex seeing b and every B vertex seeing a.
template <class Set>
class InducedMatching {
public:
    InducedMatching(const std::vector<Set>& cross) : cross_(cross) {}

    int solve(const Set& a_side, const Set& b_side) {
        best_ = 0;
        search(a_side, b_side, 0);
        return best_;
    }

private:
    // Vertices of `side` with a cut neighbour in `other`.
    Set live(const Set& side, const Set& other) const {
        Set out = side;
        for (Set rest = side; any(rest);) {
            const int v = first(rest);
            rest = minus(rest, single(rest, v));
            if (!any(cross_[static_cast<std::size_t>(v)] & other)) out = minus(out, single(out, v));
        }
        return out;
    }

    void search(const Set& ca_in, const Set& cb_in, int taken) {
        const Set ca = live(ca_in, cb_in);
        const Set cb = live(cb_in, ca);
        if (taken > best_) best_ = taken;
        if (taken + std::min(size(ca), size(cb)) <= best_) return;
        const int a = first(ca);
        const Set na = cross_[static_cast<std::size_t>(a)] & cb;
        for (Set rest = na; any(rest);) {
            const int b = first(rest);
            rest = minus(rest, single(rest, b));
            search(minus(minus(ca, single(ca, a)), cross_[static_cast<std::size_t>(b)]), minus(cb, na), taken + 1);
        }
        search(minus(ca, single(ca, a)), cb, taken);
    }

    const std::vector<Set>& cross_;
    int best_ = 0;
};

int cut_mim_masks(const std::vector<Mask>& adj, Mask s, Mask all) {
    const Mask t = all & ~s;
    return InducedMatching<Mask>(adj).solve(s, t);
}

}  // namespace

int cut_mim(const Graph& g, const VertexSet& s) {
    const int n = g.order();
    if (s.universe() != n) throw ArgumentError("cut_mim: vertex set universe mismatch");
    if (n <= 64) {
        Mask sm = 0;
        for (Vertex v : s) sm |= Mask{1} << v;
        const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
        return cut_mim_masks(g.masks(), sm, all);
    }
    std::vector<VertexSet> adj;
    adj.reserve(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) adj.push_back(g.neighbors(v));
    return InducedMatching<VertexSet>(adj).solve(s, s.complement());
}

int layout_mimw(const Graph& g, std::span<const Vertex> layout) {
    const int n = g.order();
    if (static_cast<int>(layout.size()) != n) throw ArgumentError("layout does not cover V(G)");
    VertexSet prefix(n);
    for (Vertex v : layout) {
        if (v < 0 || v >= n || prefix.contains(v)) throw ArgumentError("layout is not a permutation");
        prefix.insert(v);
    }
    prefix = VertexSet(n);
    int width = 0;
    for (int i = 0; i + 1 < n; ++i) {
        prefix.insert(layout[static_cast<std::size_t>(i)]);
        width = std::max(width, cut_mim(g, prefix));
    }
    return width;
}

LayoutResult lmimw_exact(const Graph& g, bool force) {
    const int n = g.order();
    if (n > 16 && !force) throw GuardError("lmimw_exact: n = " + std::to_string(n) + " exceeds the guard of 16");
    if (n > 24) throw GuardError("lmimw_exact: n exceeds the hard cap of 24");
    if (n == 0) return {};

    const auto adj = g.masks();
    const std::uint32_t all = (std::uint32_t{1} << n) - 1;
    std::vector<std::int8_t> cut(std::size_t{1} << n, -1);
    auto cut_of = [&](std::uint32_t s) {
        auto& c = cut[s];
        if (c < 0) c = static_cast<std::int8_t>(cut_mim_masks(adj, s, all));
        return static_cast<int>(c);
    };

    // Bottleneck search: the least w for which the full set is reachable from
    // the empty set through subsets whose cut has mim at most w.
    std::vector<std::uint32_t> parent(std::size_t{1} << n);
    for (int w = 0;; ++w) {
        std::vector<bool> seen(std::size_t{1} << n, false);
        std::deque<std::uint32_t> queue{0};
        seen[0] = true;
        while (!queue.empty() && !seen[all]) {
            const std::uint32_t s = queue.front();
            queue.pop_front();
            for (int v = 0; v < n; ++v) {
                const std::uint32_t t = s | (std::uint32_t{1} << v);
                if (t == s || seen[t]) continue;
                if (t != all && cut_of(t) > w) continue;
                seen[t] = true;
                parent[t] = s;
                queue.push_back(t);
            }
        }
        if (!seen[all]) continue;
        LayoutResult r;
        r.width = w;
        for (std::uint32_t s = all; s != 0; s = parent[s]) r.layout.push_back(std::countr_zero(s ^ parent[s]));
        std::reverse(r.layout.begin(), r.layout.end());
        return r;
    }
}

Graph hn_graph(int n) {
    if (n < 0 || n > 4) throw GuardError("hn_graph: n must lie in 0..4");
    if (n == 0) return Graph(1);
    const Graph inner = hn_graph(n - 1);
    const int s = inner.order();
    Graph g(4 + 3 * s);
    for (int i = 0; i < 3; ++i) {
        const Vertex u = 1 + i, base = 4 + i * s;
        g.add_edge(0, u);
        for (Vertex y = 0; y < s; ++y) g.add_edge(u, base + y);
        for (auto [a, b] : inner.edges()) g.add_edge(base + a, base + b);
    }
    return g;
}

LinearLayout hn_canonical_layout(int n) {
    if (n < 0 || n > 4) throw GuardError("hn_canonical_layout: n must lie in 0..4");
    if (n == 0) return {0};
    const LinearLayout inner = hn_canonical_layout(n - 1);
    const int s = static_cast<int>(inner.size());
    LinearLayout out;
    auto copy = [&](int i) {
        for (Vertex v : inner) out.push_back(4 + i * s + v);
    };
    copy(0);
    out.push_back(1);
    out.push_back(2);
    copy(1);
    out.push_back(0);
    out.push_back(3);
    copy(2);
    return out;
}

}  // namespace modkit
