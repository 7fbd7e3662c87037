#include "modkit/verification/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>

namespace modkit::oracle {

Graph decode_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.substr(0, 10) == ">>graph6<<") text.remove_prefix(10);
    std::vector<int> six;
    for (char c : text) {
        if (c < 63 || c > 126) throw ParseError("graph6 byte out of range");
        six.push_back(c - 63);
    }
    if (six.empty()) throw ParseError("empty graph6 string");
    std::size_t at = 0;
    int n = six[at++];
    if (n == 63) {
        if (six.size() < 4) throw ParseError("truncated graph6 header");
        n = (six[1] << 12) | (six[2] << 6) | six[3];
        at = 4;
    }
    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            const std::size_t byte = at + k / 6;
            if (byte >= six.size()) throw ParseError("truncated graph6 body");
            if ((six[byte] >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    if (at + (k + 5) / 6 != six.size()) throw ParseError("graph6 length mismatch");
    return g;
}

namespace {

using Mask = std::uint32_t;

bool module_mask(const Graph& g, Mask x) {
    const int n = g.order();
    for (int v = 0; v < n; ++v) {
        if (x >> v & 1) continue;
        bool some = false, all = true;
        for (int u = 0; u < n; ++u) {
            if (!(x >> u & 1)) continue;
            if (g.adjacent(u, v))
                some = true;
            else
                all = false;
        }
        if (some && !all) return false;
    }
    return true;
}

VertexSet to_set(int n, Mask m) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (m >> v & 1) s.insert(v);
    return s;
}

void collect(const MDNode& node, std::vector<VertexSet>& out) {
    out.push_back(node.vertices);
    for (const auto& c : node.children) collect(c, out);
}

bool colourable(const Graph& g, int k, std::vector<int>& colour, int v) {
    if (v == g.order()) return true;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (g.adjacent(u, v) && colour[static_cast<std::size_t>(u)] == c) ok = false;
        if (!ok) continue;
        colour[static_cast<std::size_t>(v)] = c;
        if (colourable(g, k, colour, v + 1)) return true;
    }
    return false;
}

int layout_width(const Graph& g, const std::vector<Vertex>& order, std::vector<int>& cache) {
    const int n = g.order();
    int width = 0;
    Mask prefix = 0;
    for (int i = 0; i + 1 < n; ++i) {
        prefix |= Mask{1} << order[static_cast<std::size_t>(i)];
        int& c = cache[prefix];
        if (c < 0) c = cut_mim(g, to_set(n, prefix));
        width = std::max(width, c);
    }
    return width;
}

template <class Pred>
int smallest_subset(int n, Pred ok) {
    int best = n;
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
        const int size = __builtin_popcount(m);
        if (size < best && ok(to_set(n, m))) best = size;
    }
    return best;
}

}  // namespace

std::vector<VertexSet> strong_modules(const Graph& g) {
    const int n = g.order();
    if (n > 10) throw GuardError("oracle::strong_modules: n > 10");
    std::vector<Mask> modules;
    for (Mask x = 1; x < (Mask{1} << n); ++x)
        if (module_mask(g, x)) modules.push_back(x);
    std::vector<VertexSet> out;
    for (Mask x : modules) {
        bool strong = true;
        for (Mask y : modules) {
            const Mask both = x & y;
            if (both != 0 && both != x && both != y) {
                strong = false;
                break;
            }
        }
        if (strong) out.push_back(to_set(n, x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> tree_node_sets(const MDTree& t) {
    std::vector<VertexSet> out;
    collect(t.root, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_interval(const Graph& g) {
    const int n = g.order();
    if (n > 8) throw GuardError("oracle::is_interval: n > 8");
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                for (int k = j + 1; k < n && ok; ++k) {
                    const Vertex u = order[static_cast<std::size_t>(i)], v = order[static_cast<std::size_t>(j)],
                                 w = order[static_cast<std::size_t>(k)];
                    if (g.adjacent(u, w) && !g.adjacent(u, v)) ok = false;
                }
        if (ok) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

Graph incompatibility_graph(const Graph& g, const std::vector<Vertex>& order) {
    const int n = g.order();
    Graph out(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const Vertex u = order[static_cast<std::size_t>(i)], v = order[static_cast<std::size_t>(j)],
                             w = order[static_cast<std::size_t>(k)];
                if (g.adjacent(u, w) && !g.adjacent(v, w) && !out.adjacent(u, v)) out.add_edge(u, v);
            }
    return out;
}

int chromatic_number(const Graph& g) {
    std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
    for (int k = 0;; ++k)
        if (colourable(g, k, colour, 0)) return k;
}

int thinness(const Graph& g) {
    const int n = g.order();
    if (n > 7) throw GuardError("oracle::thinness: n > 7");
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    int best = n;
    do {
        best = std::min(best, chromatic_number(incompatibility_graph(g, order)));
    } while (best > 1 && std::next_permutation(order.begin(), order.end()));
    return best;
}

int cut_mim(const Graph& g, const VertexSet& s) {
    std::vector<Edge> cut;
    for (auto [u, v] : g.edges()) {
        if (s.contains(u) && !s.contains(v)) cut.emplace_back(u, v);
        if (s.contains(v) && !s.contains(u)) cut.emplace_back(v, u);
    }
    if (cut.size() > 24) throw GuardError("oracle::cut_mim: too many cut edges");
    int best = 0;
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << cut.size()); ++m) {
        const int size = __builtin_popcount(m);
        if (size <= best) continue;
        bool ok = true;
        for (std::size_t i = 0; i < cut.size() && ok; ++i) {
            if (!(m >> i & 1)) continue;
            for (std::size_t j = i + 1; j < cut.size() && ok; ++j) {
                if (!(m >> j & 1)) continue;
                auto [a, b] = cut[i];
                auto [c, d] = cut[j];
                if (a == c || b == d || g.adjacent(a, d) || g.adjacent(c, b)) ok = false;
            }
        }
        if (ok) best = size;
    }
    return best;
}

int lmimw(const Graph& g) {
    const int n = g.order();
    if (n > 7) throw GuardError("oracle::lmimw: n > 7");
    std::vector<int> cache(std::size_t{1} << n, -1);
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    int best = n;
    do {
        best = std::min(best, layout_width(g, order, cache));
    } while (std::next_permutation(order.begin(), order.end()));
    return n == 0 ? 0 : best;
}

int twin_cover_number(const Graph& g) {
    const int n = g.order();
    if (n > 16) throw GuardError("oracle::twin_cover_number: n > 16");
    return smallest_subset(n, [&](const VertexSet& x) {
        for (auto [a, b] : g.edges())
            if (!x.contains(a) && !x.contains(b) && g.closed_neighbors(a) != g.closed_neighbors(b)) return false;
        return true;
    });
}

int vertex_cover_number(const Graph& g) {
    const int n = g.order();
    if (n > 16) throw GuardError("oracle::vertex_cover_number: n > 16");
    return smallest_subset(n, [&](const VertexSet& x) {
        for (auto [a, b] : g.edges())
            if (!x.contains(a) && !x.contains(b)) return false;
        return true;
    });
}

int neighborhood_diversity(const Graph& g) {
    const int n = g.order();
    std::vector<int> root(static_cast<std::size_t>(n));
    std::iota(root.begin(), root.end(), 0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool same = true;
            for (int w = 0; w < n && same; ++w)
                if (w != u && w != v && g.adjacent(u, w) != g.adjacent(v, w)) same = false;
            if (same) root[static_cast<std::size_t>(v)] = std::min(root[static_cast<std::size_t>(v)], root[static_cast<std::size_t>(u)]);
        }
    int types = 0;
    for (int v = 0; v < n; ++v) types += root[static_cast<std::size_t>(v)] == v;
    return types;
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
    if (const char* s = std::getenv("MODKIT_SEED"); s != nullptr && *s != '\0') {
        char* end = nullptr;
        const auto v = std::strtoull(s, &end, 10);
        if (end != nullptr && *end == '\0') return v;
    }
    return fallback;
}

Graph random_graph(Rng& rng, int n, int num, int den) {
    std::uniform_int_distribution<int> coin(0, den - 1);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < num) g.add_edge(u, v);
    return g;
}

Graph random_connected_graph(Rng& rng, int n, int num, int den) {
    for (;;) {
        Graph g = random_graph(rng, n, num, den);
        if (n == 0 || is_connected(g, g.vertices())) return g;
    }
}

Graph random_interval_graph(Rng& rng, int n) {
    std::uniform_int_distribution<int> coord(0, 2 * n);
    std::vector<std::pair<int, int>> iv;
    for (int v = 0; v < n; ++v) {
        int a = coord(rng), b = coord(rng);
        iv.emplace_back(std::min(a, b), std::max(a, b));
    }
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (iv[static_cast<std::size_t>(u)].first <= iv[static_cast<std::size_t>(v)].second &&
                iv[static_cast<std::size_t>(v)].first <= iv[static_cast<std::size_t>(u)].second)
                g.add_edge(u, v);
    return g;
}

Planted planted_interval_module(Rng& rng, int host_size, int module_size) {
    const Graph host = random_graph(rng, host_size);
    const Graph h = random_interval_graph(rng, module_size);
    std::uniform_int_distribution<int> pick(0, host_size - 1);
    Planted out;
    out.graph = substitution(host, pick(rng), h);
    out.module = VertexSet(out.graph.order());
    for (int i = 0; i < module_size; ++i) out.module.insert(host_size - 1 + i);
    return out;
}

}  // namespace modkit::oracle
