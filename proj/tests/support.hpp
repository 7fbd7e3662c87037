#pragma once

#include <algorithm>
#include <vector>

#include "modkit/graph.hpp"

namespace modkit::testing {

inline bool extend(const Graph& a, const Graph& b, std::vector<Vertex>& map, std::vector<bool>& used, int v) {
    if (v == a.order()) return true;
    for (Vertex w = 0; w < b.order(); ++w) {
        if (used[static_cast<std::size_t>(w)] || a.degree(v) != b.degree(w)) continue;
        bool ok = true;
        for (Vertex u = 0; u < v && ok; ++u) ok = a.adjacent(u, v) == b.adjacent(map[static_cast<std::size_t>(u)], w);
        if (!ok) continue;
        map[static_cast<std::size_t>(v)] = w;
        used[static_cast<std::size_t>(w)] = true;
        if (extend(a, b, map, used, v + 1)) return true;
        used[static_cast<std::size_t>(w)] = false;
    }
    return false;
}

/// Backtracking isomorphism test for small graphs.
inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (Vertex v = 0; v < a.order(); ++v) da.push_back(a.degree(v)), db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<Vertex> map(static_cast<std::size_t>(a.order()));
    std::vector<bool> used(static_cast<std::size_t>(b.order()));
    return extend(a, b, map, used, 0);
}

inline std::vector<Vertex> identity_order(int n) {
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    return order;
}

}  // namespace modkit::testing
