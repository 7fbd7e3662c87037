#pragma once

#include <span>
#include <vector>

#include "modkit/graph.hpp"

namespace modkit {

/// Permutation of V(G); layout[i] is the i-th vertex.
using LinearLayout = std::vector<Vertex>;

/// Maximum induced matching of the bipartite graph of edges between s and V - s.
int cut_mim(const Graph& g, const VertexSet& s);

/// Largest cut_mim over the prefixes of the layout.
int layout_mimw(const Graph& g, std::span<const Vertex> layout);

struct LayoutResult {
    int width = 0;
    LinearLayout layout;
};

/// Exact linear mim-width by a bottleneck shortest path over the subset
/// lattice. Refuses n > 16 unless `force` (hard cap 24).
LayoutResult lmimw_exact(const Graph& g, bool force = false);

/// H_0 = K_1; H_{n+1} substitutes a copy of H_n for each leaf of the
/// bipartite claw. Vertices 0..3 are the centre and middles of the outer
/// claw, followed by the three copies in leaf order. n <= 4.
Graph hn_graph(int n);

/// Layout of H_n of width n: copy 1, the middle and the centre next to it,
/// copy 2, the remaining middles, copy 3. n <= 4.
LinearLayout hn_canonical_layout(int n);

}  // namespace modkit
