#pragma once

#include <span>
#include <vector>

#include "modkit/graph.hpp"
#include "modkit/md_tree.hpp"
#include "modkit/modular_partition.hpp"

namespace modkit {

using Partition = std::vector<VertexSet>;

/// Vertex order plus class partition: the witness for k-thinness.
/// order[i] is the i-th smallest vertex.
struct ConsistentSolution {
    std::vector<Vertex> order;
    Partition classes;
};

/// Edge uv (u before v) iff some w after v has uw in E(G) and vw not in E(G).
Graph incompatibility_graph(const Graph& g, std::span<const Vertex> order);

/// Checks every triple u < v < w directly.
bool is_consistent(const Graph& g, const ConsistentSolution& sol);

/// Exact chromatic number by DSATUR branch and bound (n <= 16 unless forced).
int chromatic_number(const Graph& g, bool force = false);
/// Colour per vertex (0-based) of an optimal colouring.
std::vector<int> optimal_coloring(const Graph& g, bool force = false);

struct ThinnessResult {
    int thinness = 0;
    ConsistentSolution witness;
};

/// Exact thinness: the least k for which some order admits a k-class
/// consistent partition. Searches orders back to front; once a vertex is
/// placed, its incompatibilities with every later vertex are final, so a
/// class is summarised by the union of its members' later non-neighbours.
/// Refuses n > 9 unless `force`.
ThinnessResult thinness_exact(const Graph& g, bool force = false);

/// Lemma-style module reduction: a complete interval module is contracted to
/// a single vertex; otherwise only its least nonadjacent pair survives.
Graph reduce_interval_module(const Graph& g, const VertexSet& h);

struct Kernel {
    Graph graph;
    /// Host vertex behind each kernel vertex.
    std::vector<Vertex> origin;
    ModularPartition partition;
};

/// Kernel of size at most 2 * interval_mc(g) with the same thinness.
Kernel thinness_kernel(const Graph& g);

struct NeighborhoodDiversity {
    int nd = 0;
    Partition types;
};

/// Coarsest partition into neighbourhood types (u ~ v iff N(u)-v = N(v)-u).
NeighborhoodDiversity neighborhood_diversity(const Graph& g);

/// True twins: N[a] = N[b].
bool are_twins(const Graph& g, Vertex a, Vertex b);
bool is_twin_cover(const Graph& g, const VertexSet& x);
bool is_vertex_cover(const Graph& g, const VertexSet& x);

/// Minimum twin-cover, by subsets of increasing size (n <= 16 unless forced).
VertexSet twin_cover_exact(const Graph& g, bool force = false);
/// Minimum vertex cover by branching on a maximum-degree vertex (n <= 20 unless forced).
VertexSet vertex_cover_exact(const Graph& g, bool force = false);

/// Is there a clique of `size` vertices in G_< whose members each have a
/// later non-neighbour in g?
bool irreducible_clique_exists(const Graph& g, std::span<const Vertex> order, int size);

}  // namespace modkit
