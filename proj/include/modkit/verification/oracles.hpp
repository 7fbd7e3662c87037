#pragma once

#include <random>
#include <string_view>
#include <vector>

#include "modkit/graph.hpp"
#include "modkit/md_tree.hpp"

// Slow reference implementations used to cross-check the library. None of
// them calls the routine it is meant to check.
namespace modkit::oracle {

/// graph6 decoder written directly from the format description.
Graph decode_graph6(std::string_view text);

/// Every strong module of g (modules overlapping no other module), n <= 10.
std::vector<VertexSet> strong_modules(const Graph& g);

/// Vertex sets of all nodes of a tree, sorted.
std::vector<VertexSet> tree_node_sets(const MDTree& t);

/// Some order has u < v < w, uw in E implies uv in E. n <= 8.
bool is_interval(const Graph& g);

/// Triple-by-triple incompatibility graph for a fixed order.
Graph incompatibility_graph(const Graph& g, const std::vector<Vertex>& order);

/// Smallest k admitting a proper k-colouring, by plain backtracking.
int chromatic_number(const Graph& g);

/// Thinness as the minimum over all orders of chi(G_<). n <= 7.
int thinness(const Graph& g);

/// Induced matching across a cut by trying every set of cut edges.
int cut_mim(const Graph& g, const VertexSet& s);

/// Linear mim-width as the minimum over all layouts. n <= 7.
int lmimw(const Graph& g);

/// Sizes of the smallest twin-cover and vertex cover, by subset enumeration.
int twin_cover_number(const Graph& g);
int vertex_cover_number(const Graph& g);

/// Number of neighbourhood types by pairwise comparison.
int neighborhood_diversity(const Graph& g);

// ---- random instances ------------------------------------------------------

using Rng = std::mt19937_64;

/// Seed from MODKIT_SEED, or `fallback` when unset.
std::uint64_t seed_from_env(std::uint64_t fallback);

/// G(n, p) with p = num / den.
Graph random_graph(Rng& rng, int n, int num = 1, int den = 2);

Graph random_connected_graph(Rng& rng, int n, int num = 1, int den = 2);

/// Intersection graph of n random intervals.
Graph random_interval_graph(Rng& rng, int n);

struct Planted {
    Graph graph;
    VertexSet module;
};

/// A random interval graph on `module_size` vertices substituted for one
/// vertex of a random host on `host_size` vertices.
Planted planted_interval_module(Rng& rng, int host_size, int module_size);

}  // namespace modkit::oracle
