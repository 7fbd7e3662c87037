#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "modkit/graph.hpp"
#include "modkit/md_tree.hpp"

namespace modkit {

enum class GraphClass { Cluster, Interval };

const char* to_string(GraphClass c);
GraphClass graph_class_from_string(const std::string& name);

/// Partition of V(G) into modules, each inducing a member of `graph_class`.
/// Parts are kept sorted by their minimum vertex.
struct ModularPartition {
    std::vector<VertexSet> parts;
    GraphClass graph_class = GraphClass::Cluster;

    int size() const { return static_cast<int>(parts.size()); }
};

/// Every connected component induces a complete graph.
bool is_cluster(const Graph& g);

/// Interval recognition: g is chordal (checked on a Lex-BFS order) and has
/// no asteroidal triple.
bool is_interval(const Graph& g);

bool belongs_to(const Graph& g, GraphClass c);

/// Optimal cluster-modular partition, assembled bottom-up on the modular
/// decomposition tree.
ModularPartition cluster_mc(const Graph& g);
ModularPartition cluster_mc(const Graph& g, const MDTree& tree);

/// Optimal interval-modular partition, assembled bottom-up on the modular
/// decomposition tree. Prime nodes are tested for intervality on the reduced
/// graph that keeps one vertex per complete child and two nonadjacent
/// vertices per other child.
ModularPartition interval_mc(const Graph& g);
ModularPartition interval_mc(const Graph& g, const MDTree& tree);

using ClassPredicate = std::function<bool(const Graph&)>;

struct BruteForceResult {
    int k = 0;
    /// Lexicographically least optimal partition (parts sorted by minimum).
    std::vector<VertexSet> parts;
};

/// Exhaustive G-modular cardinality: minimum number of parts over all set
/// partitions whose parts are modules inducing predicate members.
/// Refuses n > 10 unless `force` (hard cap 16).
BruteForceResult brute_gmc(const Graph& g, const ClassPredicate& predicate, bool force = false);

Verdict validate_gmodular_partition(const Graph& g, const ModularPartition& p);

}  // namespace modkit
