#pragma once

#include <string>
#include <vector>

#include "modkit/graph.hpp"

namespace modkit {

enum class NodeKind { Leaf, Parallel, Series, Prime };

const char* to_string(NodeKind kind);
NodeKind node_kind_from_string(const std::string& name);

struct MDNode {
    NodeKind kind = NodeKind::Leaf;
    VertexSet vertices;
    /// True iff the node induces a complete graph.
    bool complete = true;
    /// Sorted by minimum contained vertex.
    std::vector<MDNode> children;

    Vertex min_vertex() const { return vertices.first(); }
};

/// Modular decomposition tree; the root covers V(G).
struct MDTree {
    MDNode root;
};

/// Builds the modular decomposition tree of g (n >= 1).
///
/// Disconnected graphs get a Parallel root over their components and
/// co-disconnected graphs a Series root over their co-components. For a
/// graph that is both connected and co-connected the maximal strong modules
/// partition V; two vertices share one exactly when the smallest module
/// containing both of them is proper.
MDTree modular_decomposition(const Graph& g);

struct Verdict {
    bool ok = true;
    std::string diagnostic;

    explicit operator bool() const { return ok; }
    static Verdict pass() { return {}; }
    static Verdict fail(std::string why) { return {false, std::move(why)}; }
};

/// Independent checker: leaf bijection, disjoint-union children, module-hood
/// of every node, kind tags, children maximality and the complete flags.
Verdict validate_md_tree(const Graph& g, const MDTree& t);

/// Maximum number of children of a Prime node, or 2 when there is none.
int modular_width(const MDTree& t);

}  // namespace modkit
