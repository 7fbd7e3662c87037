#include "modkit/md_tree.hpp"

#include <algorithm>

namespace modkit {

const char* to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::Leaf: return "Leaf";
        case NodeKind::Parallel: return "Parallel";
        case NodeKind::Series: return "Series";
        case NodeKind::Prime: return "Prime";
    }
    return "?";
}

NodeKind node_kind_from_string(const std::string& name) {
    if (name == "Leaf") return NodeKind::Leaf;
    if (name == "Parallel") return NodeKind::Parallel;
    if (name == "Series") return NodeKind::Series;
    if (name == "Prime") return NodeKind::Prime;
    throw ParseError("unknown node kind \"" + name + "\"");
}

namespace {

// Smallest module of g[scope] containing seed.
VertexSet closure_within(const Graph& g, const VertexSet& scope, VertexSet m) {
    bool grown = true;
    while (grown) {
        grown = false;
        for (Vertex v : scope - m) {
            const VertexSet& nv = g.neighbors(v);
            if (nv.intersects(m) && !m.subset_of(nv)) {
                m.insert(v);
                grown = true;
            }
        }
    }
    return m;
}

std::vector<VertexSet> maximal_strong_modules(const Graph& g, const VertexSet& scope) {
    std::vector<VertexSet> parts;
    VertexSet unassigned = scope;
    while (!unassigned.empty()) {
        const Vertex u = unassigned.first();
        VertexSet part(g.order());
        part.insert(u);
        for (Vertex w : unassigned) {
            if (part.contains(w)) continue;
            VertexSet pair(g.order(), {u, w});
            VertexSet m = closure_within(g, scope, pair);
            if (m != scope) part |= m;
        }
        unassigned -= part;
        parts.push_back(std::move(part));
    }
    return parts;
}

MDNode build(const Graph& g, const VertexSet& scope) {
    MDNode node;
    node.vertices = scope;
    if (scope.count() == 1) {
        node.kind = NodeKind::Leaf;
        node.complete = true;
        return node;
    }
    std::vector<VertexSet> parts = connected_components(g, scope);
    if (parts.size() > 1) {
        node.kind = NodeKind::Parallel;
    } else {
        parts = co_components(g, scope);
        node.kind = parts.size() > 1 ? NodeKind::Series : NodeKind::Prime;
        if (node.kind == NodeKind::Prime) parts = maximal_strong_modules(g, scope);
    }
    std::sort(parts.begin(), parts.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
    node.children.reserve(parts.size());
    for (const auto& p : parts) node.children.push_back(build(g, p));
    node.complete = node.kind == NodeKind::Series &&
                    std::all_of(node.children.begin(), node.children.end(),
                                [](const MDNode& c) { return c.complete; });
    return node;
}

std::vector<VertexSet> sorted_sets(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end());
    return sets;
}

Verdict check_node(const Graph& g, const MDNode& node, const std::string& where) {
    const std::string here = where + "/" + to_string(node.kind);
    if (node.vertices.universe() != g.order()) return Verdict::fail(here + ": vertex set universe mismatch");
    if (node.vertices.empty()) return Verdict::fail(here + ": empty node");
    if (!is_module(g, node.vertices)) return Verdict::fail(here + ": vertex set is not a module");
    if (node.complete != is_complete(g, node.vertices))
        return Verdict::fail(here + ": complete flag is wrong");

    if (node.kind == NodeKind::Leaf) {
        if (node.vertices.count() != 1 || !node.children.empty())
            return Verdict::fail(here + ": leaf must hold exactly one vertex and no children");
        return Verdict::pass();
    }
    if (node.children.size() < 2) return Verdict::fail(here + ": internal node with fewer than two children");

    VertexSet covered(g.order());
    std::vector<VertexSet> child_sets;
    Vertex last_min = -1;
    for (const auto& c : node.children) {
        if (c.vertices.universe() != g.order()) return Verdict::fail(here + ": child universe mismatch");
        if (c.vertices.intersects(covered)) return Verdict::fail(here + ": children overlap");
        if (c.vertices.first() <= last_min) return Verdict::fail(here + ": children not sorted by minimum vertex");
        last_min = c.vertices.first();
        covered |= c.vertices;
        child_sets.push_back(c.vertices);
    }
    if (covered != node.vertices) return Verdict::fail(here + ": children do not cover the node");

    switch (node.kind) {
        case NodeKind::Parallel:
            if (sorted_sets(connected_components(g, node.vertices)) != sorted_sets(child_sets))
                return Verdict::fail(here + ": children are not the connected components");
            break;
        case NodeKind::Series:
            if (sorted_sets(co_components(g, node.vertices)) != sorted_sets(child_sets))
                return Verdict::fail(here + ": children are not the co-components");
            break;
        case NodeKind::Prime: {
            if (!is_connected(g, node.vertices) || co_components(g, node.vertices).size() != 1)
                return Verdict::fail(here + ": prime node must be connected and co-connected");
            if (node.children.size() < 4) return Verdict::fail(here + ": prime node with fewer than 4 children");
            // The quotient is prime iff no two children lie in a proper module.
            for (std::size_t i = 0; i < child_sets.size(); ++i)
                for (std::size_t j = i + 1; j < child_sets.size(); ++j)
                    if (closure_within(g, node.vertices, child_sets[i] | child_sets[j]) != node.vertices)
                        return Verdict::fail(here + ": children " + std::to_string(i) + " and " +
                                             std::to_string(j) + " lie in a proper module");
            break;
        }
        case NodeKind::Leaf: break;
    }
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        Verdict v = check_node(g, node.children[i], here + "[" + std::to_string(i) + "]");
        if (!v) return v;
    }
    return Verdict::pass();
}

int widest_prime(const MDNode& node) {
    int w = node.kind == NodeKind::Prime ? static_cast<int>(node.children.size()) : 0;
    for (const auto& c : node.children) w = std::max(w, widest_prime(c));
    return w;
}

}  // namespace

MDTree modular_decomposition(const Graph& g) {
    if (g.order() == 0) throw ArgumentError("modular_decomposition: empty graph");
    return MDTree{build(g, g.vertices())};
}

Verdict validate_md_tree(const Graph& g, const MDTree& t) {
    if (g.order() == 0) return Verdict::fail("empty graph");
    if (t.root.vertices != g.vertices()) return Verdict::fail("root does not cover V(G)");
    return check_node(g, t.root, "");
}

int modular_width(const MDTree& t) {
    return std::max(2, widest_prime(t.root));
}

}  // namespace modkit
