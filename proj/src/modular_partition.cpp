#include "modkit/modular_partition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

namespace modkit {

const char* to_string(GraphClass c) {
    return c == GraphClass::Cluster ? "cluster" : "interval";
}

GraphClass graph_class_from_string(const std::string& name) {
    if (name == "cluster") return GraphClass::Cluster;
    if (name == "interval") return GraphClass::Interval;
    throw ParseError("unknown graph class \"" + name + "\"");
}

bool is_cluster(const Graph& g) {
    for (const auto& comp : connected_components(g))
        if (!is_complete(g, comp)) return false;
    return true;
}

namespace {

// Lex-BFS visiting order, starting from vertex 0.
std::vector<Vertex> lex_bfs(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> label(static_cast<std::size_t>(n));
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (done[static_cast<std::size_t>(v)]) continue;
            if (best < 0 || label[static_cast<std::size_t>(v)] > label[static_cast<std::size_t>(best)]) best = v;
        }
        done[static_cast<std::size_t>(best)] = true;
        order.push_back(best);
        for (Vertex w : g.neighbors(best))
            if (!done[static_cast<std::size_t>(w)]) label[static_cast<std::size_t>(w)].push_back(n - step);
    }
    return order;
}

// The reverse of a Lex-BFS order is a perfect elimination order iff g is chordal.
bool is_chordal(const Graph& g) {
    const int n = g.order();
    const auto order = lex_bfs(g);
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    for (Vertex v : order) {
        VertexSet earlier(n);
        Vertex parent = -1;
        for (Vertex w : g.neighbors(v)) {
            if (pos[static_cast<std::size_t>(w)] >= pos[static_cast<std::size_t>(v)]) continue;
            earlier.insert(w);
            if (parent < 0 || pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(parent)]) parent = w;
        }
        if (parent < 0) continue;
        earlier.erase(parent);
        if (!earlier.subset_of(g.neighbors(parent))) return false;
    }
    return true;
}

bool has_asteroidal_triple(const Graph& g) {
    const int n = g.order();
    // comp[c][v]: component of v in g - N[c], or -1 when v is in N[c].
    std::vector<std::vector<int>> comp(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (Vertex c = 0; c < n; ++c) {
        const auto parts = connected_components(g, g.closed_neighbors(c).complement());
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (Vertex v : parts[i]) comp[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    auto same = [&](Vertex c, Vertex a, Vertex b) {
        const auto& row = comp[static_cast<std::size_t>(c)];
        return row[static_cast<std::size_t>(a)] >= 0 && row[static_cast<std::size_t>(a)] == row[static_cast<std::size_t>(b)];
    };
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            if (g.adjacent(a, b)) continue;
            for (Vertex c = b + 1; c < n; ++c) {
                if (g.adjacent(a, c) || g.adjacent(b, c)) continue;
                if (same(c, a, b) && same(a, b, c) && same(b, a, c)) return true;
            }
        }
    return false;
}

std::vector<VertexSet> by_minimum(std::vector<VertexSet> parts) {
    std::sort(parts.begin(), parts.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
    return parts;
}

void append(std::vector<VertexSet>& out, std::vector<VertexSet> more) {
    for (auto& p : more) out.push_back(std::move(p));
}

std::vector<VertexSet> cluster_parts(const MDNode& node) {
    if (node.kind == NodeKind::Leaf) return {node.vertices};
    std::vector<VertexSet> out;
    if (node.kind == NodeKind::Prime) {
        for (const auto& c : node.children) append(out, cluster_parts(c));
        return out;
    }
    VertexSet merged(node.vertices.universe());
    for (const auto& c : node.children) {
        if (c.complete)
            merged |= c.vertices;
        else
            append(out, cluster_parts(c));
    }
    if (!merged.empty()) out.push_back(std::move(merged));
    return out;
}

std::vector<VertexSet> interval_parts(const Graph& g, const MDNode& node) {
    if (node.kind == NodeKind::Leaf) return {node.vertices};
    std::vector<std::vector<VertexSet>> child_parts;
    child_parts.reserve(node.children.size());
    for (const auto& c : node.children) child_parts.push_back(interval_parts(g, c));
    auto child_is_interval = [&](std::size_t i) { return child_parts[i].size() == 1; };

    std::vector<VertexSet> out;
    VertexSet merged(node.vertices.universe());
    switch (node.kind) {
        case NodeKind::Parallel:
            for (std::size_t i = 0; i < node.children.size(); ++i) {
                if (child_is_interval(i))
                    merged |= node.children[i].vertices;
                else
                    append(out, std::move(child_parts[i]));
            }
            break;
        case NodeKind::Series: {
            bool took_interval = false;
            for (std::size_t i = 0; i < node.children.size(); ++i) {
                const auto& c = node.children[i];
                if (c.complete) {
                    merged |= c.vertices;
                } else if (!took_interval && child_is_interval(i)) {
                    // Children are ordered by minimum vertex, so this is the
                    // non-complete interval child with the smallest minimum.
                    merged |= c.vertices;
                    took_interval = true;
                } else {
                    append(out, std::move(child_parts[i]));
                }
            }
            break;
        }
        case NodeKind::Prime: {
            bool all_interval = true;
            for (std::size_t i = 0; i < node.children.size(); ++i) all_interval = all_interval && child_is_interval(i);
            if (all_interval) {
                VertexSet kept(g.order());
                for (const auto& c : node.children) {
                    if (c.complete) {
                        kept.insert(c.min_vertex());
                    } else {
                        auto [a, b] = least_nonadjacent_pair(g, c.vertices);
                        kept.insert(a);
                        kept.insert(b);
                    }
                }
                if (is_interval(induced_subgraph(g, kept))) return {node.vertices};
            }
            for (auto& p : child_parts) append(out, std::move(p));
            break;
        }
        case NodeKind::Leaf: break;
    }
    if (!merged.empty()) out.push_back(std::move(merged));
    return out;
}

}  // namespace

bool is_interval(const Graph& g) {
    return is_chordal(g) && !has_asteroidal_triple(g);
}

bool belongs_to(const Graph& g, GraphClass c) {
    return c == GraphClass::Cluster ? is_cluster(g) : is_interval(g);
}

ModularPartition cluster_mc(const Graph& /*g*/, const MDTree& tree) {
    return {by_minimum(cluster_parts(tree.root)), GraphClass::Cluster};
}

ModularPartition cluster_mc(const Graph& g) {
    return cluster_mc(g, modular_decomposition(g));
}

ModularPartition interval_mc(const Graph& g, const MDTree& tree) {
    return {by_minimum(interval_parts(g, tree.root)), GraphClass::Interval};
}

ModularPartition interval_mc(const Graph& g) {
    return interval_mc(g, modular_decomposition(g));
}

BruteForceResult brute_gmc(const Graph& g, const ClassPredicate& predicate, bool force) {
    const int n = g.order();
    if (n > 10 && !force) throw GuardError("brute_gmc: n = " + std::to_string(n) + " exceeds the guard of 10");
    if (n > 16) throw GuardError("brute_gmc: n = " + std::to_string(n) + " exceeds the hard cap of 16");
    if (n == 0) return {};

    const auto adj = g.masks();
    const std::uint32_t all = (std::uint32_t{1} << n) - 1;
    std::vector<bool> valid(std::size_t{1} << n, false);
    for (std::uint32_t s = 1; s <= all; ++s) {
        bool module = true;
        for (int v = 0; v < n && module; ++v) {
            if (s >> v & 1) continue;
            const std::uint64_t seen = adj[static_cast<std::size_t>(v)] & s;
            module = seen == 0 || seen == s;
        }
        if (!module) continue;
        std::vector<Vertex> members;
        for (int v = 0; v < n; ++v)
            if (s >> v & 1) members.push_back(v);
        valid[s] = predicate(induced_subgraph(g, std::span<const Vertex>(members)));
    }

    constexpr int inf = std::numeric_limits<int>::max() / 2;
    std::vector<int> best(std::size_t{1} << n, inf);
    best[0] = 0;
    for (std::uint32_t s = 1; s <= all; ++s) {
        const std::uint32_t low = s & (~s + 1);
        const std::uint32_t rest = s ^ low;
        // Enumerate parts that contain the lowest vertex of s.
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            const std::uint32_t part = sub | low;
            if (valid[part] && best[s ^ part] + 1 < best[s]) best[s] = best[s ^ part] + 1;
            if (sub == 0) break;
        }
    }

    BruteForceResult result;
    result.k = best[all];
    std::uint32_t s = all;
    while (s != 0) {
        const std::uint32_t low = s & (~s + 1);
        const std::uint32_t rest = s ^ low;
        VertexSet chosen;
        bool have = false;
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            const std::uint32_t part = sub | low;
            if (valid[part] && best[s ^ part] + 1 == best[s]) {
                VertexSet cand(n);
                for (int v = 0; v < n; ++v)
                    if (part >> v & 1) cand.insert(v);
                if (!have || cand < chosen) {
                    chosen = cand;
                    have = true;
                }
            }
            if (sub == 0) break;
        }
        std::uint32_t mask = 0;
        for (Vertex v : chosen) mask |= std::uint32_t{1} << v;
        s ^= mask;
        result.parts.push_back(std::move(chosen));
    }
    return result;
}

Verdict validate_gmodular_partition(const Graph& g, const ModularPartition& p) {
    VertexSet covered(g.order());
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        const auto& part = p.parts[i];
        const std::string tag = "part " + std::to_string(i);
        if (part.universe() != g.order()) return Verdict::fail(tag + ": universe mismatch");
        if (part.empty()) return Verdict::fail(tag + ": empty part");
        if (part.intersects(covered)) return Verdict::fail(tag + ": overlaps an earlier part");
        covered |= part;
        if (!is_module(g, part)) return Verdict::fail(tag + ": not a module");
        if (!belongs_to(induced_subgraph(g, part), p.graph_class))
            return Verdict::fail(tag + ": does not induce a " + std::string(to_string(p.graph_class)) + " graph");
    }
    if (covered != g.vertices()) return Verdict::fail("parts do not cover V(G)");
    return Verdict::pass();
}

}  // namespace modkit
