#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modkit/error.hpp"

namespace modkit {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Subset of the vertex range 0..universe-1 of some host graph.
class VertexSet {
public:
    using Bits = boost::dynamic_bitset<std::uint64_t>;
    static constexpr Vertex npos = -1;

    class iterator {
    public:
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(const Bits* bits, Bits::size_type pos) : bits_(bits), pos_(pos) {}

        Vertex operator*() const { return static_cast<Vertex>(pos_); }
        iterator& operator++() {
            pos_ = bits_->find_next(pos_);
            return *this;
        }
        iterator operator++(int) {
            auto old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator& o) const { return pos_ == o.pos_; }

    private:
        const Bits* bits_ = nullptr;
        Bits::size_type pos_ = Bits::npos;
    };

    VertexSet() = default;
    explicit VertexSet(int universe) : bits_(static_cast<std::size_t>(universe)) {}
    VertexSet(int universe, std::initializer_list<Vertex> members);
    VertexSet(int universe, std::span<const Vertex> members);

    static VertexSet full(int universe);

    int universe() const { return static_cast<int>(bits_.size()); }
    int count() const { return static_cast<int>(bits_.count()); }
    bool empty() const { return bits_.none(); }
    bool contains(Vertex v) const { return v >= 0 && v < universe() && bits_.test(static_cast<std::size_t>(v)); }

    void insert(Vertex v);
    void erase(Vertex v);

    /// Smallest member, or npos when empty.
    Vertex first() const;
    Vertex next(Vertex v) const;

    iterator begin() const { return {&bits_, bits_.find_first()}; }
    iterator end() const { return {&bits_, Bits::npos}; }

    std::vector<Vertex> members() const;

    bool subset_of(const VertexSet& o) const { return bits_.is_subset_of(o.bits_); }
    bool intersects(const VertexSet& o) const { return bits_.intersects(o.bits_); }

    VertexSet& operator&=(const VertexSet& o) {
        bits_ &= o.bits_;
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        bits_ |= o.bits_;
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        bits_ -= o.bits_;
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    VertexSet complement() const;

    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }

    /// Orders sets by their sorted member lists; used for deterministic output.
    friend bool operator<(const VertexSet& a, const VertexSet& b);

    const Bits& bits() const { return bits_; }

private:
    Bits bits_;
};

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges);

    int order() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const;

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    bool adjacent(Vertex u, Vertex v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
    const VertexSet& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return neighbors(v).count(); }
    VertexSet closed_neighbors(Vertex v) const;
    VertexSet vertices() const { return VertexSet::full(order()); }

    /// Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    /// Adjacency rows as 64-bit masks; requires order() <= 64.
    std::vector<std::uint64_t> masks() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    void check_vertex(Vertex v) const;

    std::vector<VertexSet> adj_;
};

// ---- I/O -------------------------------------------------------------------

Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// Edge-list text: first line "n m", then m lines "u v" (0-based).
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

// ---- structure -------------------------------------------------------------

/// A nonempty set x is a module iff every vertex outside x sees all or none of x.
bool is_module(const Graph& g, const VertexSet& x);

/// Smallest module containing `seed` (closure under splitters).
VertexSet module_closure(const Graph& g, const VertexSet& seed);

bool is_complete(const Graph& g, const VertexSet& x);
bool is_independent(const Graph& g, const VertexSet& x);
bool is_connected(const Graph& g, const VertexSet& x);

/// Connected components of g[x], each sorted by its minimum vertex.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& x);
std::vector<VertexSet> connected_components(const Graph& g);
/// Connected components of the complement of g[x].
std::vector<VertexSet> co_components(const Graph& g, const VertexSet& x);

/// Lexicographically least pair u < v in x with uv not an edge.
std::pair<Vertex, Vertex> least_nonadjacent_pair(const Graph& g, const VertexSet& x);

// ---- surgery ---------------------------------------------------------------
// Operations that delete vertices keep the surviving vertices in their
// original relative order (compacted to 0..k-1) and append new vertices.

Graph induced_subgraph(const Graph& g, const VertexSet& x);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);

/// G|X: x removed, one new (last) vertex adjacent to the former neighbours of x.
Graph contract_module(const Graph& g, const VertexSet& x);
/// Module x replaced by a copy of h appended after the surviving host vertices.
Graph replace_module(const Graph& g, const VertexSet& x, const Graph& h);
/// Vertex v substituted by h.
Graph substitution(const Graph& g, Vertex v, const Graph& h);

// ---- generators ------------------------------------------------------------

Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph complete_bipartite(int n, int m);
Graph c_copies_k2(int c);
/// Claw K_{1,3} with each edge subdivided: centre 0, middles 1..3, leaves 4..6.
Graph bipartite_claw();

}  // namespace modkit
