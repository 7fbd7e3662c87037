#include "modkit/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace modkit {

// ---- VertexSet -------------------------------------------------------------

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(int universe, std::span<const Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    s.bits_.set();
    return s;
}

void VertexSet::insert(Vertex v) {
    if (v < 0 || v >= universe())
        throw ArgumentError("vertex " + std::to_string(v) + " outside universe of size " +
                            std::to_string(universe()));
    bits_.set(static_cast<std::size_t>(v));
}

void VertexSet::erase(Vertex v) {
    if (contains(v)) bits_.reset(static_cast<std::size_t>(v));
}

Vertex VertexSet::first() const {
    auto p = bits_.find_first();
    return p == Bits::npos ? npos : static_cast<Vertex>(p);
}

Vertex VertexSet::next(Vertex v) const {
    auto p = bits_.find_next(static_cast<std::size_t>(v));
    return p == Bits::npos ? npos : static_cast<Vertex>(p);
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (Vertex v : *this) out.push_back(v);
    return out;
}

VertexSet VertexSet::complement() const {
    VertexSet c = *this;
    c.bits_.flip();
    return c;
}

bool operator<(const VertexSet& a, const VertexSet& b) {
    auto ia = a.begin(), ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
        if (*ia != *ib) return *ia < *ib;
    }
    return ia == a.end() && ib != b.end();
}

// ---- Graph -----------------------------------------------------------------

Graph::Graph(int n) {
    if (n < 0) throw ArgumentError("negative vertex count");
    adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(int n, std::initializer_list<Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= order())
        throw ArgumentError("vertex " + std::to_string(v) + " out of range for graph on " +
                            std::to_string(order()) + " vertices");
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].insert(v);
    adj_[static_cast<std::size_t>(v)].insert(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    adj_[static_cast<std::size_t>(u)].erase(v);
    adj_[static_cast<std::size_t>(v)].erase(u);
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += static_cast<std::size_t>(row.count());
    return twice / 2;
}

VertexSet Graph::closed_neighbors(Vertex v) const {
    VertexSet s = neighbors(v);
    s.insert(v);
    return s;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<std::uint64_t> Graph::masks() const {
    if (order() > 64) throw ArgumentError("mask view needs at most 64 vertices");
    std::vector<std::uint64_t> out(adj_.size(), 0);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : neighbors(u)) out[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    return out;
}

// ---- graph6 ----------------------------------------------------------------

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    text = trim(text);
    std::size_t base = 0;
    if (text.starts_with(kGraph6Header)) {
        text.remove_prefix(kGraph6Header.size());
        base = kGraph6Header.size();
    }
    if (text.empty()) throw ParseError("graph6: missing size byte", base);
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw ParseError("graph6: character out of range", base + i);
    }
    if (text[0] == '~') throw ParseError("graph6: long size form (n > 62) is not supported", base);
    const int n = text[0] - 63;
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t expected = (bits + 5) / 6;
    if (text.size() - 1 != expected)
        throw ParseError("graph6: expected " + std::to_string(expected) + " payload bytes for n=" +
                             std::to_string(n) + ", found " + std::to_string(text.size() - 1),
                         base + std::min(text.size(), expected + 1));

    Graph g(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int byte = text[1 + k / 6] - 63;
            if ((byte >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(i, j);
        }
    }
    for (; k < expected * 6; ++k) {
        const int byte = text[1 + k / 6] - 63;
        if ((byte >> (5 - static_cast<int>(k % 6))) & 1)
            throw ParseError("graph6: nonzero padding bit", base + 1 + k / 6);
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw ArgumentError("graph6: only the short form (n <= 62) is supported");
    std::string out(1, static_cast<char>(63 + n));
    int acc = 0, filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

// ---- edge list -------------------------------------------------------------

Graph parse_edge_list(std::string_view text) {
    std::vector<long long> nums;
    std::vector<std::size_t> offsets;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        long long value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
        if (ec != std::errc() || ptr == text.data() + i)
            throw ParseError("edge list: expected an integer", i);
        offsets.push_back(i);
        nums.push_back(value);
        i = static_cast<std::size_t>(ptr - text.data());
    }
    if (nums.size() < 2) throw ParseError("edge list: missing \"n m\" header", 0);
    const long long n = nums[0], m = nums[1];
    if (n < 0 || m < 0) throw ParseError("edge list: negative header value", offsets[0]);
    if (nums.size() != 2 + 2 * static_cast<std::size_t>(m))
        throw ParseError("edge list: header announces " + std::to_string(m) + " edges but " +
                             std::to_string((nums.size() - 2) / 2) + " were given",
                         offsets.back());
    Graph g(static_cast<int>(n));
    for (std::size_t e = 0; e < static_cast<std::size_t>(m); ++e) {
        const long long u = nums[2 + 2 * e], v = nums[3 + 2 * e];
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edge list: endpoint out of range", offsets[2 + 2 * e]);
        if (u == v) throw ParseError("edge list: self-loop", offsets[2 + 2 * e]);
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return g;
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream os;
    const auto es = g.edges();
    os << g.order() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) os << u << ' ' << v << '\n';
    return os.str();
}

// ---- structure -------------------------------------------------------------

bool is_module(const Graph& g, const VertexSet& x) {
    if (x.empty()) throw ArgumentError("is_module: empty vertex set");
    for (Vertex v = 0; v < g.order(); ++v) {
        if (x.contains(v)) continue;
        const VertexSet& nv = g.neighbors(v);
        if (nv.intersects(x) && !x.subset_of(nv)) return false;
    }
    return true;
}

VertexSet module_closure(const Graph& g, const VertexSet& seed) {
    VertexSet m = seed;
    bool grown = true;
    while (grown) {
        grown = false;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (m.contains(v)) continue;
            const VertexSet& nv = g.neighbors(v);
            if (nv.intersects(m) && !m.subset_of(nv)) {
                m.insert(v);
                grown = true;
            }
        }
    }
    return m;
}

bool is_complete(const Graph& g, const VertexSet& x) {
    for (Vertex v : x) {
        VertexSet rest = x;
        rest.erase(v);
        if (!rest.subset_of(g.neighbors(v))) return false;
    }
    return true;
}

bool is_independent(const Graph& g, const VertexSet& x) {
    for (Vertex v : x)
        if (g.neighbors(v).intersects(x)) return false;
    return true;
}

namespace {

template <class Neighbours>
std::vector<VertexSet> components_by(const VertexSet& x, Neighbours&& nbrs) {
    std::vector<VertexSet> out;
    VertexSet left = x;
    while (!left.empty()) {
        VertexSet comp(x.universe());
        VertexSet frontier(x.universe());
        frontier.insert(left.first());
        while (!frontier.empty()) {
            comp |= frontier;
            left -= frontier;
            VertexSet grow(x.universe());
            for (Vertex v : frontier) grow |= nbrs(v);
            grow &= left;
            frontier = grow;
        }
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& x) {
    return components_by(x, [&](Vertex v) -> const VertexSet& { return g.neighbors(v); });
}

std::vector<VertexSet> connected_components(const Graph& g) {
    return connected_components(g, g.vertices());
}

std::vector<VertexSet> co_components(const Graph& g, const VertexSet& x) {
    return components_by(x, [&](Vertex v) { return g.closed_neighbors(v).complement(); });
}

bool is_connected(const Graph& g, const VertexSet& x) {
    return connected_components(g, x).size() <= 1;
}

std::pair<Vertex, Vertex> least_nonadjacent_pair(const Graph& g, const VertexSet& x) {
    for (Vertex u : x) {
        VertexSet later = x - g.closed_neighbors(u);
        for (Vertex v : later)
            if (v > u) return {u, v};
    }
    throw ArgumentError("vertex set is complete: no nonadjacent pair");
}

// ---- surgery ---------------------------------------------------------------

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    const int k = static_cast<int>(vertices.size());
    Graph h(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)]))
                h.add_edge(i, j);
    return h;
}

Graph induced_subgraph(const Graph& g, const VertexSet& x) {
    const auto vs = x.members();
    return induced_subgraph(g, std::span<const Vertex>(vs));
}

Graph complement(const Graph& g) {
    Graph c(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int na = a.order();
    Graph u(na + b.order());
    for (auto [x, y] : a.edges()) u.add_edge(x, y);
    for (auto [x, y] : b.edges()) u.add_edge(na + x, na + y);
    return u;
}

Graph join(const Graph& a, const Graph& b) {
    Graph u = disjoint_union(a, b);
    for (Vertex x = 0; x < a.order(); ++x)
        for (Vertex y = 0; y < b.order(); ++y) u.add_edge(x, a.order() + y);
    return u;
}

Graph replace_module(const Graph& g, const VertexSet& x, const Graph& h) {
    if (x.universe() != g.order()) throw ArgumentError("vertex set does not belong to this graph");
    if (x.empty() || !is_module(g, x)) throw ArgumentError("replace_module: set is not a module");
    const auto kept = (g.vertices() - x).members();
    const int nk = static_cast<int>(kept.size());
    Graph out = induced_subgraph(g, std::span<const Vertex>(kept));
    Graph grown(nk + h.order());
    for (auto [u, v] : out.edges()) grown.add_edge(u, v);
    for (auto [u, v] : h.edges()) grown.add_edge(nk + u, nk + v);
    // A module has a single outside neighbourhood; read it off any member.
    const VertexSet outside = g.neighbors(x.first()) - x;
    for (int i = 0; i < nk; ++i) {
        if (!outside.contains(kept[static_cast<std::size_t>(i)])) continue;
        for (Vertex y = 0; y < h.order(); ++y) grown.add_edge(i, nk + y);
    }
    return grown;
}

Graph contract_module(const Graph& g, const VertexSet& x) {
    return replace_module(g, x, Graph(1));
}

Graph substitution(const Graph& g, Vertex v, const Graph& h) {
    if (v < 0 || v >= g.order()) throw ArgumentError("substitution: vertex out of range");
    return replace_module(g, VertexSet(g.order(), {v}), h);
}

// ---- generators ------------------------------------------------------------

Graph complete(int n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    if (n > 0 && n < 3) throw ArgumentError("cycle needs at least 3 vertices");
    Graph g = path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph complete_bipartite(int n, int m) {
    if (n < 0 || m < 0) throw ArgumentError("negative part size");
    Graph g(n + m);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < m; ++v) g.add_edge(u, n + v);
    return g;
}

Graph c_copies_k2(int c) {
    if (c < 0) throw ArgumentError("negative copy count");
    Graph g(2 * c);
    for (Vertex i = 0; i < c; ++i) g.add_edge(2 * i, 2 * i + 1);
    return g;
}

Graph bipartite_claw() {
    return Graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}});
}

}  // namespace modkit
