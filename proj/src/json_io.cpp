#include "modkit/json_io.hpp"

#include <algorithm>

namespace modkit {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw ParseError(std::string("expected an object holding \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return j.get<int>();
}

const Json& as_array(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    return j;
}

Vertex as_vertex(const Json& j, int n) {
    const int v = as_int(j, "vertex");
    if (v < 0 || v >= n) throw ParseError("vertex " + std::to_string(v) + " out of range");
    return v;
}

Json node_to_json(const MDNode& node) {
    Json children = Json::array();
    for (const auto& c : node.children) children.push_back(node_to_json(c));
    return {{"kind", to_string(node.kind)},
            {"vertices", vertex_list(node.vertices)},
            {"complete", node.complete},
            {"children", std::move(children)}};
}

MDNode node_from_json(const Json& j, int n) {
    MDNode node;
    const Json& kind = field(j, "kind");
    if (!kind.is_string()) throw ParseError("node kind must be a string");
    node.kind = node_kind_from_string(kind.get<std::string>());
    node.vertices = vertex_set_from_json(field(j, "vertices"), n);
    const Json& complete = field(j, "complete");
    if (!complete.is_boolean()) throw ParseError("complete must be a boolean");
    node.complete = complete.get<bool>();
    for (const auto& c : as_array(field(j, "children"), "children")) node.children.push_back(node_from_json(c, n));
    return node;
}

}  // namespace

Json vertex_list(const VertexSet& s) {
    return s.members();
}

VertexSet vertex_set_from_json(const Json& j, int n) {
    VertexSet s(n);
    for (const auto& v : as_array(j, "vertex list")) {
        const Vertex x = as_vertex(v, n);
        if (s.contains(x)) throw ParseError("vertex " + std::to_string(x) + " listed twice");
        s.insert(x);
    }
    return s;
}

Json graph_to_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
    const int n = as_int(field(j, "n"), "n");
    if (n < 0) throw ParseError("n must be nonnegative");
    Graph g(n);
    for (const auto& e : as_array(field(j, "edges"), "edges")) {
        if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair");
        const Vertex u = as_vertex(e[0], n), v = as_vertex(e[1], n);
        if (u == v) throw ParseError("self-loop in edge list");
        g.add_edge(u, v);
    }
    return g;
}

Json tree_to_json(const MDTree& t) {
    return node_to_json(t.root);
}

MDTree tree_from_json(const Json& j, int n) {
    return MDTree{node_from_json(j, n)};
}

Json partition_to_json(const Partition& p) {
    Json out = Json::array();
    for (const auto& part : p) out.push_back(vertex_list(part));
    return out;
}

Partition partition_from_json(const Json& j, int n) {
    Partition p;
    for (const auto& part : as_array(j, "partition")) p.push_back(vertex_set_from_json(part, n));
    return p;
}

Json solution_to_json(const ConsistentSolution& s) {
    return {{"order", s.order}, {"classes", partition_to_json(s.classes)}};
}

ConsistentSolution solution_from_json(const Json& j, int n) {
    ConsistentSolution s;
    for (const auto& v : as_array(field(j, "order"), "order")) s.order.push_back(as_vertex(v, n));
    s.classes = partition_from_json(field(j, "classes"), n);
    return s;
}

Json sim_rep_to_json(const SimRep& rep) {
    Json intervals = Json::array();
    for (const auto& iv : rep.intervals) intervals.push_back({iv.lo, iv.hi});
    return {{"d", rep.d}, {"intervals", std::move(intervals)}, {"labels", rep.labels}};
}

SimRep sim_rep_from_json(const Json& j) {
    SimRep rep;
    rep.d = as_int(field(j, "d"), "d");
    for (const auto& iv : as_array(field(j, "intervals"), "intervals")) {
        if (!iv.is_array() || iv.size() != 2) throw ParseError("interval must be a pair [lo, hi]");
        rep.intervals.push_back({as_int(iv[0], "interval endpoint"), as_int(iv[1], "interval endpoint")});
    }
    for (const auto& ls : as_array(field(j, "labels"), "labels")) {
        std::vector<int> labels;
        for (const auto& l : as_array(ls, "label set")) labels.push_back(as_int(l, "label"));
        rep.labels.push_back(std::move(labels));
    }
    return rep;
}

LinearLayout layout_from_json(const Json& j) {
    LinearLayout out;
    for (const auto& v : as_array(j, "layout")) out.push_back(as_int(v, "layout entry"));
    return out;
}

}  // namespace modkit
