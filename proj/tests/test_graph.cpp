#include <doctest.h>

#include "modkit/verification/acceptance.hpp"
#include "modkit/verification/oracles.hpp"
#include "support.hpp"

using namespace modkit;
using modkit::testing::isomorphic;

TEST_CASE("graph6 decoding") {
    const Graph star = parse_graph6("D?{");
    CHECK(star.order() == 5);
    CHECK(star.edges() == std::vector<Edge>{{0, 4}, {1, 4}, {2, 4}, {3, 4}});
    CHECK(parse_graph6("@") == Graph(1));
    CHECK(parse_graph6("A_") == complete(2));
    CHECK(parse_graph6(">>graph6<<A_\n") == complete(2));
    CHECK(parse_graph6("?").order() == 0);
}

TEST_CASE("graph6 decoding errors") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("D?"), ParseError);
    CHECK_THROWS_AS(parse_graph6("D?{?"), ParseError);
    CHECK_THROWS_AS(parse_graph6("A "), ParseError);
    CHECK_THROWS_AS(parse_graph6("A`"), ParseError);
    CHECK_THROWS_AS(parse_graph6("~?@?"), ParseError);
    try {
        parse_graph6("Bw\x01");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
}

TEST_CASE("graph6 encoding") {
    CHECK(emit_graph6(Graph(1)) == "@");
    CHECK(emit_graph6(Graph(2)) == "A?");
    CHECK(emit_graph6(complete(2)) == "A_");
    CHECK(emit_graph6(parse_graph6("D?{")) == "D?{");
    CHECK_THROWS_AS(emit_graph6(Graph(63)), ArgumentError);
    CHECK(emit_graph6(Graph(62)).size() == 1 + (62 * 61 / 2 + 5) / 6);
}

TEST_CASE("graph6 agrees with an independent decoder and round-trips") {
    oracle::Rng rng(oracle::seed_from_env(7));
    for (int i = 0; i < 200; ++i) {
        const int n = static_cast<int>(rng() % 9);
        const Graph g = oracle::random_graph(rng, n, 1 + i % 3, 4);
        const std::string s = emit_graph6(g);
        CHECK(parse_graph6(s) == g);
        if (i < 20 || n <= 10) CHECK(oracle::decode_graph6(s) == g);
    }
}

TEST_CASE("edge-list format") {
    const Graph g = parse_edge_list("4 3\n0 1\n1 2\n2 3\n");
    CHECK(g == path(4));
    CHECK(parse_edge_list(emit_edge_list(cycle(5))) == cycle(5));
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("x"), ParseError);
}

TEST_CASE("is_module") {
    const Graph fig1 = acceptance::fig1_graph();
    CHECK(is_module(fig1, VertexSet(9, {2, 3})));
    CHECK(is_module(fig1, fig1.vertices()));
    CHECK(is_module(path(4), VertexSet(4, {0, 1})) == false);
    CHECK(is_module(path(4), VertexSet(4, {2})));
    CHECK_THROWS_AS(is_module(path(4), VertexSet(4)), ArgumentError);
}

TEST_CASE("module closure") {
    const Graph p = path(4);
    CHECK(module_closure(p, VertexSet(4, {0, 1})) == p.vertices());
    const Graph fig1 = acceptance::fig1_graph();
    CHECK(module_closure(fig1, VertexSet(9, {7, 8})) == VertexSet(9, {7, 8}));
    CHECK(module_closure(fig1, VertexSet(9, {6, 7})) == VertexSet(9, {6, 7, 8}));
}

TEST_CASE("contract_module") {
    CHECK(contract_module(complete(5), VertexSet::full(5)) == Graph(1));
    const Graph fig1 = acceptance::fig1_graph();
    const Graph c = contract_module(fig1, VertexSet(9, {7, 8}));
    CHECK(c.order() == 8);
    CHECK(c.neighbors(7) == VertexSet(8, {4, 5, 6}));
    CHECK(induced_subgraph(c, VertexSet(8, {0, 1, 2, 3, 4, 5, 6})) ==
          induced_subgraph(fig1, VertexSet(9, {0, 1, 2, 3, 4, 5, 6})));
    CHECK(isomorphic(contract_module(complete_bipartite(3, 3), VertexSet(6, {0, 1, 2})), complete_bipartite(1, 3)));
    CHECK_THROWS_AS(contract_module(path(4), VertexSet(4, {0, 1})), ArgumentError);
}

TEST_CASE("replace_module") {
    const Graph host = join(cycle(4), path(3));
    const VertexSet c4(7, {0, 1, 2, 3});
    const Graph r = replace_module(host, c4, disjoint_union(cycle(4), cycle(4)));
    CHECK(r.order() == 7 - 4 + 8);
    CHECK(replace_module(host, c4, Graph(1)) == contract_module(host, c4));

    const Graph k3 = replace_module(cycle(4), VertexSet(4, {0, 2}), Graph(3));
    CHECK(k3.order() == 5);
    for (Vertex v = 2; v < 5; ++v) CHECK(k3.neighbors(v) == VertexSet(5, {0, 1}));
    CHECK(!k3.adjacent(0, 1));
    CHECK(isomorphic(k3, complete_bipartite(2, 3)));
    CHECK_THROWS_AS(replace_module(path(4), VertexSet(4, {0, 1}), Graph(1)), ArgumentError);
}

TEST_CASE("replacing a module by its own induced subgraph gives back the graph") {
    oracle::Rng rng(oracle::seed_from_env(11));
    int checked = 0;
    for (int i = 0; i < 200 && checked < 60; ++i) {
        const Graph g = oracle::random_graph(rng, 3 + static_cast<int>(rng() % 7));
        for (const auto& node : modular_decomposition(g).root.children) {
            const Graph r = replace_module(g, node.vertices, induced_subgraph(g, node.vertices));
            CHECK(isomorphic(r, g));
            ++checked;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("substitution") {
    const Graph star = complete_bipartite(1, 3);
    CHECK(isomorphic(substitution(star, 1, Graph(1)), star));
    Graph h1 = bipartite_claw();
    for (Vertex leaf : {6, 5, 4}) h1 = substitution(h1, leaf, Graph(1));
    CHECK(h1.order() == 7);
    CHECK(isomorphic(h1, bipartite_claw()));
    Graph h2 = bipartite_claw();
    for (int i = 0; i < 3; ++i) h2 = substitution(h2, 4, h1);
    CHECK(h2.order() == 4 + 3 * 7);
    CHECK(substitution(star, 0, Graph(2)) == replace_module(star, VertexSet(4, {0}), Graph(2)));
    CHECK_THROWS(substitution(star, 4, Graph(1)));
}

TEST_CASE("generators") {
    const Graph c = c_copies_k2(3);
    CHECK(c.order() == 6);
    CHECK(c.edge_count() == 3);
    CHECK(connected_components(c).size() == 3);
    const Graph c4 = cycle(4);
    CHECK(c4.order() == 4);
    for (Vertex v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
    const Graph claw = bipartite_claw();
    CHECK(claw.order() == 7);
    CHECK(claw.edge_count() == 6);
    std::vector<int> deg;
    for (Vertex v = 0; v < 7; ++v) deg.push_back(claw.degree(v));
    std::sort(deg.rbegin(), deg.rend());
    CHECK(deg == std::vector<int>{3, 2, 2, 2, 1, 1, 1});
    CHECK(complete(5).edge_count() == 10);
    CHECK(path(5).edge_count() == 4);
    CHECK(complete_bipartite(2, 3).edge_count() == 6);
    CHECK(complete(0).order() == 0);
}

TEST_CASE("induced subgraph, complement, union, join, components") {
    const Graph k33 = complete_bipartite(3, 3), p4 = path(4);
    CHECK(induced_subgraph(p4, p4.vertices()) == p4);
    CHECK(induced_subgraph(p4, VertexSet(4)).order() == 0);
    CHECK(induced_subgraph(k33, VertexSet(6, {0, 1, 2})) == Graph(3));
    CHECK(induced_subgraph(p4, VertexSet(4, {0, 1, 3})) == Graph(3, {{0, 1}}));

    CHECK(complement(complement(p4)) == p4);
    CHECK(complement(Graph(0)).order() == 0);
    CHECK(complement(k33) == disjoint_union(complete(3), complete(3)));
    CHECK(isomorphic(complement(p4), p4));

    CHECK(disjoint_union(p4, Graph(0)) == p4);
    const Graph u = disjoint_union(k33, p4);
    CHECK(u.order() == 10);
    CHECK(u.edge_count() == 9 + 3);
    const Graph j = join(k33, p4);
    CHECK(j.edge_count() == 9 + 3 + 6 * 4);
    CHECK(join(Graph(3), Graph(3)) == k33);
    CHECK(join(p4, Graph(0)) == p4);

    CHECK(connected_components(Graph(0)).empty());
    CHECK(connected_components(k33).size() == 1);
    CHECK(connected_components(u).size() == 2);
    CHECK(co_components(k33, k33.vertices()).size() == 2);
    CHECK(connected_components(disjoint_union(p4, Graph(2))).size() == 3);
}

TEST_CASE("complement twice is the identity on random graphs") {
    oracle::Rng rng(oracle::seed_from_env(3));
    for (int i = 0; i < 100; ++i) {
        const Graph g = oracle::random_graph(rng, static_cast<int>(rng() % 12));
        CHECK(complement(complement(g)) == g);
        CHECK(complement(g).edge_count() + g.edge_count() ==
              static_cast<std::size_t>(g.order() * (g.order() - 1) / 2));
    }
}
