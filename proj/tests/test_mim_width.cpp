#include <doctest.h>

#include <algorithm>

#include "modkit/mim_width.hpp"
#include "modkit/verification/acceptance.hpp"
#include "modkit/verification/oracles.hpp"
#include "support.hpp"

using namespace modkit;
using modkit::testing::identity_order;

TEST_CASE("induced matching across a cut") {
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m) {
            VertexSet side(n + m);
            for (int i = 0; i < n; ++i) side.insert(i);
            CHECK(cut_mim(complete_bipartite(n, m), side) == 1);
        }
    CHECK(cut_mim(path(4), VertexSet(4, {0, 1})) == 1);
    CHECK(cut_mim(c_copies_k2(2), VertexSet(4, {0, 2})) == 2);
    CHECK(cut_mim(c_copies_k2(2), VertexSet(4, {0, 1})) == 0);
    CHECK(cut_mim(path(4), VertexSet(4)) == 0);

    oracle::Rng rng(oracle::seed_from_env(41));
    for (int i = 0; i < 300; ++i) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const Graph g = oracle::random_graph(rng, n, 1 + i % 3, 4);
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (rng() & 1) s.insert(v);
        CHECK(cut_mim(g, s) == oracle::cut_mim(g, s));
    }
    const Graph big = c_copies_k2(40);
    VertexSet left(80);
    for (int i = 0; i < 40; ++i) left.insert(2 * i);
    CHECK(cut_mim(big, left) == 40);
}

TEST_CASE("width of a layout") {
    CHECK(layout_mimw(hn_graph(1), hn_canonical_layout(1)) == 1);
    CHECK(layout_mimw(complete(5), std::vector<Vertex>{4, 2, 0, 1, 3}) == 1);
    CHECK(layout_mimw(Graph(4), identity_order(4)) == 0);
    CHECK(layout_mimw(Graph(1), identity_order(1)) == 0);
    CHECK_THROWS_AS(layout_mimw(path(3), std::vector<Vertex>{0, 1}), ArgumentError);
    CHECK_THROWS_AS(layout_mimw(path(3), std::vector<Vertex>{0, 1, 1}), ArgumentError);
}

TEST_CASE("exact linear mim-width") {
    CHECK(lmimw_exact(hn_graph(0)).width == 0);
    const auto h1 = lmimw_exact(hn_graph(1));
    CHECK(h1.width == 1);
    CHECK(layout_mimw(hn_graph(1), h1.layout) == 1);
    CHECK(lmimw_exact(cycle(4)).width == 1);
    CHECK(lmimw_exact(Graph(0)).width == 0);
    CHECK_THROWS_AS(lmimw_exact(Graph(17)), GuardError);

    for (const auto& g : acceptance::atlas()) {
        if (g.order() > 6) continue;
        const auto r = lmimw_exact(g);
        CHECK(r.width == oracle::lmimw(g));
        CHECK(layout_mimw(g, r.layout) == r.width);
    }
}

TEST_CASE("any layout is at least the optimum") {
    oracle::Rng rng(oracle::seed_from_env(42));
    for (int i = 0; i < 50; ++i) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const Graph g = oracle::random_graph(rng, n);
        auto order = identity_order(n);
        std::shuffle(order.begin(), order.end(), rng);
        CHECK(layout_mimw(g, order) >= lmimw_exact(g).width);
    }
}

TEST_CASE("monotone under induced subgraphs") {
    oracle::Rng rng(oracle::seed_from_env(43));
    for (int i = 0; i < 50; ++i) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const Graph g = oracle::random_graph(rng, n);
        VertexSet keep(n);
        for (int v = 0; v < n; ++v)
            if (rng() % 3 != 0) keep.insert(v);
        CHECK(lmimw_exact(induced_subgraph(g, keep)).width <= lmimw_exact(g).width);
    }
}

TEST_CASE("the H family") {
    const int sizes[] = {1, 7, 25, 79, 241};
    for (int n = 0; n <= 4; ++n) CHECK(hn_graph(n).order() == sizes[n]);
    CHECK(hn_graph(1) == bipartite_claw());
    for (int n = 0; n <= 3; ++n) {
        const auto layout = hn_canonical_layout(n);
        CHECK(static_cast<int>(layout.size()) == hn_graph(n).order());
        CHECK(layout_mimw(hn_graph(n), layout) == n);
    }
    CHECK_THROWS_AS(hn_graph(5), GuardError);
    CHECK_THROWS_AS(hn_graph(-1), GuardError);
}
