#include <doctest.h>

#include "modkit/mim_width.hpp"
#include "modkit/verification/acceptance.hpp"
#include "modkit/verification/oracles.hpp"

using namespace modkit;

TEST_CASE("decomposition tree of the nine-vertex example") {
    const Graph g = acceptance::fig1_graph();
    const MDTree t = modular_decomposition(g);
    CHECK(acceptance::render_tree_shape(t) == "Prime(0,Parallel(1,Series(2,3)),Series(4,5),Series(6,Parallel(7,8)))");
    CHECK(validate_md_tree(g, t));
    CHECK(modular_width(t) == 4);
    CHECK(t.root.complete == false);
    CHECK(t.root.children[2].complete);
}

TEST_CASE("complete graphs and the five-cycle") {
    const MDTree k = modular_decomposition(complete(5));
    CHECK(k.root.kind == NodeKind::Series);
    CHECK(k.root.children.size() == 5);
    for (const auto& c : k.root.children) CHECK(c.kind == NodeKind::Leaf);
    CHECK(modular_width(k) == 2);

    const MDTree c5 = modular_decomposition(cycle(5));
    CHECK(c5.root.kind == NodeKind::Prime);
    CHECK(c5.root.children.size() == 5);
    CHECK(modular_width(c5) == 5);
    CHECK(oracle::strong_modules(cycle(5)).size() == 6);

    const MDTree e = modular_decomposition(Graph(3));
    CHECK(e.root.kind == NodeKind::Parallel);
    CHECK(modular_decomposition(Graph(1)).root.kind == NodeKind::Leaf);
    CHECK_THROWS_AS(modular_decomposition(Graph(0)), ArgumentError);
}

TEST_CASE("trees match the strong modules of random graphs") {
    oracle::Rng rng(oracle::seed_from_env(101));
    for (int i = 0; i < 500; ++i) {
        const int n = 1 + static_cast<int>(rng() % 9);
        const Graph g = oracle::random_graph(rng, n, 1 + i % 3, 4);
        const MDTree t = modular_decomposition(g);
        CHECK(validate_md_tree(g, t));
        CHECK(oracle::tree_node_sets(t) == oracle::strong_modules(g));
    }
}

TEST_CASE("validator rejects broken trees") {
    const Graph g = acceptance::fig1_graph();
    MDTree t = modular_decomposition(g);
    t.root.children[1].children[1].kind = NodeKind::Parallel;
    CHECK_FALSE(validate_md_tree(g, t));

    MDTree missing = modular_decomposition(g);
    missing.root.children.pop_back();
    CHECK_FALSE(validate_md_tree(g, missing));

    MDTree flags = modular_decomposition(g);
    flags.root.complete = true;
    CHECK_FALSE(validate_md_tree(g, flags));

    MDTree leaf;
    leaf.root.kind = NodeKind::Leaf;
    leaf.root.vertices = VertexSet(1, {0});
    CHECK(validate_md_tree(Graph(1), leaf));
    CHECK_FALSE(validate_md_tree(Graph(2), leaf));
}

TEST_CASE("modular width of the H family") {
    for (int n = 1; n <= 3; ++n) CHECK(modular_width(modular_decomposition(hn_graph(n))) == 7);
    CHECK(modular_width(modular_decomposition(complete(5))) == 2);
}
