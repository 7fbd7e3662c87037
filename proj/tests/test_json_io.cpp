#include <doctest.h>

#include "modkit/json_io.hpp"
#include "modkit/verification/acceptance.hpp"

using namespace modkit;

TEST_CASE("graphs and vertex sets") {
    const Graph g = acceptance::fig1_graph();
    CHECK(graph_from_json(graph_to_json(g)) == g);
    CHECK(vertex_list(VertexSet(5, {4, 1})) == Json::array({1, 4}));
    CHECK(vertex_set_from_json(Json::array({3, 0}), 4) == VertexSet(4, {0, 3}));
    CHECK_THROWS_AS(vertex_set_from_json(Json::array({4}), 4), ParseError);
    CHECK_THROWS_AS(vertex_set_from_json(Json::array({1, 1}), 4), ParseError);
    CHECK_THROWS_AS(vertex_set_from_json(Json("x"), 4), ParseError);
    CHECK_THROWS_AS(graph_from_json(Json{{"n", 2}, {"edges", {{0, 2}}}}), ParseError);
}

TEST_CASE("trees round-trip") {
    const Graph g = acceptance::fig1_graph();
    const MDTree t = modular_decomposition(g);
    const MDTree back = tree_from_json(tree_to_json(t), g.order());
    CHECK(acceptance::render_tree_shape(back) == acceptance::render_tree_shape(t));
    CHECK(validate_md_tree(g, back));
    CHECK_THROWS_AS(tree_from_json(Json{{"kind", "Star"}}, 9), ParseError);
}

TEST_CASE("witnesses round-trip") {
    const Partition p{VertexSet(4, {0, 2}), VertexSet(4, {1, 3})};
    CHECK(partition_from_json(partition_to_json(p), 4) == p);

    const ConsistentSolution sol{{0, 1, 2, 3}, p};
    const ConsistentSolution s2 = solution_from_json(solution_to_json(sol), 4);
    CHECK(s2.order == sol.order);
    CHECK(s2.classes == sol.classes);

    const SimRep rep{2, {{1, 4}, {2, 3}}, {{1}, {1, 2}}};
    const SimRep r2 = sim_rep_from_json(sim_rep_to_json(rep));
    CHECK(r2.d == 2);
    CHECK(r2.intervals == rep.intervals);
    CHECK(r2.labels == rep.labels);
    CHECK(sim_rep_to_json(rep).dump() == R"({"d":2,"intervals":[[1,4],[2,3]],"labels":[[1],[1,2]]})");
    CHECK_THROWS_AS(sim_rep_from_json(Json{{"d", 1}, {"intervals", {{1}}}, {"labels", {{1}}}}), ParseError);
    CHECK_THROWS_AS(sim_rep_from_json(Json{{"d", 1}}), ParseError);

    CHECK(layout_from_json(Json::array({2, 0, 1})) == LinearLayout{2, 0, 1});
    CHECK_THROWS_AS(layout_from_json(Json::object()), ParseError);
}
