#include <doctest.h>

#include "modkit/sim_interval.hpp"
#include "modkit/thinness.hpp"
#include "modkit/verification/acceptance.hpp"
#include "modkit/verification/oracles.hpp"

using namespace modkit;

namespace {

int label_count(const SimRep& rep) {
    std::vector<int> seen;
    for (const auto& l : rep.labels) seen.insert(seen.end(), l.begin(), l.end());
    std::sort(seen.begin(), seen.end());
    return static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

int lemma_bound(int k) { return std::max(1, k * (k - 1) / 2 + k); }

void check_witness(const Graph& g, const SiDecision& r) {
    REQUIRE(r.witness.has_value() == r.feasible);
    if (r.witness) {
        CHECK(validate_sim_rep(g, *r.witness));
        CHECK(validate_sim_rep(g, perturb_to_distinct(*r.witness)));
    }
}

}  // namespace

TEST_CASE("representation checker") {
    SimRep edgeless{0, {{0, 5}, {1, 2}, {3, 9}}, {{}, {}, {}}};
    CHECK(validate_sim_rep(Graph(3), edgeless));

    const Graph p = path(4);
    const auto model = interval_model(p);
    REQUIRE(model.has_value());
    SimRep one{1, *model, std::vector<std::vector<int>>(4, {1})};
    CHECK(validate_sim_rep(p, one));

    SimRep apart{1, {{0, 1}, {2, 3}}, {{1}, {1}}};
    CHECK_FALSE(validate_sim_rep(complete(2), apart));
    SimRep unlabeled{1, {{0, 1}, {1, 2}}, {{1}, {}}};
    CHECK_FALSE(validate_sim_rep(complete(2), unlabeled));
    SimRep out_of_range{1, {{0, 1}, {1, 2}}, {{1}, {2}}};
    CHECK_FALSE(validate_sim_rep(Graph(2), out_of_range));
    SimRep short_rep{1, {{0, 1}}, {{1}}};
    CHECK_FALSE(validate_sim_rep(complete(2), short_rep));
    SimRep reversed{1, {{3, 1}, {0, 5}}, {{1}, {1}}};
    CHECK_FALSE(validate_sim_rep(complete(2), reversed));
}

TEST_CASE("perturbation keeps the intersection pattern") {
    SimRep shared{2, {{0, 4}, {4, 8}, {4, 4}, {0, 8}}, {{1}, {1, 2}, {2}, {}}};
    const SimRep p = perturb_to_distinct(shared);
    std::vector<int> ends;
    for (const auto& iv : p.intervals) ends.push_back(iv.lo), ends.push_back(iv.hi);
    std::sort(ends.begin(), ends.end());
    CHECK(std::adjacent_find(ends.begin(), ends.end()) == ends.end());
    for (std::size_t u = 0; u < 4; ++u)
        for (std::size_t v = 0; v < 4; ++v)
            CHECK(p.intervals[u].intersects(p.intervals[v]) == shared.intervals[u].intersects(shared.intervals[v]));
}

TEST_CASE("decision on small graphs") {
    CHECK_FALSE(si_decide(cycle(4), 1).feasible);
    const auto c4 = si_decide(cycle(4), 2);
    CHECK(c4.feasible);
    check_witness(cycle(4), c4);
    const auto p4 = si_decide(path(4), 1);
    CHECK(p4.feasible);
    check_witness(path(4), p4);
    CHECK_FALSE(si_decide(complete_bipartite(2, 3), 1).feasible);
    check_witness(complete_bipartite(2, 3), si_decide(complete_bipartite(2, 3), 2));
    CHECK(si_decide(complete_bipartite(2, 3), 2).feasible);
    CHECK(si_decide(Graph(3), 0).feasible);
    CHECK_FALSE(si_decide(path(2), 0).feasible);
    CHECK_THROWS_AS(si_decide(Graph(7), 1), GuardError);
    CHECK_THROWS_AS(si_decide(path(3), 4), GuardError);
}

TEST_CASE("exact simultaneous interval number") {
    CHECK(si_exact(Graph(4)).si == 0);
    CHECK(si_exact(path(6)).si == 1);
    CHECK(si_exact(complete(3)).si == 1);
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m) {
            const auto r = si_exact(complete_bipartite(n, m));
            CHECK(r.si == std::min(n, m));
            CHECK(validate_sim_rep(complete_bipartite(n, m), r.witness));
        }
    for (const auto& g : acceptance::atlas()) {
        if (g.order() > 5) continue;
        const int si = si_exact(g).si;
        CHECK((si == 0) == (g.edge_count() == 0));
        CHECK((si == 1) == (g.edge_count() > 0 && is_interval(g)));
    }
}

TEST_CASE("decisions are monotone in the label count") {
    for (const auto& g : acceptance::atlas()) {
        if (g.order() > 5) continue;
        bool before = false;
        for (int d = 0; d <= 3; ++d) {
            const auto r = si_decide(g, d);
            check_witness(g, r);
            CHECK((!before || r.feasible));
            before = r.feasible;
        }
    }
}

TEST_CASE("parameterized decision") {
    const Graph k23 = complete_bipartite(2, 3);
    CHECK(cluster_mc(k23).size() == 2);
    CHECK(si_fpt(k23, 2).feasible);
    CHECK_FALSE(si_fpt(k23, 1).feasible);
    check_witness(k23, si_fpt(k23, 2));

    const Graph apex = join(disjoint_union(complete(3), complete(3)), Graph(1));
    CHECK(si_fpt(apex, 1).feasible == is_interval(apex));
    const Graph apex_c4 = join(disjoint_union(cycle(4), complete(2)), Graph(1));
    CHECK(si_fpt(apex_c4, 1).feasible == is_interval(apex_c4));
    CHECK(si_fpt(path(5), 1).feasible);
    CHECK_THROWS_AS(si_fpt(cycle(5), 2), GuardError);

    oracle::Rng rng(oracle::seed_from_env(31));
    int compared = 0;
    while (compared < 100) {
        const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 6));
        if (cluster_mc(g).size() > 3) continue;
        for (int d = 0; d <= 2; ++d) {
            const auto fpt = si_fpt(g, d);
            CHECK(fpt.feasible == si_decide(g, d).feasible);
            check_witness(g, fpt);
        }
        ++compared;
    }
}

TEST_CASE("construction from a twin-cover") {
    const SimRep kn = si_from_twin_cover(complete(5), VertexSet(5));
    CHECK(validate_sim_rep(complete(5), kn));
    CHECK(label_count(kn) == 1);
    const SimRep p4 = si_from_twin_cover(path(4), VertexSet(4, {1, 2}));
    CHECK(validate_sim_rep(path(4), p4));
    CHECK(label_count(p4) <= 3);
    const SimRep k33 = si_from_twin_cover(complete_bipartite(3, 3), VertexSet(6, {0, 1, 2}));
    CHECK(validate_sim_rep(complete_bipartite(3, 3), k33));
    CHECK(label_count(k33) <= 6);
    CHECK_THROWS_AS(si_from_twin_cover(path(4), VertexSet(4, {1})), ArgumentError);

    for (const auto& g : acceptance::atlas()) {
        const VertexSet x = twin_cover_exact(g);
        const SimRep rep = si_from_twin_cover(g, x);
        CHECK(validate_sim_rep(g, rep));
        CHECK(validate_sim_rep(g, perturb_to_distinct(rep)));
        CHECK(rep.d <= lemma_bound(x.count()));
    }
}
