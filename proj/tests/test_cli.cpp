#include <doctest.h>

#include <sstream>

#include "modkit/cli.hpp"
#include "modkit/json_io.hpp"

using namespace modkit;

namespace {

struct Outcome {
    int code = 0;
    std::string out, err;
    Json json() const { return Json::parse(out); }
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    Outcome o;
    o.code = cli::run(args, in, out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
}

Outcome verify(const std::string& kind, const Graph& g, const Json& witness) {
    return run({"verify", "--kind", kind, "--graph", emit_graph6(g), "--witness", "-"}, witness.dump());
}

}  // namespace

TEST_CASE("modular cardinality from an edge list") {
    const auto o = run({"mc", "--class", "interval", "--format", "edges"}, "4 4\n0 1\n1 2\n2 3\n3 0\n");
    REQUIRE(o.code == 0);
    const Json j = o.json();
    CHECK(j["k"] == 2);
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "mc");
    CHECK(verify("partition", cycle(4), j).json()["valid"] == true);
    const auto brute = run({"mc", "--class", "cluster", "--brute", "--graph", emit_graph6(path(4))});
    CHECK(brute.json()["k"] == 4);
}

TEST_CASE("thinness of a path and of the four-cycle") {
    const auto o = run({"thinness", "--exact", "--graph", emit_graph6(path(6))});
    REQUIRE(o.code == 0);
    CHECK(o.json()["thinness"] == 1);
    CHECK(verify("thinness", path(6), o.json()).json()["valid"] == true);

    Json c4 = run({"thinness", "--exact", "--graph", emit_graph6(cycle(4))}).json();
    CHECK(c4["thinness"] == 2);
    CHECK(verify("thinness", cycle(4), c4).code == 0);
    Json tampered = c4;
    tampered["order"] = {0, 1, 2, 3};
    tampered["classes"] = {{0, 1}, {2, 3}};
    const auto bad = verify("thinness", cycle(4), tampered);
    CHECK(bad.code == 1);
    CHECK(bad.json()["valid"] == false);

    const auto bounds = run({"thinness", "--bounds", "--graph", emit_graph6(complete_bipartite(3, 3))}).json();
    CHECK(bounds["cluster_mc"] == 2);
    CHECK(bounds["tc"] == 3);
    const auto kernel = run({"thinness", "--kernel", "--graph", emit_graph6(complete_bipartite(3, 3))}).json();
    CHECK(kernel["kernel"]["n"] == 4);
}

TEST_CASE("simultaneous interval commands") {
    const Graph k33 = complete_bipartite(3, 3);
    const auto o = run({"sim-interval", "--exact", "--graph", emit_graph6(k33)});
    REQUIRE(o.code == 0);
    CHECK(o.json()["si"] == 3);
    CHECK(verify("sim-rep", k33, o.json()).json()["valid"] == true);

    const auto tc = run({"sim-interval", "--twin-cover-construct", "--graph", emit_graph6(path(4))}).json();
    CHECK(tc["d"] <= 3);
    CHECK(verify("sim-rep", path(4), tc).json()["valid"] == true);

    const auto lemma = Json::parse(R"({"d":3,"intervals":[[1,1],[1,4],[1,4],[4,4]],"labels":[[2],[1,2],[1,3],[3]]})");
    CHECK(verify("sim-rep", path(4), lemma).json()["valid"] == true);

    const auto dec = run({"sim-interval", "--decide", "1", "--graph", emit_graph6(cycle(4))}).json();
    CHECK(dec["feasible"] == false);
    const auto fpt = run({"sim-interval", "--fpt", "2", "--graph", emit_graph6(cycle(4))}).json();
    CHECK(fpt["feasible"] == true);
    CHECK(verify("sim-rep", cycle(4), fpt).code == 0);
}

TEST_CASE("decomposition, layouts and generators") {
    const auto d = run({"decompose", "--graph", emit_graph6(cycle(5))}).json();
    CHECK(d["modular_width"] == 5);
    CHECK(verify("md-tree", cycle(5), d).json()["valid"] == true);

    const auto l = run({"lmimw", "--graph", emit_graph6(cycle(4))}).json();
    CHECK(l["lmimw"] == 1);
    CHECK(verify("layout", cycle(4), l).json()["valid"] == true);
    const auto fixed = run({"lmimw", "--layout", "3,2,1,0", "--graph", emit_graph6(path(4))}).json();
    CHECK(fixed["mimw"] == 1);

    const auto h = run({"generate", "--family", "hn", "--n", "3"}).json();
    CHECK(h["mimw"] == 3);
    CHECK(h["n"] == 79);
    CHECK_FALSE(h.contains("graph6"));
    const auto k = run({"generate", "--family", "complete-bipartite", "--n", "2", "--m", "3"}).json();
    CHECK(parse_graph6(k["graph6"].get<std::string>()) == complete_bipartite(2, 3));
    const auto r1 = run({"generate", "--family", "random", "--n", "8", "--seed", "5"}).out;
    CHECK(r1 == run({"generate", "--family", "random", "--n", "8", "--seed", "5"}).out);
}

TEST_CASE("exit codes") {
    CHECK(run({"thinness", "--exact", "--graph", "D?"}).code == 1);
    CHECK(run({"thinness", "--exact", "--graph", emit_graph6(Graph(10))}).code == 2);
    CHECK(run({"thinness", "--exact", "--force", "--graph", emit_graph6(Graph(10))}).code == 0);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"mc", "--class", "chordal", "--graph", "@"}).code == 1);
    CHECK(run({"verify", "--kind", "thinness", "--graph", "C]", "--witness", "-"}, "{").code == 1);
    CHECK(run({"verify", "--kind", "layout", "--graph", "C]", "--witness", "-"}, "{\"layout\":[0,1]}").code == 1);
    const auto guard = run({"sim-interval", "--decide", "4", "--graph", "C]"});
    CHECK(guard.code == 2);
    CHECK(guard.err.find("--force") != std::string::npos);
}

TEST_CASE("output is deterministic") {
    const std::string g = emit_graph6(complete_bipartite(2, 3));
    for (const char* cmd : {"decompose", "lmimw"}) CHECK(run({cmd, "--graph", g}).out == run({cmd, "--graph", g}).out);
    CHECK(run({"sim-interval", "--exact", "--graph", g}).out == run({"sim-interval", "--exact", "--graph", g}).out);
}
