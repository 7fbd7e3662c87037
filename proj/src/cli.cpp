#include "modkit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "modkit/json_io.hpp"
#include "modkit/md_tree.hpp"
#include "modkit/mim_width.hpp"
#include "modkit/modular_partition.hpp"
#include "modkit/sim_interval.hpp"
#include "modkit/thinness.hpp"
#include "modkit/verification/acceptance.hpp"
#include "modkit/verification/oracles.hpp"

namespace modkit::cli {

namespace {

struct Settings {
    std::string input = "-";
    std::string graph;
    std::string format = "graph6";
    bool force = false;
    int threads = 1;
    bool json = false;

    std::string graph_class;
    bool brute = false;

    bool exact = false, kernel = false, bounds = false;

    std::optional<int> decide, fpt;
    bool twin_cover = false;

    std::string layout;

    std::string family;
    int n = 0, m = 0, density = 50;
    std::optional<std::uint64_t> seed;

    std::string kind;
    std::string witness;

    int criterion = 0;
};

std::string read_all(std::istream& in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_source(const std::string& path, std::istream& in) {
    if (path == "-") return read_all(in);
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ArgumentError("cannot open " + path);
    return read_all(file);
}

Graph load_graph(const Settings& s, std::istream& in) {
    if (!s.graph.empty()) return parse_graph6(s.graph);
    const std::string text = read_source(s.input, in);
    if (s.format == "graph6") return parse_graph6(text);
    return parse_edge_list(text);
}

Json envelope(const std::string& command) {
    return {{"schema", 1}, {"command", command}};
}

void merge(Json& into, const Json& more) {
    for (auto it = more.begin(); it != more.end(); ++it) into[it.key()] = it.value();
}

std::vector<Vertex> parse_vertex_csv(const std::string& text) {
    std::vector<Vertex> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw ArgumentError("bad vertex \"" + item + "\" in layout");
        }
    }
    return out;
}

// ---- commands ----------------------------------------------------------------

Json cmd_decompose(const Graph& g) {
    const auto tree = modular_decomposition(g);
    Json j = envelope("decompose");
    j["n"] = g.order();
    j["modular_width"] = modular_width(tree);
    j["tree"] = tree_to_json(tree);
    return j;
}

Json cmd_mc(const Settings& s, const Graph& g) {
    const GraphClass c = graph_class_from_string(s.graph_class);
    Json j = envelope("mc");
    j["class"] = to_string(c);
    if (s.brute) {
        const auto r = brute_gmc(g, c == GraphClass::Cluster ? ClassPredicate(is_cluster) : ClassPredicate(is_interval),
                                 s.force);
        j["k"] = r.k;
        j["parts"] = partition_to_json(r.parts);
        j["method"] = "exhaustive";
        return j;
    }
    const auto p = c == GraphClass::Cluster ? cluster_mc(g) : interval_mc(g);
    j["k"] = p.size();
    j["parts"] = partition_to_json(p.parts);
    return j;
}

Json cmd_thinness(const Settings& s, const Graph& g) {
    if (s.exact + s.kernel + s.bounds != 1) throw ArgumentError("thinness needs exactly one of --exact, --kernel, --bounds");
    Json j = envelope("thinness");
    if (s.exact) {
        const auto r = thinness_exact(g, s.force);
        j["thinness"] = r.thinness;
        merge(j, solution_to_json(r.witness));
    } else if (s.kernel) {
        const auto k = thinness_kernel(g);
        j["kernel"] = graph_to_json(k.graph);
        j["kept"] = k.origin;
        j["interval_mc"] = k.partition.size();
        j["parts"] = partition_to_json(k.partition.parts);
    } else {
        j["n"] = g.order();
        j["interval_mc"] = interval_mc(g).size();
        j["cluster_mc"] = cluster_mc(g).size();
        j["nd"] = neighborhood_diversity(g).nd;
        j["tc"] = twin_cover_exact(g, s.force).count();
        j["vc"] = vertex_cover_exact(g, s.force).count();
        j["kernel_size"] = thinness_kernel(g).graph.order();
    }
    return j;
}

Json cmd_sim_interval(const Settings& s, const Graph& g) {
    const int modes = s.exact + s.decide.has_value() + s.fpt.has_value() + s.twin_cover;
    if (modes != 1)
        throw ArgumentError("sim-interval needs exactly one of --exact, --decide, --fpt, --twin-cover-construct");
    Json j = envelope("sim-interval");
    if (s.exact) {
        const auto r = si_exact(g, s.force);
        j["si"] = r.si;
        merge(j, sim_rep_to_json(r.witness));
    } else if (s.twin_cover) {
        const VertexSet x = twin_cover_exact(g, s.force);
        const int k = x.count();
        j["twin_cover"] = vertex_list(x);
        j["bound"] = std::max(1, k * (k - 1) / 2 + k);
        merge(j, sim_rep_to_json(si_from_twin_cover(g, x)));
    } else {
        const bool use_fpt = s.fpt.has_value();
        const int d = use_fpt ? *s.fpt : *s.decide;
        const auto r = use_fpt ? si_fpt(g, d, s.force) : si_decide(g, d, s.force);
        j["method"] = use_fpt ? "fpt" : "exhaustive";
        j["feasible"] = r.feasible;
        if (r.feasible) merge(j, sim_rep_to_json(*r.witness));
        j["d"] = d;
    }
    return j;
}

Json cmd_lmimw(const Settings& s, const Graph& g) {
    Json j = envelope("lmimw");
    if (!s.layout.empty()) {
        const auto layout = parse_vertex_csv(s.layout);
        j["mimw"] = layout_mimw(g, layout);
        j["layout"] = layout;
        return j;
    }
    const auto r = lmimw_exact(g, s.force);
    j["lmimw"] = r.width;
    j["layout"] = r.layout;
    return j;
}

Json cmd_generate(const Settings& s) {
    const std::string& f = s.family;
    Graph g;
    std::optional<LinearLayout> layout;
    if (f == "path") {
        g = path(s.n);
    } else if (f == "cycle") {
        g = cycle(s.n);
    } else if (f == "complete") {
        g = complete(s.n);
    } else if (f == "complete-bipartite") {
        g = complete_bipartite(s.n, s.m);
    } else if (f == "claw") {
        g = bipartite_claw();
    } else if (f == "hn") {
        g = hn_graph(s.n);
        layout = hn_canonical_layout(s.n);
    } else if (f == "fig1") {
        g = acceptance::fig1_graph();
    } else if (f == "random") {
        if (s.density < 0 || s.density > 100) throw ArgumentError("--density must lie in 0..100");
        oracle::Rng rng(s.seed ? *s.seed : oracle::seed_from_env(1));
        g = oracle::random_graph(rng, s.n, s.density, 100);
    } else {
        throw ArgumentError("unknown family \"" + f + "\"");
    }
    Json j = envelope("generate");
    j["family"] = f;
    merge(j, graph_to_json(g));
    if (g.order() <= 62) j["graph6"] = emit_graph6(g);
    if (layout) {
        j["layout"] = *layout;
        j["mimw"] = layout_mimw(g, *layout);
    }
    return j;
}

Verdict verify_witness(const std::string& kind, const Graph& g, const Json& w) {
    const int n = g.order();
    if (!w.is_object()) throw ParseError("witness must be a JSON object");
    if (kind == "md-tree") {
        if (!w.contains("tree")) throw ParseError("md-tree witness needs \"tree\"");
        const MDTree t = tree_from_json(w["tree"], n);
        Verdict v = validate_md_tree(g, t);
        if (v && w.contains("modular_width") && w["modular_width"] != modular_width(t))
            return Verdict::fail("claimed modular width does not match the tree");
        return v;
    }
    if (kind == "partition") {
        if (!w.contains("class") || !w["class"].is_string() || !w.contains("parts"))
            throw ParseError("partition witness needs \"class\" and \"parts\"");
        ModularPartition p{partition_from_json(w["parts"], n), graph_class_from_string(w["class"].get<std::string>())};
        Verdict v = validate_gmodular_partition(g, p);
        if (v && w.contains("k") && w["k"] != p.size()) return Verdict::fail("claimed k does not match the parts");
        return v;
    }
    if (kind == "thinness") {
        const ConsistentSolution sol = solution_from_json(w, n);
        if (!is_consistent(g, sol)) return Verdict::fail("order and classes are not consistent");
        if (w.contains("thinness") && w["thinness"] != sol.classes.size())
            return Verdict::fail("claimed thinness does not match the number of classes");
        return Verdict::pass();
    }
    if (kind == "sim-rep") {
        const SimRep rep = sim_rep_from_json(w);
        if (!validate_sim_rep(g, rep)) return Verdict::fail("representation does not reproduce the graph");
        if (w.contains("si") && w["si"] != rep.d) return Verdict::fail("claimed si does not match d");
        return Verdict::pass();
    }
    if (kind == "layout") {
        if (!w.contains("layout")) throw ParseError("layout witness needs \"layout\"");
        const LinearLayout layout = layout_from_json(w["layout"]);
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        if (static_cast<int>(layout.size()) != n) return Verdict::fail("layout does not cover V(G)");
        for (Vertex v : layout) {
            if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return Verdict::fail("layout is not a permutation");
            seen[static_cast<std::size_t>(v)] = true;
        }
        const int width = layout_mimw(g, layout);
        for (const char* key : {"lmimw", "mimw"})
            if (w.contains(key) && w[key] != width)
                return Verdict::fail(std::string("claimed ") + key + " does not match the layout");
        return Verdict::pass();
    }
    throw ArgumentError("unknown witness kind \"" + kind + "\"");
}

int cmd_verify(const Settings& s, std::istream& in, std::ostream& out) {
    if (s.graph.empty() && s.input == "-" && s.witness == "-")
        throw ArgumentError("graph and witness cannot both come from stdin");
    const Graph g = load_graph(s, in);
    Json w;
    const std::string text = read_source(s.witness, in);
    try {
        w = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("witness is not valid JSON: ") + e.what(), e.byte);
    }
    Verdict v;
    try {
        v = verify_witness(s.kind, g, w);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("witness does not match the schema: ") + e.what());
    }
    Json j = envelope("verify");
    j["kind"] = s.kind;
    j["valid"] = v.ok;
    if (!v.ok) j["diagnostic"] = v.diagnostic;
    out << j.dump() << '\n';
    return v.ok ? 0 : 1;
}

int cmd_selfcheck(const Settings& s, std::ostream& out) {
    acceptance::Options options;
    options.seed = oracle::seed_from_env(options.seed);
    options.cli = run;
    std::vector<acceptance::CriterionResult> results;
    if (s.criterion != 0)
        results.push_back(acceptance::run_criterion(s.criterion, options));
    else
        results = acceptance::run_all(options);
    const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    if (s.json) {
        Json j = envelope("selfcheck");
        j["seed"] = options.seed;
        j["passed"] = all;
        Json list = Json::array();
        for (const auto& r : results)
            list.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
        j["criteria"] = std::move(list);
        out << j.dump() << '\n';
    } else {
        for (const auto& r : results) out << acceptance::format(r) << '\n';
    }
    return all ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Settings s;
    CLI::App app{"Modular decomposition, thinness, simultaneous interval and mim-width toolkit", "modkit"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--input", s.input, "Graph file, or - for stdin");
    app.add_option("--graph", s.graph, "Graph given inline as graph6");
    app.add_option("--format", s.format, "Input format")->check(CLI::IsMember({"graph6", "edges"}));
    app.add_flag("--force", s.force, "Run exhaustive routines above their size guards");
    app.add_option("--threads", s.threads, "Worker cap")->check(CLI::PositiveNumber);
    app.add_flag("--json", s.json, "JSON output for selfcheck");

    auto* decompose = app.add_subcommand("decompose", "Modular decomposition tree");
    auto* mc = app.add_subcommand("mc", "Optimal G-modular partition");
    mc->add_option("--class", s.graph_class, "cluster or interval")->required()->check(CLI::IsMember({"cluster", "interval"}));
    mc->add_flag("--brute", s.brute, "Exhaustive search instead of the tree algorithm");
    auto* thin = app.add_subcommand("thinness", "Thinness: exact value, kernel, or parameter bounds");
    thin->add_flag("--exact", s.exact);
    thin->add_flag("--kernel", s.kernel);
    thin->add_flag("--bounds", s.bounds);
    auto* si = app.add_subcommand("sim-interval", "Simultaneous interval representations");
    si->add_flag("--exact", s.exact);
    si->add_option("--decide", s.decide, "Decide d by exhaustive search");
    si->add_option("--fpt", s.fpt, "Decide d through the cluster-modular reduction");
    si->add_flag("--twin-cover-construct", s.twin_cover);
    auto* lm = app.add_subcommand("lmimw", "Linear mim-width");
    lm->add_option("--layout", s.layout, "Comma-separated layout to evaluate instead");
    auto* gen = app.add_subcommand("generate", "Emit a named graph");
    gen->add_option("--family", s.family, "path, cycle, complete, complete-bipartite, claw, hn, fig1, random")->required();
    gen->add_option("--n", s.n, "Size parameter");
    gen->add_option("--m", s.m, "Second side for complete-bipartite");
    gen->add_option("--density", s.density, "Edge percentage for random");
    gen->add_option("--seed", s.seed, "Seed for random");
    auto* ver = app.add_subcommand("verify", "Re-check an emitted certificate");
    ver->add_option("--kind", s.kind, "md-tree, partition, thinness, sim-rep, layout")
        ->required()
        ->check(CLI::IsMember({"md-tree", "partition", "thinness", "sim-rep", "layout"}));
    ver->add_option("--witness", s.witness, "Witness JSON file, or - for stdin")->required();
    auto* self = app.add_subcommand("selfcheck", "Run the oracle and acceptance suites");
    self->add_option("--criterion", s.criterion, "Run a single criterion")->check(CLI::Range(1, acceptance::criterion_count));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (ver->parsed()) return cmd_verify(s, in, out);
        if (self->parsed()) return cmd_selfcheck(s, out);
        Json j;
        if (gen->parsed()) {
            j = cmd_generate(s);
        } else {
            const Graph g = load_graph(s, in);
            if (decompose->parsed())
                j = cmd_decompose(g);
            else if (mc->parsed())
                j = cmd_mc(s, g);
            else if (thin->parsed())
                j = cmd_thinness(s, g);
            else if (si->parsed())
                j = cmd_sim_interval(s, g);
            else
                j = cmd_lmimw(s, g);
        }
        out << j.dump() << '\n';
        return 0;
    } catch (const GuardError& e) {
        err << "error: " << e.what() << " (use --force to override)\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace modkit::cli
