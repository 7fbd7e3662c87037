#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "modkit/cli.hpp"
#include "modkit/json_io.hpp"
#include "modkit/mim_width.hpp"
#include "modkit/modular_partition.hpp"
#include "modkit/sim_interval.hpp"
#include "modkit/thinness.hpp"

namespace py = pybind11;
using namespace modkit;

namespace {

std::vector<std::vector<Vertex>> parts_of(const std::vector<VertexSet>& parts) {
    std::vector<std::vector<Vertex>> out;
    for (const auto& p : parts) out.push_back(p.members());
    return out;
}

VertexSet set_of(const Graph& g, const std::vector<Vertex>& members) {
    for (Vertex v : members)
        if (v < 0 || v >= g.order()) throw ArgumentError("vertex " + std::to_string(v) + " out of range");
    return VertexSet(g.order(), std::span<const Vertex>(members));
}

py::dict rep_dict(const SimRep& rep) {
    py::dict d;
    d["d"] = rep.d;
    std::vector<std::pair<int, int>> intervals;
    for (const auto& iv : rep.intervals) intervals.emplace_back(iv.lo, iv.hi);
    d["intervals"] = intervals;
    d["labels"] = rep.labels;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Modular decomposition and width parameters of small graphs";

    auto base = py::register_exception<Error>(m, "ModkitError");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<ArgumentError>(m, "ArgumentError", base.ptr());
    py::register_exception<GuardError>(m, "GuardError", base.ptr());

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, std::span<const Edge>(edges)); }),
             py::arg("n"), py::arg("edges"))
        .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
        .def("to_graph6", &emit_graph6)
        .def_property_readonly("n", &Graph::order)
        .def("edges", &Graph::edges)
        .def("adjacent", &Graph::adjacent)
        .def("neighbors", [](const Graph& g, Vertex v) { return g.neighbors(v).members(); })
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("complete", &complete);
    m.def("path", &path);
    m.def("cycle", &cycle);
    m.def("complete_bipartite", &complete_bipartite);
    m.def("c_copies_k2", &c_copies_k2);
    m.def("bipartite_claw", &bipartite_claw);
    m.def("hn_graph", &hn_graph);
    m.def("hn_canonical_layout", &hn_canonical_layout);
    m.def("disjoint_union", &disjoint_union);
    m.def("join", &join);
    m.def("complement", py::overload_cast<const Graph&>(&complement));

    m.def("is_module", [](const Graph& g, const std::vector<Vertex>& x) { return is_module(g, set_of(g, x)); });
    m.def("is_cluster", &is_cluster);
    m.def("is_interval", &is_interval);

    m.def("decompose", [](const Graph& g) { return tree_to_json(modular_decomposition(g)).dump(); },
          "Modular decomposition tree as a JSON string.");
    m.def("modular_width", [](const Graph& g) { return modular_width(modular_decomposition(g)); });
    m.def("cluster_mc", [](const Graph& g) { return parts_of(cluster_mc(g).parts); });
    m.def("interval_mc", [](const Graph& g) { return parts_of(interval_mc(g).parts); });

    m.def(
        "thinness",
        [](const Graph& g, bool force) {
            const auto r = thinness_exact(g, force);
            return py::make_tuple(r.thinness, r.witness.order, parts_of(r.witness.classes));
        },
        py::arg("g"), py::arg("force") = false);
    m.def("chromatic_number", &chromatic_number, py::arg("g"), py::arg("force") = false);
    m.def("neighborhood_diversity", [](const Graph& g) { return neighborhood_diversity(g).nd; });
    m.def("twin_cover", [](const Graph& g, bool force) { return twin_cover_exact(g, force).members(); },
          py::arg("g"), py::arg("force") = false);
    m.def("vertex_cover", [](const Graph& g, bool force) { return vertex_cover_exact(g, force).members(); },
          py::arg("g"), py::arg("force") = false);

    m.def(
        "si_exact",
        [](const Graph& g, bool force) {
            const auto r = si_exact(g, force);
            return py::make_tuple(r.si, rep_dict(r.witness));
        },
        py::arg("g"), py::arg("force") = false);
    m.def(
        "si_decide",
        [](const Graph& g, int d, bool force) -> py::object {
            const auto r = si_decide(g, d, force);
            if (!r.feasible) return py::none();
            return rep_dict(*r.witness);
        },
        py::arg("g"), py::arg("d"), py::arg("force") = false);

    m.def("cut_mim", [](const Graph& g, const std::vector<Vertex>& s) { return cut_mim(g, set_of(g, s)); });
    m.def("layout_mimw", [](const Graph& g, const std::vector<Vertex>& layout) { return layout_mimw(g, layout); });
    m.def(
        "lmimw",
        [](const Graph& g, bool force) {
            const auto r = lmimw_exact(g, force);
            return py::make_tuple(r.width, r.layout);
        },
        py::arg("g"), py::arg("force") = false);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args, const std::string& input) {
            std::istringstream in(input);
            std::ostringstream out, err;
            const int code = cli::run(args, in, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), py::arg("input") = "");
}
