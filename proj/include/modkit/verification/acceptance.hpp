#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "modkit/graph.hpp"
#include "modkit/md_tree.hpp"

namespace modkit::acceptance {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    /// Number of instances checked and the first mismatch, if any.
    std::string detail;
};

/// Entry point of the command-line front end, used to re-verify emitted
/// certificates through `verify`.
using CliRunner =
    std::function<int(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)>;

struct Options {
    std::uint64_t seed = 20240601;
    CliRunner cli;
};

/// Every graph on 1..7 vertices, one per isomorphism class.
const std::vector<Graph>& atlas();

/// The nine-vertex example graph used for the decomposition tree check.
Graph fig1_graph();

/// Bracketed rendering of a tree, e.g. "Series(0,Parallel(1,2))".
std::string render_tree_shape(const MDTree& t);

CriterionResult run_criterion(int id, const Options& options);
std::vector<CriterionResult> run_all(const Options& options);

/// "PASS [id] title: detail" or "FAIL ...".
std::string format(const CriterionResult& r);

inline constexpr int criterion_count = 11;

}  // namespace modkit::acceptance
