#pragma once

#include <optional>
#include <vector>

#include "modkit/graph.hpp"

namespace modkit {

/// Closed integer interval [lo, hi].
struct Interval {
    int lo = 0;
    int hi = 0;

    bool intersects(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Simultaneous interval representation: u ~ v iff both the intervals and
/// the label sets of u and v intersect. Labels are drawn from 1..d and kept
/// sorted.
struct SimRep {
    int d = 0;
    std::vector<Interval> intervals;
    std::vector<std::vector<int>> labels;
};

bool validate_sim_rep(const Graph& g, const SimRep& rep);

/// Same intersection pattern with all 2n endpoints distinct, taken from 1..2n.
SimRep perturb_to_distinct(const SimRep& rep);

/// Interval model of g, or nullopt if g is not an interval graph. Built from
/// a consecutive ordering of the maximal cliques.
std::optional<std::vector<Interval>> interval_model(const Graph& g);

struct SiDecision {
    bool feasible = false;
    std::optional<SimRep> witness;
};

/// Exhaustive decision for a d-simultaneous interval representation.
/// Refuses n > 6 or d > 3 unless `force`.
SiDecision si_decide(const Graph& g, int d, bool force = false);

struct SiResult {
    int si = 0;
    SimRep witness;
};

/// Least d admitting a representation; 0 and 1 are answered directly.
SiResult si_exact(const Graph& g, bool force = false);

/// Decision through the cluster-modular reduction: contract the cliques of
/// every module, then for each module pick either two disjoint intervals or
/// one shared interval and search the small instance that remains.
/// Refuses cluster_mc > 3 or d > 3 unless `force`.
SiDecision si_fpt(const Graph& g, int d, bool force = false);

/// Representation built from a twin-cover x using at most
/// max(1, |x|(|x|-1)/2 + |x|) labels. Throws ArgumentError if x is not a
/// twin-cover.
SimRep si_from_twin_cover(const Graph& g, const VertexSet& x);

}  // namespace modkit
