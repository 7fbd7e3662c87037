#pragma once

#include <json.hpp>

#include "modkit/graph.hpp"
#include "modkit/md_tree.hpp"
#include "modkit/mim_width.hpp"
#include "modkit/sim_interval.hpp"
#include "modkit/thinness.hpp"

namespace modkit {

// Witness (de)serialisation. Readers throw ParseError on any schema mismatch.

using Json = nlohmann::json;

Json vertex_list(const VertexSet& s);
VertexSet vertex_set_from_json(const Json& j, int n);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json tree_to_json(const MDTree& t);
MDTree tree_from_json(const Json& j, int n);

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j, int n);

Json solution_to_json(const ConsistentSolution& s);
ConsistentSolution solution_from_json(const Json& j, int n);

Json sim_rep_to_json(const SimRep& rep);
SimRep sim_rep_from_json(const Json& j);

LinearLayout layout_from_json(const Json& j);

}  // namespace modkit
