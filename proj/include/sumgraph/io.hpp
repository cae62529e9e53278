#pragma once

#include <string>

#include <json.hpp>

#include "sumgraph/codes.hpp"
#include "sumgraph/graph.hpp"
#include "sumgraph/group.hpp"

namespace sumgraph {

using Json = nlohmann::json;

/// {"order": n, "labels": [...], "table": [[...]], "tag": {...}}
Json group_to_json(const Group& g);
/// Revalidates the table; throws the same errors as Group::from_table, or
/// BadParameter for a malformed document.
Group group_from_json(const Json& j, std::size_t max_order = kDefaultMaxOrder);

Json tag_to_json(const GroupTag& tag);
GroupTag tag_from_json(const Json& j);

/// {"group", "subgroup", "flavor", "kind", "exists", "rule", "witness", "certificate"}
Json verdict_to_json(const Group& g, const Subgroup& h, const Verdict& v, bool include_witness);

/// {"index", "order", "members", "labels", "generators"}
Json subgroup_to_json(const Group& g, const Subgroup& h, std::size_t index);

/// `gen:<label>[,<label>...]` or `index:<k>` (k-th normal subgroup, canonical order).
/// Labels also accept e, a, b, ab as shorthands for the identity, a^1, the
/// reflection b and a^1b. Throws BadParameter on an unknown label or index.
Subgroup resolve_subgroup(const Group& g, std::string_view selector);

/// Adjacency lists keyed by vertex index, with labels and the source subgroup.
Json graph_to_json(const Group& g, const SumGraph& graph);
/// Undirected DOT; optionally one fill colour per connected component.
std::string graph_to_dot(const Group& g, const SumGraph& graph, bool colour_components);

}  // namespace sumgraph
