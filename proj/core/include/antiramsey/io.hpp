#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "antiramsey/graph.hpp"

namespace antiramsey {

/// Parses edge-list text: one "u v" pair per line, blank lines and '#' comments
/// ignored, and an optional "n=<count>" header before the first edge. Without a
/// header the vertex count is one more than the largest endpoint.
Graph parse_graph(std::string_view text);

/// Canonical edge-list text: "n=<count>" header followed by sorted edges.
std::string format_edge_list(const Graph& g);

/// {"n": int, "edges": [[u, v], ...]} with edges sorted.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// Accepts either the JSON form or edge-list text (decided by a leading '{').
Graph parse_graph_any(std::string_view text);

}  // namespace antiramsey
