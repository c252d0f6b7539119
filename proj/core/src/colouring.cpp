#include "antiramsey/colouring.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "antiramsey/errors.hpp"

namespace antiramsey {

std::size_t Colouring::coloured_count() const {
  return static_cast<std::size_t>(std::count_if(colours_.begin(), colours_.end(), [](Colour c) { return c != 0; }));
}

Colour Colouring::max_colour() const {
  return colours_.empty() ? 0 : *std::max_element(colours_.begin(), colours_.end());
}

Colouring Colouring::canonical() const {
  std::unordered_map<Colour, Colour> rename;
  std::vector<Colour> out(colours_.size(), kUncoloured);
  for (std::size_t i = 0; i < colours_.size(); ++i) {
    if (colours_[i] == kUncoloured) continue;
    auto [it, inserted] = rename.try_emplace(colours_[i], static_cast<Colour>(rename.size() + 1));
    out[i] = it->second;
  }
  return Colouring(std::move(out));
}

namespace {

std::string conflict(const Graph& g, const Colouring& c) {
  if (c.size() != g.size()) {
    return "colouring has " + std::to_string(c.size()) + " entries for " + std::to_string(g.size()) + " edges";
  }
  for (Vertex x = 0; x < g.order(); ++x) {
    std::vector<Colour> seen;
    for (const Vertex y : g.neighbours(x)) {
      const Colour col = c[g.edge_id(x, y)];
      if (col == kUncoloured) continue;
      if (std::find(seen.begin(), seen.end(), col) != seen.end()) {
        return "colour " + std::to_string(col) + " appears twice at vertex " + std::to_string(x);
      }
      seen.push_back(col);
    }
  }
  return {};
}

}  // namespace

bool is_proper(const Graph& g, const Colouring& c) { return conflict(g, c).empty(); }

void require_proper(const Graph& g, const Colouring& c) {
  if (auto why = conflict(g, c); !why.empty()) throw DomainError("improper colouring: " + why);
}

nlohmann::json colouring_to_json(const Graph& g, const Colouring& c) {
  auto edges = nlohmann::json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (c.is_coloured(i)) edges.push_back({g.edges()[i].u, g.edges()[i].v, c[i]});
  }
  return {{"edges", std::move(edges)}};
}

Colouring colouring_from_json(const Graph& g, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array()) {
    throw DomainError("colouring JSON needs an \"edges\" array");
  }
  Colouring c(g.size());
  for (const auto& item : j["edges"]) {
    if (!item.is_array() || item.size() != 3) throw DomainError("colouring entry must be [u, v, colour]");
    const auto u = item[0].get<Vertex>();
    const auto v = item[1].get<Vertex>();
    const auto col = item[2].get<std::int64_t>();
    if (col <= 0) throw DomainError("colour ids must be positive");
    const auto id = (u >= 0 && v >= 0 && u < g.order() && v < g.order() && u != v) ? g.edge_index(u, v) : std::nullopt;
    if (!id) throw DomainError("coloured pair {" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
    c.set(*id, static_cast<Colour>(col));
  }
  return c;
}

void lift_colouring(const Subgraph& sub, const Colouring& c, const Graph& parent, Colouring& target, Colour offset) {
  const auto& edges = sub.graph.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!c.is_coloured(i)) continue;
    const Edge e = sub.parent(edges[i]);
    target.set(parent.edge_id(e.u, e.v), c[i] + offset);
  }
}

Colouring restrict_colouring(const Subgraph& sub, const Graph& parent, const Colouring& c) {
  Colouring out(sub.graph.size());
  const auto& edges = sub.graph.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge e = sub.parent(edges[i]);
    out.set(i, c[parent.edge_id(e.u, e.v)]);
  }
  return out;
}

}  // namespace antiramsey
