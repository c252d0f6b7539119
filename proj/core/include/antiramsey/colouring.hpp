#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "antiramsey/graph.hpp"

namespace antiramsey {

using Colour = std::uint32_t;
inline constexpr Colour kUncoloured = 0;

/// Partial edge-colouring indexed by edge id of a fixed Graph. Colour 0 means
/// the edge is uncoloured.
class Colouring {
 public:
  Colouring() = default;
  explicit Colouring(std::size_t edge_count) : colours_(edge_count, kUncoloured) {}
  explicit Colouring(std::vector<Colour> colours) : colours_(std::move(colours)) {}

  [[nodiscard]] std::size_t size() const noexcept { return colours_.size(); }
  [[nodiscard]] Colour operator[](std::size_t edge_id) const { return colours_[edge_id]; }
  [[nodiscard]] bool is_coloured(std::size_t edge_id) const { return colours_[edge_id] != kUncoloured; }
  void set(std::size_t edge_id, Colour c) { colours_.at(edge_id) = c; }

  [[nodiscard]] std::size_t coloured_count() const;
  [[nodiscard]] Colour max_colour() const;
  [[nodiscard]] const std::vector<Colour>& raw() const noexcept { return colours_; }

  /// Renumbers colours 1, 2, ... in order of first use along edge ids.
  [[nodiscard]] Colouring canonical() const;

  friend bool operator==(const Colouring&, const Colouring&) = default;

 private:
  std::vector<Colour> colours_;
};

/// No two incident edges share a colour; the colouring must match g's edge count.
bool is_proper(const Graph& g, const Colouring& c);

/// Throws DomainError naming the first conflict.
void require_proper(const Graph& g, const Colouring& c);

/// {"edges": [[u, v, colour], ...]} listing coloured edges in edge order.
nlohmann::json colouring_to_json(const Graph& g, const Colouring& c);

/// Inverse of colouring_to_json. Throws DomainError for non-edges or colour 0.
Colouring colouring_from_json(const Graph& g, const nlohmann::json& j);

/// Transfers a colouring of `sub.graph` onto its parent graph `parent`, adding
/// `offset` to every colour. Existing colours of `target` on other edges are kept.
void lift_colouring(const Subgraph& sub, const Colouring& c, const Graph& parent, Colouring& target,
                    Colour offset = 0);

/// Restriction of a parent colouring to a subgraph.
Colouring restrict_colouring(const Subgraph& sub, const Graph& parent, const Colouring& c);

}  // namespace antiramsey
