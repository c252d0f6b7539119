#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "antiramsey/colouring.hpp"
#include "antiramsey/stage.hpp"
#include "antiramsey/structure.hpp"

namespace antiramsey::detail {

inline std::vector<bool> membership(Vertex n, const VertexSet& set) {
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (const Vertex x : set) in[x] = true;
  return in;
}

/// Uncoloured, unforbidden edges inside K(v): first those inside R(v), then
/// those with one end in R(v), then those inside S(v).
inline std::vector<std::size_t> candidate_edges(const Graph& g, const NeighbourhoodSplit& split, const Colouring& c,
                                         const std::vector<bool>& forbidden) {
  const auto in_r = membership(g.order(), split.private_part);
  const auto in_k = membership(g.order(), split.closed);
  std::vector<std::size_t> buckets[3];
  for (std::size_t e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edges()[e];
    if (!in_k[ed.u] || !in_k[ed.v] || c.is_coloured(e) || (!forbidden.empty() && forbidden[e])) continue;
    buckets[2 - static_cast<int>(in_r[ed.u]) - static_cast<int>(in_r[ed.v])].push_back(e);
  }
  std::vector<std::size_t> out;
  for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline std::vector<Colour> local_palette(const Graph& g, const NeighbourhoodSplit& split, const Colouring& c) {
  const auto in_k = membership(g.order(), split.closed);
  std::vector<Colour> out;
  for (std::size_t e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edges()[e];
    if (in_k[ed.u] && in_k[ed.v] && c.is_coloured(e)) out.push_back(c[e]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct Found {
  std::vector<EdgePaint> paints;
  std::string move;
};

/// Decides whether a tentative set of new colours is good enough.
using AcceptFn = std::function<bool(std::span<const EdgePaint>)>;

/// Tries families of small edge sets in a fixed order and keeps the first one
/// whose overlay reaches the target stage.
class ExtensionSearch {
 public:
  ExtensionSearch(const StageEvaluator& ev, const StageEvaluator::State& st, std::vector<std::size_t> candidates,
                  std::vector<Colour> palette, Colour fresh, AcceptFn accept, std::size_t budget)
      : ev_(ev), st_(st), cand_(std::move(candidates)), palette_(std::move(palette)), fresh_(fresh),
        accept_(std::move(accept)), budget_(budget) {}

  std::optional<Found> run() {
    using Tier = bool (ExtensionSearch::*)();
    const std::pair<const char*, Tier> tiers[] = {
        {"none", &ExtensionSearch::none},
        {"new-pair", &ExtensionSearch::new_pair},
        {"reuse-one", &ExtensionSearch::reuse_one},
        {"new-triple", &ExtensionSearch::new_triple},
        {"reuse-two", &ExtensionSearch::reuse_two},
        {"reuse-one-new-pair", &ExtensionSearch::reuse_one_new_pair},
        {"two-new-pairs", &ExtensionSearch::two_new_pairs},
    };
    for (const auto& [name, tier] : tiers) {
      if ((this->*tier)()) {
        found_.move = name;
        return found_;
      }
      if (evaluations_ >= budget_) break;
    }
    return std::nullopt;
  }

  [[nodiscard]] std::size_t evaluations() const noexcept { return evaluations_; }

 private:
  bool accept() {
    ++evaluations_;
    if (!accept_(paints_)) return false;
    found_.paints = paints_;
    return true;
  }
  bool exhausted() const { return evaluations_ >= budget_; }

  bool push(std::size_t edge, Colour c) {
    const EdgePaint p{edge, c};
    if (!ev_.admissible(st_, paints_, p)) return false;
    paints_.push_back(p);
    return true;
  }
  void pop() { paints_.pop_back(); }

  bool none() { return accept(); }

  /// Adds `count` pairwise disjoint edges of colour c, indices above `from`.
  bool same_colour(std::size_t count, std::size_t from, Colour c, const std::function<bool()>& next) {
    if (count == 0) return next();
    for (std::size_t i = from; i < cand_.size() && !exhausted(); ++i) {
      if (!push(cand_[i], c)) continue;
      const bool ok = same_colour(count - 1, i + 1, c, next);
      pop();
      if (ok) return true;
    }
    return false;
  }

  bool new_pair() {
    return same_colour(2, 0, fresh_, [this] { return accept(); });
  }
  bool new_triple() {
    return same_colour(3, 0, fresh_, [this] { return accept(); });
  }
  bool reuse_one() {
    for (const Colour c : palette_)
      if (same_colour(1, 0, c, [this] { return accept(); })) return true;
    return false;
  }
  bool reuse_two() {
    for (std::size_t a = 0; a < palette_.size(); ++a) {
      for (std::size_t b = a + 1; b < palette_.size(); ++b) {
        const bool ok = same_colour(1, 0, palette_[a], [&] {
          return same_colour(1, 0, palette_[b], [this] { return accept(); });
        });
        if (ok) return true;
        if (exhausted()) return false;
      }
    }
    return false;
  }
  bool reuse_one_new_pair() {
    for (const Colour c : palette_) {
      const bool ok = same_colour(1, 0, c, [this] { return new_pair(); });
      if (ok) return true;
      if (exhausted()) return false;
    }
    return false;
  }
  bool two_new_pairs() {
    return same_colour(2, 0, fresh_, [this] {
      return same_colour(2, 0, fresh_ + 1, [this] { return accept(); });
    });
  }

  const StageEvaluator& ev_;
  const StageEvaluator::State& st_;
  std::vector<std::size_t> cand_;
  std::vector<Colour> palette_;
  Colour fresh_;
  AcceptFn accept_;
  std::size_t budget_;
  std::size_t evaluations_ = 0;
  std::vector<EdgePaint> paints_;
  Found found_;
};

inline Colouring apply_paints(Colouring c, const std::vector<EdgePaint>& paints) {
  for (const auto& p : paints) c.set(p.edge, p.colour);
  return c;
}

}  // namespace antiramsey::detail
