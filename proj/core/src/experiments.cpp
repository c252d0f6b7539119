#include "antiramsey/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numeric>
#include <sstream>

#include "antiramsey/corpus.hpp"
#include "antiramsey/density.hpp"
#include "antiramsey/engine.hpp"
#include "antiramsey/errors.hpp"
#include "antiramsey/k4.hpp"
#include "antiramsey/random.hpp"
#include "max_flow.hpp"

namespace antiramsey {

namespace {

/// Vertices surviving repeated removal of vertices with degree below `min_degree`.
VertexSet degree_core(const Graph& g, std::size_t min_degree) {
  std::vector<std::size_t> deg(static_cast<std::size_t>(g.order()));
  std::vector<bool> removed(deg.size(), false);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < g.order(); ++v) {
    deg[v] = g.degree(v);
    if (deg[v] < min_degree) {
      removed[v] = true;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const Vertex v = queue.back();
    queue.pop_back();
    for (const Vertex w : g.neighbours(v)) {
      if (removed[w]) continue;
      if (--deg[w] < min_degree) {
        removed[w] = true;
        queue.push_back(w);
      }
    }
  }
  VertexSet core;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!removed[v]) core.push_back(v);
  return core;
}

std::size_t core_degree_for(const Rational& t) {
  // Vertices of a minimal dense set have internal degree > t.
  return static_cast<std::size_t>(t.numerator() / t.denominator()) + 1;
}

/// Upper bound certificate: the maximum of q*e(T) - w*|T| over forced <= T <= allowed,
/// computed as a max-closure min cut.
std::int64_t closure_maximum(const Graph& g, const std::vector<bool>& allowed, std::span<const Vertex> forced,
                             std::int64_t q, std::int64_t w) {
  std::vector<std::size_t> index(static_cast<std::size_t>(g.order()), 0);
  std::size_t nodes = 2;
  for (Vertex v = 0; v < g.order(); ++v)
    if (allowed[v]) index[v] = nodes++;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : g.edges())
    if (allowed[e.u] && allowed[e.v]) edges.emplace_back(index[e.u], index[e.v]);
  detail::MaxFlow flow(nodes + edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    flow.add_edge(0, nodes + i, q);
    flow.add_edge(nodes + i, edges[i].first, detail::MaxFlow::kInfinite);
    flow.add_edge(nodes + i, edges[i].second, detail::MaxFlow::kInfinite);
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (allowed[v]) flow.add_edge(index[v], 1, w);
  for (const Vertex v : forced) flow.add_edge(0, index[v], detail::MaxFlow::kInfinite);
  return q * static_cast<std::int64_t>(edges.size()) - flow.run(0, 1);
}

/// Enumerates connected vertex sets rooted at their smallest vertex (ESU order),
/// stopping at sets that are dense and skipping branches that cannot reach the
/// threshold within vmax vertices.
class ConnectedSetSearch {
 public:
  ConnectedSetSearch(const Graph& g, int vmax, const Rational& t, const CensusGuard& guard, bool first_only)
      : g_(g),
        vmax_(vmax),
        p_(t.numerator()),
        q_(t.denominator()),
        guard_(guard),
        first_only_(first_only),
        core_degree_(static_cast<std::int64_t>(core_degree_for(t))),
        in_set_(g.order(), false) {}

  std::vector<VertexSet> run() {
    for (Vertex root = 0; root < g_.order() && !done(); ++root) {
      prepare_root(root);
      std::vector<Vertex> set{root};
      in_set_[root] = true;
      std::vector<Vertex> ext;
      for (const Vertex w : g_.neighbours(root))
        if (w > root) ext.push_back(w);
      extend(root, set, ext, 0, static_cast<std::int64_t>(degree_[root]));
      in_set_[root] = false;
    }
    return found_;
  }

 private:
  void prepare_root(Vertex root) {
    degree_.assign(static_cast<std::size_t>(g_.order()), 0);
    std::vector<std::int64_t> later;
    for (Vertex x = root; x < g_.order(); ++x) {
      for (const Vertex y : g_.neighbours(x)) degree_[x] += y >= root;
      if (x > root) later.push_back(degree_[x]);
    }
    std::sort(later.rbegin(), later.rend());
    top_prefix_.assign(later.size() + 1, 0);
    for (std::size_t i = 0; i < later.size(); ++i) top_prefix_[i + 1] = top_prefix_[i] + later[i];
  }

  [[nodiscard]] bool done() const { return first_only_ && !found_.empty(); }

  [[nodiscard]] bool dense(std::int64_t edges, std::int64_t size) const { return q_ * edges >= p_ * size; }

  /// Whether adding r more vertices could reach the threshold for some r.
  [[nodiscard]] bool promising(std::int64_t edges, std::int64_t size, std::int64_t out) const {
    for (std::int64_t r = 1; size + r <= vmax_; ++r) {
      const auto top = top_prefix_[std::min<std::size_t>(static_cast<std::size_t>(r), top_prefix_.size() - 1)];
      const std::int64_t gain = std::min((out + top) / 2, out + r * (r - 1) / 2);
      if (dense(edges + gain, size + r)) return true;
    }
    return false;
  }

  /// Cut-based test on the vertices the search can still add: a dense T with
  /// |T| <= vmax satisfies q*e(T) - (p+l)*|T| + l*vmax >= 0 for every l >= 0.
  bool reachable(Vertex root, const std::vector<Vertex>& set, const std::vector<Vertex>& ext, std::int64_t room) {
    allowed_.assign(static_cast<std::size_t>(g_.order()), false);
    blocked_.assign(static_cast<std::size_t>(g_.order()), false);
    for (const Vertex s : set)
      for (const Vertex u : g_.neighbours(s)) blocked_[u] = true;
    for (const Vertex u : ext) blocked_[u] = false;
    // Breadth-first ball of radius `room` around the set through addable vertices.
    std::vector<Vertex> frontier = set;
    for (const Vertex s : set) allowed_[s] = true;
    for (std::int64_t d = 0; d < room && !frontier.empty(); ++d) {
      std::vector<Vertex> next;
      for (const Vertex x : frontier)
        for (const Vertex u : g_.neighbours(x)) {
          if (u <= root || allowed_[u] || blocked_[u]) continue;
          allowed_[u] = true;
          next.push_back(u);
        }
      frontier = std::move(next);
    }
    // Every vertex of a minimal dense set keeps degree >= core_degree_ inside it.
    std::vector<std::int64_t>& deg = ball_degree_;
    deg.assign(static_cast<std::size_t>(g_.order()), 0);
    std::vector<Vertex> queue;
    for (Vertex x = 0; x < g_.order(); ++x) {
      if (!allowed_[x]) continue;
      for (const Vertex u : g_.neighbours(x)) deg[x] += allowed_[u];
      if (deg[x] < core_degree_) queue.push_back(x);
    }
    while (!queue.empty()) {
      const Vertex x = queue.back();
      queue.pop_back();
      if (!allowed_[x]) continue;
      if (in_set_[x]) return false;
      allowed_[x] = false;
      for (const Vertex u : g_.neighbours(x))
        if (allowed_[u] && --deg[u] < core_degree_) queue.push_back(u);
    }
    for (const std::int64_t l : {std::int64_t{0}, q_, 2 * q_, 4 * q_}) {
      if (closure_maximum(g_, allowed_, set, q_, p_ + l) + l * vmax_ < 0) return false;
    }
    return true;
  }

  void extend(Vertex root, std::vector<Vertex>& set, std::vector<Vertex>& ext, std::int64_t edges,
              std::int64_t degree_sum) {
    if (++visited_ > guard_.max_sets) {
      throw GuardExceeded("dense-subgraph census examined more than " + std::to_string(guard_.max_sets) + " sets");
    }
    const auto size = static_cast<std::int64_t>(set.size());
    if (size >= 2 && dense(edges, size)) {
      VertexSet s = set;
      std::sort(s.begin(), s.end());
      found_.push_back(std::move(s));
      return;
    }
    if (size >= vmax_ || !promising(edges, size, degree_sum - 2 * edges)) return;
    if (!reachable(root, set, ext, static_cast<std::int64_t>(vmax_) - size)) return;

    std::vector<Vertex> remaining;
    for (const Vertex w : ext)
      if (allowed_[w]) remaining.push_back(w);
    while (!remaining.empty() && !done()) {
      const Vertex w = remaining.back();
      remaining.pop_back();
      // Exclusive neighbourhood of w: later vertices not in, nor adjacent to, the set.
      std::vector<Vertex> next = remaining;
      for (const Vertex u : g_.neighbours(w)) {
        if (u <= root || in_set_[u]) continue;
        if (std::find(next.begin(), next.end(), u) != next.end()) continue;
        bool adjacent_to_set = false;
        for (const Vertex s : set)
          if (g_.adjacent(s, u)) {
            adjacent_to_set = true;
            break;
          }
        if (!adjacent_to_set) next.push_back(u);
      }
      std::int64_t gained = 0;
      for (const Vertex s : set) gained += g_.adjacent(s, w);
      set.push_back(w);
      in_set_[w] = true;
      extend(root, set, next, edges + gained, degree_sum + degree_[w]);
      in_set_[w] = false;
      set.pop_back();
    }
  }

  const Graph& g_;
  std::int64_t vmax_;
  std::int64_t p_;
  std::int64_t q_;
  CensusGuard guard_;
  bool first_only_;
  std::int64_t core_degree_;
  std::vector<std::int64_t> ball_degree_;
  std::vector<bool> in_set_;
  std::vector<bool> allowed_;
  std::vector<bool> blocked_;
  std::vector<std::int64_t> degree_;
  std::vector<std::int64_t> top_prefix_;
  std::vector<VertexSet> found_;
  std::size_t visited_ = 0;
};

std::vector<VertexSet> keep_minimal(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (const auto& s : sets) {
    const bool has_smaller = std::any_of(kept.begin(), kept.end(), [&](const VertexSet& m) {
      return std::includes(s.begin(), s.end(), m.begin(), m.end());
    });
    if (!has_smaller) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

/// Quick search for a small dense set: for every vertex, peel the radius-2 ball
/// around it by minimum degree and test each intermediate set of at most vmax
/// vertices. Sound but incomplete.
std::optional<VertexSet> peel_balls(const Graph& g, int vmax, std::int64_t p, std::int64_t q, std::size_t radius) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> mark(n, -1);
  std::vector<std::int64_t> deg(n, 0);
  for (Vertex r = 0; r < g.order(); ++r) {
    VertexSet ball{r};
    mark[r] = static_cast<int>(r);
    for (std::size_t i = 0, layer_end = 1, depth = 0; i < ball.size(); ++i) {
      if (i == layer_end) {
        if (++depth == radius) break;
        layer_end = ball.size();
      }
      for (const Vertex u : g.neighbours(ball[i]))
        if (mark[u] != static_cast<int>(r)) {
          mark[u] = static_cast<int>(r);
          ball.push_back(u);
        }
    }
    std::int64_t edges = 0;
    for (const Vertex x : ball) {
      deg[x] = 0;
      for (const Vertex u : g.neighbours(x)) deg[x] += mark[u] == static_cast<int>(r);
      edges += deg[x];
    }
    edges /= 2;
    std::vector<bool> alive(n, false);
    for (const Vertex x : ball) alive[x] = true;
    auto size = static_cast<std::int64_t>(ball.size());
    while (size >= 2) {
      if (size <= vmax && q * edges >= p * size) {
        VertexSet found;
        for (const Vertex x : ball)
          if (alive[x]) found.push_back(x);
        std::sort(found.begin(), found.end());
        return found;
      }
      Vertex worst = r;
      std::int64_t worst_degree = std::numeric_limits<std::int64_t>::max();
      for (const Vertex x : ball)
        if (alive[x] && x != r && deg[x] < worst_degree) {
          worst = x;
          worst_degree = deg[x];
        }
      if (worst == r) break;
      alive[worst] = false;
      mark[worst] = -1;
      for (const Vertex u : g.neighbours(worst))
        if (alive[u]) --deg[u];
      edges -= worst_degree;
      --size;
    }
    for (const Vertex x : ball) mark[x] = -1;
  }
  return std::nullopt;
}

Rational census_threshold(int k) { return k == 4 ? k4_density_ceiling() : density_ceiling(k); }

}  // namespace

std::vector<VertexSet> dense_subgraph_census(const Graph& g, int vmax, const Rational& threshold,
                                             const CensusGuard& guard) {
  if (vmax < 1) throw DomainError("census needs vmax >= 1");
  if (vmax > guard.max_vmax) {
    throw GuardExceeded("census vmax " + std::to_string(vmax) + " exceeds the guard " +
                        std::to_string(guard.max_vmax));
  }
  if (threshold <= Rational(0)) {
    std::vector<VertexSet> singles;
    for (Vertex v = 0; v < g.order(); ++v) singles.push_back({v});
    return singles;
  }
  const auto core = degree_core(g, core_degree_for(threshold));
  if (core.empty()) return {};
  const auto sub = induced_subgraph(g, core);
  if (max_density(sub.graph) < threshold) return {};
  auto sets = ConnectedSetSearch(sub.graph, vmax, threshold, guard, false).run();
  for (auto& s : sets) {
    for (auto& v : s) v = sub.parent(v);
    std::sort(s.begin(), s.end());
  }
  return keep_minimal(std::move(sets));
}

bool has_small_dense_subgraph(const Graph& g, int vmax, const Rational& threshold, const CensusGuard& guard) {
  if (vmax < 1) throw DomainError("census needs vmax >= 1");
  if (threshold <= Rational(0)) return g.order() > 0;
  const auto core = degree_core(g, core_degree_for(threshold));
  if (core.empty()) return false;
  const auto sub = induced_subgraph(g, core);
  const auto densest = densest_subgraph(sub.graph);
  if (densest.density < threshold) return false;
  if (static_cast<int>(densest.vertices.size()) <= vmax) return true;
  if (threshold <= Rational(15, 7) && vmax >= 7 && contains_witness_j(sub.graph)) return true;
  for (std::size_t radius = 1; radius <= 3; ++radius)
    if (peel_balls(sub.graph, vmax, threshold.numerator(), threshold.denominator(), radius)) return true;
  return !ConnectedSetSearch(sub.graph, vmax, threshold, guard, true).run().empty();
}

std::optional<std::vector<Vertex>> find_witness_j(const Graph& g) {
  std::vector<Vertex> ab;
  std::vector<Vertex> abc;
  for (const auto& e : g.edges()) {
    if (g.degree(e.u) < 6 || g.degree(e.v) < 6) continue;
    ab.clear();
    const auto nu = g.neighbours(e.u);
    const auto nv = g.neighbours(e.v);
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(ab));
    if (ab.size() < 5) continue;
    for (const Vertex c : ab) {
      if (c < e.v || g.degree(c) < 6) continue;
      abc.clear();
      const auto nc = g.neighbours(c);
      std::set_intersection(ab.begin(), ab.end(), nc.begin(), nc.end(), std::back_inserter(abc));
      if (abc.size() >= 4) return std::vector<Vertex>{e.u, e.v, c, abc[0], abc[1], abc[2], abc[3]};
    }
  }
  return std::nullopt;
}

ScanSample scan_sample(int k, Vertex n, double p, std::uint64_t seed, std::uint64_t trial,
                       const ScanOptions& options) {
  const Graph g = gnp(n, p, seed, trial);
  ScanSample s;
  if (k == 4) s.j_present = contains_witness_j(g);
  if (components_sparse(g, k)) {
    if (k == 4) {
      colour_graph_k4(g);
    } else {
      colour_graph(g, k);
    }
    s.colourable = true;
  }
  if (options.census_vmax > 0) {
    try {
      s.census_nonempty = has_small_dense_subgraph(g, options.census_vmax, census_threshold(k), options.census_guard);
    } catch (const GuardExceeded&) {
      s.census_undecided = true;
    }
  }
  return s;
}

std::vector<ScanRow> threshold_scan(int k, Vertex n, const std::vector<double>& exponents, std::size_t trials,
                                    std::uint64_t seed, const ScanOptions& options) {
  if (k < 4) throw DomainError("threshold scan needs k >= 4");
  if (n < 1 || trials < 1) throw DomainError("threshold scan needs n >= 1 and trials >= 1");
  const auto work = static_cast<std::uint64_t>(n) * trials * std::max<std::size_t>(1, exponents.size());
  if (work > options.max_work) {
    throw GuardExceeded("scan work n*trials*exponents = " + std::to_string(work) + " exceeds " +
                        std::to_string(options.max_work));
  }
  std::vector<ScanRow> rows;
  for (const double c : exponents) {
    ScanRow row;
    row.n = n;
    row.c = c;
    row.p = std::pow(static_cast<double>(n), -c);
    row.trials = trials;
    row.seed = seed;
    std::size_t j = 0;
    std::size_t colourable = 0;
    std::size_t census = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      const auto s = scan_sample(k, n, row.p, seed, t, options);
      j += s.j_present;
      colourable += s.colourable;
      census += s.census_nonempty;
      row.census_undecided += s.census_undecided;
    }
    const auto denom = static_cast<double>(trials);
    if (k == 4) row.rate_j = static_cast<double>(j) / denom;
    row.rate_colourable = static_cast<double>(colourable) / denom;
    row.rate_census = static_cast<double>(census) / denom;
    rows.push_back(row);
  }
  return rows;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream out;
  out << "n,c,p,trials,rate_j,rate_colourable,rate_census,seed\n";
  out << std::setprecision(10);
  for (const auto& r : rows) {
    out << r.n << ',' << r.c << ',' << r.p << ',' << r.trials << ',';
    if (r.rate_j) out << *r.rate_j;
    out << ',' << r.rate_colourable << ',' << r.rate_census << ',' << r.seed << '\n';
  }
  return out.str();
}

nlohmann::json scan_json(const std::vector<ScanRow>& rows) {
  auto out = nlohmann::json::array();
  for (const auto& r : rows) {
    out.push_back({{"n", r.n},
                   {"c", r.c},
                   {"p", r.p},
                   {"trials", r.trials},
                   {"rate_j", r.rate_j ? nlohmann::json(*r.rate_j) : nlohmann::json(nullptr)},
                   {"rate_colourable", r.rate_colourable},
                   {"rate_census", r.rate_census},
                   {"census_undecided", r.census_undecided},
                   {"seed", r.seed}});
  }
  return out;
}

}  // namespace antiramsey
