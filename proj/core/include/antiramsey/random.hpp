#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "antiramsey/graph.hpp"

namespace antiramsey {

/// SplitMix64 finaliser; a bijection on 64-bit words.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Hash of a key tuple, used to derive independent streams from (seed, trial, ...).
std::uint64_t stream_key(std::initializer_list<std::uint64_t> parts) noexcept;

/// Maps a 64-bit word to a double in [0, 1) using its top 53 bits.
double unit_interval(std::uint64_t word) noexcept;

/// Counter-based generator: the i-th draw is a pure function of (key, i), so a
/// stream can be re-created from its key alone.
class StreamRng {
 public:
  explicit StreamRng(std::uint64_t key) noexcept : key_(key) {}
  StreamRng(std::initializer_list<std::uint64_t> parts) noexcept : key_(stream_key(parts)) {}

  std::uint64_t next() noexcept { return splitmix64(key_ ^ splitmix64(++counter_)); }
  double uniform() noexcept { return unit_interval(next()); }
  /// Uniform integer in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) noexcept;
  /// Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) noexcept;
  bool chance(double p) noexcept { return uniform() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) noexcept {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Uniform variate attached to vertex pair number `pair` of trial `trial`.
/// Comparing it against different p couples G(n, p) across p.
double pair_uniform(std::uint64_t seed, std::uint64_t trial, std::uint64_t pair) noexcept;

/// G(n, p): pair {u, v} (u < v, enumerated row by row) is an edge iff its
/// coupled uniform is below p. Throws DomainError unless 0 <= p <= 1 and n >= 0.
Graph gnp(Vertex n, double p, std::uint64_t seed, std::uint64_t trial = 0);

}  // namespace antiramsey
