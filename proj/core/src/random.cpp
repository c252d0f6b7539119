#include "antiramsey/random.hpp"

#include "antiramsey/errors.hpp"

namespace antiramsey {

namespace {
__extension__ typedef unsigned __int128 wide_uint;
}  // namespace

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_key(std::initializer_list<std::uint64_t> parts) noexcept {
  std::uint64_t h = 0x6a09e667f3bcc909ULL;
  for (const auto p : parts) h = splitmix64(h ^ splitmix64(p));
  return h;
}

double unit_interval(std::uint64_t word) noexcept { return static_cast<double>(word >> 11) * 0x1.0p-53; }

std::uint64_t StreamRng::below(std::uint64_t n) noexcept {
  // Lemire's multiply-shift with rejection of the biased low range.
  std::uint64_t x = next();
  wide_uint m = static_cast<wide_uint>(x) * n;
  auto low = static_cast<std::uint64_t>(m);
  if (low < n) {
    const std::uint64_t threshold = (0 - n) % n;
    while (low < threshold) {
      x = next();
      m = static_cast<wide_uint>(x) * n;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

std::int64_t StreamRng::between(std::int64_t lo, std::int64_t hi) noexcept {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double pair_uniform(std::uint64_t seed, std::uint64_t trial, std::uint64_t pair) noexcept {
  return unit_interval(splitmix64(stream_key({seed, trial}) ^ splitmix64(pair)));
}

Graph gnp(Vertex n, double p, std::uint64_t seed, std::uint64_t trial) {
  if (n < 0) throw DomainError("negative vertex count");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("edge probability must lie in [0, 1]");
  const std::uint64_t key = stream_key({seed, trial});
  std::vector<Edge> edges;
  std::uint64_t pair = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++pair) {
      if (unit_interval(splitmix64(key ^ splitmix64(pair))) < p) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace antiramsey
