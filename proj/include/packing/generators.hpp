#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "packing/errors.hpp"
#include "packing/graph.hpp"
#include "packing/set_system.hpp"

namespace packing {

/// splitmix64. The generator is pinned so that seeded instances are
/// reproducible across platforms and implementations:
///   next(): state += 0x9E3779B97F4A7C15
///           z = state
///           z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///           z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///           return z ^ (z >> 31)
///   next_double() = (next() >> 11) * 2^-53, in [0,1)
///   next_below(b) = next() % b
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
  std::uint64_t state_;
};

namespace detail {

inline Graph gen_gnp_with(SplitMix64& rng, int n, double p) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.next_double() < p) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

inline SetSystem gen_setsystem_with(SplitMix64& rng, int n, int m, int max_set_size) {
  std::vector<std::vector<int>> sets;
  sets.reserve(m);
  std::vector<int> pool(n);
  for (int j = 0; j < m; ++j) {
    const int size = 1 + static_cast<int>(rng.next_below(max_set_size));
    std::iota(pool.begin(), pool.end(), 0);
    for (int t = 0; t < size; ++t) {
      const int other = t + static_cast<int>(rng.next_below(n - t));
      std::swap(pool[t], pool[other]);
    }
    sets.emplace_back(pool.begin(), pool.begin() + size);
  }
  return SetSystem(n, std::move(sets));
}

}  // namespace detail

/// G(n,p): each of the n(n-1)/2 potential edges, visited in ascending
/// (i,j) order, is included independently with probability p.
inline Graph gen_gnp(int n, double p, std::uint64_t seed) {
  if (n < 0) throw InputError("gen_gnp: n must be non-negative");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("gen_gnp: p must be in [0,1]");
  SplitMix64 rng(seed);
  return detail::gen_gnp_with(rng, n, p);
}

/// Each set gets a uniform size in [1, max_set_size] and uniformly chosen
/// distinct elements (partial Fisher-Yates over the universe).
inline SetSystem gen_setsystem(int n, int m, int max_set_size, std::uint64_t seed) {
  if (n < 1) throw InputError("gen_setsystem: n must be at least 1");
  if (m < 0) throw InputError("gen_setsystem: m must be non-negative");
  if (max_set_size < 1 || max_set_size > n)
    throw InputError("gen_setsystem: max_set_size must be in [1, n]");
  SplitMix64 rng(seed);
  return detail::gen_setsystem_with(rng, n, m, max_set_size);
}

}  // namespace packing
