#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace fairclique {

// Deterministic across platforms: std::mt19937_64 is fully specified by the
// standard, and bounded draws use rejection sampling instead of
// std::uniform_int_distribution (whose algorithm is implementation-defined).
class StableRng {
 public:
  explicit StableRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound). bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::uint64_t(-1) - (std::uint64_t(-1) % bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  // Bernoulli(p) with 53-bit resolution.
  bool chance(double p) { return double(engine_() >> 11) * 0x1.0p-53 < p; }

 private:
  std::mt19937_64 engine_;
};

inline constexpr int kMaxAttributeRedraws = 1000;

// Uniform attribute per vertex from [0, d); the whole assignment is redrawn
// until every value occurs at least once.
inline AttributedGraph assign_random_attributes(Graph graph, attr_t d, std::uint64_t seed) {
  const vertex_t n = graph.num_vertices();
  if (d < 1) throw PreconditionError("attribute count must be at least 1");
  if (n < d) throw PreconditionError("graph has fewer vertices than attribute values");
  StableRng rng(seed);
  std::vector<attr_t> attr(n);
  for (int attempt = 0; attempt < kMaxAttributeRedraws; ++attempt) {
    std::vector<bool> used(d, false);
    attr_t distinct = 0;
    for (vertex_t v = 0; v < n; ++v) {
      attr[v] = static_cast<attr_t>(rng.below(d));
      if (!used[attr[v]]) {
        used[attr[v]] = true;
        ++distinct;
      }
    }
    if (distinct == d) {
      std::vector<std::string> names;
      for (attr_t a = 0; a < d; ++a) names.push_back("a" + std::to_string(a));
      return AttributedGraph(std::move(graph), std::move(attr), d, std::move(names));
    }
  }
  throw LoadError("could not draw an assignment covering all " + std::to_string(d) +
                  " attribute values");
}

// Erdos-Renyi G(n, p).
inline Graph random_gnp(vertex_t n, double p, std::uint64_t seed) {
  StableRng rng(seed);
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  for (vertex_t u = 0; u < n; ++u)
    for (vertex_t v = u + 1; v < n; ++v)
      if (rng.chance(p)) edges.emplace_back(u, v);
  return Graph::from_edges(n, std::move(edges));
}

// G(n, m): m distinct edges drawn uniformly (rejecting loops and repeats).
inline Graph random_gnm(vertex_t n, std::size_t m, std::uint64_t seed) {
  const std::size_t max_edges = std::size_t(n) * (n - 1) / 2;
  if (m > max_edges) throw PreconditionError("too many edges requested");
  StableRng rng(seed);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(m * 2);
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  edges.reserve(m);
  while (edges.size() < m) {
    auto u = static_cast<vertex_t>(rng.below(n));
    auto v = static_cast<vertex_t>(rng.below(n));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (seen.insert(std::uint64_t(u) * n + v).second) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace fairclique
