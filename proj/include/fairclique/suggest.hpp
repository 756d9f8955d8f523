#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "coloring.hpp"
#include "detail/search_graph.hpp"
#include "graph.hpp"

namespace fairclique {

struct KSuggestion {
  std::size_t clique_lower_bound = 0;  // size of a clique actually found
  color_t num_colors = 0;              // upper bound on the maximum clique size
  std::size_t k_low = 1;
  std::size_t k_high = 0;              // floor(clique_lower_bound / attrs); empty range when < k_low
  std::size_t k_cap = 0;               // floor(num_colors / attrs)
};

// Grows a clique from `seed`, always adding the highest-degree remaining
// common neighbor (smallest id on ties).
inline std::vector<vertex_t> greedy_clique_from(const AttributedGraph& g, vertex_t seed) {
  std::vector<vertex_t> clique{seed};
  std::vector<vertex_t> cand(g.neighbors(seed).begin(), g.neighbors(seed).end());
  while (!cand.empty()) {
    vertex_t best = cand.front();
    for (vertex_t v : cand)
      if (g.degree(v) > g.degree(best)) best = v;
    clique.push_back(best);
    cand = detail::intersect(cand, g.neighbors(best));
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

// Admissible range for k from a greedy maximum-clique lower bound grown from
// the `seeds` highest-degree vertices, plus the coloring cap.
inline KSuggestion suggest_k(const AttributedGraph& g, std::size_t seeds = 64) {
  KSuggestion s;
  const vertex_t n = g.num_vertices();
  std::vector<vertex_t> order(n);
  for (vertex_t v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](vertex_t a, vertex_t b) { return g.degree(a) > g.degree(b); });
  order.resize(std::min<std::size_t>(seeds, n));
  for (vertex_t v : order) s.clique_lower_bound = std::max(s.clique_lower_bound, greedy_clique_from(g, v).size());
  s.num_colors = greedy_color(g).num_colors;
  const std::size_t d = std::max<attr_t>(g.num_attrs(), 1);
  s.k_high = s.clique_lower_bound / d;
  s.k_cap = s.num_colors / d;
  return s;
}

}  // namespace fairclique
