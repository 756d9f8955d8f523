#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "graph.hpp"

namespace fairclique {

using color_t = std::uint32_t;
inline constexpr color_t kNoColor = std::numeric_limits<color_t>::max();

// Proper vertex coloring. Vertices outside the mask it was computed on carry
// kNoColor.
struct Coloring {
  std::vector<color_t> color;
  color_t num_colors = 0;

  color_t operator[](vertex_t v) const noexcept { return color[v]; }
};

enum class TieBreak { ascending_id, descending_id };

// Degree-ordered greedy coloring of the alive subgraph: vertices are visited
// by non-increasing masked degree and take the smallest color not used by an
// already-colored neighbor.
inline Coloring greedy_color(const AttributedGraph& g, const VertexMask& mask,
                             TieBreak tie = TieBreak::ascending_id) {
  const vertex_t n = g.num_vertices();
  std::vector<std::size_t> deg(n, 0);
  std::vector<vertex_t> order;
  order.reserve(mask.alive_count());
  for (vertex_t u = 0; u < n; ++u) {
    if (!mask[u]) continue;
    for (vertex_t v : g.neighbors(u)) deg[u] += mask[v] ? 1 : 0;
    order.push_back(u);
  }
  std::sort(order.begin(), order.end(), [&](vertex_t a, vertex_t b) {
    if (deg[a] != deg[b]) return deg[a] > deg[b];
    return tie == TieBreak::ascending_id ? a < b : a > b;
  });

  Coloring c;
  c.color.assign(n, kNoColor);
  // used[col] == stamp marks colors taken around the current vertex
  std::vector<vertex_t> used;
  vertex_t stamp = 0;
  for (vertex_t u : order) {
    ++stamp;
    for (vertex_t v : g.neighbors(u)) {
      color_t cv = c.color[v];
      if (cv == kNoColor) continue;
      if (cv >= used.size()) used.resize(cv + 1, 0);
      used[cv] = stamp;
    }
    color_t pick = 0;
    while (pick < used.size() && used[pick] == stamp) ++pick;
    c.color[u] = pick;
    c.num_colors = std::max(c.num_colors, pick + 1);
  }
  return c;
}

inline Coloring greedy_color(const AttributedGraph& g, TieBreak tie = TieBreak::ascending_id) {
  return greedy_color(g, VertexMask(g.num_vertices()), tie);
}

// Properness over edges whose endpoints are both colored, plus the contiguous
// range requirement.
inline bool validate_coloring(const AttributedGraph& g, const Coloring& c) {
  if (c.color.size() != g.num_vertices()) return false;
  std::vector<bool> seen(c.num_colors, false);
  for (vertex_t u = 0; u < g.num_vertices(); ++u) {
    color_t cu = c.color[u];
    if (cu == kNoColor) continue;
    if (cu >= c.num_colors) return false;
    seen[cu] = true;
    for (vertex_t v : g.neighbors(u))
      if (c.color[v] == cu) return false;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// Restriction of a coloring to a vertex list (local id i = vertices[i]).
inline Coloring project_coloring(const Coloring& c, std::span<const vertex_t> vertices) {
  Coloring out;
  out.color.reserve(vertices.size());
  for (vertex_t v : vertices) out.color.push_back(c.color[v]);
  out.num_colors = c.num_colors;
  return out;
}

}  // namespace fairclique
