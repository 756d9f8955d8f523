#pragma once

#include <algorithm>
#include <deque>
#include <string>
#include <string_view>

#include "coloring.hpp"
#include "detail/groups.hpp"
#include "graph.hpp"

namespace fairclique {

// Numbers of neighbor color groups holding only attribute 0 (c1), only
// attribute 1 (c2), or both (cm).
struct GroupCounts {
  int c1 = 0;
  int c2 = 0;
  int cm = 0;
};

// Fairness degree: the largest even number of groups that can be selected so
// both attributes receive the same number of groups.
constexpr int fair_deg(GroupCounts g) noexcept {
  auto [lo, hi] = g.c1 <= g.c2 ? std::pair{g.c1, g.c2} : std::pair{g.c2, g.c1};
  if (g.cm >= hi - lo) return 2 * ((g.cm - (hi - lo)) / 2 + hi);
  return 2 * (g.cm + lo);
}

// Enhanced colorful degree against threshold k: mixed groups top up the
// attribute-0 side to k first, then the attribute-1 side; the smaller side is
// returned. The result is >= k exactly when some assignment of mixed groups
// gives both sides at least k groups.
constexpr int enhanced_col_deg(GroupCounts g, int k) noexcept {
  int need1 = std::max(0, k - g.c1);
  int give1 = std::min(need1, g.cm);
  g.c1 += give1;
  g.cm -= give1;
  int need2 = std::max(0, k - g.c2);
  int give2 = std::min(need2, g.cm);
  g.c2 += give2;
  g.cm -= give2;
  return std::min(g.c1, g.c2);
}

namespace detail {

inline void require_two_attributes(const AttributedGraph& g, std::string_view what) {
  if (g.num_attrs() != 2)
    throw PreconditionError(std::string(what) + " requires exactly two attribute values (graph has " +
                            std::to_string(g.num_attrs()) + "); use colorful_core instead");
}

// FIFO peeling of a two-attribute group-category score.
template <class Score>
VertexMask peel_balance(const AttributedGraph& g, const Coloring& c, VertexMask mask, int threshold,
                        Score score) {
  BalanceGroups groups(g, c, mask);
  std::deque<vertex_t> queue;
  auto bad = [&](vertex_t u) {
    const auto& k = groups.counts(u);
    return score(GroupCounts{k.c1, k.c2, k.cm}) < threshold;
  };
  for (vertex_t u = 0; u < g.num_vertices(); ++u)
    if (mask[u] && bad(u)) {
      mask.remove(u);
      queue.push_back(u);
    }
  while (!queue.empty()) {
    vertex_t u = queue.front();
    queue.pop_front();
    for (vertex_t v : g.neighbors(u)) {
      if (!mask[v]) continue;
      groups.remove_neighbor(v, u);
      if (bad(v)) {
        mask.remove(v);
        queue.push_back(v);
      }
    }
  }
  return mask;
}

}  // namespace detail

// Maximal sub-mask in which every vertex sees at least k distinct colors
// among its neighbors of every attribute.
inline VertexMask colorful_core(const AttributedGraph& g, const Coloring& c, int k, VertexMask mask) {
  if (k <= 0) return mask;
  detail::ColorfulDegrees deg(g, c, mask);
  std::vector<vertex_t> stack;
  for (vertex_t u = 0; u < g.num_vertices(); ++u)
    if (mask[u] && deg.min_degree(u) < k) {
      mask.remove(u);
      stack.push_back(u);
    }
  while (!stack.empty()) {
    vertex_t u = stack.back();
    stack.pop_back();
    const color_t col = c[u];
    const attr_t a = g.attr(u);
    for (vertex_t v : g.neighbors(u)) {
      if (!mask[v]) continue;
      if (deg.remove_neighbor(v, col, a) && deg.min_degree(v) < k) {
        mask.remove(v);
        stack.push_back(v);
      }
    }
  }
  return mask;
}

inline VertexMask colorful_core(const AttributedGraph& g, const Coloring& c, int k) {
  return colorful_core(g, c, k, VertexMask(g.num_vertices()));
}

// Maximal sub-mask with fairness degree >= 2k everywhere (two attributes).
// Starts from the colorful k-core.
inline VertexMask fairness_core(const AttributedGraph& g, const Coloring& c, int k, VertexMask mask) {
  detail::require_two_attributes(g, "fairness_core");
  if (k <= 0) return mask;
  mask = colorful_core(g, c, k, std::move(mask));
  return detail::peel_balance(g, c, std::move(mask), 2 * k, [](GroupCounts gc) { return fair_deg(gc); });
}

inline VertexMask fairness_core(const AttributedGraph& g, const Coloring& c, int k) {
  return fairness_core(g, c, k, VertexMask(g.num_vertices()));
}

// Maximal sub-mask with enhanced colorful degree >= k everywhere (two
// attributes).
inline VertexMask enhanced_colorful_core(const AttributedGraph& g, const Coloring& c, int k, VertexMask mask) {
  detail::require_two_attributes(g, "enhanced_colorful_core");
  if (k <= 0) return mask;
  return detail::peel_balance(g, c, std::move(mask), k, [k](GroupCounts gc) { return enhanced_col_deg(gc, k); });
}

inline VertexMask enhanced_colorful_core(const AttributedGraph& g, const Coloring& c, int k) {
  return enhanced_colorful_core(g, c, k, VertexMask(g.num_vertices()));
}

enum class PruneKind { automatic, none, colorful, fairness, enhanced };

inline std::string_view to_string(PruneKind p) {
  switch (p) {
    case PruneKind::automatic: return "auto";
    case PruneKind::none: return "none";
    case PruneKind::colorful: return "colorful";
    case PruneKind::fairness: return "fairness";
    case PruneKind::enhanced: return "enhanced";
  }
  return "?";
}

inline PruneKind parse_prune_kind(std::string_view s) {
  if (s == "auto") return PruneKind::automatic;
  if (s == "none") return PruneKind::none;
  if (s == "colorful") return PruneKind::colorful;
  if (s == "fairness") return PruneKind::fairness;
  if (s == "enhanced") return PruneKind::enhanced;
  throw PreconditionError("unknown prune kind: " + std::string(s));
}

// Runs the selected core at threshold k. `automatic` must be resolved by the
// caller.
inline VertexMask apply_core(PruneKind kind, const AttributedGraph& g, const Coloring& c, int k) {
  VertexMask all(g.num_vertices());
  switch (kind) {
    case PruneKind::none: return all;
    case PruneKind::colorful: return colorful_core(g, c, k, std::move(all));
    case PruneKind::fairness: return fairness_core(g, c, k, std::move(all));
    case PruneKind::enhanced: return enhanced_colorful_core(g, c, k, std::move(all));
    case PruneKind::automatic: break;
  }
  throw PreconditionError("prune kind 'auto' must be resolved before use");
}

}  // namespace fairclique
