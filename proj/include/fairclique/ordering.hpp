#pragma once

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coloring.hpp"
#include "detail/groups.hpp"
#include "graph.hpp"
#include "pruning.hpp"

namespace fairclique {

// Rank permutation of a vertex set. order[r] is the vertex of rank r.
class VertexOrdering {
 public:
  VertexOrdering() = default;
  explicit VertexOrdering(std::vector<vertex_t> order) : order_(std::move(order)) {
    index_.reserve(order_.size());
    for (std::uint32_t r = 0; r < order_.size(); ++r) index_.emplace_back(order_[r], r);
    std::sort(index_.begin(), index_.end());
    for (std::size_t i = 1; i < index_.size(); ++i)
      if (index_[i].first == index_[i - 1].first) throw std::invalid_argument("ordering repeats a vertex");
  }

  std::size_t size() const noexcept { return order_.size(); }
  const std::vector<vertex_t>& order() const noexcept { return order_; }
  vertex_t at(std::uint32_t rank) const { return order_.at(rank); }

  std::uint32_t rank(vertex_t v) const {
    auto it = std::lower_bound(index_.begin(), index_.end(), std::pair<vertex_t, std::uint32_t>{v, 0});
    if (it == index_.end() || it->first != v) throw std::out_of_range("vertex not in ordering");
    return it->second;
  }

  std::optional<std::uint32_t> find_rank(vertex_t v) const noexcept {
    auto it = std::lower_bound(index_.begin(), index_.end(), std::pair<vertex_t, std::uint32_t>{v, 0});
    if (it == index_.end() || it->first != v) return std::nullopt;
    return it->second;
  }

 private:
  std::vector<vertex_t> order_;
  std::vector<std::pair<vertex_t, std::uint32_t>> index_;
};

enum class OrderingKind { automatic, colorod, fairod, heurod, bfs, vid };

inline std::string_view to_string(OrderingKind o) {
  switch (o) {
    case OrderingKind::automatic: return "auto";
    case OrderingKind::colorod: return "colorod";
    case OrderingKind::fairod: return "fairod";
    case OrderingKind::heurod: return "heurod";
    case OrderingKind::bfs: return "bfs";
    case OrderingKind::vid: return "vid";
  }
  return "?";
}

inline OrderingKind parse_ordering_kind(std::string_view s) {
  if (s == "auto") return OrderingKind::automatic;
  if (s == "colorod") return OrderingKind::colorod;
  if (s == "fairod") return OrderingKind::fairod;
  if (s == "heurod") return OrderingKind::heurod;
  if (s == "bfs") return OrderingKind::bfs;
  if (s == "vid") return OrderingKind::vid;
  throw PreconditionError("unknown ordering: " + std::string(s));
}

// Greedy approximate fairness degree over one vertex's color groups: each
// group goes to the attribute with the smallest counter among those present in
// the group (lowest index on ties); the result is the smallest counter.
inline int greedy_group_degree(const detail::GroupTable& groups, vertex_t u, std::vector<int>& cnt) {
  const attr_t d = groups.attrs();
  cnt.assign(d, 0);
  for (std::size_t grp = groups.begin(u); grp < groups.end(u); ++grp) {
    attr_t pick = d;
    for (attr_t a = 0; a < d; ++a)
      if (groups.count(grp, a) > 0 && (pick == d || cnt[a] < cnt[pick])) pick = a;
    if (pick != d) ++cnt[pick];
  }
  return *std::min_element(cnt.begin(), cnt.end());
}

namespace detail {

// Repeatedly extracts the vertex with the smallest key (ties: smallest local
// id, which is the smallest global id since components are sorted) from the
// induced subgraph, letting `on_remove(v, u)` update v's state when its
// neighbor u leaves and `key(v)` re-read v's key.
template <class Key, class OnRemove>
std::vector<vertex_t> peel_order(const AttributedGraph& sub, Key key, OnRemove on_remove) {
  const vertex_t n = sub.num_vertices();
  std::vector<int> current(n);
  std::set<std::pair<int, vertex_t>> heap;
  for (vertex_t u = 0; u < n; ++u) {
    current[u] = key(u);
    heap.emplace(current[u], u);
  }
  std::vector<bool> done(n, false);
  std::vector<vertex_t> order;
  order.reserve(n);
  while (!heap.empty()) {
    vertex_t u = heap.begin()->second;
    heap.erase(heap.begin());
    done[u] = true;
    order.push_back(u);
    for (vertex_t v : sub.neighbors(u)) {
      if (done[v]) continue;
      on_remove(v, u);
      int k = key(v);
      if (k != current[v]) {
        heap.erase({current[v], v});
        current[v] = k;
        heap.emplace(k, v);
      }
    }
  }
  return order;
}

inline std::vector<vertex_t> to_global(std::span<const vertex_t> component, const std::vector<vertex_t>& local) {
  std::vector<vertex_t> out;
  out.reserve(local.size());
  for (vertex_t l : local) out.push_back(component[l]);
  return out;
}

inline std::vector<vertex_t> sorted_copy(std::span<const vertex_t> component) {
  std::vector<vertex_t> v(component.begin(), component.end());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace detail

// Iterative minimum-D_min removal order (colorful k-core peeling order).
inline VertexOrdering color_od(const AttributedGraph& g, const Coloring& c, std::span<const vertex_t> component) {
  auto comp = detail::sorted_copy(component);
  auto sub = induced_subgraph(g, comp);
  auto sub_c = project_coloring(c, comp);
  detail::ColorfulDegrees deg(sub, sub_c, VertexMask(sub.num_vertices()));
  auto local = detail::peel_order(
      sub, [&](vertex_t v) { return deg.min_degree(v); }, [&](vertex_t v, vertex_t u) { deg.remove_neighbor(v, u); });
  return VertexOrdering(detail::to_global(comp, local));
}

// Iterative minimum-fairness-degree removal order (two attributes).
inline VertexOrdering fair_od(const AttributedGraph& g, const Coloring& c, std::span<const vertex_t> component) {
  detail::require_two_attributes(g, "fair_od");
  auto comp = detail::sorted_copy(component);
  auto sub = induced_subgraph(g, comp);
  auto sub_c = project_coloring(c, comp);
  detail::BalanceGroups groups(sub, sub_c, VertexMask(sub.num_vertices()));
  auto local = detail::peel_order(
      sub,
      [&](vertex_t v) {
        const auto& k = groups.counts(v);
        return fair_deg(GroupCounts{k.c1, k.c2, k.cm});
      },
      [&](vertex_t v, vertex_t u) { groups.remove_neighbor(v, u); });
  return VertexOrdering(detail::to_global(comp, local));
}

// Iterative minimum greedy-group-degree removal order; any number of
// attributes.
inline VertexOrdering heur_od(const AttributedGraph& g, const Coloring& c, std::span<const vertex_t> component) {
  auto comp = detail::sorted_copy(component);
  auto sub = induced_subgraph(g, comp);
  auto sub_c = project_coloring(c, comp);
  detail::GroupTable groups(sub, sub_c, VertexMask(sub.num_vertices()));
  std::vector<int> scratch;
  auto local = detail::peel_order(
      sub, [&](vertex_t v) { return greedy_group_degree(groups, v, scratch); },
      [&](vertex_t v, vertex_t u) { groups.remove_neighbor(v, u); });
  return VertexOrdering(detail::to_global(comp, local));
}

// Breadth-first visiting order from the smallest id, neighbors in ascending id.
inline VertexOrdering bfs_od(const AttributedGraph& g, std::span<const vertex_t> component) {
  auto comp = detail::sorted_copy(component);
  auto sub = induced_subgraph(g, comp);
  std::vector<bool> seen(sub.num_vertices(), false);
  std::vector<vertex_t> local;
  local.reserve(sub.num_vertices());
  std::deque<vertex_t> queue;
  for (vertex_t s = 0; s < sub.num_vertices(); ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    queue.push_back(s);
    while (!queue.empty()) {
      vertex_t u = queue.front();
      queue.pop_front();
      local.push_back(u);
      for (vertex_t v : sub.neighbors(u))
        if (!seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
    }
  }
  return VertexOrdering(detail::to_global(comp, local));
}

inline VertexOrdering vid_od(std::span<const vertex_t> component) {
  return VertexOrdering(detail::sorted_copy(component));
}

inline VertexOrdering make_ordering(OrderingKind kind, const AttributedGraph& g, const Coloring& c,
                                    std::span<const vertex_t> component) {
  switch (kind) {
    case OrderingKind::colorod: return color_od(g, c, component);
    case OrderingKind::fairod: return fair_od(g, c, component);
    case OrderingKind::heurod: return heur_od(g, c, component);
    case OrderingKind::bfs: return bfs_od(g, component);
    case OrderingKind::vid: return vid_od(component);
    case OrderingKind::automatic: break;
  }
  throw PreconditionError("ordering 'auto' must be resolved before use");
}

}  // namespace fairclique
