#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "clique_set.hpp"
#include "detail/search_graph.hpp"
#include "graph.hpp"

// Brute-force reference enumerators. Exponential; meant for small graphs.

namespace fairclique {

namespace detail {

inline void bk_pivot(const AttributedGraph& g, VertexList& r, VertexList p, VertexList x, CliqueSet& out) {
  if (p.empty()) {
    if (x.empty()) out.insert(g, r);
    return;
  }
  // pivot from P ∪ X maximizing |P ∩ N(pivot)|, smallest id on ties
  vertex_t pivot = 0;
  std::size_t best = 0;
  bool found = false;
  VertexList tmp;
  for (const VertexList* side : {&p, &x})
    for (vertex_t w : *side) {
      intersect(p, g.neighbors(w), tmp);
      if (!found || tmp.size() > best || (tmp.size() == best && w < pivot)) {
        pivot = w;
        best = tmp.size();
        found = true;
      }
    }
  VertexList branch;
  std::set_difference(p.begin(), p.end(), g.neighbors(pivot).begin(), g.neighbors(pivot).end(),
                      std::back_inserter(branch));
  for (vertex_t v : branch) {
    auto nb = g.neighbors(v);
    r.push_back(v);
    bk_pivot(g, r, intersect(p, nb), intersect(x, nb), out);
    r.pop_back();
    p.erase(std::lower_bound(p.begin(), p.end(), v));
    x.insert(std::lower_bound(x.begin(), x.end(), v), v);
  }
}

// Calls visit(R) for every clique R with at least min_size vertices.
inline void for_each_clique(const AttributedGraph& g, std::size_t min_size,
                            const std::function<void(const VertexList&)>& visit) {
  VertexList r;
  std::function<void(const VertexList&)> grow = [&](const VertexList& p) {
    if (r.size() >= min_size && !r.empty()) visit(r);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (r.size() + (p.size() - i) < min_size) return;
      vertex_t v = p[i];
      r.push_back(v);
      grow(intersect(std::span<const vertex_t>(p).subspan(i + 1), g.neighbors(v)));
      r.pop_back();
    }
  };
  VertexList all(g.num_vertices());
  for (vertex_t v = 0; v < g.num_vertices(); ++v) all[v] = v;
  grow(all);
}

// Keeps the members of `found` that are not a proper subset of another member.
inline CliqueSet inclusion_maximal(const AttributedGraph& g, std::vector<VertexList> found) {
  std::sort(found.begin(), found.end(),
            [](const VertexList& a, const VertexList& b) { return a.size() != b.size() ? a.size() > b.size() : a < b; });
  std::vector<VertexList> kept;
  for (auto& q : found) {
    bool covered = std::any_of(kept.begin(), kept.end(), [&](const VertexList& big) {
      return big.size() > q.size() && std::includes(big.begin(), big.end(), q.begin(), q.end());
    });
    if (!covered) kept.push_back(std::move(q));
  }
  CliqueSet out;
  for (auto& q : kept) out.insert(g, std::move(q));
  return out;
}

template <class Accept>
CliqueSet maximal_by_filter(const AttributedGraph& g, int k, Accept accept) {
  std::vector<VertexList> found;
  std::vector<std::int64_t> cnt(g.num_attrs());
  for_each_clique(g, std::size_t(std::max(k, 0)) * g.num_attrs(), [&](const VertexList& r) {
    std::fill(cnt.begin(), cnt.end(), 0);
    for (vertex_t v : r) ++cnt[g.attr(v)];
    auto [lo, hi] = std::minmax_element(cnt.begin(), cnt.end());
    if (*lo >= k && accept(*lo, *hi)) found.push_back(r);
  });
  return inclusion_maximal(g, std::move(found));
}

}  // namespace detail

// All maximal cliques of the alive subgraph (Bron-Kerbosch with pivoting).
inline CliqueSet bk_pivot_maximal_cliques(const AttributedGraph& g, const VertexMask& mask) {
  CliqueSet out;
  detail::VertexList r;
  detail::VertexList p = mask.vertices();
  if (mask.alive_count() == g.num_vertices()) {
    detail::bk_pivot(g, r, std::move(p), {}, out);
    return out;
  }
  auto sub = induced_subgraph(g, p);
  CliqueSet local;
  detail::VertexList all(sub.num_vertices());
  for (vertex_t v = 0; v < sub.num_vertices(); ++v) all[v] = v;
  detail::bk_pivot(sub, r, std::move(all), {}, local);
  for (const auto& c : local) {
    detail::VertexList global;
    for (vertex_t v : c.vertices) global.push_back(p[v]);
    out.insert(g, std::move(global));
  }
  return out;
}

inline CliqueSet bk_pivot_maximal_cliques(const AttributedGraph& g) {
  return bk_pivot_maximal_cliques(g, VertexMask(g.num_vertices()));
}

inline CliqueSet base_weak(const AttributedGraph& g, int k) {
  CliqueSet out;
  for (const auto& c : bk_pivot_maximal_cliques(g))
    if (std::all_of(c.attr_counts.begin(), c.attr_counts.end(), [k](std::uint32_t n) { return int(n) >= k; }))
      out.insert(c);
  return out;
}

inline CliqueSet base_strong(const AttributedGraph& g, int k) {
  return detail::maximal_by_filter(g, k, [](std::int64_t lo, std::int64_t hi) { return lo == hi; });
}

inline CliqueSet base_relative(const AttributedGraph& g, int k, std::int64_t delta) {
  return detail::maximal_by_filter(g, k, [delta](std::int64_t lo, std::int64_t hi) { return hi - lo <= delta; });
}

}  // namespace fairclique
