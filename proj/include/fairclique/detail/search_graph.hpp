#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "../graph.hpp"
#include "../ordering.hpp"

namespace fairclique::detail {

using VertexList = std::vector<vertex_t>;

inline void intersect(std::span<const vertex_t> a, std::span<const vertex_t> b, VertexList& out) {
  out.clear();
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
}

inline VertexList intersect(std::span<const vertex_t> a, std::span<const vertex_t> b) {
  VertexList out;
  intersect(a, b, out);
  return out;
}

inline VertexList unite(std::span<const vertex_t> a, std::span<const vertex_t> b) {
  VertexList out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// One connected component relabelled so that local id == rank in the chosen
// ordering. Adjacency lists hold local ids in increasing order.
class SearchGraph {
 public:
  SearchGraph(const AttributedGraph& g, const VertexMask& mask, const VertexOrdering& ordering)
      : attrs_(g.num_attrs()), global_(ordering.order()), adj_(global_.size()), attr_(global_.size()) {
    for (vertex_t r = 0; r < global_.size(); ++r) {
      vertex_t u = global_[r];
      attr_[r] = g.attr(u);
      for (vertex_t w : g.neighbors(u)) {
        if (!mask[w]) continue;
        if (auto rw = ordering.find_rank(w)) adj_[r].push_back(*rw);
      }
      std::sort(adj_[r].begin(), adj_[r].end());
    }
  }

  vertex_t num_vertices() const noexcept { return static_cast<vertex_t>(global_.size()); }
  attr_t num_attrs() const noexcept { return attrs_; }
  attr_t attr(vertex_t u) const noexcept { return attr_[u]; }
  std::span<const vertex_t> neighbors(vertex_t u) const noexcept { return adj_[u]; }
  vertex_t global(vertex_t u) const noexcept { return global_[u]; }

  VertexList to_global(std::span<const vertex_t> local) const {
    VertexList out;
    out.reserve(local.size());
    for (vertex_t u : local) out.push_back(global_[u]);
    return out;
  }

 private:
  attr_t attrs_;
  VertexList global_;
  std::vector<VertexList> adj_;
  std::vector<attr_t> attr_;
};

// Whether `vs` (sorted) contains a clique with exactly one vertex of every
// attribute. Works on any graph type with sorted neighbors(), attr() and
// num_attrs().
template <class G>
bool has_rainbow_clique(const G& g, std::span<const vertex_t> vs, attr_t next = 0) {
  const attr_t d = g.num_attrs();
  if (next == d) return true;
  std::vector<bool> present(d, false);
  for (vertex_t v : vs) present[g.attr(v)] = true;
  for (attr_t a = next; a < d; ++a)
    if (!present[a]) return false;
  VertexList narrowed;
  for (vertex_t v : vs) {
    if (g.attr(v) != next) continue;
    intersect(vs, g.neighbors(v), narrowed);
    if (has_rainbow_clique(g, std::span<const vertex_t>(narrowed), next + 1)) return true;
  }
  return false;
}

}  // namespace fairclique::detail
