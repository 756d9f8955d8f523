#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "graph.hpp"

namespace fairclique {

struct Clique {
  std::vector<vertex_t> vertices;         // strictly increasing
  std::vector<std::uint32_t> attr_counts;  // indexed by attribute

  friend bool operator<(const Clique& a, const Clique& b) { return a.vertices < b.vertices; }
  friend bool operator==(const Clique& a, const Clique& b) { return a.vertices == b.vertices; }
};

inline Clique make_clique(const AttributedGraph& g, std::vector<vertex_t> vertices) {
  std::sort(vertices.begin(), vertices.end());
  Clique c{std::move(vertices), std::vector<std::uint32_t>(g.num_attrs(), 0)};
  for (vertex_t v : c.vertices) ++c.attr_counts[g.attr(v)];
  return c;
}

inline bool is_clique(const AttributedGraph& g, std::span<const vertex_t> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.has_edge(vs[i], vs[j])) return false;
  return true;
}

// Deduplicated cliques in canonical (lexicographic vertex-sequence) order.
class CliqueSet {
 public:
  using const_iterator = std::set<Clique>::const_iterator;

  bool insert(Clique c) { return items_.insert(std::move(c)).second; }
  bool insert(const AttributedGraph& g, std::vector<vertex_t> vertices) {
    return insert(make_clique(g, std::move(vertices)));
  }
  void merge(CliqueSet&& other) { items_.merge(other.items_); }

  bool contains(std::vector<vertex_t> vertices) const {
    std::sort(vertices.begin(), vertices.end());
    return items_.count(Clique{std::move(vertices), {}}) > 0;
  }

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const_iterator begin() const noexcept { return items_.begin(); }
  const_iterator end() const noexcept { return items_.end(); }

  std::vector<std::vector<vertex_t>> vertex_sets() const {
    std::vector<std::vector<vertex_t>> out;
    out.reserve(items_.size());
    for (const auto& c : items_) out.push_back(c.vertices);
    return out;
  }

  friend bool operator==(const CliqueSet& a, const CliqueSet& b) { return a.items_ == b.items_; }

 private:
  std::set<Clique> items_;
};

}  // namespace fairclique
