#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "../coloring.hpp"
#include "../graph.hpp"

namespace fairclique::detail {

// Per-vertex color groups over the alive neighborhood: for each vertex u and
// each color present among its alive neighbors, the number of those neighbors
// holding each attribute.
class GroupTable {
 public:
  GroupTable(const AttributedGraph& g, const Coloring& c, const VertexMask& mask)
      : g_(&g), c_(&c), attrs_(g.num_attrs()), stride_(std::size_t(g.num_attrs()) + 1),
        offset_(std::size_t(g.num_vertices()) + 1, 0) {
    // stamp[col] == u marks colors already seen around u; slot[col] is the
    // group of col while u's counts are filled
    std::vector<vertex_t> stamp(c.num_colors, std::numeric_limits<vertex_t>::max());
    std::vector<std::size_t> slot(c.num_colors, 0);
    std::vector<color_t> colors;
    for (vertex_t u = 0; u < g.num_vertices(); ++u) {
      std::size_t first = data_.size() / stride_;
      offset_[u] = static_cast<std::uint32_t>(first);
      if (!mask[u]) continue;
      colors.clear();
      for (vertex_t v : g.neighbors(u))
        if (mask[v] && stamp[c[v]] != u) {
          stamp[c[v]] = u;
          colors.push_back(c[v]);
        }
      std::sort(colors.begin(), colors.end());
      for (std::size_t i = 0; i < colors.size(); ++i) {
        slot[colors[i]] = first + i;
        data_.push_back(colors[i]);
        data_.insert(data_.end(), attrs_, 0);
      }
      for (vertex_t v : g.neighbors(u))
        if (mask[v]) ++data_[slot[c[v]] * stride_ + 1 + g.attr(v)];
    }
    offset_[g.num_vertices()] = static_cast<std::uint32_t>(data_.size() / stride_);
  }

  std::size_t begin(vertex_t u) const noexcept { return offset_[u]; }
  std::size_t end(vertex_t u) const noexcept { return offset_[u + 1]; }
  attr_t attrs() const noexcept { return attrs_; }
  color_t color_of_group(std::size_t grp) const noexcept { return data_[grp * stride_]; }

  std::uint32_t count(std::size_t grp, attr_t a) const noexcept { return data_[grp * stride_ + 1 + a]; }

  // Group of u holding neighbors colored `col`. The color must be present.
  std::size_t locate(vertex_t u, color_t col) const noexcept {
    std::size_t grp = offset_[u];
    while (data_[grp * stride_] != col) ++grp;
    return grp;
  }

  // Removes a neighbor with color `col` and attribute `a` from u's groups;
  // returns the affected group.
  std::size_t remove_neighbor(vertex_t u, color_t col, attr_t a) noexcept {
    std::size_t grp = locate(u, col);
    --data_[grp * stride_ + 1 + a];
    return grp;
  }

  std::size_t remove_neighbor(vertex_t u, vertex_t w) noexcept { return remove_neighbor(u, (*c_)[w], g_->attr(w)); }

 private:
  const AttributedGraph* g_;
  const Coloring* c_;
  attr_t attrs_;
  std::size_t stride_;
  std::vector<std::uint32_t> offset_;
  // per group: color, then one neighbor count per attribute
  std::vector<std::uint32_t> data_;
};

// Colorful degrees D_a(u) (distinct neighbor colors per attribute) and their
// minimum, maintained under neighbor removal.
class ColorfulDegrees {
 public:
  ColorfulDegrees(const AttributedGraph& g, const Coloring& c, const VertexMask& mask)
      : c_(&c), g_(&g), groups_(g, c, mask), attrs_(g.num_attrs()), stride_(std::size_t(g.num_attrs()) + 1),
        deg_(std::size_t(g.num_vertices()) * stride_, 0) {
    for (vertex_t u = 0; u < g.num_vertices(); ++u) {
      if (!mask[u]) continue;
      int* d = &deg_[u * stride_];
      for (std::size_t grp = groups_.begin(u); grp < groups_.end(u); ++grp)
        for (attr_t a = 0; a < attrs_; ++a)
          if (groups_.count(grp, a) > 0) ++d[1 + a];
      d[0] = *std::min_element(d + 1, d + stride_);
    }
  }

  int min_degree(vertex_t u) const noexcept { return deg_[u * stride_]; }
  int degree(vertex_t u, attr_t a) const noexcept { return deg_[u * stride_ + 1 + a]; }

  // Neighbor w of u was removed. Returns true iff D_min(u) changed.
  bool remove_neighbor(vertex_t u, vertex_t w) { return remove_neighbor(u, (*c_)[w], g_->attr(w)); }

  bool remove_neighbor(vertex_t u, color_t col, attr_t a) {
    std::size_t grp = groups_.remove_neighbor(u, col, a);
    if (groups_.count(grp, a) != 0) return false;
    int* d = &deg_[u * stride_];
    // only a degree equal to the minimum can lower it
    if (d[1 + a]-- != d[0]) return false;
    d[0] = d[1 + a];
    return true;
  }

 private:
  const Coloring* c_;
  const AttributedGraph* g_;
  GroupTable groups_;
  attr_t attrs_;
  std::size_t stride_;
  // per vertex: minimum, then one colorful degree per attribute
  std::vector<int> deg_;
};

// Two-attribute group categories (only-a0, only-a1, mixed) per vertex,
// maintained in O(1) per neighbor removal.
class BalanceGroups {
 public:
  struct Counts {
    int c1 = 0;
    int c2 = 0;
    int cm = 0;
  };

  BalanceGroups(const AttributedGraph& g, const Coloring& c, const VertexMask& mask)
      : c_(&c), groups_(g, c, mask), counts_(g.num_vertices()) {
    for (vertex_t u = 0; u < g.num_vertices(); ++u) {
      if (!mask[u]) continue;
      for (std::size_t grp = groups_.begin(u); grp < groups_.end(u); ++grp) adjust(counts_[u], category(grp), +1);
    }
  }

  const Counts& counts(vertex_t u) const noexcept { return counts_[u]; }

  void remove_neighbor(vertex_t u, vertex_t w) {
    std::size_t grp = groups_.locate(u, (*c_)[w]);
    int before = category(grp);
    groups_.remove_neighbor(u, w);
    int after = category(grp);
    if (before != after) {
      adjust(counts_[u], before, -1);
      adjust(counts_[u], after, +1);
    }
  }

 private:
  // 0 empty, 1 only attribute 0, 2 only attribute 1, 3 mixed
  int category(std::size_t grp) const noexcept {
    return (groups_.count(grp, 0) > 0 ? 1 : 0) | (groups_.count(grp, 1) > 0 ? 2 : 0);
  }
  static void adjust(Counts& k, int cat, int delta) noexcept {
    if (cat == 1) k.c1 += delta;
    else if (cat == 2) k.c2 += delta;
    else if (cat == 3) k.cm += delta;
  }

  const Coloring* c_;
  GroupTable groups_;
  std::vector<Counts> counts_;
};

}  // namespace fairclique::detail
