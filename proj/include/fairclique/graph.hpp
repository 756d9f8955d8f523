#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>
#include <span>

namespace fairclique {

using vertex_t = std::uint32_t;
using attr_t = std::uint32_t;
using original_id_t = std::uint64_t;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Simple undirected graph in CSR form. Neighbor lists are strictly increasing.
class Graph {
 public:
  Graph() = default;

  // Builds from an arbitrary edge list on dense ids [0, n). Self-loops and
  // duplicates are dropped. original_ids defaults to the identity.
  static Graph from_edges(vertex_t n, std::vector<std::pair<vertex_t, vertex_t>> edges,
                          std::vector<original_id_t> original_ids = {}) {
    Graph g;
    g.n_ = n;
    for (auto& [u, v] : edges) {
      if (u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
      if (u > v) std::swap(u, v);
    }
    std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.m_ = edges.size();

    g.offsets_.assign(std::size_t(n) + 1, 0);
    for (const auto& [u, v] : edges) {
      ++g.offsets_[u + 1];
      ++g.offsets_[v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.neighbors_.resize(2 * g.m_);
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    // edges are sorted by (u, v), so each list receives increasing ids from the
    // "u" side first; sort per list afterwards to merge both sides.
    for (const auto& [u, v] : edges) {
      g.neighbors_[fill[u]++] = v;
      g.neighbors_[fill[v]++] = u;
    }
    for (vertex_t u = 0; u < n; ++u)
      std::sort(g.neighbors_.begin() + g.offsets_[u], g.neighbors_.begin() + g.offsets_[u + 1]);

    if (original_ids.empty()) {
      original_ids.resize(n);
      for (vertex_t u = 0; u < n; ++u) original_ids[u] = u;
    }
    if (original_ids.size() != n) throw std::invalid_argument("original id table size mismatch");
    g.original_ids_ = std::move(original_ids);
    g.index_original_ids();
    return g;
  }

  vertex_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return m_; }

  std::span<const vertex_t> neighbors(vertex_t u) const noexcept {
    return {neighbors_.data() + offsets_[u], neighbors_.data() + offsets_[u + 1]};
  }
  std::size_t degree(vertex_t u) const noexcept { return offsets_[u + 1] - offsets_[u]; }

  bool has_edge(vertex_t u, vertex_t v) const noexcept {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  original_id_t original_id(vertex_t u) const noexcept { return original_ids_[u]; }
  std::span<const original_id_t> original_ids() const noexcept { return original_ids_; }

  std::optional<vertex_t> find_original(original_id_t id) const {
    auto it = std::lower_bound(by_original_.begin(), by_original_.end(),
                               std::pair<original_id_t, vertex_t>{id, 0});
    if (it == by_original_.end() || it->first != id) return std::nullopt;
    return it->second;
  }

 private:
  void index_original_ids() {
    by_original_.clear();
    by_original_.reserve(n_);
    for (vertex_t u = 0; u < n_; ++u) by_original_.emplace_back(original_ids_[u], u);
    std::sort(by_original_.begin(), by_original_.end());
    for (std::size_t i = 1; i < by_original_.size(); ++i)
      if (by_original_[i].first == by_original_[i - 1].first)
        throw std::invalid_argument("duplicate original vertex id");
  }

  vertex_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<vertex_t> neighbors_;
  std::vector<original_id_t> original_ids_;
  std::vector<std::pair<original_id_t, vertex_t>> by_original_;
};

// A graph plus one categorical attribute per vertex.
//
// Loaded graphs satisfy: every index in [0, num_attrs) is held by at least one
// vertex. Induced subgraphs keep the parent's attribute domain, so an index may
// be absent there.
class AttributedGraph {
 public:
  AttributedGraph() = default;

  AttributedGraph(Graph topology, std::vector<attr_t> attr, attr_t num_attrs,
                  std::vector<std::string> attr_names = {})
      : topo_(std::move(topology)), attr_(std::move(attr)), num_attrs_(num_attrs),
        attr_names_(std::move(attr_names)) {
    if (attr_.size() != topo_.num_vertices())
      throw std::invalid_argument("attribute vector size mismatch");
    if (num_attrs_ == 0 && topo_.num_vertices() > 0)
      throw std::invalid_argument("attribute domain must be non-empty");
    for (attr_t a : attr_)
      if (a >= num_attrs_) throw std::invalid_argument("attribute index out of range");
    if (attr_names_.empty())
      for (attr_t a = 0; a < num_attrs_; ++a) attr_names_.push_back(std::to_string(a));
    if (attr_names_.size() != num_attrs_) throw std::invalid_argument("attribute name table size mismatch");
  }

  // Every vertex gets attribute 0 from a one-value domain.
  static AttributedGraph uniform(Graph topology) {
    std::vector<attr_t> attr(topology.num_vertices(), 0);
    return AttributedGraph(std::move(topology), std::move(attr), 1);
  }

  const Graph& topology() const noexcept { return topo_; }
  vertex_t num_vertices() const noexcept { return topo_.num_vertices(); }
  std::size_t num_edges() const noexcept { return topo_.num_edges(); }
  std::span<const vertex_t> neighbors(vertex_t u) const noexcept { return topo_.neighbors(u); }
  std::size_t degree(vertex_t u) const noexcept { return topo_.degree(u); }
  bool has_edge(vertex_t u, vertex_t v) const noexcept { return topo_.has_edge(u, v); }
  original_id_t original_id(vertex_t u) const noexcept { return topo_.original_id(u); }
  std::optional<vertex_t> find_original(original_id_t id) const { return topo_.find_original(id); }

  attr_t attr(vertex_t u) const noexcept { return attr_[u]; }
  std::span<const attr_t> attrs() const noexcept { return attr_; }
  attr_t num_attrs() const noexcept { return num_attrs_; }
  const std::vector<std::string>& attr_names() const noexcept { return attr_names_; }

  std::vector<std::size_t> attr_histogram() const {
    std::vector<std::size_t> h(num_attrs_, 0);
    for (attr_t a : attr_) ++h[a];
    return h;
  }

 private:
  Graph topo_;
  std::vector<attr_t> attr_;
  attr_t num_attrs_ = 1;
  std::vector<std::string> attr_names_;
};

class VertexMask {
 public:
  VertexMask() = default;
  explicit VertexMask(vertex_t n, bool value = true) : alive_(n, value), count_(value ? n : 0) {}

  static VertexMask from_vertices(vertex_t n, std::span<const vertex_t> vs) {
    VertexMask m(n, false);
    for (vertex_t v : vs) m.set(v, true);
    return m;
  }

  bool operator[](vertex_t v) const noexcept { return alive_[v]; }
  bool alive(vertex_t v) const noexcept { return alive_[v]; }

  void set(vertex_t v, bool value) {
    if (alive_[v] == value) return;
    alive_[v] = value;
    value ? ++count_ : --count_;
  }
  void remove(vertex_t v) { set(v, false); }

  vertex_t size() const noexcept { return static_cast<vertex_t>(alive_.size()); }
  vertex_t alive_count() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  std::vector<vertex_t> vertices() const {
    std::vector<vertex_t> out;
    out.reserve(count_);
    for (vertex_t v = 0; v < alive_.size(); ++v)
      if (alive_[v]) out.push_back(v);
    return out;
  }

  // True iff every alive vertex here is alive in other.
  bool subset_of(const VertexMask& other) const {
    for (vertex_t v = 0; v < alive_.size(); ++v)
      if (alive_[v] && !other.alive_[v]) return false;
    return true;
  }

  friend bool operator==(const VertexMask& a, const VertexMask& b) { return a.alive_ == b.alive_; }

 private:
  std::vector<bool> alive_;
  vertex_t count_ = 0;
};

inline std::size_t count_masked_edges(const AttributedGraph& g, const VertexMask& mask) {
  std::size_t m = 0;
  for (vertex_t u = 0; u < g.num_vertices(); ++u) {
    if (!mask[u]) continue;
    for (vertex_t v : g.neighbors(u))
      if (v > u && mask[v]) ++m;
  }
  return m;
}

// ---------------------------------------------------------------------------
// Loading

namespace detail {

inline bool is_comment_or_blank(std::string_view line) {
  auto pos = line.find_first_not_of(" \t\r");
  if (pos == std::string_view::npos) return true;
  return line[pos] == '#' || line[pos] == '%';
}

inline bool parse_uint(const std::string& tok, original_id_t& out) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) return false;
  try {
    std::size_t used = 0;
    out = std::stoull(tok, &used);
    return used == tok.size();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace detail

// Reads whitespace-separated integer pairs. Extra columns (weights,
// timestamps) are ignored. Original ids are densified by first appearance.
inline Graph read_edge_list(std::istream& in) {
  std::vector<original_id_t> original;
  std::unordered_map<original_id_t, vertex_t> dense;
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  auto intern = [&](original_id_t id) {
    auto [it, inserted] = dense.try_emplace(id, static_cast<vertex_t>(original.size()));
    if (inserted) original.push_back(id);
    return it->second;
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::is_comment_or_blank(line)) continue;
    std::istringstream ss(line);
    std::string a, b;
    original_id_t u = 0, v = 0;
    if (!(ss >> a >> b)) throw ParseError("expected two vertex ids", lineno);
    if (!detail::parse_uint(a, u) || !detail::parse_uint(b, v))
      throw ParseError("vertex ids must be non-negative integers", lineno);
    vertex_t du = intern(u);
    vertex_t dv = intern(v);
    edges.emplace_back(du, dv);
  }
  if (original.empty()) throw LoadError("edge list contains no vertices");
  auto n = static_cast<vertex_t>(original.size());
  return Graph::from_edges(n, std::move(edges), std::move(original));
}

inline Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open edge list: " + path);
  return read_edge_list(in);
}

// "original_id label" per line. Labels are densified by first appearance.
inline AttributedGraph read_attributes(Graph graph, std::istream& in) {
  const vertex_t n = graph.num_vertices();
  constexpr attr_t unset = ~attr_t{0};
  std::vector<attr_t> attr(n, unset);
  std::vector<std::string> names;
  std::unordered_map<std::string, attr_t> index;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::is_comment_or_blank(line)) continue;
    std::istringstream ss(line);
    std::string id_tok, label;
    if (!(ss >> id_tok >> label)) throw ParseError("expected 'vertex_id label'", lineno);
    original_id_t id = 0;
    if (!detail::parse_uint(id_tok, id)) throw ParseError("vertex id must be a non-negative integer", lineno);
    auto v = graph.find_original(id);
    if (!v) throw LoadError("line " + std::to_string(lineno) + ": unknown vertex id " + id_tok);
    if (attr[*v] != unset)
      throw LoadError("line " + std::to_string(lineno) + ": duplicate attribute for vertex " + id_tok);
    auto [it, inserted] = index.try_emplace(label, static_cast<attr_t>(names.size()));
    if (inserted) names.push_back(label);
    attr[*v] = it->second;
  }
  for (vertex_t v = 0; v < n; ++v)
    if (attr[v] == unset)
      throw LoadError("missing attribute for vertex " + std::to_string(graph.original_id(v)));
  auto d = static_cast<attr_t>(names.size());
  return AttributedGraph(std::move(graph), std::move(attr), d, std::move(names));
}

inline AttributedGraph load_attributes(Graph graph, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open attribute file: " + path);
  return read_attributes(std::move(graph), in);
}

// One "u v" line per edge, original ids, u < v in dense order.
inline void write_edge_list(const Graph& g, std::ostream& out) {
  for (vertex_t u = 0; u < g.num_vertices(); ++u)
    for (vertex_t v : g.neighbors(u))
      if (v > u) out << g.original_id(u) << ' ' << g.original_id(v) << '\n';
}

inline void write_attributes(const AttributedGraph& g, std::ostream& out) {
  for (vertex_t u = 0; u < g.num_vertices(); ++u)
    out << g.original_id(u) << ' ' << g.attr_names()[g.attr(u)] << '\n';
}

// ---------------------------------------------------------------------------
// Structure

// Components of the alive subgraph, each sorted ascending, ordered by their
// smallest member.
inline std::vector<std::vector<vertex_t>> connected_components(const AttributedGraph& g,
                                                               const VertexMask& mask) {
  std::vector<std::vector<vertex_t>> comps;
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<vertex_t> stack;
  for (vertex_t s = 0; s < g.num_vertices(); ++s) {
    if (!mask[s] || seen[s]) continue;
    std::vector<vertex_t> comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      vertex_t u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (vertex_t v : g.neighbors(u))
        if (mask[v] && !seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

// Induced subgraph on `vertices` (any order; must be distinct). Local id i
// corresponds to vertices[i]; original ids are carried over.
inline AttributedGraph induced_subgraph(const AttributedGraph& g, std::span<const vertex_t> vertices) {
  std::vector<std::pair<vertex_t, vertex_t>> sorted;  // (global, local)
  sorted.reserve(vertices.size());
  for (vertex_t i = 0; i < vertices.size(); ++i) sorted.emplace_back(vertices[i], i);
  std::sort(sorted.begin(), sorted.end());
  auto local_of = [&](vertex_t v) -> std::optional<vertex_t> {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), std::pair<vertex_t, vertex_t>{v, 0});
    if (it == sorted.end() || it->first != v) return std::nullopt;
    return it->second;
  };

  std::vector<std::pair<vertex_t, vertex_t>> edges;
  std::vector<original_id_t> orig(vertices.size());
  std::vector<attr_t> attr(vertices.size());
  for (vertex_t i = 0; i < vertices.size(); ++i) {
    vertex_t u = vertices[i];
    orig[i] = g.original_id(u);
    attr[i] = g.attr(u);
    for (vertex_t w : g.neighbors(u)) {
      if (w <= u) continue;
      if (auto j = local_of(w)) edges.emplace_back(i, *j);
    }
  }
  auto n = static_cast<vertex_t>(vertices.size());
  return AttributedGraph(Graph::from_edges(n, std::move(edges), std::move(orig)), std::move(attr),
                         g.num_attrs(), g.attr_names());
}

}  // namespace fairclique
