#pragma once

#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fairclique/fairclique.hpp"

#ifndef FAIRCLIQUE_DATA_DIR
#define FAIRCLIQUE_DATA_DIR "data"
#endif

namespace fixtures {

using namespace fairclique;

inline std::string data_path(const std::string& name) { return std::string(FAIRCLIQUE_DATA_DIR) + "/" + name; }

inline AttributedGraph load(const std::string& name) {
  return load_attributes(load_edge_list(data_path(name + ".edges")), data_path(name + ".attrs"));
}

// Graph on dense ids 0..n-1 (original ids equal to dense ids) with one
// attribute index per vertex.
inline AttributedGraph make(vertex_t n, std::vector<std::pair<vertex_t, vertex_t>> edges, std::vector<attr_t> attr) {
  attr_t d = 0;
  for (attr_t a : attr) d = std::max(d, a + 1);
  return AttributedGraph(Graph::from_edges(n, std::move(edges)), std::move(attr), d);
}

inline std::vector<std::pair<vertex_t, vertex_t>> complete_edges(vertex_t n) {
  std::vector<std::pair<vertex_t, vertex_t>> e;
  for (vertex_t u = 0; u < n; ++u)
    for (vertex_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return e;
}

inline AttributedGraph complete(std::vector<attr_t> attr) {
  auto n = static_cast<vertex_t>(attr.size());
  return make(n, complete_edges(n), std::move(attr));
}

// Dense ids of the given original ids, sorted.
inline std::vector<vertex_t> ids(const AttributedGraph& g, std::initializer_list<original_id_t> originals) {
  std::vector<vertex_t> out;
  for (auto o : originals) out.push_back(*g.find_original(o));
  std::sort(out.begin(), out.end());
  return out;
}

inline AttributedGraph random_instance(vertex_t n, double p, attr_t d, std::uint64_t seed) {
  return assign_random_attributes(random_gnp(n, p, seed), d, seed ^ 0x9e3779b97f4a7c15ULL);
}

}  // namespace fixtures
