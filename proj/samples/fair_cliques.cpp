// Builds a small attributed graph in memory and lists its fair cliques under
// each model.

#include <iostream>

#include "fairclique/fairclique.hpp"

using namespace fairclique;

namespace {

void print(const AttributedGraph& g, const char* title, const CliqueSet& cs) {
  std::cout << title << ":\n";
  for (const auto& c : cs) {
    std::cout << " ";
    for (vertex_t v : c.vertices) std::cout << ' ' << g.original_id(v);
    std::cout << "   (";
    for (attr_t a = 0; a < g.num_attrs(); ++a)
      std::cout << (a ? ", " : "") << g.attr_names()[a] << "=" << c.attr_counts[a];
    std::cout << ")\n";
  }
}

}  // namespace

int main() {
  // A 7-clique (four "a", three "b") plus a pendant "a" vertex hanging off
  // vertices 1 and 7.
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  for (vertex_t u = 0; u < 7; ++u)
    for (vertex_t v = u + 1; v < 7; ++v) edges.emplace_back(u, v);
  edges.emplace_back(0, 7);
  edges.emplace_back(6, 7);
  std::vector<original_id_t> ids{1, 2, 3, 4, 5, 6, 7, 8};
  AttributedGraph g(Graph::from_edges(8, edges, ids), {0, 0, 0, 1, 1, 1, 0, 0}, 2, {"a", "b"});

  const int k = 3;
  print(g, "weak, k=3", wfc_enum(g, k));
  print(g, "strong, k=3", sfc_enum(g, k));
  print(g, "relative, k=3, delta=1", rfc_alter_enum(g, k, 1));

  auto res = enumerate(g, {Model::strong, k});
  std::cout << "pruning with " << to_string(res.stats.prune) << " kept " << res.stats.vertices_after << " of "
            << g.num_vertices() << " vertices\n";
}
