#pragma once

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fairclique/fairclique.hpp"

namespace fairclique::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitLoad = 1;
inline constexpr int kExitUsage = 2;

struct InputFlags {
  std::string graph;
  std::string attrs;
  std::optional<attr_t> rand_attrs;
  std::uint64_t seed = 0;
};

inline void add_input_flags(CLI::App& cmd, InputFlags& in) {
  cmd.add_option("--graph", in.graph, "edge list file")->required();
  auto* attrs = cmd.add_option("--attrs", in.attrs, "attribute file (\"id label\" per line)");
  auto* rand = cmd.add_option("--rand-attrs", in.rand_attrs, "assign D uniform random attributes instead");
  cmd.add_option("--seed", in.seed, "seed for --rand-attrs")->needs(rand);
  attrs->excludes(rand);
}

inline AttributedGraph load_input(const InputFlags& in) {
  Graph g = load_edge_list(in.graph);
  if (in.rand_attrs) return assign_random_attributes(std::move(g), *in.rand_attrs, in.seed);
  if (!in.attrs.empty()) return load_attributes(std::move(g), in.attrs);
  throw PreconditionError("one of --attrs or --rand-attrs is required");
}

inline std::int64_t parse_delta(const std::string& s) {
  if (s == "inf") return kUnboundedDelta;
  std::size_t used = 0;
  long long v = -1;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || v < 0) throw PreconditionError("--delta must be a non-negative integer or 'inf'");
  return std::min<std::int64_t>(v, kUnboundedDelta);
}

// One line per clique: original ids ascending, lines in lexicographic order
// of the id sequences.
inline std::vector<std::vector<original_id_t>> original_id_lines(const AttributedGraph& g, const CliqueSet& cs) {
  std::vector<std::vector<original_id_t>> lines;
  lines.reserve(cs.size());
  for (const auto& c : cs) {
    std::vector<original_id_t> ids;
    ids.reserve(c.vertices.size());
    for (vertex_t v : c.vertices) ids.push_back(g.original_id(v));
    std::sort(ids.begin(), ids.end());
    lines.push_back(std::move(ids));
  }
  std::sort(lines.begin(), lines.end());
  return lines;
}

inline void write_cliques(const AttributedGraph& g, const CliqueSet& cs, std::ostream& out) {
  for (const auto& line : original_id_lines(g, cs)) {
    for (std::size_t i = 0; i < line.size(); ++i) out << (i ? " " : "") << line[i];
    out << '\n';
  }
}

inline std::ofstream open_output(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw LoadError("cannot write " + path);
  return f;
}

inline double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

struct EnumFlags {
  InputFlags input;
  std::string model = "weak";
  int k = 1;
  std::string delta;
  std::string ordering = "auto";
  std::string prune = "auto";
  std::string algo = "alter";
  bool oracle = false;
  std::string out;
  std::string stats;
  unsigned threads = 1;
};

inline int cmd_enum(const EnumFlags& f, std::ostream& out) {
  EnumParams params;
  params.model = parse_model(f.model);
  params.k = f.k;
  if (!f.delta.empty()) {
    if (params.model != Model::relative) throw PreconditionError("--delta only applies to --model relative");
    params.delta = parse_delta(f.delta);
  } else if (params.model == Model::relative) {
    throw PreconditionError("--model relative needs --delta");
  }
  params.relative_algo = parse_relative_algo(f.algo);
  validate_params(params);
  EnumOptions opts;
  opts.ordering = parse_ordering_kind(f.ordering);
  opts.prune = parse_prune_kind(f.prune);
  opts.threads = f.threads;

  auto t0 = std::chrono::steady_clock::now();
  AttributedGraph g = load_input(f.input);
  double ms_load = elapsed_ms(t0);

  EnumResult res = enumerate(g, params, opts);

  std::optional<bool> verdict;
  if (f.oracle) {
    CliqueSet expected;
    switch (params.model) {
      case Model::weak: expected = base_weak(g, params.k); break;
      case Model::strong: expected = base_strong(g, params.k); break;
      case Model::relative: expected = base_relative(g, params.k, params.delta); break;
    }
    verdict = expected == res.cliques;
  }

  if (f.out.empty()) {
    write_cliques(g, res.cliques, out);
  } else {
    auto file = open_output(f.out);
    write_cliques(g, res.cliques, file);
  }

  if (!f.stats.empty()) {
    const auto& st = res.stats;
    nlohmann::ordered_json j;
    j["model"] = to_string(params.model);
    j["k"] = params.k;
    if (params.model != Model::relative) j["delta"] = nullptr;
    else if (params.delta >= kUnboundedDelta) j["delta"] = "inf";
    else j["delta"] = params.delta;
    if (params.model == Model::relative) j["algo"] = to_string(params.relative_algo);
    j["d"] = g.num_attrs();
    j["ordering"] = to_string(st.ordering);
    j["prune"] = to_string(st.prune);
    j["vertices_before"] = g.num_vertices();
    j["vertices_after"] = st.vertices_after;
    j["edges_before"] = g.num_edges();
    j["edges_after"] = st.edges_after;
    j["colors"] = st.colors;
    j["components"] = st.components;
    j["cliques"] = res.cliques.size();
    j["peak_result_set"] = st.peak_result_set;
    j["threads"] = f.threads;
    j["ms_load"] = ms_load;
    j["ms_color"] = st.ms_color;
    j["ms_prune"] = st.ms_prune;
    j["ms_order"] = st.ms_order;
    j["ms_enumerate"] = st.ms_enumerate;
    if (verdict) j["oracle"] = *verdict ? "equal" : "different";
    auto file = open_output(f.stats);
    file << j.dump(2) << '\n';
  }
  return kExitOk;
}

struct PruneFlags {
  InputFlags input;
  int k = 1;
  std::string prune = "colorful";
};

inline int cmd_prune(const PruneFlags& f, std::ostream& out) {
  PruneKind kind = parse_prune_kind(f.prune);
  if (kind == PruneKind::automatic) throw PreconditionError("prune needs an explicit core");
  AttributedGraph g = load_input(f.input);
  Coloring c = greedy_color(g);
  auto t0 = std::chrono::steady_clock::now();
  VertexMask mask = apply_core(kind, g, c, f.k - 1);
  nlohmann::ordered_json j;
  j["prune"] = to_string(kind);
  j["k"] = f.k;
  j["d"] = g.num_attrs();
  j["colors"] = c.num_colors;
  j["vertices_before"] = g.num_vertices();
  j["vertices_after"] = mask.alive_count();
  j["edges_before"] = g.num_edges();
  j["edges_after"] = count_masked_edges(g, mask);
  j["ms_prune"] = elapsed_ms(t0);
  out << j.dump(2) << '\n';
  return kExitOk;
}

inline int cmd_suggest_k(const InputFlags& in, std::size_t seeds, std::ostream& out) {
  AttributedGraph g = load_input(in);
  KSuggestion s = suggest_k(g, seeds);
  out << "clique_lower_bound " << s.clique_lower_bound << '\n';
  out << "colors " << s.num_colors << '\n';
  if (s.k_high >= s.k_low) out << "k_range " << s.k_low << ' ' << s.k_high << '\n';
  else out << "k_range empty\n";
  out << "k_cap " << s.k_cap << '\n';
  return kExitOk;
}

struct GenGraphFlags {
  vertex_t n = 0;
  std::optional<double> p;
  std::optional<std::size_t> m;
  std::uint64_t seed = 0;
  std::string out;
};

inline int cmd_gen_graph(const GenGraphFlags& f, std::ostream& out) {
  if (f.p.has_value() == f.m.has_value()) throw PreconditionError("give exactly one of -p or -m");
  Graph g = f.p ? random_gnp(f.n, *f.p, f.seed) : random_gnm(f.n, *f.m, f.seed);
  if (f.out.empty()) {
    write_edge_list(g, out);
  } else {
    auto file = open_output(f.out);
    write_edge_list(g, file);
  }
  return kExitOk;
}

struct GenAttrsFlags {
  std::string graph;
  attr_t d = 2;
  std::uint64_t seed = 0;
  std::string out;
};

inline int cmd_gen_attrs(const GenAttrsFlags& f, std::ostream& out) {
  AttributedGraph g = assign_random_attributes(load_edge_list(f.graph), f.d, f.seed);
  if (f.out.empty()) {
    write_attributes(g, out);
  } else {
    auto file = open_output(f.out);
    write_attributes(g, file);
  }
  return kExitOk;
}

// Entry point shared by the executable and the tests. Exit codes: 0 success,
// 1 unreadable or malformed input, 2 bad usage.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Fair maximal clique enumeration in attributed graphs", "fairclique"};
  app.require_subcommand(1);

  EnumFlags ef;
  auto* en = app.add_subcommand("enum", "enumerate weak, strong or relative fair cliques");
  add_input_flags(*en, ef.input);
  en->add_option("--model", ef.model, "weak|strong|relative")->capture_default_str();
  en->add_option("-k", ef.k, "per-attribute minimum")->capture_default_str();
  en->add_option("--delta", ef.delta, "largest allowed count difference (relative), integer or 'inf'");
  en->add_option("--ordering", ef.ordering, "auto|colorod|fairod|heurod|bfs|vid")->capture_default_str();
  en->add_option("--prune", ef.prune, "auto|none|colorful|fairness|enhanced")->capture_default_str();
  en->add_option("--algo", ef.algo, "relative search: alter|refine")->capture_default_str();
  en->add_flag("--oracle", ef.oracle, "also run the brute-force baseline and record the verdict");
  en->add_option("--out", ef.out, "clique output file (default stdout)");
  en->add_option("--stats", ef.stats, "write run statistics as JSON");
  en->add_option("--threads", ef.threads, "worker threads over connected components")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  PruneFlags pf;
  auto* pr = app.add_subcommand("prune", "run one core at k-1 and report what survives");
  add_input_flags(*pr, pf.input);
  pr->add_option("-k", pf.k)->capture_default_str();
  pr->add_option("--prune", pf.prune, "none|colorful|fairness|enhanced")->capture_default_str();

  InputFlags sf;
  std::size_t seeds = 64;
  auto* sk = app.add_subcommand("suggest-k", "report an admissible range for k");
  add_input_flags(*sk, sf);
  sk->add_option("--seeds", seeds, "number of top-degree start vertices")->capture_default_str();

  GenGraphFlags gf;
  auto* gg = app.add_subcommand("gen-graph", "write a seeded random graph as an edge list");
  gg->add_option("-n", gf.n, "vertex count")->required();
  gg->add_option("-p", gf.p, "edge probability (G(n,p))");
  gg->add_option("-m", gf.m, "edge count (G(n,m))");
  gg->add_option("--seed", gf.seed)->capture_default_str();
  gg->add_option("--out", gf.out);

  GenAttrsFlags af;
  auto* ga = app.add_subcommand("gen-attrs", "write seeded uniform random attributes for a graph");
  ga->add_option("--graph", af.graph)->required();
  ga->add_option("-d", af.d, "number of attribute values")->capture_default_str();
  ga->add_option("--seed", af.seed)->capture_default_str();
  ga->add_option("--out", af.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*en) return cmd_enum(ef, out);
    if (*pr) return cmd_prune(pf, out);
    if (*sk) return cmd_suggest_k(sf, seeds, out);
    if (*gg) return cmd_gen_graph(gf, out);
    if (*ga) return cmd_gen_attrs(af, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitLoad;
  } catch (const LoadError& e) {
    err << "error: " << e.what() << '\n';
    return kExitLoad;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fairclique::cli
