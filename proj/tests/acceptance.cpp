// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fairclique/fairclique.hpp"

#ifndef FAIRCLIQUE_CLI_PATH
#define FAIRCLIQUE_CLI_PATH "fairclique"
#endif

using namespace fairclique;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t) {
  return std::chrono::duration<double>(clock_type::now() - t).count();
}

struct Instance {
  AttributedGraph g;
  int k;
  std::int64_t delta;  // one of 0, 1, 2, n
  std::string label;
};

// 500 seeded instances cycling through every (p, d, k, delta) combination;
// n is drawn uniformly from [8, 30].
std::vector<Instance> make_corpus() {
  const double ps[] = {0.2, 0.4, 0.6};
  std::vector<Instance> out;
  StableRng rng(20240611);
  for (int i = 0; i < 500; ++i) {
    int combo = i % 108;
    double p = ps[combo % 3];
    attr_t d = attr_t(1 + (combo / 3) % 3);
    int k = 1 + (combo / 9) % 3;
    int delta_pick = (combo / 27) % 4;
    auto n = static_cast<vertex_t>(8 + rng.below(23));
    std::uint64_t seed = rng.next();
    auto g = assign_random_attributes(random_gnp(n, p, seed), d, seed + 1);
    std::int64_t delta = delta_pick == 3 ? std::int64_t(n) : delta_pick;
    std::ostringstream label;
    label << "#" << i << " n=" << n << " p=" << p << " d=" << d << " k=" << k << " delta=" << delta;
    out.push_back({std::move(g), k, delta, label.str()});
  }
  return out;
}

bool contained_in_some(const std::vector<vertex_t>& q, const CliqueSet& big) {
  return std::any_of(big.begin(), big.end(), [&](const Clique& c) {
    return std::includes(c.vertices.begin(), c.vertices.end(), q.begin(), q.end());
  });
}

bool inside(const CliqueSet& cs, const VertexMask& mask) {
  for (const auto& c : cs)
    for (vertex_t v : c.vertices)
      if (!mask[v]) return false;
  return true;
}

struct Verdict {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& why) {
    if (pass) first_failure = why;
    pass = false;
  }
};

void report(int id, const std::string& name, const Verdict& v) {
  std::cout << (v.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << name << " (" << v.detail;
  if (!v.pass) std::cout << "; first failure: " << v.first_failure;
  std::cout << ")" << std::endl;
}

struct OracleResults {
  CliqueSet weak, strong, relative;
};

Verdict oracle_equivalence(const std::vector<Instance>& corpus, std::vector<OracleResults>& cache) {
  Verdict v;
  auto t = clock_type::now();
  std::size_t checked = 0;
  for (const auto& in : corpus) {
    OracleResults o{base_weak(in.g, in.k), base_strong(in.g, in.k), base_relative(in.g, in.k, in.delta)};
    if (!(wfc_enum(in.g, in.k) == o.weak)) v.fail("weak " + in.label);
    if (!(sfc_enum(in.g, in.k) == o.strong)) v.fail("strong " + in.label);
    if (!(rfc_refine_enum(in.g, in.k, in.delta) == o.relative)) v.fail("relative/refine " + in.label);
    if (!(rfc_alter_enum(in.g, in.k, in.delta) == o.relative)) v.fail("relative/alter " + in.label);
    cache.push_back(std::move(o));
    ++checked;
  }
  double secs = seconds_since(t);
  if (secs >= 300) v.fail("took " + std::to_string(secs) + " s");
  std::ostringstream s;
  s << checked << " instances, 4 enumerators each, " << secs << " s";
  v.detail = s.str();
  return v;
}

Verdict pruning_safety(const std::vector<Instance>& corpus, const std::vector<OracleResults>& cache) {
  Verdict v;
  std::size_t two_d = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& in = corpus[i];
    auto c = greedy_color(in.g);
    auto col = colorful_core(in.g, c, in.k - 1);
    if (!inside(cache[i].weak, col)) v.fail("weak outside colorful core " + in.label);
    if (!inside(cache[i].strong, col)) v.fail("strong outside colorful core " + in.label);
    if (!inside(cache[i].relative, col)) v.fail("relative outside colorful core " + in.label);
    if (in.g.num_attrs() == 2) {
      ++two_d;
      if (!inside(cache[i].strong, fairness_core(in.g, c, in.k - 1))) v.fail("strong outside fairness core " + in.label);
      if (!inside(cache[i].relative, enhanced_colorful_core(in.g, c, in.k - 1)))
        v.fail("relative outside enhanced core " + in.label);
      if (!inside(cache[i].weak, enhanced_colorful_core(in.g, c, in.k - 1)))
        v.fail("weak outside enhanced core " + in.label);
    }
  }
  v.detail = std::to_string(corpus.size()) + " instances, " + std::to_string(two_d) + " with two attributes";
  return v;
}

Verdict degeneracy_laws(const std::vector<Instance>& corpus, const std::vector<OracleResults>& cache) {
  Verdict v;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& in = corpus[i];
    auto strong = sfc_enum(in.g, in.k);
    auto weak = wfc_enum(in.g, in.k);
    const std::int64_t n = in.g.num_vertices();
    if (!(rfc_alter_enum(in.g, in.k, 0) == strong)) v.fail("alter delta=0 " + in.label);
    if (!(rfc_refine_enum(in.g, in.k, 0) == strong)) v.fail("refine delta=0 " + in.label);
    if (!(rfc_alter_enum(in.g, in.k, n) == weak)) v.fail("alter delta=n " + in.label);
    if (!(rfc_refine_enum(in.g, in.k, n) == weak)) v.fail("refine delta=n " + in.label);
    if (!(base_relative(in.g, in.k, 0) == cache[i].strong)) v.fail("baseline delta=0 " + in.label);
    if (!(base_relative(in.g, in.k, n) == cache[i].weak)) v.fail("baseline delta=n " + in.label);
  }
  v.detail = std::to_string(corpus.size()) + " instances, enumerators and baselines";
  return v;
}

Verdict invariance(const std::vector<Instance>& corpus, const std::vector<OracleResults>& cache) {
  Verdict v;
  std::size_t runs = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& in = corpus[i];
    std::vector<OrderingKind> orderings{OrderingKind::colorod, OrderingKind::heurod, OrderingKind::bfs,
                                        OrderingKind::vid};
    if (in.g.num_attrs() == 2) orderings.push_back(OrderingKind::fairod);
    Coloring asc = greedy_color(in.g, TieBreak::ascending_id);
    Coloring desc = greedy_color(in.g, TieBreak::descending_id);
    if (!validate_coloring(in.g, asc) || !validate_coloring(in.g, desc)) v.fail("improper coloring " + in.label);
    for (OrderingKind ord : orderings)
      for (const Coloring* col : {&asc, &desc}) {
        EnumOptions o;
        o.ordering = ord;
        o.coloring = *col;
        std::string tag = std::string(to_string(ord)) + (col == &asc ? "/asc " : "/desc ") + in.label;
        if (!(enumerate(in.g, {Model::weak, in.k}, o).cliques == cache[i].weak)) v.fail("weak " + tag);
        if (!(enumerate(in.g, {Model::strong, in.k}, o).cliques == cache[i].strong)) v.fail("strong " + tag);
        for (auto algo : {RelativeAlgo::alter, RelativeAlgo::refine})
          if (!(enumerate(in.g, {Model::relative, in.k, in.delta, algo}, o).cliques == cache[i].relative))
            v.fail("relative/" + std::string(to_string(algo)) + " " + tag);
        runs += 4;
      }
  }
  v.detail = std::to_string(runs) + " runs; fairod only where d=2 (it is defined for two attributes)";
  return v;
}

Verdict pruning_trend(double& seconds, AttributedGraph& big) {
  Verdict v;
  auto t = clock_type::now();
  big = assign_random_attributes(random_gnm(20000, 100000, 42), 2, 43);
  auto c = greedy_color(big);
  std::size_t prev_col = SIZE_MAX, prev_fair = SIZE_MAX, prev_enh = SIZE_MAX;
  std::ostringstream s;
  s << "survivors colorful/fairness/enhanced by k:";
  for (int k = 2; k <= 6; ++k) {
    auto col = colorful_core(big, c, k - 1);
    auto fair = fairness_core(big, c, k - 1);
    auto enh = enhanced_colorful_core(big, c, k - 1);
    if (!enh.subset_of(col)) v.fail("enhanced not within colorful at k=" + std::to_string(k));
    if (!fair.subset_of(col)) v.fail("fairness not within colorful at k=" + std::to_string(k));
    if (col.alive_count() > prev_col || fair.alive_count() > prev_fair || enh.alive_count() > prev_enh)
      v.fail("survivors grew at k=" + std::to_string(k));
    prev_col = col.alive_count();
    prev_fair = fair.alive_count();
    prev_enh = enh.alive_count();
    s << " " << k << ":" << prev_col << "/" << prev_fair << "/" << prev_enh;
  }
  seconds = seconds_since(t);
  if (seconds >= 30) v.fail("took " + std::to_string(seconds) + " s");
  s << "; " << seconds << " s";
  v.detail = s.str();
  return v;
}

Verdict containment(const std::vector<Instance>& corpus) {
  Verdict v;
  std::size_t strong_n = 0, rel_n = 0;
  for (const auto& in : corpus) {
    auto weak = wfc_enum(in.g, in.k);
    auto strong = sfc_enum(in.g, in.k);
    for (std::int64_t delta : {std::int64_t(1), std::int64_t(2), in.delta}) {
      auto rel = rfc_alter_enum(in.g, in.k, delta);
      for (const auto& c : strong)
        if (!contained_in_some(c.vertices, rel)) v.fail("strong not in relative " + in.label);
      for (const auto& c : rel)
        if (!contained_in_some(c.vertices, weak)) v.fail("relative not in weak " + in.label);
      rel_n += rel.size();
    }
    strong_n += strong.size();
  }
  v.detail = std::to_string(strong_n) + " strong and " + std::to_string(rel_n) + " relative cliques checked";
  return v;
}

double median_core_ms(const AttributedGraph& g, int k) {
  auto c = greedy_color(g);
  std::vector<double> ms;
  std::size_t sink = 0;
  for (int rep = 0; rep < 5; ++rep) {
    auto t = clock_type::now();
    sink += colorful_core(g, c, k).alive_count();
    ms.push_back(std::chrono::duration<double, std::milli>(clock_type::now() - t).count());
  }
  if (sink == SIZE_MAX) std::cout << "";
  std::sort(ms.begin(), ms.end());
  return ms[2];
}

Verdict complexity_smoke(const AttributedGraph& base) {
  Verdict v;
  auto doubled = assign_random_attributes(random_gnm(20000, 200000, 42), 2, 43);
  std::ostringstream s;
  double worst = 0;
  for (int k : {2, 4}) {
    double a = median_core_ms(base, k);
    double b = median_core_ms(doubled, k);
    double ratio = b / std::max(a, 1e-6);
    worst = std::max(worst, ratio);
    s << "k=" << k << ": " << a << " ms -> " << b << " ms (x" << ratio << "); ";
  }
  if (worst >= 2.5) v.fail("runtime ratio " + std::to_string(worst));
  s << "limit x2.5";
  v.detail = s.str();
  return v;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Verdict determinism() {
  Verdict v;
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "fairclique_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string cli = FAIRCLIQUE_CLI_PATH;
  auto sh = [&](const std::string& args) {
    std::string cmd = "\"" + cli + "\" " + args + " 2>&1";
    return std::system(cmd.c_str());
  };
  std::string g = (dir / "g.txt").string();
  if (sh("gen-graph -n 2000 -m 30000 --seed 11 --out \"" + g + "\"") != 0) v.fail("gen-graph failed");
  std::size_t bytes = 0;
  for (std::string flags : {"--model weak -k 2", "--model strong -k 2", "--model relative -k 2 --delta 1",
                            "--model relative -k 2 --delta 1 --algo refine --threads 4"}) {
    std::string common = "enum " + flags + " --graph \"" + g + "\" --rand-attrs 2 --seed 5 --out ";
    std::string a = (dir / "a.txt").string(), b = (dir / "b.txt").string();
    if (sh(common + "\"" + a + "\"") != 0 || sh(common + "\"" + b + "\"") != 0) v.fail("enum failed: " + flags);
    auto sa = slurp(a), sb = slurp(b);
    if (sa != sb) v.fail("outputs differ: " + flags);
    if (sa.empty()) v.fail("empty output: " + flags);
    bytes += sa.size();
  }
  fs::remove_all(dir);
  v.detail = "4 flag sets run twice through the CLI, " + std::to_string(bytes) + " bytes compared";
  return v;
}

}  // namespace

int main() {
  bool all = true;
  auto record = [&](int id, const std::string& name, const Verdict& v) {
    report(id, name, v);
    all = all && v.pass;
  };

  auto corpus = make_corpus();
  std::vector<OracleResults> cache;
  record(1, "oracle equivalence", oracle_equivalence(corpus, cache));
  record(2, "pruning safety", pruning_safety(corpus, cache));
  record(3, "degeneracy laws", degeneracy_laws(corpus, cache));
  record(4, "ordering and coloring invariance", invariance(corpus, cache));
  double trend_secs = 0;
  AttributedGraph big = AttributedGraph::uniform(Graph::from_edges(1, {}));
  record(5, "pruning-strength trend", pruning_trend(trend_secs, big));
  record(6, "model containment", containment(corpus));
  record(7, "colorful core scaling", complexity_smoke(big));
  record(8, "CLI determinism", determinism());
  std::cout << (all ? "all acceptance criteria passed" : "some acceptance criteria failed") << std::endl;
  return all ? 0 : 1;
}
