#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "clique_set.hpp"
#include "coloring.hpp"
#include "detail/search_graph.hpp"
#include "graph.hpp"
#include "ordering.hpp"
#include "pruning.hpp"

namespace fairclique {

enum class Model { weak, strong, relative };

inline std::string_view to_string(Model m) {
  switch (m) {
    case Model::weak: return "weak";
    case Model::strong: return "strong";
    case Model::relative: return "relative";
  }
  return "?";
}

inline Model parse_model(std::string_view s) {
  if (s == "weak") return Model::weak;
  if (s == "strong") return Model::strong;
  if (s == "relative") return Model::relative;
  throw PreconditionError("unknown model: " + std::string(s));
}

enum class RelativeAlgo { alter, refine };

inline std::string_view to_string(RelativeAlgo a) { return a == RelativeAlgo::alter ? "alter" : "refine"; }

inline RelativeAlgo parse_relative_algo(std::string_view s) {
  if (s == "alter") return RelativeAlgo::alter;
  if (s == "refine") return RelativeAlgo::refine;
  throw PreconditionError("unknown relative algorithm: " + std::string(s));
}

inline constexpr std::int64_t kUnboundedDelta = std::numeric_limits<std::int32_t>::max();

struct EnumParams {
  Model model = Model::weak;
  int k = 1;
  std::int64_t delta = kUnboundedDelta;  // relative only
  RelativeAlgo relative_algo = RelativeAlgo::alter;
};

struct EnumOptions {
  OrderingKind ordering = OrderingKind::automatic;
  PruneKind prune = PruneKind::automatic;
  std::optional<Coloring> coloring;  // greedy on the whole graph when absent
  unsigned threads = 1;
};

struct EnumStats {
  PruneKind prune = PruneKind::none;
  OrderingKind ordering = OrderingKind::vid;
  std::size_t vertices_after = 0;
  std::size_t edges_after = 0;
  color_t colors = 0;
  std::size_t components = 0;
  std::size_t peak_result_set = 0;
  double ms_color = 0;
  double ms_prune = 0;
  double ms_order = 0;
  double ms_enumerate = 0;
};

struct EnumResult {
  CliqueSet cliques;
  EnumStats stats;
};

inline PruneKind resolve_prune(Model model, PruneKind requested, attr_t num_attrs) {
  if (requested != PruneKind::automatic) return requested;
  if (num_attrs != 2) return PruneKind::colorful;
  return model == Model::strong ? PruneKind::fairness : PruneKind::enhanced;
}

inline OrderingKind resolve_ordering(Model model, OrderingKind requested, attr_t num_attrs) {
  if (requested != OrderingKind::automatic) return requested;
  if (model != Model::strong || num_attrs == 1) return OrderingKind::colorod;
  return num_attrs == 2 ? OrderingKind::fairod : OrderingKind::heurod;
}

inline void validate_params(const EnumParams& p) {
  if (p.model == Model::weak && p.k < 0) throw PreconditionError("k must be >= 0");
  if (p.model != Model::weak && p.k < 1)
    throw PreconditionError("k must be >= 1 for the " + std::string(to_string(p.model)) + " model");
  if (p.delta < 0) throw PreconditionError("delta must be >= 0");
}

// True iff no vertex set with one vertex per attribute among `candidates`
// forms a clique, i.e. a strong fair clique whose common neighborhood is
// `candidates` cannot be extended.
inline bool is_maximal_strong(const AttributedGraph& g, std::span<const vertex_t> candidates) {
  detail::VertexList sorted(candidates.begin(), candidates.end());
  std::sort(sorted.begin(), sorted.end());
  return !detail::has_rainbow_clique(g, std::span<const vertex_t>(sorted));
}

namespace detail {

using Emit = std::function<void(const VertexList&)>;

inline std::vector<std::uint32_t> count_attrs(const SearchGraph& sg, std::span<const vertex_t> vs) {
  std::vector<std::uint32_t> cnt(sg.num_attrs(), 0);
  for (vertex_t v : vs) ++cnt[sg.attr(v)];
  return cnt;
}

// Backtracking over (R, C, X) without pivoting. Candidates are kept in rank
// order and only higher-rank candidates survive a descent.
class WeakSearch {
 public:
  WeakSearch(const SearchGraph& sg, int k, Emit emit)
      : sg_(sg), k_(k), emit_(std::move(emit)), rcnt_(sg.num_attrs(), 0) {}

  void run() {
    VertexList all(sg_.num_vertices());
    std::iota(all.begin(), all.end(), 0);
    recurse(all, {});
  }

 private:
  bool counts_reach_k() const {
    return std::all_of(rcnt_.begin(), rcnt_.end(), [&](std::uint32_t c) { return int(c) >= k_; });
  }

  bool feasible(const VertexList& cand) const {
    if (std::int64_t(r_.size() + cand.size()) < std::int64_t(k_) * sg_.num_attrs()) return false;
    auto ccnt = count_attrs(sg_, cand);
    for (attr_t a = 0; a < sg_.num_attrs(); ++a)
      if (int(rcnt_[a] + ccnt[a]) < k_) return false;
    return true;
  }

  void recurse(const VertexList& cand, VertexList excl) {
    if (cand.empty()) {
      if (excl.empty() && counts_reach_k()) emit_(r_);
      return;
    }
    VertexList next_cand, next_excl;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      vertex_t u = cand[i];
      auto nb = sg_.neighbors(u);
      intersect(std::span<const vertex_t>(cand).subspan(i + 1), nb, next_cand);
      r_.push_back(u);
      ++rcnt_[sg_.attr(u)];
      if (feasible(next_cand)) {
        intersect(excl, nb, next_excl);
        recurse(VertexList(next_cand), next_excl);
      }
      r_.pop_back();
      --rcnt_[sg_.attr(u)];
      excl.insert(std::lower_bound(excl.begin(), excl.end(), u), u);
    }
  }

  const SearchGraph& sg_;
  int k_;
  Emit emit_;
  VertexList r_;
  std::vector<std::uint32_t> rcnt_;
};

// Attribute-alternating search for cliques with equal attribute counts. P is
// the full common neighborhood of R inside the component (used for the final
// maximality test); C is P minus same-attribute vertices ranked at or below
// the last pick of that attribute.
class StrongSearch {
 public:
  StrongSearch(const SearchGraph& sg, int k, Emit emit) : sg_(sg), k_(k), emit_(std::move(emit)) {}

  void run() {
    VertexList all(sg_.num_vertices());
    std::iota(all.begin(), all.end(), 0);
    recurse(all, all, 0);
  }

 private:
  void recurse(const VertexList& cand, const VertexList& common, attr_t turn) {
    const attr_t d = sg_.num_attrs();
    if (!r_.empty() && r_.size() % d == 0 && r_.size() >= std::size_t(k_) * d) {
      if (!has_rainbow_clique(sg_, std::span<const vertex_t>(cand))) {
        if (!has_rainbow_clique(sg_, std::span<const vertex_t>(common))) emit_(r_);
        return;
      }
    }
    VertexList next_cand, next_common;
    for (vertex_t u : cand) {
      if (sg_.attr(u) != turn) continue;
      auto nb = sg_.neighbors(u);
      next_cand.clear();
      for (vertex_t v : intersect(cand, nb))
        if (sg_.attr(v) != turn || v > u) next_cand.push_back(v);
      r_.push_back(u);
      if (size_bound(next_cand, turn) >= std::int64_t(k_) * d) {
        intersect(common, nb, next_common);
        recurse(VertexList(next_cand), VertexList(next_common), (turn + 1) % d);
      }
      r_.pop_back();
    }
  }

  // Upper bound on the size of any equal-count clique reachable from R.
  std::int64_t size_bound(const VertexList& cand, attr_t turn) const {
    const std::int64_t d = sg_.num_attrs();
    auto ccnt = count_attrs(sg_, cand);
    attr_t amin = 0;
    for (attr_t a = 1; a < d; ++a)
      if (ccnt[a] <= ccnt[amin]) amin = a;  // ties go to the largest index
    const std::int64_t cmin = ccnt[amin];
    const std::int64_t size = static_cast<std::int64_t>(r_.size());
    if (size % d == 0) return cmin * d + size;
    const std::int64_t rounds = size / d + 1;
    if (amin <= turn) return cmin * d + rounds * d;
    return (cmin - 1) * d + rounds * d;
  }

  const SearchGraph& sg_;
  int k_;
  Emit emit_;
  VertexList r_;
};

// Attribute-alternating search for the relative model. Attributes are closed
// either when their count reaches the current cap or by an explicit decision
// to stop adding that attribute; closing attribute a caps every count at
// count(a) + delta. X holds the excluded part of the common neighborhood, so
// C and X together are always the full common neighborhood of R.
class RelativeSearch {
 public:
  RelativeSearch(const SearchGraph& sg, int k, std::int64_t delta, Emit emit)
      : sg_(sg), k_(k), delta_(delta), emit_(std::move(emit)), rcnt_(sg.num_attrs(), 0) {}

  void run() {
    VertexList all(sg_.num_vertices());
    std::iota(all.begin(), all.end(), 0);
    recurse(std::move(all), {}, 0, -1, std::vector<bool>(sg_.num_attrs(), false));
  }

 private:
  std::int64_t max_count() const { return *std::max_element(rcnt_.begin(), rcnt_.end()); }
  std::int64_t min_count() const { return *std::min_element(rcnt_.begin(), rcnt_.end()); }

  static void move_class(VertexList& cand, VertexList& excl, const SearchGraph& sg, attr_t a) {
    VertexList keep, moved;
    for (vertex_t v : cand) (sg.attr(v) == a ? moved : keep).push_back(v);
    cand = std::move(keep);
    excl = unite(excl, moved);
  }

  bool extendable_by(vertex_t v) const {
    std::int64_t hi = 0, lo = std::numeric_limits<std::int64_t>::max();
    for (attr_t a = 0; a < sg_.num_attrs(); ++a) {
      std::int64_t c = rcnt_[a] + (sg_.attr(v) == a ? 1 : 0);
      hi = std::max(hi, c);
      lo = std::min(lo, c);
    }
    return hi - lo <= delta_;
  }

  void leaf(const VertexList& excl) {
    if (min_count() < k_ || max_count() - min_count() > delta_) return;
    for (vertex_t v : excl)
      if (extendable_by(v)) return;
    emit_(r_);
  }

  void recurse(VertexList cand, VertexList excl, attr_t turn, std::int64_t cap, std::vector<bool> closed) {
    const attr_t d = sg_.num_attrs();
    for (attr_t b = 0; b < d; ++b)
      if (!closed[b] && cap >= 0 && std::int64_t(rcnt_[b]) >= cap) {
        closed[b] = true;
        move_class(cand, excl, sg_, b);
      }
    if (std::all_of(closed.begin(), closed.end(), [](bool c) { return c; })) {
      leaf(excl);
      return;
    }

    const std::int64_t maxcnt = max_count();
    const std::int64_t need = std::max<std::int64_t>(k_, maxcnt - delta_);
    if (std::int64_t(r_.size() + cand.size()) < std::int64_t(k_) * d) return;
    auto ccnt = count_attrs(sg_, cand);
    for (attr_t b = 0; b < d; ++b) {
      std::int64_t reach = rcnt_[b] + (closed[b] ? 0 : ccnt[b]);
      if (reach < need) return;
    }

    attr_t a = turn;
    while (closed[a]) a = (a + 1) % d;

    VertexList common, next_cand, next_excl, demoted;
    for (vertex_t u : cand) {
      if (sg_.attr(u) != a) continue;
      auto nb = sg_.neighbors(u);
      intersect(cand, nb, common);
      next_cand.clear();
      demoted.clear();
      for (vertex_t v : common) {
        if (sg_.attr(v) == a && v < u) demoted.push_back(v);
        else next_cand.push_back(v);
      }
      next_excl = unite(intersect(excl, nb), demoted);
      r_.push_back(u);
      ++rcnt_[a];
      recurse(next_cand, next_excl, (a + 1) % d, cap, closed);
      r_.pop_back();
      --rcnt_[a];
    }

    if (std::int64_t(rcnt_[a]) >= k_) {
      std::int64_t limit = rcnt_[a] + delta_;
      std::int64_t next_cap = cap < 0 ? limit : std::min(cap, limit);
      if (maxcnt <= next_cap) {
        move_class(cand, excl, sg_, a);
        closed[a] = true;
        recurse(std::move(cand), std::move(excl), (a + 1) % d, next_cap, std::move(closed));
      }
    }
  }

  const SearchGraph& sg_;
  int k_;
  std::int64_t delta_;
  Emit emit_;
  VertexList r_;
  std::vector<std::uint32_t> rcnt_;
};

// Relative fair cliques carved out of weak fair cliques: every attribute with
// more than (min count + delta) vertices is cut down to exactly that many, in
// every possible way, and each candidate is kept only if no common neighbor
// could join it.
class RefineSearch {
 public:
  RefineSearch(const SearchGraph& sg, int k, std::int64_t delta, Emit emit)
      : sg_(sg), k_(k), delta_(delta), emit_(std::move(emit)) {}

  void run() {
    WeakSearch weak(sg_, k_, [this](const VertexList& w) { refine(w); });
    weak.run();
  }

 private:
  void refine(const VertexList& weak) {
    const attr_t d = sg_.num_attrs();
    auto cnt = count_attrs(sg_, weak);
    const std::int64_t cap = *std::min_element(cnt.begin(), cnt.end()) + delta_;
    fixed_.clear();
    lacking_.assign(d, {});
    bool any = false;
    for (vertex_t v : weak) {
      if (cnt[sg_.attr(v)] > cap) {
        lacking_[sg_.attr(v)].push_back(v);
        any = true;
      } else {
        fixed_.push_back(v);
      }
    }
    if (!any) {
      emit_(weak);
      return;
    }
    cap_ = static_cast<std::size_t>(cap);
    chosen_ = fixed_;
    choose(0, 0);
  }

  // Picks exactly cap_ vertices from each lacking class, attribute by
  // attribute, in increasing index order.
  void choose(attr_t a, std::size_t from) {
    const attr_t d = sg_.num_attrs();
    while (a < d && lacking_[a].empty()) ++a;
    if (a == d) {
      check(chosen_);
      return;
    }
    std::size_t picked = taken_[a];
    if (picked == cap_) {
      choose(a + 1, 0);
      return;
    }
    const auto& cls = lacking_[a];
    for (std::size_t i = from; i + (cap_ - picked) <= cls.size(); ++i) {
      chosen_.push_back(cls[i]);
      ++taken_[a];
      choose(a, i + 1);
      --taken_[a];
      chosen_.pop_back();
    }
  }

  void check(VertexList q) {
    std::sort(q.begin(), q.end());
    auto cnt = count_attrs(sg_, q);
    VertexList common(sg_.neighbors(q.front()).begin(), sg_.neighbors(q.front()).end());
    for (std::size_t i = 1; i < q.size() && !common.empty(); ++i) common = intersect(common, sg_.neighbors(q[i]));
    for (vertex_t v : common) {
      ++cnt[sg_.attr(v)];
      auto [lo, hi] = std::minmax_element(cnt.begin(), cnt.end());
      bool fits = std::int64_t(*hi) - std::int64_t(*lo) <= delta_;
      --cnt[sg_.attr(v)];
      if (fits) return;
    }
    emit_(q);
  }

  const SearchGraph& sg_;
  int k_;
  std::int64_t delta_;
  Emit emit_;
  std::size_t cap_ = 0;
  VertexList fixed_, chosen_;
  std::vector<VertexList> lacking_;
  std::vector<std::size_t> taken_ = std::vector<std::size_t>(sg_.num_attrs(), 0);
};

// Runs `work(i)` for i in [0, count) on up to `threads` workers.
template <class Work>
void parallel_for(std::size_t count, unsigned threads, Work work) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = next++; i < count; i = next++) work(i);
      } catch (...) {
        errors[t] = std::current_exception();
        next = count;
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

inline double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace detail

// Full pipeline: coloring, pruning with the selected core at k-1, per
// component ordering and search. The result set does not depend on the
// coloring, core, ordering or thread count.
inline EnumResult enumerate(const AttributedGraph& g, EnumParams params, const EnumOptions& opts = {}) {
  using clock = std::chrono::steady_clock;
  validate_params(params);
  const attr_t d = g.num_attrs();
  const Model model = params.model;
  Model search_model = model;
  if (model == Model::relative && params.delta == 0) search_model = Model::strong;

  EnumResult out;
  EnumStats& st = out.stats;
  st.prune = resolve_prune(model, opts.prune, d);
  st.ordering = resolve_ordering(model, opts.ordering, d);
  if (st.ordering == OrderingKind::fairod) detail::require_two_attributes(g, "fairod ordering");

  auto t0 = clock::now();
  Coloring coloring = opts.coloring ? *opts.coloring : greedy_color(g);
  if (coloring.color.size() != g.num_vertices()) throw PreconditionError("coloring does not match the graph");
  st.colors = coloring.num_colors;
  st.ms_color = detail::ms_since(t0);

  t0 = clock::now();
  VertexMask mask = apply_core(st.prune, g, coloring, params.k - 1);
  st.vertices_after = mask.alive_count();
  st.edges_after = count_masked_edges(g, mask);
  st.ms_prune = detail::ms_since(t0);

  t0 = clock::now();
  const std::size_t min_size = std::size_t(std::max(params.k, 0)) * d;
  std::vector<std::vector<vertex_t>> comps;
  for (auto& comp : connected_components(g, mask))
    if (comp.size() >= std::max<std::size_t>(min_size, 1)) comps.push_back(std::move(comp));
  st.components = comps.size();
  std::vector<VertexOrdering> orders(comps.size());
  detail::parallel_for(comps.size(), opts.threads,
                       [&](std::size_t i) { orders[i] = make_ordering(st.ordering, g, coloring, comps[i]); });
  st.ms_order = detail::ms_since(t0);

  t0 = clock::now();
  std::vector<CliqueSet> partial(comps.size());
  std::vector<std::size_t> emitted(comps.size(), 0);
  detail::parallel_for(comps.size(), opts.threads, [&](std::size_t i) {
    detail::SearchGraph sg(g, mask, orders[i]);
    detail::Emit emit = [&, i](const detail::VertexList& local) {
      ++emitted[i];
      partial[i].insert(g, sg.to_global(local));
    };
    switch (search_model) {
      case Model::weak: detail::WeakSearch(sg, params.k, emit).run(); break;
      case Model::strong: detail::StrongSearch(sg, params.k, emit).run(); break;
      case Model::relative:
        if (params.relative_algo == RelativeAlgo::refine)
          detail::RefineSearch(sg, params.k, params.delta, emit).run();
        else
          detail::RelativeSearch(sg, params.k, params.delta, emit).run();
        break;
    }
  });
  for (auto& p : partial) out.cliques.merge(std::move(p));
  st.peak_result_set = std::max(out.cliques.size(), std::accumulate(emitted.begin(), emitted.end(), std::size_t{0}));
  st.ms_enumerate = detail::ms_since(t0);
  return out;
}

inline CliqueSet wfc_enum(const AttributedGraph& g, int k, EnumOptions opts = {}) {
  return enumerate(g, {Model::weak, k}, opts).cliques;
}

inline CliqueSet sfc_enum(const AttributedGraph& g, int k, EnumOptions opts = {}) {
  return enumerate(g, {Model::strong, k}, opts).cliques;
}

inline CliqueSet rfc_alter_enum(const AttributedGraph& g, int k, std::int64_t delta, EnumOptions opts = {}) {
  return enumerate(g, {Model::relative, k, delta, RelativeAlgo::alter}, opts).cliques;
}

inline CliqueSet rfc_refine_enum(const AttributedGraph& g, int k, std::int64_t delta, EnumOptions opts = {}) {
  return enumerate(g, {Model::relative, k, delta, RelativeAlgo::refine}, opts).cliques;
}

}  // namespace fairclique
