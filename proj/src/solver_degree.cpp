#include "dakc/solver_degree.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dakc/errors.hpp"
#include "dakc/separators.hpp"
#include "dakc/solver_k1.hpp"

namespace dakc {

Verdict StripResult::lift(Verdict verdict) const {
  if (verdict.solution) {
    verdict.solution->anchors = kept.lift(verdict.solution->anchors);
    verdict.solution->core = kept.lift(verdict.solution->core) | stripped;
  }
  return verdict;
}

StripResult strip_special_components(const Instance& inst) {
  const DirectedGraph& g = inst.graph;
  const std::size_t n = g.num_vertices();
  StripResult out;
  out.stripped = VertexSet(n);
  int p = inst.p;

  for (const VertexSet& comp : weakly_connected_components(g)) {
    const bool special = std::all_of(comp.begin(), comp.end(), [&](VertexId v) {
      return g.in_degree(v) == inst.k && g.out_degree(v) == inst.k;
    });
    if (!special) continue;
    const int size = static_cast<int>(comp.size());
    if (inst.b >= p - size) {
      VertexSet anchors(n);
      int needed = std::max(p - size, 0);
      const VertexSet taken = comp | out.stripped;
      for (std::size_t v = 0; v < n && needed > 0; ++v) {
        if (!taken.contains(static_cast<VertexId>(v))) {
          anchors.insert(static_cast<VertexId>(v));
          --needed;
        }
      }
      out.immediate = Verdict::yes({anchors, anchors | taken});
      return out;
    }
    out.stripped |= comp;
    p -= size;
  }
  out.kept = induced_subgraph(g, out.stripped.complement());
  out.reduced = Instance{out.kept.graph, inst.b, inst.k, p};
  return out;
}

Verdict solve_high_k(const Instance& inst, int delta, const SearchConfig& config) {
  if (2 * inst.k <= delta) throw ContractError("solve_high_k requires 2k > delta");
  if (delta < inst.graph.max_degree()) throw ContractError("delta is below the graph's maximum degree");
  Normalized norm = normalize(inst);
  if (norm.immediate) return *norm.immediate;
  // Non-anchors have more in-arcs than out-arcs inside the core, and the
  // surplus is paid for by at most delta out-arcs per anchor.
  const long long q = static_cast<long long>(delta + 1) * inst.b;
  if (inst.p > q) return Verdict::no();
  Verdict verdict = bounded_core_search(inst, static_cast<int>(q), config);
  if (verdict.kind == Verdict::Kind::kNoUpTo) verdict.kind = Verdict::Kind::kNo;
  return verdict;
}

namespace {

// Search for a solution whose core contains a non-anchor t reachable from the
// whole core, where every vertex outside the core that feeds a non-anchor core
// vertex is cut off by guessing and deleting those arcs.
class DrainSearch {
 public:
  DrainSearch(const Instance& inst, int delta) : inst_(inst), delta_(delta), n_(inst.n()) {
    const auto source = static_cast<VertexId>(n_);
    std::vector<Arc> arcs = inst.graph.arcs();
    for (std::size_t v = 0; v < n_; ++v) {
      if (inst.graph.in_degree(static_cast<VertexId>(v)) < inst.k) {
        source_arcs_.emplace_back(source, static_cast<VertexId>(v));
      }
    }
    arcs.insert(arcs.end(), source_arcs_.begin(), source_arcs_.end());
    augmented_ = DirectedGraph::from_arcs(n_ + 1, arcs);
  }

  std::optional<Solution> run() {
    const int k = inst_.k;
    const int b = inst_.b;
    const int outer_budget = (delta_ * (k - 1) + 1) * b;
    const auto source = static_cast<VertexId>(n_);

    for (std::size_t t = 0; t < n_; ++t) {
      const auto target = static_cast<VertexId>(t);
      if (inst_.graph.in_degree(target) < k) continue;
      tried_.clear();
      for (const SeparatorSet& outer : enumerate_important_separators(augmented_, source, target, outer_budget)) {
        VertexSet region =
            reach_avoiding(augmented_, VertexSet(n_ + 1, {target}), outer.vertices, Direction::kBackward);
        region |= outer.vertices;
        region.erase(source);
        if (region.size() < static_cast<std::size_t>(inst_.p)) continue;
        if (auto sol = search_region(region, target)) return sol;
      }
    }
    return std::nullopt;
  }

 private:
  struct Choice {
    VertexId vertex;
    std::vector<std::vector<VertexId>> options;  // in-neighbors to disconnect
  };

  std::optional<Solution> search_region(const VertexSet& region, VertexId target) {
    const DirectedGraph& g = inst_.graph;
    const int k = inst_.k;
    std::vector<Choice> choices;
    for (VertexId v : region) {
      int inside = 0;
      for (VertexId u : g.in_neighbors(v)) inside += region.contains(u) ? 1 : 0;
      const bool candidate = g.in_degree(v) > k || inside < k;
      if (!candidate) continue;
      Choice choice{v, {}};
      const auto in = g.in_neighbors(v);
      const int d = static_cast<int>(in.size());
      // Nonempty subsets that leave at least k in-arcs.
      for (std::uint32_t mask = 1; mask < (1U << d); ++mask) {
        if (d - std::popcount(mask) < k) continue;
        std::vector<VertexId> cut;
        for (int i = 0; i < d; ++i) {
          if ((mask >> i) & 1U) cut.push_back(in[static_cast<std::size_t>(i)]);
        }
        choice.options.push_back(std::move(cut));
      }
      if (!choice.options.empty()) choices.push_back(std::move(choice));
    }
    std::vector<Arc> removed;
    return guess(choices, 0, delta_ * inst_.b, removed, target);
  }

  std::optional<Solution> guess(const std::vector<Choice>& choices, std::size_t index, int slots,
                                std::vector<Arc>& removed, VertexId target) {
    if (index == choices.size()) return try_arc_deletion(removed, target);
    if (auto sol = guess(choices, index + 1, slots, removed, target)) return sol;
    if (slots == 0) return std::nullopt;
    const Choice& choice = choices[index];
    for (const auto& cut : choice.options) {
      for (VertexId u : cut) removed.emplace_back(u, choice.vertex);
      auto sol = guess(choices, index + 1, slots - 1, removed, target);
      removed.resize(removed.size() - cut.size());
      if (sol) return sol;
    }
    return std::nullopt;
  }

  std::optional<Solution> try_arc_deletion(const std::vector<Arc>& removed, VertexId target) {
    std::vector<Arc> key = removed;
    std::sort(key.begin(), key.end());
    if (!tried_.insert(key).second) return std::nullopt;

    std::vector<Arc> arcs;
    for (const Arc& arc : inst_.graph.arcs()) {
      if (!std::binary_search(key.begin(), key.end(), arc)) arcs.push_back(arc);
    }
    arcs.insert(arcs.end(), source_arcs_.begin(), source_arcs_.end());
    const DirectedGraph thinned = DirectedGraph::from_arcs(n_ + 1, arcs);
    const auto source = static_cast<VertexId>(n_);

    for (const SeparatorSet& inner : enumerate_important_separators(thinned, source, target, inst_.b)) {
      VertexSet core = reach_avoiding(thinned, VertexSet(n_ + 1, {target}), inner.vertices, Direction::kBackward);
      core |= inner.vertices;
      Solution sol{VertexSet(n_), VertexSet(n_)};
      for (VertexId v : inner.vertices) sol.anchors.insert(v);
      for (VertexId v : core) {
        if (v != source) sol.core.insert(v);
      }
      // Re-inserting deleted arcs only raises in-degrees, but the check runs
      // against the untouched graph regardless.
      if (verify_solution(inst_, sol)) return sol;
    }
    return std::nullopt;
  }

  const Instance& inst_;
  int delta_;
  std::size_t n_;
  std::vector<Arc> source_arcs_;
  DirectedGraph augmented_;
  std::set<std::vector<Arc>> tried_;
};

}  // namespace

Verdict solve_half_k(const Instance& inst, int delta, const SearchConfig& config, const HalfKOptions& options) {
  if (2 * inst.k != delta) throw ContractError("solve_half_k requires 2k = delta");
  if (delta < inst.graph.max_degree()) throw ContractError("delta is below the graph's maximum degree");
  Normalized norm = normalize(inst);
  if (norm.immediate) return *norm.immediate;

  const StripResult strip = strip_special_components(inst);
  if (strip.immediate) return *strip.immediate;
  const Instance& reduced = strip.reduced;

  std::uint64_t trials = 0;
  bool capped = false;
  if (!options.force_stage3) {
    const long long q = (static_cast<long long>(delta) * reduced.p + 1) * reduced.b;
    if (q >= reduced.p) {
      Verdict small = bounded_core_search(reduced, static_cast<int>(std::min<long long>(q, 1 << 30)), config);
      trials = small.trials;
      capped = small.trials_capped;
      if (small.is_yes()) return strip.lift(std::move(small));
    }
  }

  Verdict verdict = Verdict::no();
  if (auto sol = DrainSearch(reduced, delta).run()) verdict = Verdict::yes(std::move(*sol));
  verdict.trials = trials;
  verdict.trials_capped = capped;
  return strip.lift(std::move(verdict));
}

DegreeRoute route_by_degree(const Instance& inst) {
  const int delta = inst.graph.max_degree();
  if (inst.k == 1) return DegreeRoute::kK1;
  if (2 * inst.k > delta) return DegreeRoute::kHighK;
  if (2 * inst.k == delta) return DegreeRoute::kHalfK;
  return DegreeRoute::kUnsupported;
}

std::string_view route_name(DegreeRoute route) {
  switch (route) {
    case DegreeRoute::kK1:
      return "k1";
    case DegreeRoute::kHighK:
      return "high";
    case DegreeRoute::kHalfK:
      return "half";
    case DegreeRoute::kUnsupported:
      break;
  }
  return "none";
}

Verdict solve_by_degree(const Instance& inst, const SearchConfig& config) {
  Normalized norm = normalize(inst);
  if (norm.immediate) return *norm.immediate;
  const int delta = inst.graph.max_degree();
  switch (route_by_degree(inst)) {
    case DegreeRoute::kK1:
      return solve_k1(inst);
    case DegreeRoute::kHighK:
      return solve_high_k(inst, delta, config);
    case DegreeRoute::kHalfK:
      return solve_half_k(inst, delta, config);
    case DegreeRoute::kUnsupported:
      break;
  }
  return Verdict::unsupported("k = " + std::to_string(inst.k) + " is below half the maximum degree " +
                              std::to_string(delta) +
                              "; this regime is W[2]-hard parameterized by b, use the exhaustive oracle "
                              "(--solver oracle)");
}

}  // namespace dakc
