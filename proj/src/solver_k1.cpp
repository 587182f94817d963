#include "dakc/solver_k1.hpp"

#include <algorithm>

#include "dakc/errors.hpp"

namespace dakc {
namespace {

class CoverSearch {
 public:
  explicit CoverSearch(const SetCoverQuery& query) : query_(query) {}

  std::optional<std::vector<std::size_t>> run() {
    const std::size_t r = query_.sets.size();
    const auto limit = static_cast<std::size_t>(std::max(query_.budget, 0));
    // Iterative deepening on the family size; unions are carried down the
    // recursion so each node costs one word-parallel OR.
    for (std::size_t size = 0; size <= std::min(limit, r); ++size) {
      chosen_.clear();
      if (dfs(0, size, VertexSet(query_.universe))) return chosen_;
    }
    return std::nullopt;
  }

 private:
  bool dfs(std::size_t from, std::size_t remaining, const VertexSet& covered) {
    const auto have = covered.size();
    // Smaller families were exhausted by earlier rounds, so reaching the
    // target early only happens for an empty family.
    if (have >= static_cast<std::size_t>(std::max(query_.target, 0))) return true;
    if (remaining == 0) return false;
    // Upper bound: the `remaining` largest marginal gains among later sets.
    gains_.clear();
    for (std::size_t i = from; i < query_.sets.size(); ++i) gains_.push_back((query_.sets[i] - covered).size());
    std::sort(gains_.begin(), gains_.end(), std::greater<>());
    std::size_t bound = have;
    for (std::size_t i = 0; i < std::min(remaining, gains_.size()); ++i) bound += gains_[i];
    if (bound < static_cast<std::size_t>(query_.target)) return false;

    for (std::size_t i = from; i < query_.sets.size(); ++i) {
      chosen_.push_back(i);
      if (dfs(i + 1, remaining - 1, covered | query_.sets[i])) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const SetCoverQuery& query_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> gains_;
};

}  // namespace

std::optional<std::vector<std::size_t>> partial_set_cover(const SetCoverQuery& query) {
  for (const auto& set : query.sets) {
    if (set.universe() != query.universe) throw ContractError("set over a different universe");
  }
  return CoverSearch(query).run();
}

Verdict solve_k1(const Instance& inst) {
  if (inst.k != 1) throw ContractError("solve_k1 requires k = 1");
  Normalized norm = normalize(inst);
  if (norm.immediate) return *norm.immediate;

  const DirectedGraph& g = inst.graph;
  const std::size_t n = g.num_vertices();
  const int b = inst.b;
  const int p = inst.p;

  VertexSet cyclic(n);
  for (const auto& comp : strongly_connected_components(g)) {
    if (comp.cyclic) cyclic |= comp.members;
  }
  // Every vertex reachable from a cycle keeps an in-neighbor inside this set.
  const VertexSet free_core = reach(g, cyclic, Direction::kForward);
  const int residual_target = p - static_cast<int>(free_core.size());

  if (b >= residual_target) {
    VertexSet anchors(n);
    int needed = std::max(residual_target, 0);
    for (std::size_t v = 0; v < n && needed > 0; ++v) {
      if (!free_core.contains(static_cast<VertexId>(v))) {
        anchors.insert(static_cast<VertexId>(v));
        --needed;
      }
    }
    return Verdict::yes({anchors, anchors | free_core});
  }

  // G - R is a DAG whose vertices have no in-neighbors in R.
  const InducedSubgraph dag = induced_subgraph(g, free_core.complement());
  const std::size_t dn = dag.graph.num_vertices();
  std::vector<VertexId> sources;
  for (std::size_t v = 0; v < dn; ++v) {
    if (dag.graph.in_degree(static_cast<VertexId>(v)) == 0) sources.push_back(static_cast<VertexId>(v));
  }
  if (sources.size() <= static_cast<std::size_t>(b)) {
    const VertexSet anchors = dag.lift(VertexSet(dn, sources));
    return Verdict::yes({anchors, VertexSet::full(n)});
  }

  SetCoverQuery query{dn, {}, b, residual_target};
  query.sets.reserve(sources.size());
  for (VertexId s : sources) query.sets.push_back(reach(dag.graph, VertexSet(dn, {s}), Direction::kForward));
  const auto picked = partial_set_cover(query);
  if (!picked) return Verdict::no();

  VertexSet anchors(dn);
  VertexSet covered(dn);
  for (std::size_t i : *picked) {
    anchors.insert(sources[i]);
    covered |= query.sets[i];
  }
  return Verdict::yes({dag.lift(anchors), dag.lift(covered) | free_core});
}

}  // namespace dakc
