#include "dakc/solver_dag.hpp"

#include <string>

#include "dakc/errors.hpp"

namespace dakc {

namespace {

std::string describe_cycle(const std::vector<VertexId>& cycle) {
  std::string text;
  for (VertexId v : cycle) text += std::to_string(v + 1) + " -> ";
  text += std::to_string(cycle.front() + 1);
  return text;
}

}  // namespace

Verdict solve_dag(const Instance& inst, const SearchConfig& config, const DagOptions& options) {
  if (!topological_order(inst.graph)) {
    throw ContractError("solve_dag needs an acyclic graph, found cycle " + describe_cycle(find_cycle(inst.graph)));
  }
  Normalized norm = normalize(inst);
  if (norm.immediate) return *norm.immediate;

  const std::size_t n = inst.n();
  Instance current = inst;
  std::vector<VertexId> to_original(n);
  for (std::size_t v = 0; v < n; ++v) to_original[v] = static_cast<VertexId>(v);
  std::uint64_t trials = 0;
  bool capped = false;

  while (true) {
    Verdict verdict = bounded_core_search(current, current.p, config);
    trials += verdict.trials;
    capped = capped || verdict.trials_capped;
    if (verdict.is_yes()) {
      Solution lifted{VertexSet(n), VertexSet(n)};
      for (VertexId v : verdict.solution->anchors) lifted.anchors.insert(to_original[static_cast<std::size_t>(v)]);
      for (VertexId v : verdict.solution->core) lifted.core.insert(to_original[static_cast<std::size_t>(v)]);
      Verdict out = Verdict::yes(std::move(lifted));
      out.trials = trials;
      out.trials_capped = capped;
      return out;
    }
    if (current.n() <= static_cast<std::size_t>(current.p)) break;

    std::vector<VertexId> sinks;
    for (std::size_t v = 0; v < current.n(); ++v) {
      if (current.graph.out_degree(static_cast<VertexId>(v)) == 0) sinks.push_back(static_cast<VertexId>(v));
    }
    const VertexId sink = options.pick_sink ? options.pick_sink(current.graph, sinks) : sinks.front();
    VertexSet keep = VertexSet::full(current.n());
    keep.erase(sink);
    InducedSubgraph sub = induced_subgraph(current.graph, keep);
    std::vector<VertexId> next(sub.to_old.size());
    for (std::size_t i = 0; i < next.size(); ++i) {
      next[i] = to_original[static_cast<std::size_t>(sub.to_old[i])];
    }
    to_original = std::move(next);
    current.graph = std::move(sub.graph);
  }
  Verdict out = Verdict::no();
  out.trials = trials;
  out.trials_capped = capped;
  return out;
}

}  // namespace dakc
