#pragma once

#include <functional>
#include <span>

#include "dakc/bounded.hpp"
#include "dakc/core.hpp"

namespace dakc {

struct DagOptions {
  // Picks the sink to delete when the bounded search fails. Receives the
  // current graph and its sinks in increasing order. Empty means lowest index.
  std::function<VertexId(const DirectedGraph&, std::span<const VertexId>)> pick_sink;
};

// Acyclic inputs only: a bounded search for a core of exactly p vertices, and
// on failure a sink is deleted and the search repeats. Throws ContractError
// naming a cycle when the graph is not acyclic.
Verdict solve_dag(const Instance& inst, const SearchConfig& config, const DagOptions& options = {});

}  // namespace dakc
