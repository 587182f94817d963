#pragma once

#include <optional>
#include <vector>

#include "dakc/core.hpp"

namespace dakc {

struct SetCoverQuery {
  std::size_t universe = 0;
  std::vector<VertexSet> sets;
  int budget = 0;
  int target = 0;
};

// Indices (0-based, increasing) of at most `budget` sets whose union has at
// least `target` elements; the smallest such family, ties broken
// lexicographically. nullopt when none exists.
std::optional<std::vector<std::size_t>> partial_set_cover(const SetCoverQuery& query);

// Exact solver for k = 1: strongly connected components and everything they
// reach stay for free; the remaining DAG is covered from its sources.
// Throws ContractError unless inst.k == 1.
Verdict solve_k1(const Instance& inst);

}  // namespace dakc
