#pragma once

#include <cstdint>
#include <vector>

#include "dakc/graph.hpp"
#include "dakc/vertex_set.hpp"

namespace dakc {

// A vertex set S ⊆ V \ {s, t} claimed to separate s from t.
struct SeparatorSet {
  VertexSet vertices;
  VertexId s = 0;
  VertexId t = 0;
};

// True iff t is unreachable from s once S is deleted. Throws ContractError
// when s == t, s and t are adjacent, or S contains s or t.
bool is_separator(const DirectedGraph& g, VertexId s, VertexId t, const VertexSet& separator);

// True iff S is an inclusion-minimal s-t separator.
bool is_minimal_separator(const DirectedGraph& g, VertexId s, VertexId t, const VertexSet& separator);

// Definition check by exhaustive enumeration: S is minimal and no separator
// S' with |S'| <= |S| leaves a strictly larger set of vertices able to reach
// t. Requires |S| <= h. Throws BudgetExceeded when the number of candidate
// sets exceeds `subset_cap`.
bool is_important(const DirectedGraph& g, VertexId s, VertexId t, const VertexSet& separator, int h,
                  std::uint64_t subset_cap = 5'000'000);

// Same predicate decided with max-flow computations instead of enumeration.
bool is_important_by_flow(const DirectedGraph& g, VertexId s, VertexId t, const VertexSet& separator);

// Smallest number of vertices (other than s, t) whose deletion separates s
// from t, or `limit + 1` when it exceeds `limit`.
int min_vertex_cut(const DirectedGraph& g, VertexId s, VertexId t, int limit);

// Every important s-t separator of size at most h, each listed once, sorted
// by member list. Throws ContractError when s and t are adjacent.
std::vector<SeparatorSet> enumerate_important_separators(const DirectedGraph& g, VertexId s, VertexId t, int h);

}  // namespace dakc
