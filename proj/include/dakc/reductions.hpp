#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dakc/core.hpp"

namespace dakc {

// Clauses hold DIMACS literals: +i for x_i, -i for its negation (1-based).
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

struct UndirectedGraph {
  int n = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;  // 0-based
};

struct SetCoverInstance {
  int universe = 0;
  std::vector<std::vector<int>> sets;  // 0-based elements
  int b = 0;
};

// A generated instance with one human-readable label per vertex.
struct GeneratedInstance {
  Instance instance;
  std::vector<std::string> labels;
};

// `p cnf n m` followed by 0-terminated clauses; throws ParseError.
CnfFormula parse_dimacs_cnf(std::string_view text);
// `p ug n m` followed by m `e u v` lines (1-based); throws ParseError.
UndirectedGraph parse_undirected(std::string_view text);
// `u n` followed by one `s e1 e2 ...` line per set (1-based); b is left at 0.
SetCoverInstance parse_set_cover(std::string_view text);

// Throws ReductionError naming the first clause or variable that breaks the
// occurrence limits: at most 3 literals per clause, no repeated literal, at
// most 2 occurrences per polarity and 3 in total. `both_polarities` also
// demands at least one positive and one negative occurrence.
void check_sat_restrictions(const CnfFormula& formula, bool both_polarities);

// Per variable: x_i, ~x_i, r_i, Y_i (k-1 vertices into r_i), Z_i (k sources
// into each Y vertex). Per clause: v_j fed by its literals, U_j and W_j built
// the same way. The instance is YES iff the formula is satisfiable.
GeneratedInstance gen_from_sat(const CnfFormula& formula, int k, bool both_polarities = false);

// Branch vertices, one sink per edge fed by both endpoints, and k-2 sources
// feeding every edge sink. YES iff the graph has a clique of b vertices.
GeneratedInstance gen_from_clique(const UndirectedGraph& graph, int b, int k);

// k = 1 instance of maximum degree 3: YES iff at most sc.b sets cover the
// universe. Throws ReductionError when an element lies in no set.
GeneratedInstance gen_from_setcover(const SetCoverInstance& sc);

// Lifts a k = 1 acyclic instance of maximum degree 3 to threshold k while
// keeping the maximum degree at most delta. Requires k >= 2, delta > 2k and
// at least 3 base vertices.
GeneratedInstance amplify_k(const Instance& base, int k, int delta, std::span<const std::string> base_labels = {});

// `<1-based id> <label>` per line.
std::string serialize_labels(std::span<const std::string> labels);

}  // namespace dakc
