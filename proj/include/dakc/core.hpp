#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dakc/graph.hpp"
#include "dakc/vertex_set.hpp"

namespace dakc {

// One anchored k-core question: are there A ⊆ H ⊆ V with |A| <= b, |H| >= p
// and every v in H \ A having in-degree >= k inside G[H]?
struct Instance {
  DirectedGraph graph;
  int b = 0;
  int k = 1;
  int p = 1;

  std::size_t n() const { return graph.num_vertices(); }
};

struct Solution {
  VertexSet anchors;
  VertexSet core;
};

struct Verdict {
  enum class Kind { kYes, kNo, kNoUpTo, kUnsupported };

  Kind kind = Kind::kNo;
  std::optional<Solution> solution;  // set iff kind == kYes
  int bound = 0;                     // q for kNoUpTo
  std::string reason;                // explanation for kUnsupported
  // Randomized-search bookkeeping, zero for deterministic paths.
  std::uint64_t trials = 0;
  bool trials_capped = false;

  static Verdict yes(Solution solution);
  static Verdict no();
  static Verdict no_up_to(int q);
  static Verdict unsupported(std::string reason);

  bool is_yes() const { return kind == Kind::kYes; }
};

// Iterated withdrawal: repeatedly delete a non-anchor vertex with fewer than k
// in-neighbors among the survivors. The fixed point does not depend on the
// deletion order.
VertexSet peel(const DirectedGraph& g, int k, const VertexSet& anchors);

// Reusable scratch space for running many peels on the same graph.
class Peeler {
 public:
  explicit Peeler(const DirectedGraph& g);

  // Returns the size of the surviving set; see alive().
  std::size_t run(int k, std::span<const VertexId> anchors);
  bool alive(VertexId v) const { return alive_[static_cast<std::size_t>(v)] != 0; }
  VertexSet survivors() const;

 private:
  const DirectedGraph* g_;
  std::vector<int> degree_;
  std::vector<char> alive_;
  std::vector<char> anchored_;
  std::vector<VertexId> queue_;
};

bool verify_solution(const Instance& inst, const Solution& sol);
// Human-readable description of the first violated constraint, nullopt if valid.
std::optional<std::string> explain_violation(const Instance& inst, const Solution& sol);

// Either an immediate verdict or an instance with b < p <= n and k >= 1.
struct Normalized {
  std::optional<Verdict> immediate;
  Instance reduced;
};

// Throws ContractError on negative parameters.
Normalized normalize(const Instance& inst);

struct OracleOptions {
  std::uint64_t subset_cap = 10'000'000;
  int threads = 1;
};

// Number of subsets of an n-set with at most `max_size` elements, saturating
// at UINT64_MAX.
std::uint64_t count_subsets_up_to(std::size_t n, std::size_t max_size);

// Exhaustive search over anchor sets of size <= b, in order of size and then
// lexicographically; the first anchor set whose peel reaches p vertices wins.
// Throws BudgetExceeded when the number of subsets exceeds the cap.
Verdict oracle_solve(const Instance& inst, const OracleOptions& options = {});

}  // namespace dakc
