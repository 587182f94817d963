#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dakc/core.hpp"

namespace dakc {

// Counter-based SplitMix64: output i of the stream seeded with `seed` is
// splitmix64_at(seed, i). Identical on every platform.
std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index);

// Red/blue vertex coloring; vertices outside `red` are blue.
struct Coloring {
  VertexSet red;
};

// Coloring used by trial `trial`: word w (covering vertices 64w..64w+63) is
// splitmix64_at(seed, trial * words + w), bit i of the word colors vertex
// 64w + i red when set.
Coloring coloring_for_trial(std::uint64_t seed, std::uint64_t trial, std::size_t n);

struct SearchConfig {
  enum class Mode { kSeeded, kExhaustive };

  Mode mode = Mode::kExhaustive;
  std::uint64_t seed = 1;
  double eps = 0.01;  // failure probability bound in seeded mode, in (0, 1)
  std::uint64_t trial_cap = 1'000'000;
  std::size_t exhaustive_limit = 20;  // largest n accepted in exhaustive mode
  int threads = 1;
};

// Red weak component with its deficient vertices (in-degree < k inside it).
struct ComponentSummary {
  VertexSet component;
  VertexSet deficient;

  int anchor_cost() const { return static_cast<int>(deficient.size()); }
  int size() const { return static_cast<int>(component.size()); }
};

// Components of G[red] that need at most b anchors, ordered by smallest member.
std::vector<ComponentSummary> summarize_red_components(const DirectedGraph& g, const VertexSet& red, int k, int b);

struct KnapsackItem {
  int cost = 0;   // anchors needed
  int value = 0;  // vertices gained
};

// Indices I with total cost <= budget and total value >= target, or nullopt.
// Dynamic program over budget levels; the backtrace walks items from last to
// first and skips an item whenever the optimum allows it.
std::optional<std::vector<std::size_t>> knapsack_select(const std::vector<KnapsackItem>& items, int budget,
                                                        int target);

// One random-separation trial for a fixed coloring: the union of chosen red
// components, anchored at their deficient vertices. Any returned solution is
// valid for inst.
std::optional<Solution> bounded_trial(const Instance& inst, const Coloring& coloring);

// ceil(ln(1/eps) * 2^((delta+1) q)) clipped to `cap`; second is true when clipped.
std::pair<std::uint64_t, bool> seeded_trial_count(int delta, int q, double eps, std::uint64_t cap);

// Searches for a solution whose core has at most q vertices.
//   exhaustive: every coloring with between p and q red vertices, in numeric
//               mask order; NO_UP_TO(q) is then exact.
//   seeded:     seeded_trial_count(...) random colorings; NO_UP_TO(q) is
//               wrong with probability at most eps unless the trial count was
//               capped.
// A returned YES always passes verify_solution; in seeded mode its core may
// exceed q. Throws ContractError when q < p and when exhaustive mode is asked
// for a graph above exhaustive_limit.
Verdict bounded_core_search(const Instance& inst, int q, const SearchConfig& config);

}  // namespace dakc
