#pragma once

#include <optional>
#include <string_view>

#include "dakc/bounded.hpp"
#include "dakc/core.hpp"

namespace dakc {

// Result of removing weak components in which every vertex has in-degree and
// out-degree exactly k. Such a component is a core on its own and needs no
// anchors.
struct StripResult {
  std::optional<Verdict> immediate;  // witness in original vertex ids
  Instance reduced;                  // remaining graph, p lowered accordingly
  InducedSubgraph kept;              // reduced ids <-> original ids
  VertexSet stripped;                // removed vertices, original ids

  // Maps a verdict on `reduced` back to the original graph; the stripped
  // components join every core.
  Verdict lift(Verdict verdict) const;
};

StripResult strip_special_components(const Instance& inst);

// 2k > delta: every core has at most (delta+1)*b vertices, so a bounded search
// with q = (delta+1)*b decides the instance. `delta` must bound the maximum
// degree of inst.graph; throws ContractError otherwise or when 2k <= delta.
Verdict solve_high_k(const Instance& inst, int delta, const SearchConfig& config);

struct HalfKOptions {
  // Test hook: skip the small-core search and go straight to the separator
  // stage. Not part of the public contract.
  bool force_stage3 = false;
};

// 2k == delta. Strips special components, looks for a core of at most
// (delta*p + 1)*b vertices, and otherwise searches for a large core that
// drains into a single non-anchor vertex t, locating it through important
// separators. Throws ContractError when 2k != delta or delta is below the
// graph's maximum degree.
Verdict solve_half_k(const Instance& inst, int delta, const SearchConfig& config, const HalfKOptions& options = {});

enum class DegreeRoute { kK1, kHighK, kHalfK, kUnsupported };

// k = 1 -> kK1; 2k > delta(G) -> kHighK; 2k == delta(G) -> kHalfK; otherwise kUnsupported.
DegreeRoute route_by_degree(const Instance& inst);
std::string_view route_name(DegreeRoute route);

// Dispatches on route_by_degree. For 2k < delta(G) with k >= 2 the answer is
// an Unsupported verdict, not an error.
Verdict solve_by_degree(const Instance& inst, const SearchConfig& config);

}  // namespace dakc
