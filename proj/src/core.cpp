#include "dakc/core.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

#include "dakc/errors.hpp"

namespace dakc {

Verdict Verdict::yes(Solution solution) {
  Verdict v;
  v.kind = Kind::kYes;
  v.solution = std::move(solution);
  return v;
}

Verdict Verdict::no() { return Verdict{}; }

Verdict Verdict::no_up_to(int q) {
  Verdict v;
  v.kind = Kind::kNoUpTo;
  v.bound = q;
  return v;
}

Verdict Verdict::unsupported(std::string reason) {
  Verdict v;
  v.kind = Kind::kUnsupported;
  v.reason = std::move(reason);
  return v;
}

Peeler::Peeler(const DirectedGraph& g)
    : g_(&g), degree_(g.num_vertices()), alive_(g.num_vertices()), anchored_(g.num_vertices()) {
  queue_.reserve(g.num_vertices());
}

std::size_t Peeler::run(int k, std::span<const VertexId> anchors) {
  const std::size_t n = g_->num_vertices();
  std::fill(anchored_.begin(), anchored_.end(), 0);
  for (VertexId a : anchors) anchored_[static_cast<std::size_t>(a)] = 1;
  queue_.clear();
  for (std::size_t v = 0; v < n; ++v) {
    alive_[v] = 1;
    degree_[v] = g_->in_degree(static_cast<VertexId>(v));
    if (!anchored_[v] && degree_[v] < k) queue_.push_back(static_cast<VertexId>(v));
  }
  std::size_t survivors = n;
  // Every queued vertex is deficient; a vertex is queued at most once because
  // it enters the queue only when its degree first drops below k.
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const VertexId v = queue_[head];
    alive_[static_cast<std::size_t>(v)] = 0;
    --survivors;
    for (VertexId w : g_->out_neighbors(v)) {
      const auto wi = static_cast<std::size_t>(w);
      if (alive_[wi] && --degree_[wi] == k - 1 && !anchored_[wi]) queue_.push_back(w);
    }
  }
  return survivors;
}

VertexSet Peeler::survivors() const {
  VertexSet result(alive_.size());
  for (std::size_t v = 0; v < alive_.size(); ++v) {
    if (alive_[v]) result.insert(static_cast<VertexId>(v));
  }
  return result;
}

VertexSet peel(const DirectedGraph& g, int k, const VertexSet& anchors) {
  Peeler peeler(g);
  const auto list = anchors.to_vector();
  peeler.run(k, list);
  return peeler.survivors();
}

std::optional<std::string> explain_violation(const Instance& inst, const Solution& sol) {
  const std::size_t n = inst.n();
  if (sol.anchors.universe() != n || sol.core.universe() != n) return "solution sets do not match the vertex count";
  if (!sol.anchors.is_subset_of(sol.core)) {
    const VertexId bad = *(sol.anchors - sol.core).begin();
    return "anchor " + std::to_string(bad + 1) + " is not in the core";
  }
  if (sol.anchors.size() > static_cast<std::size_t>(std::max(inst.b, 0))) {
    return "uses " + std::to_string(sol.anchors.size()) + " anchors, budget is " + std::to_string(inst.b);
  }
  if (sol.core.size() < static_cast<std::size_t>(std::max(inst.p, 0))) {
    return "core has " + std::to_string(sol.core.size()) + " vertices, need " + std::to_string(inst.p);
  }
  for (VertexId v : sol.core) {
    if (sol.anchors.contains(v)) continue;
    int inside = 0;
    for (VertexId u : inst.graph.in_neighbors(v)) inside += sol.core.contains(u) ? 1 : 0;
    if (inside < inst.k) {
      return "vertex " + std::to_string(v + 1) + " has in-degree " + std::to_string(inside) +
             " inside the core, need " + std::to_string(inst.k);
    }
  }
  return std::nullopt;
}

bool verify_solution(const Instance& inst, const Solution& sol) { return !explain_violation(inst, sol); }

Normalized normalize(const Instance& inst) {
  if (inst.b < 0 || inst.k < 0 || inst.p < 0) throw ContractError("b, k and p must be nonnegative");
  const std::size_t n = inst.n();
  Normalized out{std::nullopt, inst};
  if (static_cast<std::size_t>(inst.p) > n) {
    out.immediate = Verdict::no();
  } else if (inst.b >= inst.p) {
    VertexSet chosen(n);
    for (int v = 0; v < inst.p; ++v) chosen.insert(v);
    out.immediate = Verdict::yes({chosen, chosen});
  } else if (inst.k == 0) {
    VertexSet core(n);
    for (int v = 0; v < inst.p; ++v) core.insert(v);
    out.immediate = Verdict::yes({VertexSet(n), core});
  }
  return out;
}

std::uint64_t count_subsets_up_to(std::size_t n, std::size_t max_size) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(n, s)
  for (std::size_t s = 0; s <= std::min(n, max_size); ++s) {
    if (total > kMax - binom) return kMax;
    total += binom;
    // C(n, s+1) = C(n, s) * (n - s) / (s + 1), computed without overflow when possible.
    const std::uint64_t num = n - s;
    const std::uint64_t den = s + 1;
    const std::uint64_t g = std::gcd(binom, den);
    const std::uint64_t reduced = binom / g;
    const std::uint64_t num_reduced = num / (den / g);
    if (num_reduced != 0 && reduced > kMax / num_reduced) {
      binom = kMax;
    } else {
      binom = reduced * num_reduced;
    }
  }
  return total;
}

namespace {

// Visits every combination of `size` elements of [0, n) whose first element
// is `first`, in lexicographic order, stopping when the visitor returns true.
template <typename Visitor>
bool for_each_combination_with_first(std::size_t n, std::size_t size, VertexId first, std::vector<VertexId>& combo,
                                     Visitor&& visit) {
  combo.assign(size, 0);
  if (size == 0) return visit(combo);
  combo[0] = first;
  for (std::size_t i = 1; i < size; ++i) combo[i] = first + static_cast<VertexId>(i);
  if (static_cast<std::size_t>(combo[size - 1]) >= n) return false;
  while (true) {
    if (visit(combo)) return true;
    // Advance positions 1..size-1; position 0 stays fixed.
    std::size_t i = size;
    while (i > 1 && static_cast<std::size_t>(combo[i - 1]) == n - size + (i - 1)) --i;
    if (i == 1) return false;
    ++combo[i - 1];
    for (std::size_t j = i; j < size; ++j) combo[j] = combo[j - 1] + 1;
  }
}

}  // namespace

Verdict oracle_solve(const Instance& inst, const OracleOptions& options) {
  if (inst.b < 0 || inst.k < 0 || inst.p < 0) throw ContractError("b, k and p must be nonnegative");
  const std::size_t n = inst.n();
  if (static_cast<std::size_t>(inst.p) > n) return Verdict::no();
  // More than p anchors is never needed: any p of them already form a core.
  const auto max_size = static_cast<std::size_t>(std::min({inst.b, inst.p}));
  const std::uint64_t total = count_subsets_up_to(n, max_size);
  if (total > options.subset_cap) {
    throw BudgetExceeded("oracle would enumerate " + std::to_string(total) + " anchor sets, cap is " +
                         std::to_string(options.subset_cap));
  }
  const auto p = static_cast<std::size_t>(inst.p);

  auto finish = [&](const std::vector<VertexId>& anchors) {
    const VertexSet anchor_set(n, anchors);
    return Verdict::yes({anchor_set, peel(inst.graph, inst.k, anchor_set)});
  };

  for (std::size_t size = 0; size <= max_size; ++size) {
    if (size == 0) {
      Peeler peeler(inst.graph);
      if (peeler.run(inst.k, {}) >= p) return finish({});
      continue;
    }
    const std::size_t blocks = n - size + 1;
    const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(blocks)));
    // Blocks are indexed by the first element; a hit in block f is the
    // lexicographic minimum of that block, so the best block wins overall.
    std::atomic<std::size_t> next_block{0};
    std::atomic<std::size_t> best_block{blocks};
    std::mutex mutex;
    std::vector<VertexId> best;

    auto worker = [&] {
      Peeler peeler(inst.graph);
      std::vector<VertexId> combo;
      while (true) {
        const std::size_t f = next_block.fetch_add(1);
        if (f >= blocks || f >= best_block.load()) return;
        const bool hit = for_each_combination_with_first(n, size, static_cast<VertexId>(f), combo,
                                                         [&](const std::vector<VertexId>& anchors) {
                                                           return peeler.run(inst.k, anchors) >= p;
                                                         });
        if (hit) {
          std::lock_guard lock(mutex);
          if (f < best_block.load()) {
            best_block.store(f);
            best = combo;
          }
          return;
        }
      }
    };
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (best_block.load() < blocks) return finish(best);
  }
  return Verdict::no();
}

}  // namespace dakc
