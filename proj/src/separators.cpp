#include "dakc/separators.hpp"

#include <algorithm>
#include <set>

#include "dakc/core.hpp"
#include "dakc/errors.hpp"

namespace dakc {
namespace {

void check_terminals(const DirectedGraph& g, VertexId s, VertexId t) {
  const auto n = static_cast<VertexId>(g.num_vertices());
  if (s < 0 || t < 0 || s >= n || t >= n) throw ContractError("terminal outside the vertex range");
  if (s == t) throw ContractError("s and t must differ");
  if (g.has_arc(s, t) || g.has_arc(t, s)) throw ContractError("s and t must be non-adjacent");
}

void check_separator_domain(const VertexSet& separator, VertexId s, VertexId t) {
  if (separator.contains(s) || separator.contains(t)) throw ContractError("separator must avoid s and t");
}

// Unit-capacity vertex-cut network on a digraph D. Each vertex v is split into
// in(v) = 2v and out(v) = 2v + 1 joined by a unit arc (unbounded for
// terminals); arcs of D become unbounded out(u) -> in(v) arcs.
class CutNetwork {
 public:
  explicit CutNetwork(const DirectedGraph& d) : d_(&d) {}

  // Max flow from `sources` to `sinks` in D minus `deleted`, stopping once it
  // exceeds `limit`. Returns the flow value (limit + 1 when exceeded).
  int max_flow(const VertexSet& sources, const VertexSet& sinks, const VertexSet& deleted, int limit) {
    build(sources, sinks, deleted);
    int flow = 0;
    while (flow <= limit && augment()) ++flow;
    return flow;
  }

  // After a max_flow call that stayed within its limit: the minimum cut
  // whose source side is as large as possible.
  VertexSet furthest_min_cut() const {
    const std::size_t n = d_->num_vertices();
    std::vector<char> reaches_sink(nodes_, 0);
    std::vector<int> stack{sink_node()};
    reaches_sink[static_cast<std::size_t>(sink_node())] = 1;
    while (!stack.empty()) {
      const int b = stack.back();
      stack.pop_back();
      for (int e : adj_[static_cast<std::size_t>(b)]) {
        const int a = head_[static_cast<std::size_t>(e)];
        // Residual arc a -> b is the partner of b -> a.
        if (cap_[static_cast<std::size_t>(e ^ 1)] > 0 && !reaches_sink[static_cast<std::size_t>(a)]) {
          reaches_sink[static_cast<std::size_t>(a)] = 1;
          stack.push_back(a);
        }
      }
    }
    VertexSet cut(n);
    for (std::size_t v = 0; v < n; ++v) {
      if (!reaches_sink[2 * v] && reaches_sink[2 * v + 1]) cut.insert(static_cast<VertexId>(v));
    }
    return cut;
  }

 private:
  static constexpr int kUnbounded = 1 << 28;

  int source_node() const { return static_cast<int>(2 * d_->num_vertices()); }
  int sink_node() const { return source_node() + 1; }

  void add_arc(int a, int b, int capacity) {
    head_.push_back(b);
    cap_.push_back(capacity);
    adj_[static_cast<std::size_t>(a)].push_back(static_cast<int>(head_.size()) - 1);
    head_.push_back(a);
    cap_.push_back(0);
    adj_[static_cast<std::size_t>(b)].push_back(static_cast<int>(head_.size()) - 1);
  }

  void build(const VertexSet& sources, const VertexSet& sinks, const VertexSet& deleted) {
    const std::size_t n = d_->num_vertices();
    nodes_ = 2 * n + 2;
    adj_.assign(nodes_, {});
    head_.clear();
    cap_.clear();
    for (std::size_t v = 0; v < n; ++v) {
      const auto vid = static_cast<VertexId>(v);
      if (deleted.contains(vid)) continue;
      const bool terminal = sources.contains(vid) || sinks.contains(vid);
      add_arc(static_cast<int>(2 * v), static_cast<int>(2 * v + 1), terminal ? kUnbounded : 1);
      for (VertexId w : d_->out_neighbors(vid)) {
        if (!deleted.contains(w)) add_arc(static_cast<int>(2 * v + 1), 2 * w, kUnbounded);
      }
      if (sources.contains(vid)) add_arc(source_node(), static_cast<int>(2 * v), kUnbounded);
      if (sinks.contains(vid)) add_arc(static_cast<int>(2 * v + 1), sink_node(), kUnbounded);
    }
  }

  // One BFS augmenting path of value 1.
  bool augment() {
    std::vector<int> via(nodes_, -1);
    std::vector<int> queue{source_node()};
    via[static_cast<std::size_t>(source_node())] = -2;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int a = queue[head];
      for (int e : adj_[static_cast<std::size_t>(a)]) {
        const int b = head_[static_cast<std::size_t>(e)];
        if (cap_[static_cast<std::size_t>(e)] > 0 && via[static_cast<std::size_t>(b)] == -1) {
          via[static_cast<std::size_t>(b)] = e;
          if (b == sink_node()) {
            for (int x = b; x != source_node();) {
              const int edge = via[static_cast<std::size_t>(x)];
              cap_[static_cast<std::size_t>(edge)] -= 1;
              cap_[static_cast<std::size_t>(edge ^ 1)] += 1;
              x = head_[static_cast<std::size_t>(edge ^ 1)];
            }
            return true;
          }
          queue.push_back(b);
        }
      }
    }
    return false;
  }

  const DirectedGraph* d_;
  std::size_t nodes_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<int> head_;
  std::vector<int> cap_;
};

// Important separators are computed on the reversed graph, where the set of
// vertices reaching t becomes the set reachable from t and the classical
// "push the cut away from the source side" branching applies with t as the
// source side and s as the sink side.
class ImportantSeparatorSearch {
 public:
  ImportantSeparatorSearch(const DirectedGraph& g, VertexId s, VertexId t)
      : reversed_(reversed(g)), network_(reversed_), s_(s), t_(t), sinks_(g.num_vertices(), {s}) {}

  std::vector<VertexSet> candidates(int h) {
    const std::size_t n = reversed_.num_vertices();
    found_.clear();
    branch(VertexSet(n), VertexSet(n, {t_}), h, VertexSet(n));
    return {found_.begin(), found_.end()};
  }

 private:
  struct ByMembers {
    bool operator()(const VertexSet& a, const VertexSet& b) const { return a.to_vector() < b.to_vector(); }
  };

  void branch(const VertexSet& deleted, const VertexSet& sources, int budget, const VertexSet& chosen) {
    if (budget < 0) return;
    const int lambda = network_.max_flow(sources, sinks_, deleted, budget);
    if (lambda > budget) return;
    if (lambda == 0) {
      found_.insert(chosen);
      return;
    }
    const VertexSet cut = network_.furthest_min_cut();
    const VertexId pivot = *cut.begin();

    VertexSet with_pivot = deleted;
    with_pivot.insert(pivot);
    VertexSet chosen_pivot = chosen;
    chosen_pivot.insert(pivot);
    // Both branches reuse network_, so everything derived from it is taken now.
    VertexSet extended = reach_avoiding(reversed_, sources, deleted | cut, Direction::kForward);
    extended.insert(pivot);

    branch(with_pivot, sources, budget - 1, chosen_pivot);
    branch(deleted, extended, budget, chosen);
  }

  DirectedGraph reversed_;
  CutNetwork network_;
  VertexId s_;
  VertexId t_;
  VertexSet sinks_;
  std::set<VertexSet, ByMembers> found_;
};

}  // namespace

bool is_separator(const DirectedGraph& g, VertexId s, VertexId t, const VertexSet& separator) {
  check_terminals(g, s, t);
  check_separator_domain(separator, s, t);
  const VertexSet reached =
      reach_avoiding(g, VertexSet(g.num_vertices(), {s}), separator, Direction::kForward);
  return !reached.contains(t);
}

bool is_minimal_separator(const DirectedGraph& g, VertexId s, VertexId t, const VertexSet& separator) {
  if (!is_separator(g, s, t, separator)) return false;
  for (VertexId v : separator) {
    VertexSet smaller = separator;
    smaller.erase(v);
    if (is_separator(g, s, t, smaller)) return false;
  }
  return true;
}

bool is_important(const DirectedGraph& g, VertexId s, VertexId t, const VertexSet& separator, int h,
                  std::uint64_t subset_cap) {
  check_terminals(g, s, t);
  check_separator_domain(separator, s, t);
  const std::size_t size = separator.size();
  if (static_cast<int>(size) > h) throw ContractError("separator larger than h");
  if (!is_minimal_separator(g, s, t, separator)) return false;

  const std::size_t n = g.num_vertices();
  std::vector<VertexId> pool;
  for (std::size_t v = 0; v < n; ++v) {
    if (static_cast<VertexId>(v) != s && static_cast<VertexId>(v) != t) pool.push_back(static_cast<VertexId>(v));
  }
  if (count_subsets_up_to(pool.size(), size) > subset_cap) {
    throw BudgetExceeded("importance check would enumerate too many separators");
  }
  const VertexSet target(n, {t});
  const VertexSet base = reach_avoiding(g, target, separator, Direction::kBackward);

  // Enumerate subsets of the pool of size <= |S| through a bitmask-free
  // recursive walk.
  VertexSet candidate(n);
  bool dominated = false;
  auto visit = [&](auto&& self, std::size_t from, std::size_t remaining) -> void {
    if (dominated) return;
    if (is_separator(g, s, t, candidate)) {
      const VertexSet region = reach_avoiding(g, target, candidate, Direction::kBackward);
      if (base.is_subset_of(region) && region != base) {
        dominated = true;
        return;
      }
    }
    if (remaining == 0) return;
    for (std::size_t i = from; i < pool.size() && !dominated; ++i) {
      candidate.insert(pool[i]);
      self(self, i + 1, remaining - 1);
      candidate.erase(pool[i]);
    }
  };
  visit(visit, 0, size);
  return !dominated;
}

bool is_important_by_flow(const DirectedGraph& g, VertexId s, VertexId t, const VertexSet& separator) {
  if (!is_minimal_separator(g, s, t, separator)) return false;
  const std::size_t n = g.num_vertices();
  const DirectedGraph rev = reversed(g);
  CutNetwork network(rev);
  const VertexSet region = reach_avoiding(rev, VertexSet(n, {t}), separator, Direction::kForward);
  const VertexSet sinks(n, {s});
  const int size = static_cast<int>(separator.size());
  // Any strictly larger region must swallow a member of S, so S is dominated
  // iff some region ∪ {v} can still be cut from s with at most |S| vertices.
  for (VertexId v : separator) {
    VertexSet sources = region;
    sources.insert(v);
    if (network.max_flow(sources, sinks, VertexSet(n), size) <= size) return false;
  }
  return true;
}

int min_vertex_cut(const DirectedGraph& g, VertexId s, VertexId t, int limit) {
  check_terminals(g, s, t);
  CutNetwork network(g);
  const std::size_t n = g.num_vertices();
  return network.max_flow(VertexSet(n, {s}), VertexSet(n, {t}), VertexSet(n), limit);
}

std::vector<SeparatorSet> enumerate_important_separators(const DirectedGraph& g, VertexId s, VertexId t, int h) {
  check_terminals(g, s, t);
  if (h < 0) return {};
  ImportantSeparatorSearch search(g, s, t);
  std::vector<SeparatorSet> result;
  for (VertexSet& candidate : search.candidates(h)) {
    // The branching yields a superset of the important separators.
    if (is_important_by_flow(g, s, t, candidate)) result.push_back({std::move(candidate), s, t});
  }
  std::sort(result.begin(), result.end(), [](const SeparatorSet& a, const SeparatorSet& b) {
    return a.vertices.to_vector() < b.vertices.to_vector();
  });
  return result;
}

}  // namespace dakc
