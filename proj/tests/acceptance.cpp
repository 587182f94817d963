// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>

#include "dakc/bounded.hpp"
#include "dakc/core.hpp"
#include "dakc/reductions.hpp"
#include "dakc/separators.hpp"
#include "dakc/solver_dag.hpp"
#include "dakc/solver_degree.hpp"
#include "dakc/solver_k1.hpp"
#include "support/oracles.hpp"

using namespace dakc;
using dakc::testing::Rng;
using dakc::testing::uniform;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Oracle runs are the expensive part; a few threads keep the suite quick.
const OracleOptions kOracle{10'000'000, 4};

int yes_seen = 0;  // YES answers since the last take_yes()

int take_yes() { return std::exchange(yes_seen, 0); }

bool same_answer(const Instance& inst, const Verdict& fast, const Verdict& oracle) {
  yes_seen += oracle.is_yes() ? 1 : 0;
  if (fast.is_yes() != oracle.is_yes()) return false;
  return !fast.is_yes() || verify_solution(inst, *fast.solution);
}

std::optional<Instance> with_degree(Rng& rng, int n, int cap, int k, bool exact) {
  for (int attempt = 0; attempt < 50; ++attempt) {
    DirectedGraph g = testing::random_digraph(rng, n, cap, uniform(rng, n, 3 * n));
    if (exact && g.max_degree() != cap) continue;
    return Instance{std::move(g), uniform(rng, 0, 2), k, uniform(rng, 1, n)};
  }
  return std::nullopt;
}

std::vector<Instance> high_k_pool() {
  Rng rng(2002);
  std::vector<Instance> pool;
  while (pool.size() < 300) {
    const int k = uniform(rng, 1, 3);
    const int cap = std::min(4, 2 * k - 1);
    if (auto inst = with_degree(rng, uniform(rng, 1, 9), cap, k, false)) pool.push_back(std::move(*inst));
  }
  return pool;
}

Outcome criterion_k1() {
  Rng rng(1001);
  int mismatches = 0;
  int checks = 0;
  for (int round = 0; round < 500; ++round) {
    const int n = uniform(rng, 1, 10);
    Instance inst{testing::random_digraph(rng, n, 6, uniform(rng, 0, 3 * n)), uniform(rng, 0, 3), 1, 1};
    for (int p = 1; p <= n; ++p) {
      inst.p = p;
      ++checks;
      if (!same_answer(inst, solve_k1(inst), oracle_solve(inst, kOracle))) ++mismatches;
    }
  }
  return {mismatches == 0, "500 instances, " + std::to_string(checks) + " (instance, p) checks (" +
                               std::to_string(take_yes()) + " yes), " + std::to_string(mismatches) + " mismatches"};
}

Outcome criterion_degree(const std::vector<Instance>& high_pool) {
  const SearchConfig config;  // exhaustive colorings
  int high_mismatches = 0;
  for (const Instance& inst : high_pool) {
    const Verdict v = solve_high_k(inst, inst.graph.max_degree(), config);
    if (!same_answer(inst, v, oracle_solve(inst, kOracle))) ++high_mismatches;
  }
  const int high_yes = take_yes();
  Rng rng(2003);
  int half = 0;
  int half_mismatches = 0;
  int by_delta[5] = {};
  while (half < 300) {
    const int k = half % 2 == 0 ? 1 : 2;
    auto inst = with_degree(rng, uniform(rng, 2, 9), 2 * k, k, true);
    if (!inst) continue;
    ++half;
    ++by_delta[2 * k];
    const Verdict v = solve_half_k(*inst, 2 * k, config);
    if (!same_answer(*inst, v, oracle_solve(*inst, kOracle))) ++half_mismatches;
  }
  return {high_mismatches == 0 && half_mismatches == 0,
          "high k: 300 instances (" + std::to_string(high_yes) + " yes), " + std::to_string(high_mismatches) +
              " mismatches; half k: 300 instances (" + std::to_string(by_delta[2]) + " with delta 2, " +
              std::to_string(by_delta[4]) + " with delta 4, " + std::to_string(take_yes()) + " yes), " +
              std::to_string(half_mismatches) + " mismatches"};
}

Outcome criterion_dag() {
  Rng rng(3001);
  const SearchConfig config;
  int mismatches = 0;
  for (int round = 0; round < 300; ++round) {
    const int n = uniform(rng, 1, 10);
    const Instance inst{testing::random_digraph(rng, n, 4, uniform(rng, 0, 3 * n), true), uniform(rng, 0, 2),
                        uniform(rng, 1, 3), uniform(rng, 1, n)};
    if (!same_answer(inst, solve_dag(inst, config), oracle_solve(inst, kOracle))) ++mismatches;
  }
  return {mismatches == 0,
          "300 DAGs (" + std::to_string(take_yes()) + " yes), " + std::to_string(mismatches) + " mismatches"};
}

Outcome criterion_separators() {
  Rng rng(4001);
  int done = 0;
  int wrong = 0;
  int over_bound = 0;
  std::size_t largest = 0;
  while (done < 200) {
    const int n = uniform(rng, 2, 9);
    const DirectedGraph g = testing::random_digraph(rng, n, 8, uniform(rng, 0, 3 * n));
    const VertexId s = uniform(rng, 0, n - 1);
    const VertexId t = uniform(rng, 0, n - 1);
    if (s == t || g.has_arc(s, t) || g.has_arc(t, s)) continue;
    ++done;
    const int h = uniform(rng, 0, 4);
    const auto seps = enumerate_important_separators(g, s, t, h);
    std::set<std::vector<VertexId>> got;
    for (const auto& sep : seps) got.insert(sep.vertices.to_vector());
    if (got.size() != seps.size() || got != testing::brute_important_separators(g, s, t, h)) ++wrong;
    if (seps.size() > (std::size_t{1} << (2 * h))) ++over_bound;
    largest = std::max(largest, seps.size());
  }
  return {wrong == 0 && over_bound == 0, "200 graphs, " + std::to_string(wrong) + " listing mismatches, " +
                                             std::to_string(over_bound) + " over 4^h (largest listing " +
                                             std::to_string(largest) + ")"};
}

Outcome criterion_reductions() {
  constexpr std::uint64_t kSubsetBudget = 2'000'000;
  auto affordable = [&](const Instance& inst) {
    return count_subsets_up_to(inst.n(), static_cast<std::size_t>(std::min(inst.b, inst.p))) <= kSubsetBudget;
  };

  Rng rng(5001);
  int sat = 0;
  int sat_k2 = 0;
  int sat_bad = 0;
  while (sat < 100) {
    const int k = sat % 2 == 0 ? 1 : 2;
    const int vars = k == 1 ? uniform(rng, 1, 6) : uniform(rng, 1, 2);
    const auto f = testing::random_restricted_cnf(rng, vars, uniform(rng, (2 * vars + 2) / 3, vars + 2));
    if (!f) continue;
    const GeneratedInstance g = gen_from_sat(*f, k, true);
    if (!affordable(g.instance)) continue;
    ++sat;
    sat_k2 += k == 2 ? 1 : 0;
    if (oracle_solve(g.instance, kOracle).is_yes() != testing::satisfiable(*f)) ++sat_bad;
    if (!topological_order(g.instance.graph) || g.instance.graph.max_degree() > k + 2) ++sat_bad;
  }

  int clique_bad = 0;
  for (int round = 0; round < 100; ++round) {
    const int n = uniform(rng, 1, 7);
    UndirectedGraph ug{n, {}};
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        if (uniform(rng, 0, 1) == 0) ug.edges.emplace_back(u, v);
      }
    }
    const int b = uniform(rng, 1, 4);
    const GeneratedInstance g = gen_from_clique(ug, b, uniform(rng, 2, 3));
    if (oracle_solve(g.instance, kOracle).is_yes() != testing::has_clique(ug, b)) ++clique_bad;
    if (!topological_order(g.instance.graph)) ++clique_bad;
  }

  int cover_bad = 0;
  int amplified = 0;
  for (int round = 0; round < 50; ++round) {
    const int universe = uniform(rng, 1, 3);
    const int r = uniform(rng, 1, 3);
    SetCoverInstance sc{universe, std::vector<std::vector<int>>(static_cast<std::size_t>(r)), uniform(rng, 1, r)};
    for (int e = 0; e < universe; ++e) {
      bool placed = false;
      for (auto& set : sc.sets) {
        if (uniform(rng, 0, 1) == 0) {
          set.push_back(e);
          placed = true;
        }
      }
      if (!placed) sc.sets[static_cast<std::size_t>(uniform(rng, 0, r - 1))].push_back(e);
    }
    const bool truth = testing::has_cover(sc);
    const GeneratedInstance g = gen_from_setcover(sc);
    if (oracle_solve(g.instance, kOracle).is_yes() != truth) ++cover_bad;
    if (!topological_order(g.instance.graph) || g.instance.graph.max_degree() > 3) ++cover_bad;
    const GeneratedInstance amp = amplify_k(g.instance, 2, 5);
    if (!affordable(amp.instance)) continue;
    ++amplified;
    if (oracle_solve(amp.instance, kOracle).is_yes() != truth) ++cover_bad;
    if (!topological_order(amp.instance.graph) || amp.instance.graph.max_degree() > 5) ++cover_bad;
  }

  return {sat_bad == 0 && clique_bad == 0 && cover_bad == 0,
          "SAT 100 (" + std::to_string(sat_k2) + " with k=2): " + std::to_string(sat_bad) +
              " mismatches; clique 100: " + std::to_string(clique_bad) + " mismatches; set cover 50 + " +
              std::to_string(amplified) + " amplified: " + std::to_string(cover_bad) + " mismatches"};
}

Outcome criterion_size_bound(const std::vector<Instance>& high_pool) {
  int mismatches = 0;
  for (const Instance& inst : high_pool) {
    const int bound = (inst.graph.max_degree() + 1) * inst.b;
    const bool restricted = testing::core_oracle(inst, bound).has_value();
    if (restricted != oracle_solve(inst, kOracle).is_yes()) ++mismatches;
  }
  return {mismatches == 0, "300 high-k instances, " + std::to_string(mismatches) + " mismatches"};
}

Outcome criterion_peeling() {
  Rng rng(7001);
  int disagreements = 0;
  for (int round = 0; round < 200; ++round) {
    const int n = uniform(rng, 1, 10);
    const int k = uniform(rng, 1, 3);
    const DirectedGraph g = testing::random_digraph(rng, n, 6, uniform(rng, 0, 3 * n));
    const std::uint64_t anchors = rng() & ((std::uint64_t{1} << n) - 1);
    const std::uint64_t first = testing::naive_peel(g, k, anchors, rng);
    bool agree = first == testing::mask_of(peel(g, k, testing::set_of(anchors, n)));
    for (int order = 1; order < 10; ++order) agree = agree && testing::naive_peel(g, k, anchors, rng) == first;
    disagreements += agree ? 0 : 1;
  }
  int path_failures = 0;
  for (int n = 3; n <= 10; ++n) {
    std::vector<Arc> arcs;
    for (int v = 0; v + 1 < n; ++v) arcs.emplace_back(v, v + 1);
    const DirectedGraph path = DirectedGraph::from_arcs(static_cast<std::size_t>(n), arcs);
    const auto size = static_cast<std::size_t>(n);
    if (!peel(path, 1, VertexSet(size)).empty()) ++path_failures;
    if (peel(path, 1, VertexSet(size, {0})) != VertexSet::full(size)) ++path_failures;
  }
  return {disagreements == 0 && path_failures == 0, "200 pairs x 10 orders, " + std::to_string(disagreements) +
                                                        " disagreements; paths 3..10: " +
                                                        std::to_string(path_failures) + " failures"};
}

Outcome criterion_randomized() {
  // Planted path 1->2->3 among 2-vertex components; the only 3-vertex core
  // with one anchor is the path anchored at its source.
  const Arc arcs[] = {{0, 1}, {1, 2}, {3, 4}, {5, 6}, {7, 8}};
  const Instance inst{DirectedGraph::from_arcs(10, arcs), 1, 1, 3};
  const int q = 3;
  const int delta = inst.graph.max_degree();
  constexpr std::uint64_t kTrials = 10'000;
  const std::uint64_t seed = 0x5eed;
  std::uint64_t hits = 0;
  std::uint64_t unverified = 0;
  for (std::uint64_t trial = 0; trial < kTrials; ++trial) {
    if (auto sol = bounded_trial(inst, coloring_for_trial(seed, trial, inst.n()))) {
      ++hits;
      if (!verify_solution(inst, *sol)) ++unverified;
    }
  }
  SearchConfig config;
  config.mode = SearchConfig::Mode::kSeeded;
  config.seed = seed;
  const Verdict v = bounded_core_search(inst, q, config);
  if (v.is_yes() && !verify_solution(inst, *v.solution)) ++unverified;
  const double rate = static_cast<double>(hits) / static_cast<double>(kTrials);
  const double floor = std::ldexp(1.0, -(delta + 1) * q) / 2.0;
  char buf[200];
  std::snprintf(buf, sizeof buf, "%llu trials, %llu hits, rate %.4f vs floor %.6f, %llu unverified YES",
                static_cast<unsigned long long>(kTrials), static_cast<unsigned long long>(hits), rate, floor,
                static_cast<unsigned long long>(unverified));
  return {unverified == 0 && rate >= floor && v.is_yes(), buf};
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* title;
    double limit_seconds;  // 0 = no limit
    std::function<Outcome()> run;
  };
  const std::vector<Instance> high_pool = high_k_pool();
  const std::vector<Entry> entries{
      {1, "oracle equivalence, k = 1", 60, criterion_k1},
      {2, "oracle equivalence, degree regimes", 600, [&] { return criterion_degree(high_pool); }},
      {3, "oracle equivalence, DAG", 0, criterion_dag},
      {4, "important separators vs definition", 0, criterion_separators},
      {5, "reduction corpus", 0, criterion_reductions},
      {6, "core size bound for 2k > delta", 0, [&] { return criterion_size_bound(high_pool); }},
      {7, "peeling confluence and path baseline", 0, criterion_peeling},
      {8, "randomized mode soundness", 0, criterion_randomized},
  };
  int failures = 0;
  for (const Entry& e : entries) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = e.run();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (e.limit_seconds > 0 && seconds >= e.limit_seconds) {
      outcome.pass = false;
      outcome.detail += "; exceeded time limit";
    }
    failures += outcome.pass ? 0 : 1;
    std::printf("criterion %d %s  %s: %s (%.1f s%s)\n", e.id, outcome.pass ? "PASS" : "FAIL", e.title,
                outcome.detail.c_str(), seconds,
                e.limit_seconds > 0 ? (", limit " + std::to_string(static_cast<int>(e.limit_seconds)) + " s").c_str()
                                    : "");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(entries.size()) - failures, entries.size());
  return failures == 0 ? 0 : 1;
}
