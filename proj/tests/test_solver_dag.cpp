#include <doctest.h>

#include "dakc/errors.hpp"
#include "dakc/solver_dag.hpp"
#include "support/oracles.hpp"

using namespace dakc;
using dakc::testing::Rng;

namespace {

DirectedGraph graph(std::size_t n, std::initializer_list<Arc> arcs) {
  const std::vector<Arc> list(arcs);
  return DirectedGraph::from_arcs(n, list);
}

std::vector<VertexId> ids(const VertexSet& s) { return s.to_vector(); }

}  // namespace

TEST_CASE("dag examples") {
  SearchConfig config;
  Verdict v = solve_dag({graph(3, {{0, 1}, {1, 2}}), 1, 1, 3}, config);
  REQUIRE(v.is_yes());
  CHECK(ids(v.solution->anchors) == std::vector<VertexId>{0});

  v = solve_dag({graph(3, {{0, 2}, {1, 2}}), 2, 2, 3}, config);
  REQUIRE(v.is_yes());
  CHECK(ids(v.solution->anchors) == std::vector<VertexId>{0, 1});
  CHECK(ids(v.solution->core) == std::vector<VertexId>{0, 1, 2});

  CHECK(solve_dag({graph(3, {{0, 2}, {1, 2}}), 1, 2, 3}, config).kind == Verdict::Kind::kNo);
}

TEST_CASE("cyclic input names a cycle") {
  try {
    solve_dag({graph(4, {{0, 1}, {1, 2}, {2, 1}, {2, 3}}), 1, 1, 2}, SearchConfig{});
    FAIL("cycle accepted");
  } catch (const ContractError& e) {
    const std::string what = e.what();
    const bool named = what.find("2 -> 3 -> 2") != std::string::npos || what.find("3 -> 2 -> 3") != std::string::npos;
    CHECK(named);
  }
}

TEST_CASE("the path is the only large core") {
  // 0->1->2->3 plus an isolated vertex 4.
  const Instance inst{graph(5, {{0, 1}, {1, 2}, {2, 3}}), 1, 1, 4};
  const Verdict v = solve_dag(inst, SearchConfig{});
  REQUIRE(v.is_yes());
  CHECK(ids(v.solution->core) == std::vector<VertexId>{0, 1, 2, 3});
}

TEST_CASE("dag solver matches the oracle") {
  Rng rng(71);
  SearchConfig config;
  for (int round = 0; round < 150; ++round) {
    const int n = testing::uniform(rng, 1, 10);
    const Instance inst{testing::random_digraph(rng, n, 4, testing::uniform(rng, 0, 3 * n), true),
                        testing::uniform(rng, 0, 2), testing::uniform(rng, 1, 3), testing::uniform(rng, 1, n)};
    const Verdict v = solve_dag(inst, config);
    CHECK(v.is_yes() == oracle_solve(inst).is_yes());
    if (v.is_yes()) CHECK(verify_solution(inst, *v.solution));
  }
}

TEST_CASE("the choice of sink does not matter") {
  Rng rng(73);
  SearchConfig config;
  DagOptions random_sink;
  random_sink.pick_sink = [&rng](const DirectedGraph&, std::span<const VertexId> sinks) {
    return sinks[static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<int>(sinks.size()) - 1))];
  };
  for (int round = 0; round < 100; ++round) {
    const int n = testing::uniform(rng, 2, 10);
    const Instance inst{testing::random_digraph(rng, n, 4, testing::uniform(rng, 0, 3 * n), true),
                        testing::uniform(rng, 0, 2), testing::uniform(rng, 1, 3), testing::uniform(rng, 1, n)};
    const Verdict lowest = solve_dag(inst, config);
    const Verdict random = solve_dag(inst, config, random_sink);
    CHECK(lowest.is_yes() == random.is_yes());
    if (random.is_yes()) CHECK(verify_solution(inst, *random.solution));
  }
}
