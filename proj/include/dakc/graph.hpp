#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dakc/vertex_set.hpp"

namespace dakc {

using Arc = std::pair<VertexId, VertexId>;

// Simple loop-free digraph with sorted in/out adjacency. Immutable once built.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  explicit DirectedGraph(std::size_t n) : out_(n), in_(n) {}

  // Throws GraphError on self-loops, duplicate arcs or out-of-range endpoints.
  static DirectedGraph from_arcs(std::size_t n, std::span<const Arc> arcs);

  std::size_t num_vertices() const { return out_.size(); }
  std::size_t num_arcs() const { return num_arcs_; }

  std::span<const VertexId> out_neighbors(VertexId v) const { return out_[static_cast<std::size_t>(v)]; }
  std::span<const VertexId> in_neighbors(VertexId v) const { return in_[static_cast<std::size_t>(v)]; }
  int in_degree(VertexId v) const { return static_cast<int>(in_[static_cast<std::size_t>(v)].size()); }
  int out_degree(VertexId v) const { return static_cast<int>(out_[static_cast<std::size_t>(v)].size()); }
  int degree(VertexId v) const { return in_degree(v) + out_degree(v); }
  // Maximum of in-degree + out-degree over all vertices; 0 for the empty graph.
  int max_degree() const;

  bool has_arc(VertexId u, VertexId v) const;
  // Arcs sorted by (tail, head).
  std::vector<Arc> arcs() const;

  bool operator==(const DirectedGraph& other) const = default;

 private:
  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
  std::size_t num_arcs_ = 0;
};

enum class Direction { kForward, kBackward };

// Forward: every vertex reachable from a seed. Backward: every vertex that
// reaches a seed. Seeds are always included.
VertexSet reach(const DirectedGraph& g, const VertexSet& seeds, Direction direction);
// Same, but vertices in `blocked` are treated as deleted (blocked seeds are
// dropped).
VertexSet reach_avoiding(const DirectedGraph& g, const VertexSet& seeds, const VertexSet& blocked,
                         Direction direction);

struct StrongComponent {
  VertexSet members;
  // True iff the component contains a directed cycle (size >= 2, loops are forbidden).
  bool cyclic = false;
};

// Tarjan's algorithm. Components are listed in reverse topological order of
// the condensation (sinks first).
std::vector<StrongComponent> strongly_connected_components(const DirectedGraph& g);

// Components of the underlying undirected graph, ordered by smallest member.
std::vector<VertexSet> weakly_connected_components(const DirectedGraph& g);

struct InducedSubgraph {
  DirectedGraph graph;
  std::vector<VertexId> to_old;  // new id -> old id
  std::vector<VertexId> to_new;  // old id -> new id, -1 when dropped

  VertexSet lift(const VertexSet& inner) const;
  VertexSet project(const VertexSet& outer) const;
};

// G[keep] with vertices renumbered in increasing order of their old ids.
InducedSubgraph induced_subgraph(const DirectedGraph& g, const VertexSet& keep);

DirectedGraph reversed(const DirectedGraph& g);

// Each undirected edge {u,v} becomes arcs (u,v) and (v,u). Throws GraphError
// on self-loops or repeated edges.
DirectedGraph to_bidirected(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges);

// Topological order, or nullopt when g has a cycle.
std::optional<std::vector<VertexId>> topological_order(const DirectedGraph& g);
// Vertices of some directed cycle in traversal order, empty when g is acyclic.
std::vector<VertexId> find_cycle(const DirectedGraph& g);

// Instance text file: `c` comments, `p dakc n m` header, `a u v` arcs
// (1-based), optional `q b k p` parameter line.
struct InstanceParams {
  int b = 0;
  int k = 0;
  int p = 0;
};

struct InstanceFile {
  DirectedGraph graph;
  std::optional<InstanceParams> params;
};

InstanceFile parse_instance_file(std::string_view text);
DirectedGraph parse_digraph(std::string_view text);
// Canonical text: header, arcs sorted by (tail, head), then the q line.
std::string serialize_instance_file(const InstanceFile& file);

}  // namespace dakc
