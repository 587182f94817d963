#include "dakc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "dakc/errors.hpp"

namespace dakc {

DirectedGraph DirectedGraph::from_arcs(std::size_t n, std::span<const Arc> arcs) {
  DirectedGraph g(n);
  const auto limit = static_cast<VertexId>(n);
  for (const auto& [u, v] : arcs) {
    if (u < 0 || v < 0 || u >= limit || v >= limit) {
      throw GraphError(ArcDefect::kVertexOutOfRange,
                       "arc (" + std::to_string(u) + "," + std::to_string(v) + ") outside [0," +
                           std::to_string(n) + ")");
    }
    if (u == v) {
      throw GraphError(ArcDefect::kSelfLoop, "self-loop at vertex " + std::to_string(u));
    }
    g.out_[static_cast<std::size_t>(u)].push_back(v);
    g.in_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& out = g.out_[v];
    std::sort(out.begin(), out.end());
    if (auto dup = std::adjacent_find(out.begin(), out.end()); dup != out.end()) {
      throw GraphError(ArcDefect::kDuplicateArc,
                       "duplicate arc (" + std::to_string(v) + "," + std::to_string(*dup) + ")");
    }
    std::sort(g.in_[v].begin(), g.in_[v].end());
  }
  g.num_arcs_ = arcs.size();
  return g;
}

int DirectedGraph::max_degree() const {
  int best = 0;
  for (std::size_t v = 0; v < out_.size(); ++v) {
    best = std::max(best, static_cast<int>(out_[v].size() + in_[v].size()));
  }
  return best;
}

bool DirectedGraph::has_arc(VertexId u, VertexId v) const {
  const auto& out = out_[static_cast<std::size_t>(u)];
  return std::binary_search(out.begin(), out.end(), v);
}

std::vector<Arc> DirectedGraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(num_arcs_);
  for (std::size_t u = 0; u < out_.size(); ++u) {
    for (VertexId v : out_[u]) result.emplace_back(static_cast<VertexId>(u), v);
  }
  return result;
}

VertexSet reach_avoiding(const DirectedGraph& g, const VertexSet& seeds, const VertexSet& blocked,
                         Direction direction) {
  VertexSet seen(g.num_vertices());
  std::vector<VertexId> stack;
  for (VertexId v : seeds) {
    if (!blocked.contains(v)) {
      seen.insert(v);
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    const auto next = direction == Direction::kForward ? g.out_neighbors(v) : g.in_neighbors(v);
    for (VertexId w : next) {
      if (!seen.contains(w) && !blocked.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    }
  }
  return seen;
}

VertexSet reach(const DirectedGraph& g, const VertexSet& seeds, Direction direction) {
  return reach_avoiding(g, seeds, VertexSet(g.num_vertices()), direction);
}

std::vector<StrongComponent> strongly_connected_components(const DirectedGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<int> index(n, -1);
  std::vector<int> low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<VertexId> stack;
  std::vector<StrongComponent> result;
  int counter = 0;

  // Iterative DFS; each frame remembers the next out-neighbor to visit.
  struct Frame {
    VertexId v;
    std::size_t next;
  };
  std::vector<Frame> frames;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    frames.push_back({static_cast<VertexId>(root), 0});
    index[root] = low[root] = counter++;
    stack.push_back(static_cast<VertexId>(root));
    on_stack[root] = 1;

    while (!frames.empty()) {
      Frame& frame = frames.back();
      const auto v = static_cast<std::size_t>(frame.v);
      const auto succ = g.out_neighbors(frame.v);
      if (frame.next < succ.size()) {
        const auto w = static_cast<std::size_t>(succ[frame.next++]);
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(static_cast<VertexId>(w));
          on_stack[w] = 1;
          frames.push_back({static_cast<VertexId>(w), 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        StrongComponent comp{VertexSet(n), false};
        std::size_t size = 0;
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = 0;
          comp.members.insert(w);
          ++size;
        } while (static_cast<std::size_t>(w) != v);
        comp.cyclic = size >= 2;
        result.push_back(std::move(comp));
      }
      frames.pop_back();
      if (!frames.empty()) {
        const auto parent = static_cast<std::size_t>(frames.back().v);
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  return result;
}

std::vector<VertexSet> weakly_connected_components(const DirectedGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<VertexSet> result;
  VertexSet assigned(n);
  std::vector<VertexId> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (assigned.contains(static_cast<VertexId>(root))) continue;
    VertexSet comp(n);
    comp.insert(static_cast<VertexId>(root));
    assigned.insert(static_cast<VertexId>(root));
    stack.push_back(static_cast<VertexId>(root));
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (auto neighbors : {g.out_neighbors(v), g.in_neighbors(v)}) {
        for (VertexId w : neighbors) {
          if (!assigned.contains(w)) {
            assigned.insert(w);
            comp.insert(w);
            stack.push_back(w);
          }
        }
      }
    }
    result.push_back(std::move(comp));
  }
  return result;
}

VertexSet InducedSubgraph::lift(const VertexSet& inner) const {
  VertexSet outer(to_new.size());
  for (VertexId v : inner) outer.insert(to_old[static_cast<std::size_t>(v)]);
  return outer;
}

VertexSet InducedSubgraph::project(const VertexSet& outer) const {
  VertexSet inner(to_old.size());
  for (VertexId v : outer) {
    const VertexId mapped = to_new[static_cast<std::size_t>(v)];
    if (mapped >= 0) inner.insert(mapped);
  }
  return inner;
}

InducedSubgraph induced_subgraph(const DirectedGraph& g, const VertexSet& keep) {
  InducedSubgraph sub;
  sub.to_new.assign(g.num_vertices(), -1);
  for (VertexId v : keep) {
    sub.to_new[static_cast<std::size_t>(v)] = static_cast<VertexId>(sub.to_old.size());
    sub.to_old.push_back(v);
  }
  std::vector<Arc> arcs;
  for (VertexId u : sub.to_old) {
    for (VertexId v : g.out_neighbors(u)) {
      const VertexId mapped = sub.to_new[static_cast<std::size_t>(v)];
      if (mapped >= 0) arcs.emplace_back(sub.to_new[static_cast<std::size_t>(u)], mapped);
    }
  }
  sub.graph = DirectedGraph::from_arcs(sub.to_old.size(), arcs);
  return sub;
}

DirectedGraph reversed(const DirectedGraph& g) {
  std::vector<Arc> arcs = g.arcs();
  for (auto& [u, v] : arcs) std::swap(u, v);
  return DirectedGraph::from_arcs(g.num_vertices(), arcs);
}

DirectedGraph to_bidirected(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges) {
  std::vector<Arc> arcs;
  arcs.reserve(edges.size() * 2);
  for (const auto& [u, v] : edges) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  // A repeated edge shows up as a duplicate arc, a loop as a self-loop.
  return DirectedGraph::from_arcs(n, arcs);
}

std::optional<std::vector<VertexId>> topological_order(const DirectedGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<int> indeg(n);
  std::vector<VertexId> order;
  order.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    indeg[v] = g.in_degree(static_cast<VertexId>(v));
    if (indeg[v] == 0) order.push_back(static_cast<VertexId>(v));
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (VertexId w : g.out_neighbors(order[head])) {
      if (--indeg[static_cast<std::size_t>(w)] == 0) order.push_back(w);
    }
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

std::vector<VertexId> find_cycle(const DirectedGraph& g) {
  for (const auto& comp : strongly_connected_components(g)) {
    if (!comp.cyclic) continue;
    // Walk inside the component until a vertex repeats.
    std::vector<int> position(g.num_vertices(), -1);
    std::vector<VertexId> walk;
    VertexId v = *comp.members.begin();
    while (position[static_cast<std::size_t>(v)] == -1) {
      position[static_cast<std::size_t>(v)] = static_cast<int>(walk.size());
      walk.push_back(v);
      for (VertexId w : g.out_neighbors(v)) {
        if (comp.members.contains(w)) {
          v = w;
          break;
        }
      }
    }
    return {walk.begin() + position[static_cast<std::size_t>(v)], walk.end()};
  }
  return {};
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::optional<long long> to_integer(std::string_view token) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

}  // namespace

InstanceFile parse_instance_file(std::string_view text) {
  std::optional<std::size_t> n;
  std::size_t declared_arcs = 0;
  std::vector<Arc> arcs;
  std::vector<std::size_t> arc_lines;
  InstanceFile file;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0] == "c") continue;

    if (tokens[0] == "p") {
      if (n) throw ParseError(ParseErrorKind::kMalformedHeader, line_no, "second header line");
      if (tokens.size() != 4 || tokens[1] != "dakc") {
        throw ParseError(ParseErrorKind::kMalformedHeader, line_no, "expected 'p dakc <n> <m>'");
      }
      const auto nv = to_integer(tokens[2]);
      const auto mv = to_integer(tokens[3]);
      if (!nv || !mv || *nv < 0 || *mv < 0) {
        throw ParseError(ParseErrorKind::kMalformedHeader, line_no, "bad vertex or arc count");
      }
      n = static_cast<std::size_t>(*nv);
      declared_arcs = static_cast<std::size_t>(*mv);
    } else if (tokens[0] == "a") {
      if (!n) throw ParseError(ParseErrorKind::kMissingHeader, line_no, "arc before header");
      if (tokens.size() != 3) throw ParseError(ParseErrorKind::kMalformedLine, line_no, "expected 'a <u> <v>'");
      const auto u = to_integer(tokens[1]);
      const auto v = to_integer(tokens[2]);
      if (!u || !v) throw ParseError(ParseErrorKind::kMalformedLine, line_no, "non-integer endpoint");
      const auto limit = static_cast<long long>(*n);
      if (*u < 1 || *v < 1 || *u > limit || *v > limit) {
        throw ParseError(ParseErrorKind::kVertexOutOfRange, line_no,
                         "vertex index out of range 1.." + std::to_string(limit));
      }
      if (*u == *v) throw ParseError(ParseErrorKind::kSelfLoop, line_no, "self-loop at vertex " + std::to_string(*u));
      arcs.emplace_back(static_cast<VertexId>(*u - 1), static_cast<VertexId>(*v - 1));
      arc_lines.push_back(line_no);
    } else if (tokens[0] == "q") {
      if (tokens.size() != 4) throw ParseError(ParseErrorKind::kMalformedLine, line_no, "expected 'q <b> <k> <p>'");
      const auto b = to_integer(tokens[1]);
      const auto k = to_integer(tokens[2]);
      const auto p = to_integer(tokens[3]);
      if (!b || !k || !p || *b < 0 || *k < 0 || *p < 0) {
        throw ParseError(ParseErrorKind::kMalformedLine, line_no, "parameters must be nonnegative integers");
      }
      file.params = InstanceParams{static_cast<int>(*b), static_cast<int>(*k), static_cast<int>(*p)};
    } else {
      throw ParseError(ParseErrorKind::kMalformedLine, line_no, "unknown line type '" + std::string(tokens[0]) + "'");
    }
  }
  if (!n) throw ParseError(ParseErrorKind::kMissingHeader, 0, "missing 'p dakc' header");

  // Duplicate detection with the offending (second) line reported.
  std::vector<std::size_t> order(arcs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return arcs[a] < arcs[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (arcs[order[i]] == arcs[order[i - 1]]) {
      const auto& [u, v] = arcs[order[i]];
      throw ParseError(ParseErrorKind::kDuplicateArc, arc_lines[order[i]],
                       "duplicate arc " + std::to_string(u + 1) + " " + std::to_string(v + 1));
    }
  }
  if (arcs.size() != declared_arcs) {
    throw ParseError(ParseErrorKind::kArcCountMismatch, 0,
                     "header declares " + std::to_string(declared_arcs) + " arcs, found " +
                         std::to_string(arcs.size()));
  }
  file.graph = DirectedGraph::from_arcs(*n, arcs);
  return file;
}

DirectedGraph parse_digraph(std::string_view text) { return parse_instance_file(text).graph; }

std::string serialize_instance_file(const InstanceFile& file) {
  std::ostringstream out;
  out << "p dakc " << file.graph.num_vertices() << ' ' << file.graph.num_arcs() << '\n';
  for (const auto& [u, v] : file.graph.arcs()) out << "a " << u + 1 << ' ' << v + 1 << '\n';
  if (file.params) out << "q " << file.params->b << ' ' << file.params->k << ' ' << file.params->p << '\n';
  return out.str();
}

}  // namespace dakc
