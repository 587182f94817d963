#include "dakc/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "dakc/errors.hpp"

namespace dakc {

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

bool blank_or_comment(const std::string& line) {
  const auto first = line.find_first_not_of(" \t");
  return first == std::string::npos || line[first] == 'c' || line[first] == '%';
}

// Reads integers after the leading tag; fails on any non-integer token.
bool read_ints(std::istringstream& in, std::vector<long long>& out) {
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      return false;
    }
    if (used != token.size()) return false;
    out.push_back(value);
  }
  return true;
}

class Builder {
 public:
  VertexId add(std::string label) {
    labels_.push_back(std::move(label));
    return static_cast<VertexId>(labels_.size() - 1);
  }
  void arc(VertexId u, VertexId v) { arcs_.emplace_back(u, v); }

  GeneratedInstance finish(int b, int k, int p) {
    GeneratedInstance out;
    out.instance = Instance{DirectedGraph::from_arcs(labels_.size(), arcs_), b, k, p};
    out.labels = std::move(labels_);
    return out;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Arc> arcs_;
};

std::string idx(int i) { return std::to_string(i + 1); }

}  // namespace

CnfFormula parse_dimacs_cnf(std::string_view text) {
  CnfFormula formula;
  bool header = false;
  int declared = 0;
  std::vector<int> current;
  std::size_t line_no = 0;
  for (const std::string& line : split_lines(text)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    std::istringstream in(line);
    if (!header) {
      std::string p;
      std::string fmt;
      std::vector<long long> nums;
      in >> p >> fmt;
      if (p != "p") throw ParseError(ParseErrorKind::kMissingHeader, line_no, "expected 'p cnf <vars> <clauses>'");
      if (fmt != "cnf" || !read_ints(in, nums) || nums.size() != 2 || nums[0] < 0 || nums[1] < 0) {
        throw ParseError(ParseErrorKind::kMalformedHeader, line_no, "malformed cnf header");
      }
      formula.num_vars = static_cast<int>(nums[0]);
      declared = static_cast<int>(nums[1]);
      header = true;
      continue;
    }
    std::vector<long long> nums;
    if (!read_ints(in, nums)) throw ParseError(ParseErrorKind::kMalformedLine, line_no, "non-integer literal");
    for (long long lit : nums) {
      if (lit == 0) {
        formula.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (lit > formula.num_vars || lit < -formula.num_vars) {
        throw ParseError(ParseErrorKind::kVertexOutOfRange, line_no,
                         "literal " + std::to_string(lit) + " exceeds the variable count");
      }
      current.push_back(static_cast<int>(lit));
    }
  }
  if (!header) throw ParseError(ParseErrorKind::kMissingHeader, 0, "missing 'p cnf' header");
  if (!current.empty()) formula.clauses.push_back(std::move(current));
  if (static_cast<int>(formula.clauses.size()) != declared) {
    throw ParseError(ParseErrorKind::kArcCountMismatch, 0,
                     "header declares " + std::to_string(declared) + " clauses, found " +
                         std::to_string(formula.clauses.size()));
  }
  return formula;
}

UndirectedGraph parse_undirected(std::string_view text) {
  UndirectedGraph graph;
  bool header = false;
  std::size_t declared = 0;
  std::size_t line_no = 0;
  for (const std::string& line : split_lines(text)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    std::istringstream in(line);
    std::string tag;
    in >> tag;
    std::vector<long long> nums;
    if (!header) {
      std::string fmt;
      in >> fmt;
      if (tag != "p") throw ParseError(ParseErrorKind::kMissingHeader, line_no, "expected 'p ug <n> <m>'");
      if (fmt != "ug" || !read_ints(in, nums) || nums.size() != 2 || nums[0] < 0 || nums[1] < 0) {
        throw ParseError(ParseErrorKind::kMalformedHeader, line_no, "malformed graph header");
      }
      graph.n = static_cast<int>(nums[0]);
      declared = static_cast<std::size_t>(nums[1]);
      header = true;
      continue;
    }
    if (tag != "e" || !read_ints(in, nums) || nums.size() != 2) {
      throw ParseError(ParseErrorKind::kMalformedLine, line_no, "expected 'e <u> <v>'");
    }
    for (long long v : nums) {
      if (v < 1 || v > graph.n) throw ParseError(ParseErrorKind::kVertexOutOfRange, line_no, "vertex out of range");
    }
    graph.edges.emplace_back(static_cast<VertexId>(nums[0] - 1), static_cast<VertexId>(nums[1] - 1));
  }
  if (!header) throw ParseError(ParseErrorKind::kMissingHeader, 0, "missing 'p ug' header");
  if (graph.edges.size() != declared) {
    throw ParseError(ParseErrorKind::kArcCountMismatch, 0,
                     "header declares " + std::to_string(declared) + " edges, found " +
                         std::to_string(graph.edges.size()));
  }
  return graph;
}

SetCoverInstance parse_set_cover(std::string_view text) {
  SetCoverInstance sc;
  bool header = false;
  std::size_t line_no = 0;
  for (const std::string& line : split_lines(text)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    std::istringstream in(line);
    std::string tag;
    in >> tag;
    std::vector<long long> nums;
    if (!header) {
      if (tag != "u") throw ParseError(ParseErrorKind::kMissingHeader, line_no, "expected 'u <n>'");
      if (!read_ints(in, nums) || nums.size() != 1 || nums[0] < 0) {
        throw ParseError(ParseErrorKind::kMalformedHeader, line_no, "malformed universe line");
      }
      sc.universe = static_cast<int>(nums[0]);
      header = true;
      continue;
    }
    if (tag != "s" || !read_ints(in, nums)) {
      throw ParseError(ParseErrorKind::kMalformedLine, line_no, "expected 's <element>...'");
    }
    std::vector<int> set;
    for (long long e : nums) {
      if (e < 1 || e > sc.universe) throw ParseError(ParseErrorKind::kVertexOutOfRange, line_no, "element out of range");
      set.push_back(static_cast<int>(e - 1));
    }
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
      throw ParseError(ParseErrorKind::kMalformedLine, line_no, "repeated element");
    }
    sc.sets.push_back(std::move(set));
  }
  if (!header) throw ParseError(ParseErrorKind::kMissingHeader, 0, "missing 'u' line");
  return sc;
}

void check_sat_restrictions(const CnfFormula& formula, bool both_polarities) {
  std::vector<int> positive(static_cast<std::size_t>(formula.num_vars), 0);
  std::vector<int> negative(static_cast<std::size_t>(formula.num_vars), 0);
  for (std::size_t j = 0; j < formula.clauses.size(); ++j) {
    const auto& clause = formula.clauses[j];
    const std::string name = "clause " + std::to_string(j + 1);
    if (clause.size() > 3) throw ReductionError(name + " has more than 3 literals");
    std::set<int> seen;
    for (int lit : clause) {
      if (lit == 0 || lit > formula.num_vars || lit < -formula.num_vars) {
        throw ReductionError(name + " mentions an undeclared variable");
      }
      if (!seen.insert(lit).second) throw ReductionError(name + " repeats literal " + std::to_string(lit));
      auto& counts = lit > 0 ? positive : negative;
      ++counts[static_cast<std::size_t>(std::abs(lit) - 1)];
    }
  }
  for (int i = 0; i < formula.num_vars; ++i) {
    const auto pos = positive[static_cast<std::size_t>(i)];
    const auto neg = negative[static_cast<std::size_t>(i)];
    const std::string name = "variable x" + idx(i);
    if (pos > 2) throw ReductionError(name + " occurs positively more than twice");
    if (neg > 2) throw ReductionError(name + " occurs negatively more than twice");
    if (pos + neg > 3) throw ReductionError(name + " occurs in more than 3 clauses");
    if (both_polarities && (pos == 0 || neg == 0)) {
      throw ReductionError(name + " must occur both positively and negatively");
    }
  }
}

GeneratedInstance gen_from_sat(const CnfFormula& formula, int k, bool both_polarities) {
  if (k < 1) throw ReductionError("the SAT construction needs k >= 1");
  check_sat_restrictions(formula, both_polarities);
  const int n = formula.num_vars;
  const int m = static_cast<int>(formula.clauses.size());
  Builder build;
  std::vector<VertexId> pos(static_cast<std::size_t>(n));
  std::vector<VertexId> neg(static_cast<std::size_t>(n));

  // `hub` gets k-1 helpers, each fed by k private sources.
  auto add_helpers = [&](VertexId hub, const std::string& helper, const std::string& source, int i) {
    int next_source = 0;
    for (int y = 0; y < k - 1; ++y) {
      const VertexId mid = build.add(helper + idx(i) + "#" + idx(y));
      build.arc(mid, hub);
      for (int z = 0; z < k; ++z) build.arc(build.add(source + idx(i) + "#" + idx(next_source++)), mid);
    }
  };

  for (int i = 0; i < n; ++i) {
    pos[static_cast<std::size_t>(i)] = build.add("x" + idx(i));
    neg[static_cast<std::size_t>(i)] = build.add("~x" + idx(i));
    const VertexId r = build.add("r" + idx(i));
    build.arc(pos[static_cast<std::size_t>(i)], r);
    build.arc(neg[static_cast<std::size_t>(i)], r);
    add_helpers(r, "Y", "Z", i);
  }
  for (int j = 0; j < m; ++j) {
    const VertexId v = build.add("v" + idx(j));
    for (int lit : formula.clauses[static_cast<std::size_t>(j)]) {
      const auto var = static_cast<std::size_t>(std::abs(lit) - 1);
      build.arc(lit > 0 ? pos[var] : neg[var], v);
    }
    add_helpers(v, "U", "W", j);
  }
  const int b = n * (k * (k - 1) + 1) + m * k * (k - 1);
  const int p = n * ((k + 1) * (k - 1) + 2) + m * ((k + 1) * (k - 1) + 1);
  return build.finish(b, k, p);
}

GeneratedInstance gen_from_clique(const UndirectedGraph& graph, int b, int k) {
  if (b < 1) throw ReductionError("the clique construction needs b >= 1");
  if (k < 2) throw ReductionError("the clique construction needs k >= 2");
  std::set<std::pair<VertexId, VertexId>> seen;
  for (auto [u, v] : graph.edges) {
    if (u < 0 || v < 0 || u >= graph.n || v >= graph.n) throw ReductionError("edge endpoint out of range");
    if (u == v) throw ReductionError("self-loop at vertex " + idx(u));
    if (!seen.insert(std::minmax(u, v)).second) {
      throw ReductionError("repeated edge {" + idx(u) + "," + idx(v) + "}");
    }
  }
  Builder build;
  for (int v = 0; v < graph.n; ++v) build.add("b" + idx(v));
  std::vector<VertexId> subdivision;
  for (auto [u, v] : graph.edges) {
    const VertexId w = build.add("w_{" + idx(u) + "," + idx(v) + "}");
    build.arc(u, w);
    build.arc(v, w);
    subdivision.push_back(w);
  }
  for (int z = 0; z < k - 2; ++z) {
    const VertexId source = build.add("z" + idx(z));
    for (VertexId w : subdivision) build.arc(source, w);
  }
  return build.finish(b + k - 2, k, b * (b + 1) / 2 + k - 2);
}

GeneratedInstance gen_from_setcover(const SetCoverInstance& sc) {
  const int n = sc.universe;
  const int r = static_cast<int>(sc.sets.size());
  std::vector<std::vector<int>> containing(static_cast<std::size_t>(n));
  for (int i = 0; i < r; ++i) {
    for (int e : sc.sets[static_cast<std::size_t>(i)]) {
      if (e < 0 || e >= n) throw ReductionError("set " + idx(i) + " has an element outside the universe");
      containing[static_cast<std::size_t>(e)].push_back(i);
    }
  }
  for (int e = 0; e < n; ++e) {
    auto& sets = containing[static_cast<std::size_t>(e)];
    if (sets.empty()) throw ReductionError("element " + idx(e) + " is in no set");
    if (std::adjacent_find(sets.begin(), sets.end()) != sets.end()) {
      throw ReductionError("element " + idx(e) + " repeated within a set");
    }
  }
  const int length = 2 * r * n + r;
  Builder build;
  // x[i][e] for e in X_i.
  std::vector<std::vector<std::pair<int, VertexId>>> xs(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    VertexId prev = build.add("v" + idx(i));
    std::vector<int> members = sc.sets[static_cast<std::size_t>(i)];
    std::sort(members.begin(), members.end());
    for (int e : members) {
      const VertexId x = build.add("x" + idx(i) + "," + idx(e));
      build.arc(prev, x);
      xs[static_cast<std::size_t>(i)].emplace_back(e, x);
      prev = x;
    }
  }
  auto x_of = [&](int i, int e) {
    for (auto [elem, x] : xs[static_cast<std::size_t>(i)]) {
      if (elem == e) return x;
    }
    return VertexId{-1};
  };
  for (int e = 0; e < n; ++e) {
    VertexId prev = -1;
    for (int i : containing[static_cast<std::size_t>(e)]) {
      const VertexId y = build.add("y" + idx(e) + "," + idx(i));
      if (prev >= 0) build.arc(prev, y);
      build.arc(x_of(i, e), y);
      prev = y;
    }
    for (int step = 1; step < length; ++step) {
      const VertexId inner = build.add("P" + idx(e) + "#" + std::to_string(step));
      build.arc(prev, inner);
      prev = inner;
    }
    build.arc(prev, build.add("w" + idx(e)));
  }
  return build.finish(sc.b, 1, n * length);
}

GeneratedInstance amplify_k(const Instance& base, int k, int delta, std::span<const std::string> base_labels) {
  if (k < 2) throw ReductionError("amplification needs k >= 2");
  if (delta <= 2 * k) throw ReductionError("amplification needs delta > 2k");
  if (base.k != 1) throw ReductionError("the base instance must have k = 1");
  const std::size_t n = base.n();
  if (n < 3) throw ReductionError("the base instance needs at least 3 vertices");
  if (base.graph.max_degree() > 3) throw ReductionError("the base instance must have maximum degree at most 3");
  if (!topological_order(base.graph)) throw ReductionError("the base instance must be acyclic");

  Builder build;
  for (std::size_t v = 0; v < n; ++v) {
    build.add(v < base_labels.size() ? base_labels[v] : "v" + idx(static_cast<int>(v)));
  }
  for (const Arc& arc : base.graph.arcs()) build.arc(arc.first, arc.second);
  std::vector<VertexId> previous;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<VertexId> block;
    for (int j = 0; j < k; ++j) {
      const VertexId d = build.add("D" + idx(static_cast<int>(v)) + "#" + idx(j));
      if (j < k - 1) build.arc(d, static_cast<VertexId>(v));
      for (VertexId u : previous) build.arc(u, d);
      block.push_back(d);
    }
    previous = std::move(block);
  }
  return build.finish(base.b + k, k, base.p + static_cast<int>(n) * k);
}

std::string serialize_labels(std::span<const std::string> labels) {
  std::string out;
  for (std::size_t v = 0; v < labels.size(); ++v) out += std::to_string(v + 1) + " " + labels[v] + "\n";
  return out;
}

}  // namespace dakc
