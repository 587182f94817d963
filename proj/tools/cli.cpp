#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "dakc/bounded.hpp"
#include "dakc/core.hpp"
#include "dakc/errors.hpp"
#include "dakc/reductions.hpp"
#include "dakc/separators.hpp"
#include "dakc/solver_dag.hpp"
#include "dakc/solver_degree.hpp"
#include "dakc/solver_k1.hpp"

namespace dakc::cli {

namespace {

using json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write " + path);
  file << text;
}

struct ParamFlags {
  std::optional<int> b;
  std::optional<int> k;
  std::optional<int> p;
};

int pick_param(const std::optional<int>& flag, const std::optional<InstanceParams>& line, int InstanceParams::*field,
               const char* name) {
  if (flag) return *flag;
  if (line) return (*line).*field;
  throw UsageError(std::string("missing --") + name + " and the instance has no q line");
}

Instance load_instance(const std::string& path, const ParamFlags& flags) {
  InstanceFile file = parse_instance_file(read_file(path));
  Instance inst;
  inst.graph = std::move(file.graph);
  inst.b = pick_param(flags.b, file.params, &InstanceParams::b, "b");
  inst.k = pick_param(flags.k, file.params, &InstanceParams::k, "k");
  inst.p = pick_param(flags.p, file.params, &InstanceParams::p, "p");
  if (inst.b < 0 || inst.k < 0 || inst.p < 0) throw UsageError("b, k and p must be nonnegative");
  return inst;
}

json to_ids(const VertexSet& set) {
  json ids = json::array();
  for (VertexId v : set) ids.push_back(v + 1);
  return ids;
}

struct SolveFlags {
  ParamFlags params;
  std::string solver = "auto";
  std::string mode = "auto";
  std::uint64_t seed = 1;
  double eps = 0.01;
  std::uint64_t trial_cap = 1'000'000;
  int threads = 1;
  bool allow_oracle = false;
  std::uint64_t subset_cap = 10'000'000;
  std::string output;
};

void add_solve_options(CLI::App* cmd, SolveFlags& f) {
  cmd->add_option("--b", f.params.b, "anchor budget");
  cmd->add_option("--k", f.params.k, "in-degree threshold");
  cmd->add_option("--p", f.params.p, "minimum core size");
  cmd->add_option("--solver", f.solver, "auto|k1|degree|dag|oracle")
      ->check(CLI::IsMember({"auto", "k1", "degree", "dag", "oracle"}));
  cmd->add_option("--mode", f.mode, "coloring mode: auto|seeded|exhaustive")
      ->check(CLI::IsMember({"auto", "seeded", "exhaustive"}));
  cmd->add_option("--seed", f.seed, "seed for seeded colorings");
  cmd->add_option("--eps", f.eps, "failure probability for seeded mode")->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--trial-cap", f.trial_cap, "maximum number of seeded trials");
  cmd->add_option("--threads", f.threads, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_flag("--allow-oracle", f.allow_oracle, "let auto fall back to the exhaustive oracle");
  cmd->add_option("--subset-cap", f.subset_cap, "oracle anchor-subset cap");
  cmd->add_option("-o,--output", f.output, "write the report here instead of stdout");
}

struct Outcome {
  Verdict verdict;
  std::string solver;
  std::string mode;
};

SearchConfig search_config(const SolveFlags& f, std::size_t n, std::string& mode_name) {
  SearchConfig config;
  config.seed = f.seed;
  config.eps = f.eps;
  config.trial_cap = f.trial_cap;
  config.threads = f.threads;
  const bool exhaustive = f.mode == "exhaustive" || (f.mode == "auto" && n <= config.exhaustive_limit);
  config.mode = exhaustive ? SearchConfig::Mode::kExhaustive : SearchConfig::Mode::kSeeded;
  mode_name = exhaustive ? "exhaustive" : "seeded";
  return config;
}

Outcome run_degree(const Instance& inst, const SearchConfig& config, std::string mode) {
  const DegreeRoute route = route_by_degree(inst);
  return {solve_by_degree(inst, config), std::string(route_name(route)), std::move(mode)};
}

Outcome dispatch(const Instance& inst, const SolveFlags& f) {
  std::string mode;
  const SearchConfig config = search_config(f, inst.n(), mode);
  OracleOptions oracle;
  oracle.subset_cap = f.subset_cap;
  oracle.threads = f.threads;

  if (f.solver == "oracle") return {oracle_solve(inst, oracle), "oracle", "none"};
  if (f.solver == "k1") return {solve_k1(inst), "k1", "none"};
  if (f.solver == "degree") return run_degree(inst, config, mode);
  if (f.solver == "dag") return {solve_dag(inst, config), "dag", mode};

  if (Normalized norm = normalize(inst); norm.immediate) return {*norm.immediate, "trivial", "none"};
  const int delta = inst.graph.max_degree();
  if (inst.k == 1) return {solve_k1(inst), "k1", "none"};
  if (2 * inst.k >= delta) return run_degree(inst, config, mode);
  if (topological_order(inst.graph)) return {solve_dag(inst, config), "dag", mode};
  if (f.allow_oracle) return {oracle_solve(inst, oracle), "oracle", "none"};
  return {Verdict::unsupported("k = " + std::to_string(inst.k) + " is below half the maximum degree " +
                               std::to_string(delta) +
                               " on a graph with cycles; this regime is W[2]-hard parameterized by b. "
                               "Use --solver oracle or --allow-oracle for an exhaustive answer"),
          "none", "none"};
}

const char* answer_name(const Verdict& verdict) {
  switch (verdict.kind) {
    case Verdict::Kind::kYes:
      return "yes";
    case Verdict::Kind::kUnsupported:
      return "unsupported";
    case Verdict::Kind::kNo:
    case Verdict::Kind::kNoUpTo:
      break;
  }
  return "no";
}

int exit_code(const Verdict& verdict) {
  switch (verdict.kind) {
    case Verdict::Kind::kYes:
      return kExitYes;
    case Verdict::Kind::kUnsupported:
      return kExitUnsupported;
    case Verdict::Kind::kNo:
    case Verdict::Kind::kNoUpTo:
      break;
  }
  return kExitNo;
}

void check_witness(const Instance& inst, const Verdict& verdict) {
  if (!verdict.is_yes()) return;
  if (auto problem = explain_violation(inst, *verdict.solution)) {
    throw std::logic_error("internal error: solver witness failed verification: " + *problem);
  }
}

json report(const Instance& inst, const Outcome& outcome, const SolveFlags& f) {
  const std::size_t n = inst.n();
  const Verdict& v = outcome.verdict;
  json out;
  out["answer"] = answer_name(v);
  out["anchors"] = to_ids(v.solution ? v.solution->anchors : VertexSet(n));
  out["core"] = to_ids(v.solution ? v.solution->core : VertexSet(n));
  out["solver"] = outcome.solver;
  out["seed"] = f.seed;
  out["trials"] = v.trials;
  out["trials_capped"] = v.trials_capped;
  out["mode"] = outcome.mode;
  out["b"] = inst.b;
  out["k"] = inst.k;
  out["p"] = inst.p;
  if (v.kind == Verdict::Kind::kUnsupported) out["reason"] = v.reason;
  return out;
}

int cmd_solve(const std::string& path, SolveFlags f, bool oracle_only, std::ostream& out, std::ostream& err) {
  if (oracle_only) f.solver = "oracle";
  const Instance inst = load_instance(path, f.params);
  const Outcome outcome = dispatch(inst, f);
  check_witness(inst, outcome.verdict);
  if (outcome.verdict.kind == Verdict::Kind::kUnsupported) err << "unsupported: " << outcome.verdict.reason << "\n";
  write_text(f.output, report(inst, outcome, f).dump(2) + "\n", out);
  return exit_code(outcome.verdict);
}

int cmd_max(const std::string& path, SolveFlags f, std::ostream& out, std::ostream& err) {
  // p itself is searched, so only b and k are required.
  f.params.p = f.params.p.value_or(0);
  Instance inst = load_instance(path, f.params);
  // Feasibility is monotone in p: a witness for p also answers every smaller p.
  int lo = 0;
  int hi = static_cast<int>(inst.n());
  Outcome best{Verdict::yes({VertexSet(inst.n()), VertexSet(inst.n())}), "trivial", "none"};
  while (lo < hi) {
    const int mid = lo + (hi - lo + 1) / 2;
    inst.p = mid;
    Outcome probe = dispatch(inst, f);
    if (probe.verdict.kind == Verdict::Kind::kUnsupported) {
      err << "unsupported: " << probe.verdict.reason << "\n";
      return kExitUnsupported;
    }
    check_witness(inst, probe.verdict);
    if (probe.verdict.is_yes()) {
      const auto found = static_cast<int>(probe.verdict.solution->core.size());
      lo = std::max(mid, std::min(found, hi));
      best = std::move(probe);
    } else {
      hi = mid - 1;
    }
  }
  json rep;
  rep["max_p"] = lo;
  rep["anchors"] = to_ids(best.verdict.solution->anchors);
  rep["core"] = to_ids(best.verdict.solution->core);
  rep["solver"] = best.solver;
  rep["b"] = inst.b;
  rep["k"] = inst.k;
  write_text(f.output, rep.dump(2) + "\n", out);
  return kExitYes;
}

VertexSet read_id_list(const json& doc, const char* key, std::size_t n) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw InputError(std::string("malformed solution JSON: missing array \"") + key + "\"");
  }
  VertexSet set(n);
  for (const json& id : doc[key]) {
    if (!id.is_number_integer()) throw InputError(std::string("malformed solution JSON: non-integer in ") + key);
    const auto v = id.get<long long>();
    if (v < 1 || v > static_cast<long long>(n)) {
      throw InputError("malformed solution JSON: vertex " + std::to_string(v) + " out of range");
    }
    set.insert(static_cast<VertexId>(v - 1));
  }
  return set;
}

int cmd_verify(const std::string& path, const std::string& solution_path, const ParamFlags& params, std::ostream& out) {
  const Instance inst = load_instance(path, params);
  json doc;
  try {
    doc = json::parse(read_file(solution_path));
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed solution JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("malformed solution JSON: expected an object");
  const Solution sol{read_id_list(doc, "anchors", inst.n()), read_id_list(doc, "core", inst.n())};
  json rep;
  const auto problem = explain_violation(inst, sol);
  rep["valid"] = !problem.has_value();
  if (problem) rep["violation"] = *problem;
  out << rep.dump(2) << "\n";
  return problem ? kExitNo : kExitYes;
}

struct GenFlags {
  std::string kind;
  std::string source;
  std::optional<int> b;
  std::optional<int> k;
  std::optional<int> p;
  std::optional<int> delta;
  bool strict = false;
  std::string output;
};

int require(const std::optional<int>& value, const char* name, const std::string& kind) {
  if (!value) throw UsageError("gen " + kind + " needs --" + std::string(name));
  return *value;
}

int cmd_gen(const GenFlags& g, std::ostream& out) {
  const std::string text = read_file(g.source);
  GeneratedInstance generated;
  if (g.kind == "sat") {
    generated = gen_from_sat(parse_dimacs_cnf(text), require(g.k, "k", g.kind), g.strict);
  } else if (g.kind == "clique") {
    generated = gen_from_clique(parse_undirected(text), require(g.b, "b", g.kind), require(g.k, "k", g.kind));
  } else if (g.kind == "setcover") {
    SetCoverInstance sc = parse_set_cover(text);
    sc.b = require(g.b, "b", g.kind);
    generated = gen_from_setcover(sc);
  } else {
    InstanceFile base_file = parse_instance_file(text);
    const ParamFlags base_params{g.b, std::optional<int>(base_file.params ? base_file.params->k : 1), g.p};
    const Instance base = load_instance(g.source, base_params);
    generated = amplify_k(base, require(g.k, "k", g.kind), require(g.delta, "delta", g.kind));
  }
  const Instance& inst = generated.instance;
  const std::string instance_text =
      serialize_instance_file(InstanceFile{inst.graph, InstanceParams{inst.b, inst.k, inst.p}});
  write_text(g.output, instance_text, out);
  if (!g.output.empty()) write_text(g.output + ".labels", serialize_labels(generated.labels), out);
  return kExitYes;
}

int cmd_seps(const std::string& path, int s, int t, int h, std::ostream& out) {
  const InstanceFile file = parse_instance_file(read_file(path));
  const auto n = static_cast<int>(file.graph.num_vertices());
  if (s < 1 || s > n || t < 1 || t > n) throw UsageError("--s and --t must name vertices 1.." + std::to_string(n));
  if (h < 0) throw UsageError("--h must be nonnegative");
  const auto seps = enumerate_important_separators(file.graph, s - 1, t - 1, h);
  json rep;
  rep["s"] = s;
  rep["t"] = t;
  rep["h"] = h;
  rep["count"] = seps.size();
  json list = json::array();
  for (const SeparatorSet& sep : seps) list.push_back(to_ids(sep.vertices));
  rep["separators"] = std::move(list);
  out << rep.dump(2) << "\n";
  return kExitYes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Directed anchored k-core solver suite", "dakc"};
  app.require_subcommand(1);

  std::string instance_path;
  SolveFlags solve_flags;
  CLI::App* solve = app.add_subcommand("solve", "decide an instance with the best applicable solver");
  solve->add_option("instance", instance_path, "instance file")->required();
  add_solve_options(solve, solve_flags);

  SolveFlags oracle_flags;
  CLI::App* oracle = app.add_subcommand("oracle", "decide an instance by exhaustive anchor enumeration");
  oracle->add_option("instance", instance_path, "instance file")->required();
  add_solve_options(oracle, oracle_flags);

  SolveFlags max_flags;
  CLI::App* max = app.add_subcommand("max", "largest p for which the instance is a YES");
  max->add_option("instance", instance_path, "instance file")->required();
  add_solve_options(max, max_flags);

  std::string solution_path;
  ParamFlags verify_params;
  CLI::App* verify = app.add_subcommand("verify", "check a solution JSON against an instance");
  verify->add_option("instance", instance_path, "instance file")->required();
  verify->add_option("solution", solution_path, "solution JSON with anchors and core")->required();
  verify->add_option("--b", verify_params.b, "anchor budget");
  verify->add_option("--k", verify_params.k, "in-degree threshold");
  verify->add_option("--p", verify_params.p, "minimum core size");

  GenFlags gen_flags;
  CLI::App* gen = app.add_subcommand("gen", "generate an instance from a hardness reduction");
  gen->add_option("kind", gen_flags.kind, "sat|clique|setcover|amplify")
      ->required()
      ->check(CLI::IsMember({"sat", "clique", "setcover", "amplify"}));
  gen->add_option("source", gen_flags.source, "source problem file")->required();
  gen->add_option("--b", gen_flags.b, "clique size, cover budget, or base budget for amplify");
  gen->add_option("--k", gen_flags.k, "target in-degree threshold");
  gen->add_option("--p", gen_flags.p, "base core size for amplify");
  gen->add_option("--delta", gen_flags.delta, "maximum degree for amplify");
  gen->add_flag("--strict", gen_flags.strict, "sat: require both polarities of every variable");
  gen->add_option("-o,--output", gen_flags.output, "instance path; labels go to <path>.labels");

  int sep_s = 0;
  int sep_t = 0;
  int sep_h = 0;
  CLI::App* seps = app.add_subcommand("seps", "list important s-t separators");
  seps->set_help_flag("--help", "print this help message and exit");
  seps->add_option("instance", instance_path, "instance file")->required();
  seps->add_option("--s", sep_s, "source vertex (1-based)")->required();
  seps->add_option("--t", sep_t, "target vertex (1-based)")->required();
  seps->add_option("--h", sep_h, "maximum separator size")->required();

  try {
    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(instance_path, solve_flags, false, out, err);
    if (oracle->parsed()) return cmd_solve(instance_path, oracle_flags, true, out, err);
    if (max->parsed()) return cmd_max(instance_path, max_flags, out, err);
    if (verify->parsed()) return cmd_verify(instance_path, solution_path, verify_params, out);
    if (gen->parsed()) return cmd_gen(gen_flags, out);
    if (seps->parsed()) return cmd_seps(instance_path, sep_s, sep_t, sep_h, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ReductionError& e) {
    err << "invalid generator source: " << e.what() << "\n";
    return kExitInputError;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitContract;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitContract;
  }
  return kExitUsage;
}

}  // namespace dakc::cli
