#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "diamaug/complexity_table.hpp"
#include "diamaug/edge_list.hpp"
#include "diamaug/errors.hpp"
#include "diamaug/oracle.hpp"
#include "diamaug/reductions.hpp"
#include "diamaug/solvers.hpp"

namespace diamaug::cli {

namespace {

using nlohmann::json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

json length_json(Length l) {
  if (l.is_infinite()) return "inf";
  return l.value();
}

json edge_json(const Edge& e) { return json::array({e.u, e.v}); }

json edges_json(const EdgeSet& f) {
  json out = json::array();
  for (const Edge& e : f) out.push_back(edge_json(e));
  return out;
}

std::string edges_text(const EdgeSet& f) {
  if (f.size() == 0) return "(none)";
  std::string out;
  for (const Edge& e : f) {
    if (!out.empty()) out += ",";
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return out;
}

Graph load_graph(const std::string& path) {
  if (path == "-") return parse_edge_list(std::cin);
  return read_edge_list_file(path);
}

json input_summary(const Graph& g) {
  json in;
  in["n"] = g.num_vertices();
  in["m"] = g.num_edges();
  in["connected"] = is_connected(g);
  in["diameter"] = length_json(diameter(g).value);
  in["girth"] = length_json(girth(g));
  return in;
}

OracleBudget budget_from_env(int workers) {
  OracleBudget budget;
  budget.workers = std::max(1, workers);
  if (const char* env = std::getenv("DIAM_ORACLE_MAX_EDGES")) {
    try {
      std::size_t used = 0;
      const long long value = std::stoll(env, &used);
      if (used != std::string(env).size() || value < 0) throw std::invalid_argument(env);
      budget.max_edges = static_cast<std::size_t>(value);
    } catch (const std::exception&) {
      throw PreconditionError(std::string("DIAM_ORACLE_MAX_EDGES is not a count: ") + env);
    }
  }
  return budget;
}

// Flags shared by solve and verify.
struct SpecFlags {
  std::string problem;
  int d = 0;
  std::optional<int> k;
  std::optional<int> x, y;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--problem", problem, "da, mda, eda, meda or mdi")->required();
    cmd->add_option("--d", d, "target diameter (or pair distance for mdi)")->required();
    cmd->add_option("--k", k, "deletion budget");
    cmd->add_option("--x", x, "first pair vertex (mdi)");
    cmd->add_option("--y", y, "second pair vertex (mdi)");
  }

  ProblemSpec spec() const {
    ProblemSpec s;
    auto kind = parse_problem_kind(problem);
    if (!kind) throw PreconditionError("unknown problem: " + problem);
    s.kind = *kind;
    s.d = d;
    s.k = k;
    if (x.has_value() != y.has_value()) throw PreconditionError("--x and --y go together");
    if (x) s.pair = std::make_pair(*x, *y);
    s.validate();
    return s;
  }
};

json spec_json(const ProblemSpec& spec) {
  json s;
  s["problem"] = to_string(spec.kind);
  s["d"] = spec.d;
  s["k"] = spec.k ? json(*spec.k) : json(nullptr);
  if (spec.pair) s["pair"] = json::array({spec.pair->first, spec.pair->second});
  return s;
}

int exit_code(Verdict v) { return v == Verdict::kYes ? kExitYes : kExitNo; }

Solution solve_with_oracle(const ProblemSpec& spec, const Graph& g, OracleBudget budget) {
  OracleGoal goal;
  switch (spec.kind) {
    case ProblemKind::kDA:
    case ProblemKind::kMDA: goal = DiameterAtLeast{spec.d}; break;
    case ProblemKind::kEDA:
    case ProblemKind::kMEDA: goal = ExactDiameter{spec.d}; break;
    case ProblemKind::kMDI:
      goal = PairDistanceAtLeast{spec.pair->first, spec.pair->second, spec.d};
      break;
  }
  if (spec.k) budget.max_subset_size = static_cast<std::size_t>(*spec.k);
  const OracleResult r = oracle_search(g, goal, budget);

  Solution s;
  s.method = "oracle";
  s.regime = "exhaustive";
  if (!r.found()) {
    s.verdict = r.status == OracleStatus::kInfeasible && is_minimization(spec.kind)
                    ? Verdict::kInfeasible
                    : Verdict::kNo;
    return s;
  }
  const Graph h = delete_edges(g, *r.deleted);
  const DiameterResult diam = diameter(h);
  s.verdict = Verdict::kYes;
  if (is_minimization(spec.kind)) s.min_size = r.deleted->size();
  s.deleted = r.deleted;
  s.achieved_diameter = diam.value;
  s.certificate = diam.pair;
  if (spec.pair) s.achieved_distance = bfs_distances(h, spec.pair->first)[spec.pair->second];
  return s;
}

json solution_json(const Solution& s) {
  json j;
  j["verdict"] = to_string(s.verdict);
  j["min_size"] = s.min_size ? json(*s.min_size) : json(nullptr);
  j["deleted"] = s.deleted ? edges_json(*s.deleted) : json(nullptr);
  j["achieved_diameter"] = s.deleted ? length_json(s.achieved_diameter) : json(nullptr);
  j["certificate"] =
      s.certificate ? json::array({s.certificate->first, s.certificate->second}) : json(nullptr);
  j["achieved_distance"] = s.achieved_distance ? length_json(*s.achieved_distance) : json(nullptr);
  j["method"] = s.method;
  j["regime"] = s.regime;
  return j;
}

void print_solution(std::ostream& out, const Solution& s) {
  out << "verdict: " << to_string(s.verdict) << "\n";
  if (s.min_size) out << "min_size: " << *s.min_size << "\n";
  if (s.deleted) {
    out << "deleted: " << edges_text(*s.deleted) << "\n";
    out << "achieved_diameter: " << s.achieved_diameter << "\n";
  }
  if (s.certificate) {
    out << "certificate: " << s.certificate->first << " " << s.certificate->second << "\n";
  }
  if (s.achieved_distance) out << "achieved_distance: " << *s.achieved_distance << "\n";
  out << "method: " << s.method << "\n";
  out << "regime: " << s.regime << "\n";
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

int cmd_metrics(const std::string& path, bool as_json, std::ostream& out) {
  const Graph g = load_graph(path);
  json report;
  report["command"] = "metrics";
  report["input"] = input_summary(g);
  const std::vector<Length> weights = cycle_weights(g);
  json per_edge = json::array();
  for (std::size_t i = 0; i < weights.size(); ++i) {
    per_edge.push_back({{"edge", edge_json(g.edges()[i])}, {"w", length_json(weights[i])}});
  }
  report["cycle_weights"] = per_edge;
  if (as_json) {
    out << report.dump(2) << "\n";
    return kExitYes;
  }
  const json& in = report["input"];
  out << "n: " << g.num_vertices() << "\nm: " << g.num_edges() << "\n"
      << "connected: " << (in["connected"].get<bool>() ? "yes" : "no") << "\n"
      << "diameter: " << diameter(g).value << "\ngirth: " << girth(g) << "\n";
  for (std::size_t i = 0; i < weights.size(); ++i) {
    out << "w(" << g.edges()[i].u << "-" << g.edges()[i].v << ") = " << weights[i] << "\n";
  }
  return kExitYes;
}

int cmd_solve(const std::string& path, const SpecFlags& flags, bool use_oracle, int workers,
              bool as_json, bool timing, std::ostream& out) {
  const Timer timer;
  const ProblemSpec spec = flags.spec();
  const Graph g = load_graph(path);
  const OracleBudget budget = budget_from_env(workers);
  const Solution s = use_oracle ? solve_with_oracle(spec, g, budget) : solve(spec, g, budget);
  if (as_json) {
    json report = solution_json(s);
    report["command"] = "solve";
    report["input"] = input_summary(g);
    report["spec"] = spec_json(spec);
    if (timing) report["wall_time_ms"] = timer.elapsed_ms();
    out << report.dump(2) << "\n";
  } else {
    print_solution(out, s);
    if (timing) out << "wall_time_ms: " << timer.elapsed_ms() << "\n";
  }
  return exit_code(s.verdict);
}

int cmd_verify(const std::string& path, const SpecFlags& flags, const std::string& deleted,
               bool as_json, std::ostream& out) {
  const ProblemSpec spec = flags.spec();
  const Graph g = load_graph(path);
  const EdgeSet f = parse_edge_spec(deleted);
  for (const Edge& e : f) {
    if (!g.contains_vertex(e.v)) {
      throw PreconditionError("deleted edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                              " has a vertex out of range");
    }
  }
  const Verification v = verify_deletion(g, spec, f);
  if (as_json) {
    json report;
    report["command"] = "verify";
    report["input"] = input_summary(g);
    report["spec"] = spec_json(spec);
    report["deleted"] = edges_json(f);
    report["valid"] = v.valid;
    report["verdict"] = v.valid ? "valid" : "invalid";
    report["reason"] = v.reason;
    report["achieved_diameter"] = length_json(v.achieved_diameter);
    report["achieved_distance"] =
        v.achieved_distance ? length_json(*v.achieved_distance) : json(nullptr);
    out << report.dump(2) << "\n";
  } else {
    out << (v.valid ? "valid" : "invalid: " + v.reason) << "\n";
    out << "achieved_diameter: " << v.achieved_diameter << "\n";
    if (v.achieved_distance) out << "achieved_distance: " << *v.achieved_distance << "\n";
  }
  return v.valid ? kExitYes : kExitNo;
}

struct ReduceFlags {
  std::string gamma;
  int c = 0;
  std::string target = "diam3";
  std::optional<int> extend_d;
  std::optional<int> extend_k;
  std::string out_prefix;
  bool check = false;
};

json artifact_sidecar(const ReductionArtifact& art) {
  json j;
  j["n"] = art.graph.num_vertices();
  j["m"] = art.graph.num_edges();
  j["k"] = art.k;
  j["target_d"] = art.target_d;
  j["diameter"] = art.diameter;
  j["roles"] = art.roles;
  j["source"] = art.source;
  return j;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << content;
  if (!file) throw std::runtime_error("failed writing " + path);
}

int cmd_reduce(const ReduceFlags& flags, bool as_json, std::ostream& out) {
  const VCInstance vc{load_graph(flags.gamma), flags.c};
  ReductionArtifact art;
  if (flags.extend_d) {
    art = compose_general(*flags.extend_d, flags.extend_k.value_or(1), vc);
  } else if (flags.extend_k) {
    throw PreconditionError("--extend-k needs --extend-d");
  } else if (flags.target == "diam3") {
    art = reduce_vc_meda5_diam3(vc);
  } else if (flags.target == "diam4") {
    art = reduce_vc_meda5_diam4(vc);
  } else {
    throw PreconditionError("--target must be diam3 or diam4");
  }

  json sidecar = artifact_sidecar(art);
  if (!flags.out_prefix.empty()) {
    write_file(flags.out_prefix + ".txt", to_edge_list(art.graph));
    write_file(flags.out_prefix + ".json", sidecar.dump(2) + "\n");
  }
  std::optional<EquivalenceReport> report;
  if (flags.check) report = verify_equivalence(vc, art, budget_from_env(1));

  if (as_json) {
    json j = sidecar;
    j.erase("roles");
    j["command"] = "reduce";
    if (report) {
      j["cover_yes"] = report->cover_yes;
      j["artifact_yes"] = report->artifact_yes;
      j["agree"] = report->agree();
    }
    out << j.dump(2) << "\n";
  } else {
    out << "n: " << art.graph.num_vertices() << "\nm: " << art.graph.num_edges() << "\n"
        << "diameter: " << art.diameter << "\nk: " << art.k << "\n"
        << "target_d: " << art.target_d << "\nsource: " << art.source << "\n";
    if (report) {
      out << "vertex cover: " << (report->cover_yes ? "yes" : "no") << "\n"
          << "artifact: " << (report->artifact_yes ? "yes" : "no") << "\n"
          << "agree: " << (report->agree() ? "yes" : "no") << "\n";
    }
  }
  return report && !report->agree() ? kExitNo : kExitYes;
}

int cmd_table(int max_d, int max_k, bool as_json, std::ostream& out) {
  if (max_d < 1 || max_k < 1) throw PreconditionError("table bounds must be >= 1");
  if (!as_json) {
    out << render_complexity_table(max_d, max_k);
    return kExitYes;
  }
  json rows = json::array();
  for (int d = 1; d <= max_d; ++d) {
    json row = json::array();
    for (int k = 1; k <= max_k; ++k) row.push_back(short_label(meda_complexity(d, k)));
    rows.push_back(row);
  }
  json j;
  j["command"] = "table";
  j["rows"] = rows;
  out << j.dump(2) << "\n";
  return kExitYes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Diameter augmentation by edge deletion", "diamaug"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON");

  std::string graph_path;
  auto* metrics = app.add_subcommand("metrics", "distances, girth and cycle weights");
  metrics->add_option("graph", graph_path, "edge-list file ('-' for stdin)")->required();

  SpecFlags solve_flags;
  bool use_oracle = false, timing = false;
  int workers = 1;
  auto* solve_cmd = app.add_subcommand("solve", "decide or optimize one problem");
  solve_cmd->add_option("graph", graph_path, "edge-list file ('-' for stdin)")->required();
  solve_flags.add_to(solve_cmd);
  solve_cmd->add_flag("--oracle", use_oracle, "answer by exhaustive search");
  solve_cmd->add_option("--workers", workers, "threads for the exhaustive search");
  solve_cmd->add_flag("--timing", timing, "report wall time");

  SpecFlags verify_flags;
  std::string deleted;
  auto* verify = app.add_subcommand("verify", "check a proposed deletion set");
  verify->add_option("graph", graph_path, "edge-list file ('-' for stdin)")->required();
  verify_flags.add_to(verify);
  verify->add_option("--deleted", deleted, "edges as u-v,u-v")->required();

  ReduceFlags reduce_flags;
  auto* reduce = app.add_subcommand("reduce", "build a hardness instance from vertex cover");
  reduce->add_option("--gamma", reduce_flags.gamma, "vertex cover graph (edge list)")->required();
  reduce->add_option("--c", reduce_flags.c, "cover size")->required();
  reduce->add_option("--target", reduce_flags.target, "diam3 or diam4")
      ->check(CLI::IsMember({"diam3", "diam4"}));
  reduce->add_option("--extend-d", reduce_flags.extend_d, "compose for input diameter D");
  reduce->add_option("--extend-k", reduce_flags.extend_k, "with increase K (default 1)");
  reduce->add_option("--out", reduce_flags.out_prefix, "write PREFIX.txt and PREFIX.json");
  reduce->add_flag("--check", reduce_flags.check, "decide both sides by brute force");

  int max_d = 8, max_k = 7;
  auto* table = app.add_subcommand("table", "complexity by input diameter and increase");
  table->add_option("--max-d", max_d, "last row");
  table->add_option("--max-k", max_k, "last column");

  for (CLI::App* sub : {metrics, solve_cmd, verify, reduce, table}) {
    sub->add_flag("--json", as_json, "emit JSON");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitYes : kExitError;
  }

  try {
    if (metrics->parsed()) return cmd_metrics(graph_path, as_json, out);
    if (solve_cmd->parsed()) {
      return cmd_solve(graph_path, solve_flags, use_oracle, workers, as_json, timing, out);
    }
    if (verify->parsed()) return cmd_verify(graph_path, verify_flags, deleted, as_json, out);
    if (reduce->parsed()) return cmd_reduce(reduce_flags, as_json, out);
    if (table->parsed()) return cmd_table(max_d, max_k, as_json, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitError;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace diamaug::cli
