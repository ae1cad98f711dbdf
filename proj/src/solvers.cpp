#include "diamaug/solvers.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "diamaug/complexity_table.hpp"
#include "diamaug/errors.hpp"
#include "diamaug/generators.hpp"
#include "solver_common.hpp"

namespace diamaug {

const char* to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kDA: return "da";
    case ProblemKind::kMDA: return "mda";
    case ProblemKind::kEDA: return "eda";
    case ProblemKind::kMEDA: return "meda";
    case ProblemKind::kMDI: return "mdi";
  }
  return "?";
}

std::optional<ProblemKind> parse_problem_kind(const std::string& text) {
  std::string lower;
  for (char ch : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  for (ProblemKind k : {ProblemKind::kDA, ProblemKind::kMDA, ProblemKind::kEDA,
                        ProblemKind::kMEDA, ProblemKind::kMDI}) {
    if (lower == to_string(k)) return k;
  }
  return std::nullopt;
}

bool is_minimization(ProblemKind kind) {
  return kind == ProblemKind::kMDA || kind == ProblemKind::kMEDA || kind == ProblemKind::kMDI;
}

void ProblemSpec::validate() const {
  if (d < 1) throw PreconditionError("target diameter d must be >= 1");
  if (k && *k < 0) throw PreconditionError("budget k must be >= 0");
  if (kind == ProblemKind::kMDI && !pair) {
    throw PreconditionError("problem mdi requires a vertex pair");
  }
  if (kind != ProblemKind::kMDI && pair) {
    throw PreconditionError("a vertex pair is only meaningful for mdi");
  }
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kYes: return "yes";
    case Verdict::kNo: return "no";
    case Verdict::kInfeasible: return "infeasible";
  }
  return "?";
}

namespace detail {

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("input graph must be connected");
}

Solution with_deletion(const Graph& g, EdgeSet f, std::string method) {
  Solution s;
  s.verdict = Verdict::kYes;
  DiameterResult diam = diameter(delete_edges(g, f));
  s.achieved_diameter = diam.value;
  s.certificate = diam.pair;
  s.min_size = f.size();
  s.deleted = std::move(f);
  s.method = std::move(method);
  s.regime = "polynomial";
  return s;
}

Solution without_solution(Verdict verdict, std::string method) {
  Solution s;
  s.verdict = verdict;
  s.method = std::move(method);
  s.regime = "polynomial";
  return s;
}

bool better(const EdgeSet& candidate, const std::optional<EdgeSet>& incumbent) {
  if (!incumbent) return true;
  if (candidate.size() != incumbent->size()) return candidate.size() < incumbent->size();
  return candidate < *incumbent;
}

}  // namespace detail

using detail::with_deletion;
using detail::without_solution;

Solution solve_da(const Graph& g, int d) {
  detail::require_connected(g);
  auto path = find_path_of_length_at_least(g, d);
  if (!path) return without_solution(Verdict::kNo, "longest-path search");
  Graph tree = spanning_tree_from_path(g, *path);
  std::vector<Edge> removed;
  std::set_difference(g.edges().begin(), g.edges().end(), tree.edges().begin(),
                      tree.edges().end(), std::back_inserter(removed));
  Solution s = with_deletion(g, EdgeSet(std::move(removed)), "longest-path search + DFS tree");
  s.min_size.reset();
  return s;
}

long long ore_max_edges(int n, int d) {
  if (d < 2 || d >= n) throw PreconditionError("ore_max_edges requires 2 <= d < n");
  const long long m = n - d - 1;
  return d + m * (m + 5) / 2;
}

Graph ore_extremal_graph(int n, int d) {
  if (d < 1 || d >= n) throw PreconditionError("ore_extremal_graph requires 1 <= d < n");
  if (d == 1) return complete_graph(n);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < d; ++i) edges.emplace_back(i, i + 1);
  for (Vertex x = d + 1; x < n; ++x) {
    for (Vertex p = 0; p <= 2; ++p) edges.emplace_back(p, x);
    for (Vertex y = x + 1; y < n; ++y) edges.emplace_back(x, y);
  }
  return Graph(n, std::move(edges));
}

Solution solve_complete(const Graph& g, int d, ProblemKind kind) {
  if (!g.is_complete()) throw PreconditionError("solve_complete requires a complete graph");
  if (d < 1) throw PreconditionError("target diameter d must be >= 1");
  if (kind == ProblemKind::kMDI) throw PreconditionError("solve_complete does not handle mdi");
  const int n = g.num_vertices();
  const bool minimization = is_minimization(kind);
  const char* method = "complete graph: extremal edge bound";
  if (n < d + 1) {
    return without_solution(minimization ? Verdict::kInfeasible : Verdict::kNo, method);
  }
  Graph keep = ore_extremal_graph(n, d);
  std::vector<Edge> removed;
  std::set_difference(g.edges().begin(), g.edges().end(), keep.edges().begin(),
                      keep.edges().end(), std::back_inserter(removed));
  Solution s = with_deletion(g, EdgeSet(std::move(removed)), method);
  if (!minimization) s.min_size.reset();
  return s;
}

Verification verify_deletion(const Graph& g, const ProblemSpec& spec, const EdgeSet& f) {
  Verification v;
  for (const Edge& e : f) {
    if (!g.has_edge(e)) {
      v.reason = "not a subset";
      return v;
    }
  }
  Graph h = delete_edges(g, f);
  v.achieved_diameter = diameter(h).value;
  if (spec.kind == ProblemKind::kMDI && spec.pair) {
    auto [x, y] = *spec.pair;
    if (!h.contains_vertex(x) || !h.contains_vertex(y)) {
      throw PreconditionError("pair vertex out of range");
    }
    v.achieved_distance = bfs_distances(h, x)[y];
  }
  if (v.achieved_diameter.is_infinite()) {
    v.reason = "disconnected";
    return v;
  }
  if (spec.k && f.size() > static_cast<std::size_t>(*spec.k)) {
    v.reason = "budget";
    return v;
  }
  switch (spec.kind) {
    case ProblemKind::kDA:
    case ProblemKind::kMDA:
      if (v.achieved_diameter < spec.d) v.reason = "diameter";
      break;
    case ProblemKind::kEDA:
    case ProblemKind::kMEDA:
      if (v.achieved_diameter != spec.d) v.reason = "diameter";
      break;
    case ProblemKind::kMDI:
      if (!v.achieved_distance || *v.achieved_distance < spec.d) v.reason = "distance";
      break;
  }
  v.valid = v.reason.empty();
  return v;
}

namespace {

// Budgeted verdict from a minimum-size answer.
Solution apply_budget(Solution s, const ProblemSpec& spec) {
  if (!is_minimization(spec.kind) || !spec.k) return s;
  if (s.min_size && s.verdict == Verdict::kYes) {
    s.verdict = *s.min_size <= static_cast<std::size_t>(*spec.k) ? Verdict::kYes : Verdict::kNo;
  }
  return s;
}

Solution from_oracle(const Graph& g, const ProblemSpec& spec, const OracleResult& r,
                     std::string regime) {
  Solution s;
  if (r.found()) {
    s = detail::with_deletion(g, *r.deleted, "oracle");
    if (!is_minimization(spec.kind)) s.min_size.reset();
  } else {
    // Only an exhaustive miss proves that no deletion set exists.
    s.verdict = r.status == OracleStatus::kInfeasible && is_minimization(spec.kind)
                    ? Verdict::kInfeasible
                    : Verdict::kNo;
    s.method = "oracle";
  }
  s.regime = std::move(regime);
  return s;
}

Solution solve_mdi_small(const Graph& g, Vertex x, Vertex y, int d) {
  const char* method = "direct (pair distance <= 2)";
  if (d <= 1 || !g.has_edge(x, y)) {
    Solution s = with_deletion(g, EdgeSet{}, method);
    s.achieved_distance = bfs_distances(g, x)[y];
    return s;
  }
  EdgeSet f{Edge(x, y)};
  Graph h = delete_edges(g, f);
  if (!is_connected(h)) return without_solution(Verdict::kInfeasible, method);
  Solution s = with_deletion(g, f, method);
  s.achieved_distance = bfs_distances(h, x)[y];
  return s;
}

}  // namespace

Solution solve(const ProblemSpec& spec, const Graph& g, const OracleBudget& budget) {
  spec.validate();
  detail::require_connected(g);

  OracleBudget capped = budget;
  if (spec.k) {
    capped.max_subset_size = std::min<std::size_t>(
        budget.max_subset_size.value_or(g.num_edges()), static_cast<std::size_t>(*spec.k));
  }

  if (spec.kind == ProblemKind::kMDI) {
    auto [x, y] = *spec.pair;
    if (!g.contains_vertex(x) || !g.contains_vertex(y)) {
      throw PreconditionError("pair vertex out of range");
    }
    if (x == y) throw PreconditionError("pair vertices must be distinct");
    if (spec.d <= 2) return apply_budget(solve_mdi_small(g, x, y, spec.d), spec);
    if (spec.d == 3) return apply_budget(solve_mdi3(g, x, y), spec);
    Solution s = from_oracle(g, spec, oracle_mdi(g, x, y, spec.d, capped), "NP-hard");
    if (s.deleted) s.achieved_distance = bfs_distances(delete_edges(g, *s.deleted), x)[y];
    return apply_budget(std::move(s), spec);
  }

  const Length base = diameter(g).value;
  const bool at_least = spec.kind == ProblemKind::kDA || spec.kind == ProblemKind::kMDA;
  if (base > spec.d) {
    if (at_least) {
      Solution s = with_deletion(g, EdgeSet{}, "diameter already exceeds d");
      if (spec.kind == ProblemKind::kDA) s.min_size.reset();
      return apply_budget(std::move(s), spec);
    }
    return without_solution(
        spec.kind == ProblemKind::kMEDA ? Verdict::kInfeasible : Verdict::kNo,
        "diameter already exceeds d");
  }
  if (base == spec.d) {
    Solution s = with_deletion(g, EdgeSet{}, "diameter already equals d");
    if (!is_minimization(spec.kind)) s.min_size.reset();
    return apply_budget(std::move(s), spec);
  }
  if (g.is_complete()) return apply_budget(solve_complete(g, spec.d, spec.kind), spec);

  switch (spec.kind) {
    case ProblemKind::kDA:
      return solve_da(g, spec.d);
    case ProblemKind::kMDA:
      if (spec.d == 3) return solve_mda3(g, spec.k.value_or(std::numeric_limits<int>::max()));
      return from_oracle(g, spec, oracle_mda(g, spec.d, capped), "open");
    case ProblemKind::kEDA:
      if (spec.d == 3) return solve_eda3(g);
      return from_oracle(g, spec, oracle_eda(g, spec.d, budget), "open");
    case ProblemKind::kMEDA: {
      if (spec.d == 3) return apply_budget(solve_meda3(g), spec);
      const char* regime = long_label(meda_complexity(base.value(), spec.d - base.value()));
      return apply_budget(from_oracle(g, spec, oracle_meda(g, spec.d, capped), regime), spec);
    }
    case ProblemKind::kMDI:
      break;
  }
  throw std::logic_error("unreachable problem kind");
}

}  // namespace diamaug
