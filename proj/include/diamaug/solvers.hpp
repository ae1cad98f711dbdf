#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diamaug/graph.hpp"
#include "diamaug/oracle.hpp"

namespace diamaug {

enum class ProblemKind { kDA, kMDA, kEDA, kMEDA, kMDI };

const char* to_string(ProblemKind kind);
/// Case-insensitive "da", "mda", "eda", "meda", "mdi".
std::optional<ProblemKind> parse_problem_kind(const std::string& text);
bool is_minimization(ProblemKind kind);

struct ProblemSpec {
  ProblemKind kind = ProblemKind::kMEDA;
  int d = 3;
  /// Deletion budget for MDA, MEDA and MDI. Without one the verdict is yes
  /// whenever some F works, and min_size reports the optimum.
  std::optional<int> k;
  /// Required for MDI.
  std::optional<std::pair<Vertex, Vertex>> pair;

  /// Throws PreconditionError when fields do not match the kind.
  void validate() const;
};

enum class Verdict { kYes, kNo, kInfeasible };
const char* to_string(Verdict v);

struct Solution {
  Verdict verdict = Verdict::kNo;
  /// Smallest |F| for minimization kinds (when any F works).
  std::optional<std::size_t> min_size;
  std::optional<EdgeSet> deleted;
  /// diam(G - F) for the returned F.
  Length achieved_diameter = Length::infinite();
  /// Diametral pair of G - F.
  std::optional<std::pair<Vertex, Vertex>> certificate;
  /// dist(x, y) in G - F, for MDI.
  std::optional<Length> achieved_distance;
  /// Which algorithm answered.
  std::string method;
  /// "polynomial", "NP-complete" or "open" for the requested case.
  std::string regime;
};

// ---------------------------------------------------------------------------
// Dispatcher

/// Routes to the matching exact algorithm, or to the brute-force oracle for
/// cases without one (flagged method = "oracle"). Requires g connected.
Solution solve(const ProblemSpec& spec, const Graph& g, const OracleBudget& budget = {});

// ---------------------------------------------------------------------------
// Exact algorithms

/// Yes iff g has a path with >= d edges; the witness leaves a DFS spanning
/// tree grown along that path.
Solution solve_da(const Graph& g, int d);

/// Maximum edge count of an n-vertex graph with diameter d (2 <= d < n).
long long ore_max_edges(int n, int d);
/// Path v0..vd plus a clique on the remaining n-d-1 vertices, each joined to
/// v0, v1, v2. Diameter exactly d with ore_max_edges(n, d) edges for
/// 2 <= d < n; K_n for d == 1.
Graph ore_extremal_graph(int n, int d);

/// Closed-form answer on K_n for DA/EDA/MDA/MEDA, with a witness taken from
/// the extremal graph (or a Hamiltonian path for DA).
Solution solve_complete(const Graph& g, int d, ProblemKind kind);

/// Fewest deletions keeping g connected with dist(x, y) >= 3.
Solution solve_mdi3(const Graph& g, Vertex x, Vertex y);

/// Min over vertex pairs of solve_mdi3; verdict against budget k.
Solution solve_mda3(const Graph& g, int k);

/// Yes iff g is complete on >= 4 vertices, or has diameter two and girth at
/// most four, or has diameter three.
Solution solve_eda3(const Graph& g);

/// Fewest deletions leaving a connected graph of diameter exactly three.
Solution solve_meda3(const Graph& g);

// ---------------------------------------------------------------------------
// Relevant four-vertex paths (the core of solve_meda3)

struct RelevantPath {
  Vertex a = 0, b = 0, c = 0, d = 0;
  /// E(G) ∩ {ac, ad, bd}.
  EdgeSet chords;
  /// Common neighbours of a and d other than b and c.
  std::vector<Vertex> common;
  /// |chords| + |common|: deletions needed to make a-b-c-d a shortest path.
  std::size_t f_value = 0;
};

/// Chords, common neighbours and f for the path a-b-c-d (no relevance test).
/// Throws PreconditionError if a-b-c-d is not a path in g.
RelevantPath describe_path(const Graph& g, Vertex a, Vertex b, Vertex c, Vertex d);

/// diam(G - chords) <= 3, and {a,b,c,d} does not induce a 4-cycle whose
/// ends a, d have exactly one common neighbour.
bool is_relevant(const Graph& g, Vertex a, Vertex b, Vertex c, Vertex d);

/// A deletion set D (chords plus at most one edge per common neighbour, or
/// the two-edge fallback) with diam(G - D) == 3, verified before return.
/// Meant for diameter-two graphs where every single deletion keeps diameter
/// two. Throws InvariantViolation if the construction fails verification.
EdgeSet claim_paths_solution(const Graph& g, const RelevantPath& q);

// ---------------------------------------------------------------------------
// Verification

struct Verification {
  bool valid = false;
  /// Empty when valid; otherwise "disconnected", "diameter", "distance",
  /// "budget" or "not a subset".
  std::string reason;
  Length achieved_diameter = Length::infinite();
  std::optional<Length> achieved_distance;
};

/// Checks a proposed F against a problem: F ⊆ E, G - F connected, diameter
/// (or pair distance) condition, |F| <= k when k is given.
Verification verify_deletion(const Graph& g, const ProblemSpec& spec, const EdgeSet& f);

}  // namespace diamaug
