#pragma once

#include <cstddef>
#include <optional>
#include <variant>

#include "diamaug/graph.hpp"

namespace diamaug {

/// Size limits for brute-force enumeration. Checked before any work starts.
struct OracleBudget {
  /// Refuse candidate pools larger than this.
  std::size_t max_edges = 40;
  /// Largest |F| tried; unset means the whole pool.
  std::optional<std::size_t> max_subset_size;
  /// Parallel workers for the subset enumeration. The result is the same
  /// canonical optimum for any value.
  int workers = 1;
};

/// G - F connected with diameter exactly `d`.
struct ExactDiameter {
  int d;
};
/// G - F connected with diameter at least `d`.
struct DiameterAtLeast {
  int d;
};
/// G - F connected with dist(x, y) at least `d`.
struct PairDistanceAtLeast {
  Vertex x;
  Vertex y;
  int d;
};
using OracleGoal = std::variant<ExactDiameter, DiameterAtLeast, PairDistanceAtLeast>;

enum class OracleStatus {
  kFound,
  /// No subset of the pool works, at any size.
  kInfeasible,
  /// Nothing up to max_subset_size works; larger sizes were not tried.
  kNotFoundWithinCap,
};

struct OracleResult {
  OracleStatus status = OracleStatus::kInfeasible;
  /// Lexicographically first minimum-cardinality F (when found).
  std::optional<EdgeSet> deleted;
  /// diam(G - F) when found.
  Length achieved_diameter = Length::infinite();

  bool found() const { return status == OracleStatus::kFound; }
  std::size_t min_size() const;
};

/// Exhaustive search over subsets F of `pool` (default: all edges of g) by
/// increasing cardinality, lexicographic within a cardinality (edge order of
/// the canonical edge list); returns the first F meeting `goal`.
/// Throws PreconditionError if g is disconnected or the pool has non-edges,
/// BudgetExceeded if the pool exceeds budget.max_edges.
OracleResult oracle_search(const Graph& g, const OracleGoal& goal, const OracleBudget& budget = {},
                           const std::optional<EdgeSet>& pool = std::nullopt);

OracleResult oracle_meda(const Graph& g, int d, const OracleBudget& budget = {});
OracleResult oracle_mda(const Graph& g, int d, const OracleBudget& budget = {});
/// Yes-witness is the minimum F; the decision only needs existence.
OracleResult oracle_eda(const Graph& g, int d, const OracleBudget& budget = {});
OracleResult oracle_da(const Graph& g, int d, const OracleBudget& budget = {});
OracleResult oracle_mdi(const Graph& g, Vertex x, Vertex y, int d,
                        const OracleBudget& budget = {});

/// A graph where one deletion raises the diameter by two while raising it by
/// exactly one needs at least two deletions.
struct NonmonotonicityWitness {
  Graph graph;
  int base_diameter = 0;
  /// Single edge whose deletion gives diameter >= base + 2.
  EdgeSet jump_deletion;
  Length jump_diameter;
  /// Minimum F giving diameter exactly base + 1 (|F| >= 2).
  EdgeSet step_deletion;
};

/// Scans connected graphs on 1..max_n vertices (one per isomorphism class,
/// in enumeration order) and returns the first witness. Requires max_n <= 8.
std::optional<NonmonotonicityWitness> nonmonotonicity_witness(int max_n,
                                                              const OracleBudget& budget = {});

}  // namespace diamaug
