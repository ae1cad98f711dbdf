#include "diamaug/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>
#include <thread>

#include "detail/bit_adjacency.hpp"
#include "diamaug/errors.hpp"
#include "diamaug/generators.hpp"

namespace diamaug {

std::size_t OracleResult::min_size() const {
  if (!deleted) throw std::logic_error("OracleResult::min_size() without a solution");
  return deleted->size();
}

namespace {

// Tests one candidate F (given as indices into the pool).
class CandidateCheck {
 public:
  CandidateCheck(const Graph& g, const std::vector<Edge>& pool, const OracleGoal& goal)
      : adjacency_(g), pool_(&pool), goal_(goal) {}

  bool operator()(const std::vector<int>& chosen) {
    adjacency_.reset();
    for (int i : chosen) adjacency_.remove((*pool_)[i]);
    if (!adjacency_.connected()) return false;
    const int n = adjacency_.num_vertices();
    if (const auto* exact = std::get_if<ExactDiameter>(&goal_)) {
      int diam = 0;
      for (Vertex s = 0; s < n; ++s) {
        int ecc = adjacency_.eccentricity(s, exact->d);
        if (ecc > exact->d) return false;
        diam = std::max(diam, ecc);
      }
      return diam == exact->d;
    }
    if (const auto* at_least = std::get_if<DiameterAtLeast>(&goal_)) {
      for (Vertex s = 0; s < n; ++s) {
        if (adjacency_.eccentricity(s, at_least->d) >= at_least->d) return true;
      }
      return false;
    }
    const auto& pair = std::get<PairDistanceAtLeast>(goal_);
    return adjacency_.distance(pair.x, pair.y) >= pair.d;
  }

 private:
  detail::BitAdjacency adjacency_;
  const std::vector<Edge>* pool_;
  OracleGoal goal_;
};

// Lexicographically first hit among size-`size` subsets of 0..pool-1 whose
// smallest element is `first`. `abandon` is polled so a worker can give up
// once a lexicographically earlier block is known to contain a hit.
std::optional<std::vector<int>> first_hit_in_block(int pool, int size, int first,
                                                   CandidateCheck& check,
                                                   const std::atomic<int>& best_block) {
  std::vector<int> combo(size);
  for (int i = 0; i < size; ++i) combo[i] = first + i;
  if (combo.back() >= pool) return std::nullopt;
  std::size_t polls = 0;
  while (true) {
    if ((++polls & 1023u) == 0 && best_block.load(std::memory_order_relaxed) < first) {
      return std::nullopt;
    }
    if (check(combo)) return combo;
    // Next combination with combo[0] fixed.
    int pos = size - 1;
    while (pos >= 1 && combo[pos] == pool - size + pos) --pos;
    if (pos < 1) return std::nullopt;
    ++combo[pos];
    for (int i = pos + 1; i < size; ++i) combo[i] = combo[i - 1] + 1;
  }
}

std::optional<std::vector<int>> first_hit_of_size(int pool, int size, int workers,
                                                  const CandidateCheck& proto) {
  if (size == 0) {
    CandidateCheck check = proto;
    if (check({})) return std::vector<int>{};
    return std::nullopt;
  }
  const int blocks = pool - size + 1;
  if (blocks <= 0) return std::nullopt;
  std::atomic<int> best_block{std::numeric_limits<int>::max()};
  std::vector<std::optional<std::vector<int>>> hits(blocks);

  auto run = [&](int worker, int stride) {
    CandidateCheck check = proto;
    for (int first = worker; first < blocks; first += stride) {
      if (best_block.load(std::memory_order_relaxed) < first) return;
      auto hit = first_hit_in_block(pool, size, first, check, best_block);
      if (hit) {
        hits[first] = std::move(hit);
        int current = best_block.load();
        while (first < current && !best_block.compare_exchange_weak(current, first)) {
        }
        return;  // later blocks of this worker are lexicographically later
      }
    }
  };

  const int threads = std::clamp(workers, 1, blocks);
  if (threads == 1) {
    run(0, 1);
  } else {
    std::vector<std::jthread> pool_threads;
    pool_threads.reserve(threads);
    for (int w = 0; w < threads; ++w) pool_threads.emplace_back(run, w, threads);
  }
  int best = best_block.load();
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return hits[best];
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("input graph must be connected");
}

}  // namespace

OracleResult oracle_search(const Graph& g, const OracleGoal& goal, const OracleBudget& budget,
                           const std::optional<EdgeSet>& pool) {
  require_connected(g);
  std::vector<Edge> candidates = pool ? pool->edges() : g.edges();
  for (const Edge& e : candidates) {
    if (!g.has_edge(e)) throw PreconditionError("candidate pool contains a non-edge");
  }
  if (candidates.size() > budget.max_edges) {
    throw BudgetExceeded("oracle refuses " + std::to_string(candidates.size()) +
                         " candidate edges (limit " + std::to_string(budget.max_edges) + ")");
  }
  if (const auto* pair = std::get_if<PairDistanceAtLeast>(&goal)) {
    if (!g.contains_vertex(pair->x) || !g.contains_vertex(pair->y)) {
      throw PreconditionError("pair vertex out of range");
    }
    if (pair->x == pair->y) throw PreconditionError("pair vertices must be distinct");
  }

  const int m = static_cast<int>(candidates.size());
  const int cap = budget.max_subset_size
                      ? static_cast<int>(std::min<std::size_t>(*budget.max_subset_size, m))
                      : m;
  CandidateCheck proto(g, candidates, goal);
  for (int size = 0; size <= cap; ++size) {
    auto hit = first_hit_of_size(m, size, budget.workers, proto);
    if (!hit) continue;
    std::vector<Edge> chosen;
    for (int i : *hit) chosen.push_back(candidates[i]);
    OracleResult result;
    result.status = OracleStatus::kFound;
    result.deleted = EdgeSet(std::move(chosen));
    result.achieved_diameter = diameter(delete_edges(g, *result.deleted)).value;
    return result;
  }
  OracleResult result;
  result.status = cap < m ? OracleStatus::kNotFoundWithinCap : OracleStatus::kInfeasible;
  return result;
}

OracleResult oracle_meda(const Graph& g, int d, const OracleBudget& budget) {
  return oracle_search(g, ExactDiameter{d}, budget);
}

OracleResult oracle_mda(const Graph& g, int d, const OracleBudget& budget) {
  return oracle_search(g, DiameterAtLeast{d}, budget);
}

OracleResult oracle_eda(const Graph& g, int d, const OracleBudget& budget) {
  return oracle_search(g, ExactDiameter{d}, budget);
}

OracleResult oracle_da(const Graph& g, int d, const OracleBudget& budget) {
  return oracle_search(g, DiameterAtLeast{d}, budget);
}

OracleResult oracle_mdi(const Graph& g, Vertex x, Vertex y, int d, const OracleBudget& budget) {
  return oracle_search(g, PairDistanceAtLeast{x, y, d}, budget);
}

std::optional<NonmonotonicityWitness> nonmonotonicity_witness(int max_n,
                                                              const OracleBudget& budget) {
  if (max_n > 8) throw PreconditionError("witness search supports at most 8 vertices");
  for (int n = 1; n <= max_n; ++n) {
    for (const Graph& g : connected_graphs_up_to_isomorphism(n)) {
      if (g.num_edges() > budget.max_edges) continue;
      const int base = diameter(g).value.value();
      OracleBudget single = budget;
      single.max_subset_size = 1;
      OracleResult jump = oracle_mda(g, base + 2, single);
      if (!jump.found()) continue;
      OracleResult step = oracle_meda(g, base + 1, budget);
      if (!step.found() || step.min_size() < 2) continue;
      return NonmonotonicityWitness{g, base, *jump.deleted, jump.achieved_diameter,
                                    *step.deleted};
    }
  }
  return std::nullopt;
}

}  // namespace diamaug
