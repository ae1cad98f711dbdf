#include <algorithm>
#include <string>

#include "diamaug/errors.hpp"
#include "diamaug/solvers.hpp"
#include "solver_common.hpp"

namespace diamaug {

// The x,y-paths of length at most two are xy and x-z-y for z in
// Z = N(x) ∩ N(y). A valid F must hit all of them, and deleting anything more
// never helps connectivity, so an optimum deletes xy (if present) and exactly
// one edge of each pair {xz, zy}: |F| = [xy ∈ E] + |Z| whenever some such
// choice keeps G - F connected.
//
// Let G' = G - xy - {xz, zy : z ∈ Z} with X, Y the components of x and y.
// Keeping xz joins comp(z) to X, keeping zy joins it to Y. A choice exists iff
// (a) every component of G' holds x, y or a member of Z, and
// (b) X = Y, or some z lies in X ∪ Y, or another component holds two members
//     of Z (one sent to each side).
Solution solve_mdi3(const Graph& g, Vertex x, Vertex y) {
  detail::require_connected(g);
  if (!g.contains_vertex(x) || !g.contains_vertex(y)) {
    throw PreconditionError("pair vertex out of range");
  }
  if (x == y) throw PreconditionError("solve_mdi3 requires distinct vertices");

  const char* method = "mdi3: one deletion per short x,y-path";
  if (bfs_distances(g, x)[y] >= 3) {
    Solution s = detail::with_deletion(g, EdgeSet{}, method);
    s.achieved_distance = bfs_distances(g, x)[y];
    return s;
  }

  std::vector<Vertex> common;
  auto nx = g.neighbors(x), ny = g.neighbors(y);
  std::set_intersection(nx.begin(), nx.end(), ny.begin(), ny.end(), std::back_inserter(common));

  EdgeSet stripped;
  if (g.has_edge(x, y)) stripped.insert(Edge(x, y));
  for (Vertex z : common) {
    stripped.insert(Edge(x, z));
    stripped.insert(Edge(z, y));
  }
  Graph reduced = delete_edges(g, stripped);

  std::vector<int> comp_of(g.num_vertices(), -1);
  auto comps = components(reduced);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (Vertex v : comps[c]) comp_of[v] = static_cast<int>(c);
  const int comp_x = comp_of[x], comp_y = comp_of[y];

  std::vector<std::vector<Vertex>> members(comps.size());
  for (Vertex z : common) members[comp_of[z]].push_back(z);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (static_cast<int>(c) != comp_x && static_cast<int>(c) != comp_y && members[c].empty()) {
      return detail::without_solution(Verdict::kInfeasible, method);
    }
  }

  // Keep one edge per z: toward x by default.
  std::vector<Edge> kept;
  bool bridged = comp_x == comp_y;
  for (Vertex z : common) {
    if (comp_x != comp_y && comp_of[z] == comp_x) {
      kept.emplace_back(z, y);
      bridged = true;
    } else {
      kept.emplace_back(x, z);
    }
  }
  if (!bridged) {
    for (Vertex z : common) {
      if (comp_of[z] == comp_y) bridged = true;
    }
  }
  if (!bridged) {
    for (std::size_t c = 0; c < comps.size() && !bridged; ++c) {
      if (members[c].size() >= 2) {
        Vertex z = members[c][1];
        auto pos = std::find(common.begin(), common.end(), z) - common.begin();
        kept[pos] = Edge(z, y);
        bridged = true;
      }
    }
  }
  if (!bridged) return detail::without_solution(Verdict::kInfeasible, method);

  std::vector<Edge> removed;
  std::sort(kept.begin(), kept.end());
  std::set_difference(stripped.begin(), stripped.end(), kept.begin(), kept.end(),
                      std::back_inserter(removed));
  EdgeSet f(std::move(removed));
  Graph h = delete_edges(g, f);
  Length dist = bfs_distances(h, x)[y];
  if (!is_connected(h) || dist < 3) {
    throw InvariantViolation("mdi3 witness failed verification");
  }
  Solution s = detail::with_deletion(g, std::move(f), method);
  s.achieved_distance = dist;
  return s;
}

Solution solve_mda3(const Graph& g, int k) {
  detail::require_connected(g);
  if (k < 0) throw PreconditionError("budget k must be >= 0");
  const char* method = "mda3: best pair via mdi3";
  if (diameter(g).value >= 3) {
    Solution s = detail::with_deletion(g, EdgeSet{}, method);
    return s;
  }
  std::optional<Solution> best;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    for (Vertex y = x + 1; y < g.num_vertices(); ++y) {
      Solution s = solve_mdi3(g, x, y);
      if (s.verdict != Verdict::kYes) continue;
      if (!best || detail::better(*s.deleted, best->deleted)) best = std::move(s);
    }
  }
  if (!best) return detail::without_solution(Verdict::kInfeasible, method);
  Solution s = detail::with_deletion(g, *best->deleted, method);
  s.verdict = *s.min_size <= static_cast<std::size_t>(k) ? Verdict::kYes : Verdict::kNo;
  return s;
}

}  // namespace diamaug
