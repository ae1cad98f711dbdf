#include <algorithm>
#include <deque>
#include <string>

#include "diamaug/errors.hpp"
#include "diamaug/graph.hpp"

namespace diamaug {

namespace {

void require_vertex(const Graph& g, Vertex v) {
  if (!g.contains_vertex(v)) {
    throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  }
}

// BFS that ignores a single edge (used for cycle weights).
std::vector<Length> bfs_without(const Graph& g, Vertex source, std::optional<Edge> skip) {
  std::vector<Length> dist(g.num_vertices(), Length::infinite());
  std::deque<Vertex> queue{source};
  dist[source] = Length(0);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    int next = dist[v].value() + 1;
    for (Vertex w : g.neighbors(v)) {
      if (skip && Edge(v, w) == *skip) continue;
      if (dist[w].is_infinite()) {
        dist[w] = Length(next);
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

const char* to_string(DeletionClass c) {
  switch (c) {
    case DeletionClass::kDiameterTwoOrThree: return "diam in {2,3}";
    case DeletionClass::kDiameterThree: return "diam = 3";
    case DeletionClass::kDiameterAtLeastFour: return "diam >= 4";
    case DeletionClass::kDisconnects: return "disconnects";
  }
  return "?";
}

std::vector<Length> bfs_distances(const Graph& g, Vertex source) {
  require_vertex(g, source);
  return bfs_without(g, source, std::nullopt);
}

DistanceTable all_pairs_distances(const Graph& g) {
  DistanceTable table(g.num_vertices());
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    auto row = bfs_distances(g, s);
    for (Vertex t = 0; t < g.num_vertices(); ++t) table(s, t) = row[t];
  }
  return table;
}

DiameterResult diameter(const Graph& g) {
  DiameterResult result{Length(0), std::nullopt};
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    auto row = bfs_distances(g, s);
    for (Vertex t = s + 1; t < g.num_vertices(); ++t) {
      if (!result.pair || row[t] > result.value) {
        result.value = row[t];
        result.pair = std::make_pair(s, t);
      }
      if (result.value.is_infinite()) return result;
    }
  }
  return result;
}

bool is_connected(const Graph& g) {
  if (g.num_vertices() <= 1) return true;
  auto row = bfs_distances(g, 0);
  return std::none_of(row.begin(), row.end(), [](Length l) { return l.is_infinite(); });
}

Length girth(const Graph& g) {
  // Shortest cycle through each BFS root: a non-tree edge (v, w) closes a
  // closed walk of length dist[v] + dist[w] + 1 containing a cycle at most
  // that long; the root on a shortest cycle attains it exactly.
  Length best = Length::infinite();
  const int n = g.num_vertices();
  for (Vertex root = 0; root < n; ++root) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::deque<Vertex> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (parent[v] != w) {
          Length len(dist[v] + dist[w] + 1);
          if (len < best) best = len;
        }
      }
    }
  }
  return best;
}

Length cycle_weight(const Graph& g, Edge e) {
  if (!g.has_edge(e)) throw PreconditionError("not an edge of the graph");
  Length d = bfs_without(g, e.u, e)[e.v];
  return d.is_infinite() ? d : Length(d.value() + 1);
}

std::vector<Length> cycle_weights(const Graph& g) {
  std::vector<Length> out;
  out.reserve(g.num_edges());
  for (const Edge& e : g.edges()) out.push_back(cycle_weight(g, e));
  return out;
}

DeletionClass classify_deletion(const Graph& g, Edge e) {
  if (diameter(g).value != 2) {
    throw PreconditionError("classify_deletion requires a diameter-two graph");
  }
  Length w = cycle_weight(g, e);
  if (w.is_infinite()) return DeletionClass::kDisconnects;
  switch (w.value()) {
    case 3: return DeletionClass::kDiameterTwoOrThree;
    case 4: return DeletionClass::kDiameterThree;
    case 5: return DeletionClass::kDiameterAtLeastFour;
    default:
      throw InvariantViolation("cycle weight " + w.to_string() +
                               " in a diameter-two graph");
  }
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(g.num_vertices(), false);
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> block;
    std::vector<Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      block.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(block.begin(), block.end());
    out.push_back(std::move(block));
  }
  return out;
}

Graph delete_edges(const Graph& g, const EdgeSet& f) {
  for (const Edge& e : f) {
    if (!g.has_edge(e)) {
      throw PreconditionError("deleted edge (" + std::to_string(e.u) + "," +
                              std::to_string(e.v) + ") is not in the graph");
    }
  }
  std::vector<Edge> kept;
  kept.reserve(g.num_edges() - f.size());
  std::set_difference(g.edges().begin(), g.edges().end(), f.begin(), f.end(),
                      std::back_inserter(kept));
  return Graph(g.num_vertices(), std::move(kept));
}

bool is_path(const Graph& g, const Path& p) {
  if (p.empty()) return false;
  std::vector<bool> used(g.num_vertices(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!g.contains_vertex(p[i]) || used[p[i]]) return false;
    used[p[i]] = true;
    if (i > 0 && !g.has_edge(p[i - 1], p[i])) return false;
  }
  return true;
}

namespace {

bool extend_path(const Graph& g, int d, Path& path, std::vector<bool>& on_path) {
  if (static_cast<int>(path.size()) - 1 >= d) return true;
  for (Vertex w : g.neighbors(path.back())) {
    if (on_path[w]) continue;
    on_path[w] = true;
    path.push_back(w);
    if (extend_path(g, d, path, on_path)) return true;
    path.pop_back();
    on_path[w] = false;
  }
  return false;
}

}  // namespace

std::optional<Path> find_path_of_length_at_least(const Graph& g, int d) {
  if (d < 1) throw PreconditionError("path length bound must be >= 1");
  if (d >= g.num_vertices()) return std::nullopt;
  std::vector<bool> on_path(g.num_vertices(), false);
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    Path path{s};
    on_path[s] = true;
    if (extend_path(g, d, path, on_path)) return path;
    on_path[s] = false;
  }
  return std::nullopt;
}

Graph spanning_tree_from_path(const Graph& g, const Path& p) {
  if (!is_path(g, p)) throw PreconditionError("not a path in the graph");
  if (!is_connected(g)) throw PreconditionError("graph is disconnected");

  const int n = g.num_vertices();
  std::vector<int> successor(n, -1);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) successor[p[i]] = p[i + 1];

  std::vector<bool> visited(n, false);
  std::vector<Edge> tree;
  tree.reserve(n > 0 ? n - 1 : 0);

  // Frame: vertex plus whether its path successor was tried and the next
  // neighbor slot. The path successor goes first so the traversal runs along p.
  struct Frame {
    Vertex v;
    bool successor_done;
    std::size_t next;
  };
  std::vector<Frame> stack{{p.front(), false, 0}};
  visited[p.front()] = true;
  while (!stack.empty()) {
    Frame& top = stack.back();
    Vertex child = -1;
    if (!top.successor_done) {
      top.successor_done = true;
      Vertex s = successor[top.v];
      if (s >= 0 && !visited[s]) child = s;
    }
    if (child < 0) {
      auto nbrs = g.neighbors(top.v);
      while (top.next < nbrs.size() && visited[nbrs[top.next]]) ++top.next;
      if (top.next < nbrs.size()) child = nbrs[top.next];
    }
    if (child < 0) {
      stack.pop_back();
      continue;
    }
    visited[child] = true;
    tree.emplace_back(top.v, child);
    stack.push_back({child, false, 0});
  }
  return Graph(n, std::move(tree));
}

}  // namespace diamaug
