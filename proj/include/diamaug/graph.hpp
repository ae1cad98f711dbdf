#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "diamaug/length.hpp"

namespace diamaug {

using Vertex = int;

/// Unordered vertex pair stored with the smaller endpoint first.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free set of edges. Subset-of-host is checked where the
/// host is known (delete_edges, verification).
class EdgeSet {
 public:
  EdgeSet() = default;
  EdgeSet(std::initializer_list<Edge> edges);
  explicit EdgeSet(std::vector<Edge> edges);

  void insert(Edge e);
  bool contains(Edge e) const;
  EdgeSet united(const EdgeSet& other) const;

  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }
  const std::vector<Edge>& edges() const { return edges_; }

  friend auto operator<=>(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<Edge> edges_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  /// Throws PreconditionError on self-loops, parallel edges or out-of-range
  /// endpoints.
  Graph(int n, std::vector<Edge> edges);
  Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }

  /// Canonical (lexicographically sorted) edge list.
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }
  /// Position of `e` in edges(), or nullopt.
  std::optional<std::size_t> edge_index(Edge e) const;
  bool contains_vertex(Vertex v) const { return v >= 0 && v < n_; }
  bool is_complete() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// n x n hop distances.
class DistanceTable {
 public:
  explicit DistanceTable(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n) {}
  Length operator()(Vertex a, Vertex b) const { return cells_[index(a, b)]; }
  Length& operator()(Vertex a, Vertex b) { return cells_[index(a, b)]; }
  int size() const { return n_; }

 private:
  std::size_t index(Vertex a, Vertex b) const {
    return static_cast<std::size_t>(a) * n_ + b;
  }
  int n_;
  std::vector<Length> cells_;
};

struct DiameterResult {
  Length value;
  /// A pair realizing `value`; absent for graphs with fewer than two vertices.
  std::optional<std::pair<Vertex, Vertex>> pair;
};

/// Class of diam(G - e) for a diameter-two graph G, keyed by w_G(e).
enum class DeletionClass {
  kDiameterTwoOrThree,  // w = 3
  kDiameterThree,       // w = 4
  kDiameterAtLeastFour, // w = 5
  kDisconnects,         // w = inf
};

const char* to_string(DeletionClass c);

using Path = std::vector<Vertex>;

std::vector<Length> bfs_distances(const Graph& g, Vertex source);
DistanceTable all_pairs_distances(const Graph& g);
DiameterResult diameter(const Graph& g);
bool is_connected(const Graph& g);
Length girth(const Graph& g);

/// w_G(e) for every edge, aligned with g.edges(): one plus the u,v-distance in
/// G - uv, or infinity for cut-edges.
std::vector<Length> cycle_weights(const Graph& g);
Length cycle_weight(const Graph& g, Edge e);

/// Requires diameter(g) == 2.
DeletionClass classify_deletion(const Graph& g, Edge e);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> components(const Graph& g);

/// G - F. Throws PreconditionError if F contains a non-edge.
Graph delete_edges(const Graph& g, const EdgeSet& f);

/// Some simple path with at least `d` edges (exactly `d` when found), or none.
/// Depth-bounded DFS from every start vertex; exact.
std::optional<Path> find_path_of_length_at_least(const Graph& g, int d);

/// DFS spanning tree whose traversal begins along `p`, so `p` is a
/// root-to-descendant branch. Requires g connected and p a path in g.
Graph spanning_tree_from_path(const Graph& g, const Path& p);

/// True if consecutive vertices of `p` are adjacent and all are distinct.
bool is_path(const Graph& g, const Path& p);

}  // namespace diamaug
