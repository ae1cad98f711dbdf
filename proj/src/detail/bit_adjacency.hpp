#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "diamaug/graph.hpp"

namespace diamaug::detail {

// Adjacency rows as bitsets, with scratch space for repeated BFS on copies of
// a base graph that differ by a few removed edges. Not thread-safe; copy per
// worker.
class BitAdjacency {
 public:
  explicit BitAdjacency(const Graph& g)
      : n_(g.num_vertices()),
        words_((g.num_vertices() + 63) / 64),
        base_(static_cast<std::size_t>(n_) * words_, 0),
        rows_(base_),
        visited_(words_),
        frontier_(words_),
        next_(words_) {
    for (const Edge& e : g.edges()) {
      set(base_, e.u, e.v);
      set(base_, e.v, e.u);
    }
    rows_ = base_;
  }

  int num_vertices() const { return n_; }

  void reset() { rows_ = base_; }

  void remove(Edge e) {
    clear(rows_, e.u, e.v);
    clear(rows_, e.v, e.u);
  }

  // Levels until the BFS from `source` stops. Returns -1 if some vertex is
  // unreachable. Stops early (returning stop_above + 1) once a level beyond
  // `stop_above` is reached.
  int eccentricity(Vertex source, int stop_above) {
    return run_bfs(source, -1, stop_above);
  }

  // Distance from source to target, or -1 if unreachable. Explores only the
  // source's component.
  int distance(Vertex source, Vertex target) {
    return run_bfs(source, target, n_);
  }

  bool connected() { return n_ <= 1 || eccentricity(0, n_) >= 0; }

 private:
  static bool test(const std::vector<std::uint64_t>& bits, int v) {
    return (bits[v >> 6] >> (v & 63)) & 1u;
  }
  void set(std::vector<std::uint64_t>& m, int r, int c) {
    m[static_cast<std::size_t>(r) * words_ + (c >> 6)] |= std::uint64_t{1} << (c & 63);
  }
  void clear(std::vector<std::uint64_t>& m, int r, int c) {
    m[static_cast<std::size_t>(r) * words_ + (c >> 6)] &= ~(std::uint64_t{1} << (c & 63));
  }

  int run_bfs(Vertex source, Vertex target, int stop_above) {
    std::fill(visited_.begin(), visited_.end(), 0);
    std::fill(frontier_.begin(), frontier_.end(), 0);
    visited_[source >> 6] |= std::uint64_t{1} << (source & 63);
    frontier_[source >> 6] |= std::uint64_t{1} << (source & 63);
    if (target == source) return 0;
    int level = 0;
    int reached = 1;
    while (true) {
      std::fill(next_.begin(), next_.end(), 0);
      bool any = false;
      for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = frontier_[w];
        while (bits) {
          int v = (w << 6) + std::countr_zero(bits);
          bits &= bits - 1;
          const std::uint64_t* row = &rows_[static_cast<std::size_t>(v) * words_];
          for (int k = 0; k < words_; ++k) next_[k] |= row[k];
        }
      }
      for (int k = 0; k < words_; ++k) {
        next_[k] &= ~visited_[k];
        visited_[k] |= next_[k];
        if (next_[k]) any = true;
        reached += std::popcount(next_[k]);
      }
      if (!any) break;
      ++level;
      if (target >= 0 && test(next_, target)) return level;
      if (level > stop_above) return level;
      frontier_.swap(next_);
    }
    if (target >= 0) return -1;
    return reached == n_ ? level : -1;
  }

  int n_;
  int words_;
  std::vector<std::uint64_t> base_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint64_t> visited_, frontier_, next_;
};

}  // namespace diamaug::detail
