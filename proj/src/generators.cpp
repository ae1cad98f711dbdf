#include "diamaug/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "diamaug/errors.hpp"

namespace diamaug {

Graph empty_graph(int n) { return Graph(n, std::vector<Edge>{}); }

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, std::move(edges));
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, i + 5);
  }
  return Graph(10, std::move(edges));
}

Graph cycle_with_ear_graph() {
  return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 2}});
}

namespace {

constexpr int kMaxCanonicalVertices = 11;

struct Bits {
  int n;
  std::vector<std::uint16_t> adj;
};

Bits to_bits(const Graph& g) {
  Bits b{g.num_vertices(), std::vector<std::uint16_t>(g.num_vertices(), 0)};
  for (const Edge& e : g.edges()) {
    b.adj[e.u] |= static_cast<std::uint16_t>(1u << e.v);
    b.adj[e.v] |= static_cast<std::uint16_t>(1u << e.u);
  }
  return b;
}

// Upper-triangle bitstring of the graph relabeled by `order` (order[i] is the
// original vertex placed at position i); first pair is the most significant bit.
std::uint64_t encode(const Bits& b, const std::vector<int>& order) {
  std::uint64_t code = 0;
  for (int i = 0; i < b.n; ++i)
    for (int j = i + 1; j < b.n; ++j)
      code = (code << 1) | ((b.adj[order[i]] >> order[j]) & 1u);
  return code;
}

// Smallest code and an order attaining it, permuting only within degree classes.
std::pair<std::uint64_t, std::vector<int>> canonical_form(const Graph& g) {
  if (g.num_vertices() > kMaxCanonicalVertices) {
    throw PreconditionError("canonical_code supports at most 11 vertices");
  }
  Bits b = to_bits(g);
  std::vector<int> order(b.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return g.degree(x) < g.degree(y); });
  std::vector<std::pair<int, int>> blocks;  // [begin, end) of equal degree
  for (int i = 0; i < b.n;) {
    int j = i;
    while (j < b.n && g.degree(order[j]) == g.degree(order[i])) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> best_order = order;
  // Odometer over the product of per-block permutations.
  for (auto& [lo, hi] : blocks) std::sort(order.begin() + lo, order.begin() + hi);
  while (true) {
    std::uint64_t code = encode(b, order);
    if (code < best) {
      best = code;
      best_order = order;
    }
    std::size_t k = 0;
    for (; k < blocks.size(); ++k) {
      auto [lo, hi] = blocks[k];
      if (std::next_permutation(order.begin() + lo, order.begin() + hi)) break;
    }
    if (k == blocks.size()) break;
  }
  return {best, best_order};
}

Graph relabel(const Graph& g, const std::vector<int>& order) {
  std::vector<int> position(g.num_vertices());
  for (int i = 0; i < g.num_vertices(); ++i) position[order[i]] = i;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(position[e.u], position[e.v]);
  return Graph(g.num_vertices(), std::move(edges));
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) { return canonical_form(g).first; }

std::vector<Graph> connected_graphs_up_to_isomorphism(int n) {
  if (n < 1 || n > 9) throw PreconditionError("supported range is 1..9 vertices");
  std::vector<Graph> level{empty_graph(1)};
  for (int size = 2; size <= n; ++size) {
    // Every connected graph has a vertex whose removal leaves it connected,
    // so extending each smaller class by a vertex with a nonempty
    // neighborhood reaches every class.
    std::map<std::uint64_t, Graph> classes;
    for (const Graph& base : level) {
      const int new_vertex = size - 1;
      for (unsigned mask = 1; mask < (1u << new_vertex); ++mask) {
        std::vector<Edge> edges = base.edges();
        for (int v = 0; v < new_vertex; ++v)
          if (mask & (1u << v)) edges.emplace_back(v, new_vertex);
        Graph candidate(size, std::move(edges));
        auto [code, order] = canonical_form(candidate);
        if (!classes.contains(code)) classes.emplace(code, relabel(candidate, order));
      }
    }
    level.clear();
    for (auto& [code, g] : classes) level.push_back(std::move(g));
  }
  std::stable_sort(level.begin(), level.end(), [](const Graph& a, const Graph& b) {
    return a.num_edges() < b.num_edges();
  });
  return level;
}

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& visit) {
  if (n < 0 || n > 8) throw PreconditionError("supported range is 0..8 vertices");
  std::vector<Edge> pairs;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) edges.push_back(pairs[i]);
    visit(Graph(n, std::move(edges)));
  }
}

}  // namespace diamaug
