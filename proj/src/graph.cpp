#include "diamaug/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "diamaug/errors.hpp"

namespace diamaug {

int Length::value() const {
  if (is_infinite()) throw std::logic_error("Length::value() on infinity");
  return hops_;
}

std::string Length::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(hops_);
}

EdgeSet::EdgeSet(std::initializer_list<Edge> edges) : EdgeSet(std::vector<Edge>(edges)) {}

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

void EdgeSet::insert(Edge e) {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) edges_.insert(it, e);
}

bool EdgeSet::contains(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

EdgeSet EdgeSet::united(const EdgeSet& other) const {
  std::vector<Edge> out;
  out.reserve(edges_.size() + other.edges_.size());
  std::set_union(edges_.begin(), edges_.end(), other.edges_.begin(),
                 other.edges_.end(), std::back_inserter(out));
  EdgeSet result;
  result.edges_ = std::move(out);
  return result;
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw PreconditionError("negative vertex count");
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v >= n) {
      throw PreconditionError("edge (" + std::to_string(e.u) + "," +
                              std::to_string(e.v) + ") out of range");
    }
    if (e.u == e.v) {
      throw PreconditionError("self-loop at " + std::to_string(e.u));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw PreconditionError("parallel edge (" + std::to_string(dup->u) + "," +
                            std::to_string(dup->v) + ")");
  }
  adjacency_.assign(n, {});
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

namespace {
std::vector<Edge> to_edges(std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> out;
  out.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a == b) throw PreconditionError("self-loop at " + std::to_string(a));
    out.emplace_back(a, b);
  }
  return out;
}
}  // namespace

Graph::Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(n, to_edges(edges)) {}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (!contains_vertex(v)) {
    throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  }
  return adjacency_[v];
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (!contains_vertex(a) || !contains_vertex(b) || a == b) return false;
  const auto& row = adjacency_[a];
  return std::binary_search(row.begin(), row.end(), b);
}

std::optional<std::size_t> Graph::edge_index(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

bool Graph::is_complete() const {
  return edges_.size() == static_cast<std::size_t>(n_) * (n_ - 1) / 2;
}

}  // namespace diamaug
