#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "diamaug/graph.hpp"

namespace diamaug {

Graph empty_graph(int n);
Graph complete_graph(int n);
/// Cycle 0-1-...-(n-1)-0, n >= 3.
Graph cycle_graph(int n);
/// Path 0-1-...-(n-1) on n vertices.
Graph path_graph(int n);
/// K_{1,leaves} with center 0.
Graph star_graph(int leaves);
/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
Graph petersen_graph();
/// The 5-cycle 0..4 plus vertex 5 adjacent to the non-adjacent cycle
/// vertices 0 and 2. Diameter two, has a diameter-three spanning subgraph but
/// no diameter-three spanning tree.
Graph cycle_with_ear_graph();

/// Canonical code of a graph on at most 11 vertices: the lexicographically
/// smallest upper-triangle adjacency bitstring over all vertex orders that
/// list vertices by non-decreasing degree. Equal iff isomorphic.
std::uint64_t canonical_code(const Graph& g);

/// One representative per isomorphism class of connected graphs on exactly
/// `n` vertices (1 <= n <= 9), each relabeled to its canonical order, sorted
/// by (edge count, code).
std::vector<Graph> connected_graphs_up_to_isomorphism(int n);

/// Visits every labeled graph on `n` vertices (n <= 8), in order of the
/// edge bitmask over the pairs (0,1),(0,2),...,(n-2,n-1).
void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& visit);

}  // namespace diamaug
