#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "diamaug/graph.hpp"
#include "diamaug/oracle.hpp"

namespace diamaug {

/// Vertex Cover instance: does gamma have a cover of size at most c?
struct VCInstance {
  Graph gamma;
  int c = 0;
};

/// A generated MEDA instance with bookkeeping for the gadget structure.
struct ReductionArtifact {
  Graph graph;
  /// Deletion budget.
  int k = 0;
  /// Diameter the instance asks for.
  int target_d = 0;
  /// Measured diameter of `graph` (checked at construction).
  int diameter = 0;
  /// One label per vertex: s, t, v1[w]..v4[w], e1[u-v], e2[u-v], K1..K4,
  /// q<i>, r<i>; gadget labels carry "#<copy>" when there are several copies.
  std::vector<std::string> roles;
  /// How the instance was composed, including interpretation choices.
  std::string source;

  Vertex s = 0;
  Vertex t = 1;
  /// Far end of the attached path (t when none is attached).
  Vertex tail = 1;
  int clique_count = 2;
  int copies = 1;
  /// path_vertices[copy][w] = {v1, v2, v3, v4}.
  std::vector<std::vector<std::array<Vertex, 4>>> path_vertices;
  /// Number of q vertices attached so far.
  int attached = 0;
  /// Number of triangle steps appended.
  int triangles = 0;
};

/// Two cliques of size k+1 (k = |W| + c); diameter 3, asks diameter 5.
/// Requires gamma to have at least one edge and c >= 0.
ReductionArtifact reduce_vc_meda5_diam3(const VCInstance& vc);

/// Four cliques K1..K4 of size k+1; diameter 4, asks diameter 5.
ReductionArtifact reduce_vc_meda5_diam4(const VCInstance& vc);

/// Appends q1..q_{target_d-4} at t to a diameter-4 artifact: diameter
/// target_d, asks target_d + 1, same budget. Requires target_d >= 5.
ReductionArtifact extend_path(const ReductionArtifact& art, int target_d);

/// delta+1 independent gadget copies sharing s, t and four cliques scaled by
/// delta+1; budget (delta+1)(|W|+c); diameter 4, asks 5. Requires delta >= 1.
ReductionArtifact amplify_copies(const VCInstance& vc, int delta);

/// Appends k_steps triangles q_{i-1} r_i q_i at the tail: diameter and budget
/// grow by k_steps, the asked diameter by 2 k_steps. Requires k_steps >= 1.
ReductionArtifact triangle_chain(const ReductionArtifact& art, int k_steps);

/// Instance of diameter d asking for d + k, for d >= 5 and 1 <= k <= d-1,
/// following the k = 1, k = 2 and k >= 3 routes of the hardness proof.
ReductionArtifact compose_general(int d, int k, const VCInstance& vc);

/// Edges with no endpoint in a clique. Optimal deletions can be taken from
/// this pool.
EdgeSet gadget_pool(const ReductionArtifact& art);

/// Deletion set built from a vertex cover: {s v2, v3 t : v in cover} and
/// {v2 v3 : v not in cover}, in every copy.
EdgeSet cover_deletion(const ReductionArtifact& art, const std::vector<Vertex>& cover);

/// Smallest vertex cover by exhaustive search (|W| <= 20).
std::vector<Vertex> minimum_vertex_cover(const Graph& gamma);

struct EquivalenceReport {
  std::size_t min_cover = 0;
  bool cover_yes = false;
  bool artifact_yes = false;
  /// Smallest restricted-pool deletion reaching the target (when <= k).
  std::optional<EdgeSet> witness;
  bool agree() const { return cover_yes == artifact_yes; }
};

/// Decides the Vertex Cover side by brute force and the artifact side with
/// the oracle restricted to gadget_pool (subsets up to size k).
EquivalenceReport verify_equivalence(const VCInstance& vc, const ReductionArtifact& art,
                                     const OracleBudget& budget = {});

}  // namespace diamaug
