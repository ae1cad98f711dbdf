#include <gtest/gtest.h>

#include "diamaug/errors.hpp"
#include "diamaug/generators.hpp"
#include "diamaug/reductions.hpp"

using namespace diamaug;

namespace {

VCInstance vc(Graph gamma, int c) { return VCInstance{std::move(gamma), c}; }

std::vector<Vertex> with_role(const ReductionArtifact& art, const std::string& prefix) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(art.roles.size()); ++v)
    if (art.roles[v].rfind(prefix, 0) == 0) out.push_back(v);
  return out;
}

OracleResult pool_optimum(const ReductionArtifact& art) {
  OracleBudget budget;
  budget.max_subset_size = static_cast<std::size_t>(art.k);
  return oracle_search(art.graph, ExactDiameter{art.target_d}, budget, gadget_pool(art));
}

}  // namespace

TEST(ReductionTest, Diameter3GadgetOnK2) {
  ReductionArtifact art = reduce_vc_meda5_diam3(vc(complete_graph(2), 1));
  EXPECT_EQ(art.graph.num_vertices(), 20);
  EXPECT_EQ(art.k, 3);
  EXPECT_EQ(art.diameter, 3);
  EXPECT_EQ(diameter(art.graph).value, 3);
  EXPECT_EQ(art.target_d, 5);
  EXPECT_EQ(art.roles.size(), 20u);
  EXPECT_EQ(with_role(art, "K1").size(), 4u);
  EXPECT_EQ(with_role(art, "K2").size(), 4u);
  EXPECT_TRUE(verify_equivalence(vc(complete_graph(2), 1), art).artifact_yes);
}

TEST(ReductionTest, RolesAreConsistentWithAdjacency) {
  ReductionArtifact art = reduce_vc_meda5_diam3(vc(path_graph(3), 1));
  auto k1 = with_role(art, "K1"), k2 = with_role(art, "K2");
  std::vector<Vertex> side1, side2;
  for (const std::string p : {"v1", "v2", "e1"})
    for (Vertex v : with_role(art, p)) side1.push_back(v);
  for (const std::string p : {"v3", "v4", "e2"})
    for (Vertex v : with_role(art, p)) side2.push_back(v);
  for (Vertex k : k1) {
    for (Vertex v : side1) EXPECT_TRUE(art.graph.has_edge(k, v));
    for (Vertex v : side2) EXPECT_FALSE(art.graph.has_edge(k, v));
    for (Vertex other : k2) EXPECT_TRUE(art.graph.has_edge(k, other));
  }
  for (Vertex k : k2)
    for (Vertex v : side2) EXPECT_TRUE(art.graph.has_edge(k, v));
  for (Vertex v : with_role(art, "v1")) EXPECT_TRUE(art.graph.has_edge(art.s, v));
  for (Vertex v : with_role(art, "v4")) EXPECT_TRUE(art.graph.has_edge(art.t, v));
  // Edge 0-1 of gamma: v = 1, u = 0, so v2[1] - e1 - v3[0] and v3[1] - e2 - v2[0].
  const auto& p = art.path_vertices[0];
  Vertex e1 = with_role(art, "e1[0-1]").front(), e2 = with_role(art, "e2[0-1]").front();
  EXPECT_TRUE(art.graph.has_edge(p[1][1], e1));
  EXPECT_TRUE(art.graph.has_edge(e1, p[0][2]));
  EXPECT_TRUE(art.graph.has_edge(p[1][2], e2));
  EXPECT_TRUE(art.graph.has_edge(e2, p[0][1]));
}

TEST(ReductionTest, RejectsEdgelessGamma) {
  EXPECT_THROW(reduce_vc_meda5_diam3(vc(empty_graph(2), 1)), PreconditionError);
  EXPECT_THROW(reduce_vc_meda5_diam4(vc(empty_graph(3), 0)), PreconditionError);
  EXPECT_THROW(reduce_vc_meda5_diam3(vc(complete_graph(2), -1)), PreconditionError);
}

TEST(ReductionTest, EquivalenceExamples) {
  for (auto [gamma, c, yes] : {std::tuple{complete_graph(2), 1, true},
                               std::tuple{complete_graph(3), 1, false},
                               std::tuple{complete_graph(3), 2, true},
                               std::tuple{path_graph(3), 1, true}}) {
    VCInstance instance = vc(gamma, c);
    EquivalenceReport report = verify_equivalence(instance, reduce_vc_meda5_diam3(instance));
    EXPECT_EQ(report.cover_yes, yes);
    EXPECT_TRUE(report.agree());
    if (report.witness) {
      ReductionArtifact art = reduce_vc_meda5_diam3(instance);
      Graph h = delete_edges(art.graph, *report.witness);
      EXPECT_EQ(diameter(h).value, 5);
    }
  }
}

TEST(ReductionTest, Diameter4Gadget) {
  ReductionArtifact yes = reduce_vc_meda5_diam4(vc(complete_graph(2), 1));
  EXPECT_EQ(yes.diameter, 4);
  EXPECT_EQ(yes.roles.size(), static_cast<std::size_t>(yes.graph.num_vertices()));
  EXPECT_EQ(with_role(yes, "K").size(), 4u * (yes.k + 1));
  EXPECT_TRUE(verify_equivalence(vc(complete_graph(2), 1), yes).artifact_yes);
  ReductionArtifact no = reduce_vc_meda5_diam4(vc(complete_graph(2), 0));
  EXPECT_EQ(no.k, 2);
  EXPECT_FALSE(verify_equivalence(vc(complete_graph(2), 0), no).artifact_yes);

  // Diametral pairs: K3 to t and K4 to s.
  auto dist_t = bfs_distances(yes.graph, yes.t), dist_s = bfs_distances(yes.graph, yes.s);
  for (Vertex v : with_role(yes, "K3")) EXPECT_EQ(dist_t[v], 4);
  for (Vertex v : with_role(yes, "K4")) EXPECT_EQ(dist_s[v], 4);
}

TEST(ReductionTest, CoverWitnessStructure) {
  for (auto [gamma, c] : {std::pair{complete_graph(2), 1}, std::pair{complete_graph(3), 2},
                          std::pair{path_graph(3), 1}, std::pair{star_graph(2), 2}}) {
    VCInstance instance = vc(gamma, c);
    std::vector<Vertex> cover = minimum_vertex_cover(gamma);
    ASSERT_LE(static_cast<int>(cover.size()), c);
    for (auto art : {reduce_vc_meda5_diam3(instance), reduce_vc_meda5_diam4(instance)}) {
      EdgeSet f = cover_deletion(art, cover);
      EXPECT_EQ(static_cast<int>(f.size()), gamma.num_vertices() + static_cast<int>(cover.size()));
      EXPECT_LE(static_cast<int>(f.size()), art.k);
      Graph h = delete_edges(art.graph, f);
      EXPECT_TRUE(is_connected(h));
      EXPECT_EQ(diameter(h).value, 5);
    }
  }
}

TEST(ReductionTest, MinimumVertexCover) {
  EXPECT_EQ(minimum_vertex_cover(complete_graph(3)).size(), 2u);
  EXPECT_EQ(minimum_vertex_cover(path_graph(3)), std::vector<Vertex>{1});
  EXPECT_EQ(minimum_vertex_cover(cycle_graph(5)).size(), 3u);
  EXPECT_TRUE(minimum_vertex_cover(empty_graph(3)).empty());
}

TEST(ReductionTest, RestrictedPoolMatchesFullOracleOnK2) {
  ReductionArtifact art = reduce_vc_meda5_diam3(vc(complete_graph(2), 1));
  OracleBudget full;
  full.max_edges = static_cast<std::size_t>(art.graph.num_edges());
  full.max_subset_size = static_cast<std::size_t>(art.k);
  OracleResult everything = oracle_meda(art.graph, art.target_d, full);
  OracleResult pool = pool_optimum(art);
  ASSERT_TRUE(everything.found());
  ASSERT_TRUE(pool.found());
  EXPECT_EQ(everything.min_size(), pool.min_size());
}

TEST(ExtendPathTest, Targets) {
  ReductionArtifact base = reduce_vc_meda5_diam4(vc(complete_graph(2), 1));
  ReductionArtifact five = extend_path(base, 5);
  EXPECT_EQ(five.diameter, 5);
  EXPECT_EQ(diameter(five.graph).value, 5);
  EXPECT_EQ(five.target_d, 6);
  EXPECT_EQ(five.k, base.k);
  EXPECT_EQ(with_role(five, "q").size(), 1u);
  ReductionArtifact seven = extend_path(base, 7);
  EXPECT_EQ(diameter(seven.graph).value, 7);
  EXPECT_EQ(with_role(seven, "q").size(), 3u);
  EXPECT_THROW(extend_path(base, 4), PreconditionError);
  EXPECT_THROW(extend_path(reduce_vc_meda5_diam3(vc(complete_graph(2), 1)), 5), PreconditionError);
  EXPECT_THROW(extend_path(five, 6), PreconditionError);
}

TEST(ExtendPathTest, EquivalenceOnSmallInstances) {
  for (int c : {0, 1}) {
    VCInstance instance = vc(complete_graph(2), c);
    EquivalenceReport r = verify_equivalence(instance, extend_path(reduce_vc_meda5_diam4(instance), 5));
    EXPECT_TRUE(r.agree()) << "c = " << c;
  }
}

TEST(AmplifyCopiesTest, Structure) {
  VCInstance instance = vc(complete_graph(2), 1);
  ReductionArtifact single = reduce_vc_meda5_diam4(instance);
  ReductionArtifact twice = amplify_copies(instance, 1);
  EXPECT_EQ(twice.copies, 2);
  EXPECT_EQ(twice.k, 2 * single.k);
  EXPECT_EQ(twice.diameter, 4);
  auto gadget = [](const ReductionArtifact& a) {
    return with_role(a, "v").size() + with_role(a, "e").size();
  };
  EXPECT_EQ(gadget(twice), 2 * gadget(single));
  EXPECT_EQ(with_role(twice, "K1").size(), 2 * with_role(single, "K1").size());
  EXPECT_NE(twice.source.find("s joined to every copy"), std::string::npos);
  EXPECT_THROW(amplify_copies(instance, 0), PreconditionError);
}

TEST(AmplifyCopiesTest, OptimumScalesWithCopies) {
  VCInstance instance = vc(complete_graph(2), 1);
  OracleResult single = pool_optimum(reduce_vc_meda5_diam4(instance));
  OracleResult twice = pool_optimum(amplify_copies(instance, 1));
  ASSERT_TRUE(single.found());
  ASSERT_TRUE(twice.found());
  EXPECT_EQ(single.min_size(), 3u);
  EXPECT_EQ(twice.min_size(), 2 * single.min_size());
}

TEST(TriangleChainTest, Steps) {
  ReductionArtifact base = reduce_vc_meda5_diam4(vc(complete_graph(2), 1));
  ReductionArtifact one = triangle_chain(base, 1);
  EXPECT_EQ(one.diameter, 5);
  EXPECT_EQ(one.k, base.k + 1);
  EXPECT_EQ(one.target_d, base.target_d + 2);
  ReductionArtifact two = triangle_chain(base, 2);
  EXPECT_EQ(diameter(two.graph).value, 6);
  EXPECT_EQ(two.k, base.k + 2);

  // Triangles present; deleting every q_{i-1} q_i keeps the graph connected.
  auto q = with_role(two, "q"), r = with_role(two, "r");
  ASSERT_EQ(q.size(), 2u);
  ASSERT_EQ(r.size(), 2u);
  std::vector<Vertex> chain{two.t, q[0], q[1]};
  EdgeSet spine;
  for (int i = 0; i < 2; ++i) {
    EXPECT_TRUE(two.graph.has_edge(chain[i], r[i]));
    EXPECT_TRUE(two.graph.has_edge(r[i], chain[i + 1]));
    spine.insert(Edge(chain[i], chain[i + 1]));
  }
  EXPECT_TRUE(is_connected(delete_edges(two.graph, spine)));
  EXPECT_THROW(triangle_chain(base, 0), PreconditionError);
}

TEST(ComposeGeneralTest, Routes) {
  VCInstance instance = vc(complete_graph(2), 1);
  ReductionArtifact a = compose_general(5, 1, instance);
  EXPECT_NE(a.source.find("route k=1"), std::string::npos);
  EXPECT_EQ(a.diameter, 5);
  EXPECT_EQ(a.target_d, 6);

  ReductionArtifact b = compose_general(5, 2, instance);
  EXPECT_NE(b.source.find("route k=2: base diameter 4"), std::string::npos);
  EXPECT_EQ(b.target_d, 7);
  EXPECT_EQ(b.copies, 2);

  ReductionArtifact c = compose_general(6, 3, instance);
  EXPECT_NE(c.source.find("base diameter 5, 1 triangle step"), std::string::npos);
  EXPECT_EQ(diameter(c.graph).value, 6);
  EXPECT_EQ(c.target_d, 9);

  EXPECT_THROW(compose_general(4, 1, instance), PreconditionError);
  EXPECT_THROW(compose_general(5, 5, instance), PreconditionError);
  EXPECT_THROW(compose_general(5, 0, instance), PreconditionError);
}
