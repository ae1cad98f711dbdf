#include "diamaug/reductions.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "diamaug/errors.hpp"

namespace diamaug {

namespace {

class Builder {
 public:
  Vertex add(std::string role) {
    roles_.push_back(std::move(role));
    return static_cast<Vertex>(roles_.size() - 1);
  }
  void connect(Vertex a, Vertex b) { edges_.emplace_back(a, b); }
  void join(const std::vector<Vertex>& left, const std::vector<Vertex>& right) {
    for (Vertex a : left)
      for (Vertex b : right) connect(a, b);
  }
  void clique(const std::vector<Vertex>& members) {
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) connect(members[i], members[j]);
  }
  Graph graph() const { return Graph(static_cast<int>(roles_.size()), edges_); }
  std::vector<std::string> roles() const { return roles_; }

 private:
  std::vector<std::string> roles_;
  std::vector<Edge> edges_;
};

void require_valid(const VCInstance& vc) {
  if (vc.c < 0) throw PreconditionError("cover budget c must be >= 0");
  if (vc.gamma.num_edges() == 0) {
    throw PreconditionError("vertex cover instance needs at least one edge");
  }
}

int measured_diameter(const Graph& g, int expected, const std::string& what) {
  Length diam = diameter(g).value;
  if (diam != expected) {
    throw InvariantViolation(what + ": expected diameter " + std::to_string(expected) +
                             ", measured " + diam.to_string());
  }
  return expected;
}

// Path gadgets for every Γ-vertex and edge gadgets for every Γ-edge, in
// `copies` copies, hung off s, t and `clique_count` cliques.
ReductionArtifact build_gadget(const VCInstance& vc, int clique_count, int copies) {
  require_valid(vc);
  const Graph& gamma = vc.gamma;
  const int w_count = gamma.num_vertices();
  const int single_budget = w_count + vc.c;
  const int clique_size = copies * (single_budget + 1);

  Builder b;
  ReductionArtifact art;
  art.s = b.add("s");
  art.t = b.add("t");
  art.tail = art.t;
  art.copies = copies;
  art.clique_count = clique_count;
  art.k = copies * single_budget;
  art.target_d = 5;

  std::vector<Vertex> side1, side2;  // v1, v2, e1 | v3, v4, e2
  for (int copy = 0; copy < copies; ++copy) {
    const std::string suffix = copies > 1 ? "#" + std::to_string(copy) : "";
    std::vector<std::array<Vertex, 4>> paths(w_count);
    for (Vertex w = 0; w < w_count; ++w) {
      for (int i = 0; i < 4; ++i) {
        paths[w][i] = b.add("v" + std::to_string(i + 1) + "[" + std::to_string(w) + "]" + suffix);
      }
      auto& p = paths[w];
      b.connect(p[0], p[1]);
      b.connect(p[1], p[2]);
      b.connect(p[2], p[3]);
      b.connect(art.s, p[0]);
      b.connect(art.s, p[1]);
      b.connect(art.t, p[2]);
      b.connect(art.t, p[3]);
      side1.insert(side1.end(), {p[0], p[1]});
      side2.insert(side2.end(), {p[2], p[3]});
    }
    // Edge e = uv with u < v: paths v2 - e1 - u3 and v3 - e2 - u2.
    for (const Edge& e : gamma.edges()) {
      const std::string name = "[" + std::to_string(e.u) + "-" + std::to_string(e.v) + "]";
      Vertex e1 = b.add("e1" + name + suffix);
      Vertex e2 = b.add("e2" + name + suffix);
      const auto& pu = paths[e.u];
      const auto& pv = paths[e.v];
      b.connect(pv[1], e1);
      b.connect(e1, pu[2]);
      b.connect(pv[2], e2);
      b.connect(e2, pu[1]);
      side1.push_back(e1);
      side2.push_back(e2);
    }
    art.path_vertices.push_back(std::move(paths));
  }

  std::vector<std::vector<Vertex>> cliques(clique_count);
  for (int c = 0; c < clique_count; ++c) {
    for (int i = 0; i < clique_size; ++i) cliques[c].push_back(b.add("K" + std::to_string(c + 1)));
    b.clique(cliques[c]);
  }
  b.join(cliques[0], side1);
  b.join(cliques[1], side2);
  // K1 and K2 always form one clique; K3 and K4 hang off them, pushing the
  // K3-t and K4-s distances to 4.
  b.join(cliques[0], cliques[1]);
  if (clique_count == 4) {
    b.join(cliques[2], cliques[0]);
    b.join(cliques[2], cliques[3]);
    b.join(cliques[3], cliques[1]);
  }

  art.graph = b.graph();
  art.roles = b.roles();
  const int expected = clique_count == 2 ? 3 : 4;
  art.source = "vertex-cover gadget, " + std::to_string(clique_count) + " cliques of size " +
               std::to_string(clique_size) + ", k = " + std::to_string(art.k);
  if (copies > 1) {
    art.source += ", " + std::to_string(copies) +
                  " gadget copies (s joined to every copy's v1,v2 and t to every copy's v3,v4)";
  }
  art.diameter = measured_diameter(art.graph, expected, art.source);
  return art;
}

// Copies `art` and appends `length` path vertices after the tail.
ReductionArtifact attach_path(const ReductionArtifact& art, int length) {
  ReductionArtifact out = art;
  std::vector<Edge> edges = art.graph.edges();
  Vertex prev = art.tail;
  for (int i = 0; i < length; ++i) {
    Vertex q = static_cast<Vertex>(out.roles.size());
    out.roles.push_back("q" + std::to_string(++out.attached));
    edges.emplace_back(prev, q);
    prev = q;
  }
  out.graph = Graph(static_cast<int>(out.roles.size()), std::move(edges));
  out.tail = prev;
  return out;
}

}  // namespace

ReductionArtifact reduce_vc_meda5_diam3(const VCInstance& vc) { return build_gadget(vc, 2, 1); }

ReductionArtifact reduce_vc_meda5_diam4(const VCInstance& vc) { return build_gadget(vc, 4, 1); }

ReductionArtifact amplify_copies(const VCInstance& vc, int delta) {
  if (delta < 1) throw PreconditionError("delta must be >= 1");
  ReductionArtifact art = build_gadget(vc, 4, delta + 1);
  art.source += "; no deletion of size <= k + " + std::to_string(delta) +
                " reaches diameter >= 6 (copies are independent)";
  return art;
}

ReductionArtifact extend_path(const ReductionArtifact& art, int target_d) {
  if (art.diameter != 4 || art.clique_count != 4 || art.tail != art.t) {
    throw PreconditionError("extend_path expects an unextended diameter-4 artifact");
  }
  if (target_d < 5) throw PreconditionError("extend_path requires target_d >= 5");
  const int length = target_d - 4;
  ReductionArtifact out = attach_path(art, length);
  out.target_d = target_d + 1;
  out.source += "; path q1..q" + std::to_string(length) + " at t";
  out.diameter = measured_diameter(out.graph, target_d, out.source);
  return out;
}

ReductionArtifact triangle_chain(const ReductionArtifact& art, int k_steps) {
  if (k_steps < 1) throw PreconditionError("triangle_chain requires k_steps >= 1");
  ReductionArtifact out = art;
  std::vector<Edge> edges = art.graph.edges();
  Vertex prev = art.tail;
  for (int i = 0; i < k_steps; ++i) {
    Vertex q = static_cast<Vertex>(out.roles.size());
    out.roles.push_back("q" + std::to_string(++out.attached));
    Vertex r = static_cast<Vertex>(out.roles.size());
    out.roles.push_back("r" + std::to_string(++out.triangles));
    edges.emplace_back(prev, q);
    edges.emplace_back(prev, r);
    edges.emplace_back(r, q);
    prev = q;
  }
  out.graph = Graph(static_cast<int>(out.roles.size()), std::move(edges));
  out.tail = prev;
  out.k = art.k + k_steps;
  out.target_d = art.target_d + 2 * k_steps;
  out.source += "; " + std::to_string(k_steps) + " triangle step(s)";
  out.diameter = measured_diameter(out.graph, art.diameter + k_steps, out.source);
  return out;
}

ReductionArtifact compose_general(int d, int k, const VCInstance& vc) {
  if (d < 5 || k < 1 || k > d - 1) {
    throw PreconditionError("compose_general requires d >= 5 and 1 <= k <= d-1");
  }
  ReductionArtifact art;
  if (k == 1) {
    art = extend_path(reduce_vc_meda5_diam4(vc), d);
    art.source += " [route k=1]";
  } else if (k == 2) {
    const int base_d = d - 1;
    ReductionArtifact base = amplify_copies(vc, 1);
    if (base_d > 4) base = extend_path(base, base_d);
    art = triangle_chain(base, 1);
    art.source += " [route k=2: base diameter " + std::to_string(base_d) + "]";
  } else {
    const int base_d = d - k + 2;
    const int steps = k - 2;
    ReductionArtifact base = build_gadget(vc, 2, steps + 1);
    if (base_d > 3) {
      base = attach_path(base, base_d - 3);
      base.target_d = base_d + 2;
      base.source += "; path q1..q" + std::to_string(base_d - 3) + " at t";
      base.diameter = measured_diameter(base.graph, base_d, base.source);
    }
    art = triangle_chain(base, steps);
    art.source += " [route k>=3: base diameter " + std::to_string(base_d) + ", " +
                  std::to_string(steps) + " triangle step(s)]";
  }
  if (art.diameter != d || art.target_d != d + k) {
    throw InvariantViolation("composition produced diameter " + std::to_string(art.diameter) +
                             " asking " + std::to_string(art.target_d));
  }
  return art;
}

EdgeSet gadget_pool(const ReductionArtifact& art) {
  std::vector<Edge> pool;
  auto in_clique = [&](Vertex v) { return art.roles[v].front() == 'K'; };
  for (const Edge& e : art.graph.edges()) {
    if (!in_clique(e.u) && !in_clique(e.v)) pool.push_back(e);
  }
  return EdgeSet(std::move(pool));
}

EdgeSet cover_deletion(const ReductionArtifact& art, const std::vector<Vertex>& cover) {
  EdgeSet f;
  for (const auto& paths : art.path_vertices) {
    for (Vertex w = 0; w < static_cast<Vertex>(paths.size()); ++w) {
      const auto& p = paths[w];
      if (std::find(cover.begin(), cover.end(), w) != cover.end()) {
        f.insert(Edge(art.s, p[1]));
        f.insert(Edge(p[2], art.t));
      } else {
        f.insert(Edge(p[1], p[2]));
      }
    }
  }
  return f;
}

std::vector<Vertex> minimum_vertex_cover(const Graph& gamma) {
  const int n = gamma.num_vertices();
  if (n > 20) throw PreconditionError("minimum_vertex_cover supports at most 20 vertices");
  std::optional<std::uint32_t> best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (best && std::popcount(mask) >= std::popcount(*best)) continue;
    bool covers = std::all_of(gamma.edges().begin(), gamma.edges().end(), [&](const Edge& e) {
      return ((mask >> e.u) & 1u) || ((mask >> e.v) & 1u);
    });
    if (covers) best = mask;
  }
  std::vector<Vertex> cover;
  for (Vertex v = 0; v < n; ++v)
    if ((*best >> v) & 1u) cover.push_back(v);
  return cover;
}

EquivalenceReport verify_equivalence(const VCInstance& vc, const ReductionArtifact& art,
                                     const OracleBudget& budget) {
  EquivalenceReport report;
  report.min_cover = minimum_vertex_cover(vc.gamma).size();
  report.cover_yes = report.min_cover <= static_cast<std::size_t>(vc.c);

  OracleBudget capped = budget;
  capped.max_subset_size = static_cast<std::size_t>(art.k);
  OracleResult r =
      oracle_search(art.graph, ExactDiameter{art.target_d}, capped, gadget_pool(art));
  report.artifact_yes = r.found();
  report.witness = r.deleted;
  return report;
}

}  // namespace diamaug
