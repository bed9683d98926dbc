#include <gtest/gtest.h>

#include "gluing/enumerate.hpp"
#include "gluing/guards.hpp"
#include "oracles.hpp"

namespace gluing {
namespace {

using namespace shorthand;

TEST(Guards, CompletePattern) {
  EXPECT_TRUE(check_guard(Guard::Ht, make_spec(K(3), K(3), K(2), {0, 1}, {0, 1})));
  EXPECT_FALSE(check_guard(Guard::Ht, make_spec(K(3), C(4), O(2), {0, 1}, {0, 2})));
  EXPECT_TRUE(check_guard(Guard::Ht, make_spec(K(3), K(3), O(0), {}, {})));
}

TEST(Guards, EmptyPatternEuler) {
  const auto s = make_spec(C(3), C(3), O(1), {0}, {0});
  EXPECT_TRUE(check_guard(Guard::H_empty_euler, s));
  const auto g = glue(s);
  for (vertex_id v = 0; v < g.vertex_count(); ++v) {
    EXPECT_EQ(g.degree(v) % 2, 0u);
  }
  EXPECT_TRUE(is_euler(g));
  EXPECT_FALSE(check_guard(Guard::H_empty_euler, make_spec(C(3), C(3), O(0), {}, {})));
  EXPECT_FALSE(check_guard(Guard::H_empty_euler, make_spec(C(3), C(3), K(2), {0, 1}, {0, 1})));
  EXPECT_TRUE(euler_degree_condition(C(1)));
  EXPECT_FALSE(euler_degree_condition(K(2)));
  EXPECT_FALSE(euler_degree_condition(O(0)));
}

TEST(Guards, ChainParity) {
  // L3 = 0-1-2. End-to-end identification closes a 4-cycle; end-to-middle a triangle.
  const auto ends = make_spec(L(3), L(3), O(2), {0, 2}, {0, 2});
  EXPECT_TRUE(check_guard(Guard::Hb, ends));
  EXPECT_TRUE(is_bipartite(glue(ends)));
  EXPECT_TRUE(oracle::isomorphic(glue(ends), C(4)));
  const auto mixed = make_spec(L(3), L(3), O(2), {0, 2}, {0, 1});
  EXPECT_FALSE(check_guard(Guard::Hb, mixed));
  EXPECT_FALSE(is_bipartite(glue(mixed)));
}

TEST(Guards, ChainParityNeedsTransitiveConsistency) {
  // No pattern pair is joined in both operands, yet the pairs chain into a 5-cycle.
  const MultiGraph g1(5, {{0, 4}, {4, 1}, {2, 3}});  // a-x-b, c-d
  const MultiGraph g2(4, {{1, 2}, {3, 0}});          // b-c, d-a
  const auto s = make_spec(g1, g2, O(4), {0, 1, 2, 3}, {0, 1, 2, 3});
  EXPECT_TRUE(oracle::isomorphic(glue(s), C(5)));
  EXPECT_FALSE(check_guard(Guard::Hb, s));
}

TEST(Guards, HamiltonianAdjacentPair) {
  const auto s = make_spec(C(4), C(4), K(2), {0, 1}, {0, 1});
  EXPECT_TRUE(check_guard(Guard::Hg, s));
  const auto g = glue(s);
  EXPECT_EQ(g.vertex_count(), 6u);
  EXPECT_TRUE(oracle::hamiltonian(g));
  // opposite corners of C4 are not consecutive on its only Hamiltonian cycle
  EXPECT_FALSE(check_guard(Guard::Hg, make_spec(C(4), C(4), O(2), {0, 2}, {0, 2})));
  // vertex-surjective on one side
  EXPECT_TRUE(check_guard(Guard::Hg, make_spec(C(3), C(5), O(3), {0, 1, 2}, {0, 2, 4})));
}

TEST(Guards, HamiltonianSuppliedCycles) {
  GuardParams p;
  p.left_cycle = std::vector<vertex_id>{0, 1, 2, 3};
  p.right_cycle = std::vector<vertex_id>{0, 2, 1, 3};
  const MultiGraph k4 = K(4);
  EXPECT_TRUE(check_guard(GuardKind(Guard::Hg, p), make_spec(k4, k4, O(2), {0, 1}, {0, 2})));
  EXPECT_FALSE(check_guard(GuardKind(Guard::Hg, p), make_spec(k4, k4, O(2), {0, 1}, {0, 1})));
  MultiGraph big = C(13);
  EXPECT_THROW(check_guard(Guard::Hg, make_spec(big, C(4), O(2), {0, 1}, {0, 1})), missing_parameter);
}

TEST(Guards, SimplePreserving) {
  EXPECT_FALSE(check_guard(Guard::simple_preserving, make_spec(K(3), K(3), O(2), {0, 1}, {0, 1})));
  EXPECT_TRUE(check_guard(Guard::simple_preserving, make_spec(K(3), C(4), O(2), {0, 1}, {0, 2})));
  EXPECT_TRUE(check_guard(Guard::simple_preserving, make_spec(K(3), K(3), K(2), {0, 1}, {0, 1})));
}

TEST(Guards, Separation) {
  EXPECT_TRUE(check_guard(Guard::Hs, make_spec(K(3), K(3), O(1), {0}, {0})));
  EXPECT_TRUE(check_guard(Guard::Hs, make_spec(K(3), K(3), K(2), {0, 1}, {0, 1})));
  // doubling a triangle edge: removing its ends leaves a single vertex
  EXPECT_FALSE(check_guard(Guard::Hs, make_spec(K(3), K(2), O(2), {0, 1}, {0, 1})));
  EXPECT_TRUE(check_guard(Guard::Hs, make_spec(K(3), K(2), O(1), {0}, {0})));
  EXPECT_TRUE(check_guard(Guard::Hpv_min_sep, make_spec(K(3), K(3), K(2), {0, 1}, {0, 1})));
  // L3 ends glued pairwise give C4, where the two glued vertices form a minimal separator
  EXPECT_TRUE(check_guard(Guard::Hpv_min_sep, make_spec(L(3), L(3), O(2), {0, 2}, {0, 2})));
  EXPECT_FALSE(check_guard(Guard::Hpv_min_sep, make_spec(K(3), K(3), O(2), {0, 1}, {0, 1})));
}

TEST(DbSearch, Examples) {
  EXPECT_EQ(db_search(C(4), 0), (VertexOrdering{0, 1, 2, 3}));
  const MultiGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(db_search(star, 0), (VertexOrdering{0, 1, 2, 3}));
  // triangles {0,1,2} and {3,4,5} joined by bridge 2-3; starting at 2 the bridge waits
  const MultiGraph barbell(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
  const auto order = db_search(barbell, 2);
  EXPECT_EQ(order, (VertexOrdering{2, 0, 1, 3, 4, 5}));
  EXPECT_EQ(db_search(C(4), 0, TieBreak::descending), (VertexOrdering{0, 3, 2, 1}));
  EXPECT_THROW(db_search(O(2), 0), invalid_input);
}

TEST(DbSearch, DeterministicAndValidOnSmallConnectedGraphs) {
  for (const auto& g : enumerate_all_graphs(6, 15, true)) {
    if (!is_connected(g)) continue;
    for (vertex_id s = 0; s < g.vertex_count(); ++s) {
      const auto order = db_search(g, s);
      ASSERT_EQ(order, db_search(g, s));
      ASSERT_EQ(oracle::db_violation(g, order), "") << to_gfmt(g) << "start " << s;
    }
  }
}

TEST(Blocks, BridgesMatchDeletionOracle) {
  for (const auto& g : enumerate_all_graphs(5, 6, false)) {
    const auto flags = bridge_flags(g);
    for (edge_id e = 0; e < g.edge_count(); ++e) {
      ASSERT_EQ(flags[e], oracle::is_bridge(g, e)) << to_gfmt(g) << e;
    }
  }
}

TEST(Faces, Shell) {
  const auto whole = make_embedding(C(4), C(4), {0, 1, 2, 3});
  EXPECT_EQ(shell(whole).edge_count(), 0u);
  MultiGraph chorded = C(4);
  chorded.add_edge(0, 2);
  EXPECT_EQ(shell(make_embedding(C(4), chorded, {0, 1, 2, 3})).edges()[0], Edge(0, 2));
  const auto k4 = shell(make_embedding(C(4), K(4), {0, 1, 2, 3}));
  ASSERT_EQ(k4.edge_count(), 2u);
  EXPECT_EQ(k4.multiplicity(0, 2), 1u);
  EXPECT_EQ(k4.multiplicity(1, 3), 1u);
}

TEST(Faces, MaximalFaceConditions) {
  MultiGraph chorded = C(4);
  chorded.add_edge(0, 2);
  EXPECT_TRUE(is_face_subgraph(make_embedding(C(4), chorded, {0, 1, 2, 3})));
  EXPECT_FALSE(is_face_subgraph(make_embedding(C(4), K(4), {0, 1, 2, 3})));
  EXPECT_TRUE(is_face_subgraph(make_embedding(K(3), K(4), {0, 1, 2})));
  // wheel: the rim bounds the outer face
  MultiGraph wheel = C(4);
  wheel.add_vertex();
  for (vertex_id v = 0; v < 4; ++v) wheel.add_edge(v, 4);
  EXPECT_TRUE(is_face_subgraph(make_embedding(C(4), wheel, {0, 1, 2, 3})));
  // a tree image with shell edges hanging off it is not a face
  EXPECT_FALSE(is_face_subgraph(make_embedding(K(2), L(3), {0, 1})));
  EXPECT_TRUE(is_face_subgraph(make_embedding(L(3), L(3), {0, 1, 2})));
  // K2,3 with the hexagon... cycle 0-3-1-4 plus vertex 2 joined to 3 and 4: chain 3-2-4
  MultiGraph k23(5, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  EXPECT_TRUE(is_face_subgraph(make_embedding(C(4), k23, {0, 3, 1, 4})));
}

TEST(Faces, ThreeCycleVerticesReachingTwoShellVertices) {
  // Hexagon 0..5 with inner x=6, y=7 both joined to 0, 2, 4: the hexagon cannot bound a face.
  MultiGraph g = C(6);
  g.add_vertex();
  g.add_vertex();
  for (vertex_id v : {0, 2, 4}) {
    g.add_edge(v, 6);
    g.add_edge(v, 7);
  }
  ASSERT_TRUE(is_planar(g));
  EXPECT_FALSE(is_face_subgraph(make_embedding(C(6), g, {0, 1, 2, 3, 4, 5})));
}

TEST(Faces, AgreesWithPlanarityOfAddedApex) {
  // A connected subgraph H with a cycle is a face boundary of some embedding of
  // a 2-connected host exactly when adding an apex joined to all of V(H)
  // keeps the host planar; check cycles of small 2-connected planar graphs.
  for (const auto& g : enumerate_all_graphs(5, 9, true)) {
    if (!is_connected(g) || !is_planar(g) || g.vertex_count() < 3) continue;
    bool biconnected = true;
    for (const auto& b : blocks(g)) biconnected = biconnected && b.size() > 1;
    if (!biconnected || blocks(g).size() != 1) continue;
    for (std::size_t k = 3; k <= g.vertex_count(); ++k) {
      for (const auto& emb : enumerate_embeddings(C(k), g, false, EdgeMapMode::first_fit)) {
        MultiGraph apex = g;
        const vertex_id a = apex.add_vertex();
        for (vertex_id v : emb.vertex_map) apex.add_edge(v, a);
        ASSERT_EQ(is_face_subgraph(emb), oracle::planar(apex)) << to_gfmt(g) << k;
      }
    }
  }
}

TEST(HpGlue, Examples) {
  const auto c4 = make_embedding(C(4), C(4), {0, 1, 2, 3});
  EXPECT_TRUE(oracle::isomorphic(hp_glue(C(4), C(4), c4, c4), C(4)));
  HpOptions two;
  two.identify = 2;
  const auto g = hp_glue(C(4), C(4), c4, c4, two);
  EXPECT_EQ(g.vertex_count(), 6u);
  EXPECT_EQ(g.edge_count(), 7u);
  EXPECT_TRUE(oracle::planar(g));
  const auto tri = make_embedding(K(3), K(4), {0, 1, 2});
  const auto h = hp_glue(K(4), K(4), tri, tri);
  EXPECT_EQ(h.vertex_count(), 5u);
  EXPECT_EQ(h.edge_count(), 9u);
  EXPECT_TRUE(oracle::planar(h));
  EXPECT_THROW(hp_glue(K(4), K(4), make_embedding(C(4), K(4), {0, 1, 2, 3}), tri), invalid_input);
}

TEST(HpGlue, ResultsArePlanarOverSmallFaces) {
  std::size_t done = 0;
  const auto graphs = enumerate_all_graphs(4, 6, true);
  for (const auto& a : graphs) {
    if (!is_connected(a) || a.vertex_count() < 2) continue;
    for (const auto& b : graphs) {
      if (!is_connected(b) || b.vertex_count() < 2) continue;
      const auto fa = faces_containing(Embedding{O(0), a, {}, {}, false});
      const auto fb = faces_containing(Embedding{O(0), b, {}, {}, false});
      for (const auto& x : fa) {
        for (const auto& y : fb) {
          const std::size_t k = std::min(x.vertex_map.size(), y.vertex_map.size());
          HpOptions opt;
          opt.identify = k;
          const auto g = hp_glue(a, b, x, y, opt);
          ASSERT_TRUE(oracle::planar(g));
          ++done;
        }
      }
    }
  }
  EXPECT_GT(done, 100u);
}

}  // namespace
}  // namespace gluing
