#include <gtest/gtest.h>

#include "gluing/enumerate.hpp"
#include "gluing/glue.hpp"
#include "oracles.hpp"

namespace gluing {
namespace {

using namespace shorthand;

TEST(Glue, TrianglesOnOneVertex) {
  const auto g = glue(make_spec(K(3), K(3), O(1), {0}, {0}));
  EXPECT_EQ(g.vertex_count(), 5u);
  EXPECT_EQ(g.edge_count(), 6u);
  const MultiGraph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
  EXPECT_TRUE(oracle::isomorphic(g, bowtie));
}

TEST(Glue, TrianglesOnAnEdge) {
  const auto g = glue(make_spec(K(3), K(3), K(2), {0, 1}, {0, 1}));
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 5u);
}

TEST(Glue, IdentificationMethodMatters) {
  // L3 = 0-1-2. Edge {0,1} of both: ends matched end-to-end give L4 or the star.
  const auto path = glue(make_spec(L(3), L(3), K(2), {0, 1}, {1, 0}));
  const auto star = glue(make_spec(L(3), L(3), K(2), {0, 1}, {0, 1}));
  EXPECT_TRUE(oracle::isomorphic(path, L(4)));
  EXPECT_TRUE(oracle::isomorphic(star, MultiGraph(4, {{0, 1}, {0, 2}, {0, 3}})));
  EXPECT_FALSE(is_isomorphic(path, star));
}

TEST(Glue, EmptyPatternIsDisjointUnion) {
  const auto g = glue(make_spec(K(3), O(1), O(0), {}, {}));
  EXPECT_EQ(g, MultiGraph(4, {{0, 1}, {0, 2}, {1, 2}}));
}

TEST(Glue, UnpairedParallelEdgesRemain) {
  // O2 inside K3 twice, vertices identified without their edge: a double edge appears.
  const auto g = glue(make_spec(K(3), K(3), O(2), {0, 1}, {0, 1}));
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_EQ(g.multiplicity(0, 1), 2u);
}

TEST(Glue, VertexAndEdgeNumbering) {
  const auto r = glue_with_maps(view_of(make_spec(L(3), L(3), O(1), {2}, {1})));
  EXPECT_EQ(r.right_vertex, (std::vector<vertex_id>{3, 2, 4}));
  EXPECT_EQ(r.graph, MultiGraph(5, {{0, 1}, {1, 2}, {3, 2}, {2, 4}}));
}

TEST(Glue, MalformedSpecs) {
  auto s = make_spec(K(3), K(3), K(2), {0, 1}, {0, 1});
  s.right_emb.pattern = O(2);
  EXPECT_THROW(glue(s), invalid_input);
  auto t = make_spec(K(3), K(3), K(2), {0, 1}, {0, 1});
  t.left_emb.edge_map = {2};
  EXPECT_THROW(glue(t), invalid_input);
  EXPECT_THROW(make_spec(K(3), K(3), K(2), {0, 0}, {0, 1}), invalid_input);
}

TEST(Glue, Classification) {
  EXPECT_EQ(classify_gluing(make_spec(K(3), K(3), K(2), {0, 1}, {0, 1})), canonical_form(K(2)));
  EXPECT_EQ(classify_gluing(make_spec(K(3), C(4), O(2), {0, 1}, {0, 2})), canonical_form(O(2)));
  // relabeled pattern classifies equal
  const MultiGraph two_edges_a(4, {{0, 1}, {2, 3}});
  const MultiGraph two_edges_b(4, {{0, 2}, {1, 3}});
  EXPECT_EQ(classify_gluing(make_spec(K(4), K(4), two_edges_a, {0, 1, 2, 3}, {0, 1, 2, 3})),
            classify_gluing(make_spec(K(4), K(4), two_edges_b, {0, 1, 2, 3}, {0, 1, 2, 3})));
}

TEST(Glue, Triviality) {
  EXPECT_TRUE(is_trivial(make_spec(K(2), K(3), K(2), {0, 1}, {0, 1})));
  EXPECT_FALSE(is_trivial(make_spec(K(3), K(3), K(2), {0, 1}, {0, 1})));
  EXPECT_FALSE(is_trivial(make_spec(K(2), K(2), O(2), {0, 1}, {0, 1})));
  EXPECT_TRUE(is_trivial(make_spec(O(1), C(1), O(1), {0}, {0})));
}

// Count law, operand embedding, strict growth and commutativity over every
// spec with operands of at most 3 vertices and 3 edges.
TEST(Glue, LawsHoldExhaustively) {
  const auto graphs = enumerate_all_graphs(3, 3, false);
  std::size_t checked = 0;
  for (const auto& a : graphs) {
    for (const auto& b : graphs) {
      for (const auto& p : graphs) {
        for (const auto& le : enumerate_embeddings(p, a, false)) {
          for (const auto& re : enumerate_embeddings(p, b, false)) {
            GluingSpec s{a, b, p, le, re};
            auto r = glue_with_embeddings(s);
            ASSERT_EQ(r.graph.vertex_count(), a.vertex_count() + b.vertex_count() - p.vertex_count());
            ASSERT_EQ(r.graph.edge_count(), a.edge_count() + b.edge_count() - p.edge_count());
            ASSERT_TRUE(is_valid(r.left));
            ASSERT_TRUE(is_valid(r.right));
            if (!is_trivial(s)) {
              for (const auto* op : {&a, &b}) {
                ASSERT_TRUE(r.graph.vertex_count() > op->vertex_count() || r.graph.edge_count() > op->edge_count());
              }
            }
            ASSERT_TRUE(oracle::isomorphic(r.graph, glue(swapped(s))));
            ++checked;
          }
        }
      }
    }
  }
  EXPECT_GT(checked, 1000u);
}

}  // namespace
}  // namespace gluing
