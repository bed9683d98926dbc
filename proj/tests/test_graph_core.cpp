#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "gluing/canonical.hpp"
#include "gluing/embedding.hpp"
#include "gluing/enumerate.hpp"
#include "gluing/multigraph.hpp"
#include "oracles.hpp"

namespace gluing {
namespace {

using namespace shorthand;

TEST(MakeNamed, Families) {
  const auto k3 = K(3);
  EXPECT_EQ(k3.vertex_count(), 3u);
  EXPECT_EQ(k3.edge_count(), 3u);
  EXPECT_EQ(k3.multiplicity(0, 1), 1u);
  EXPECT_EQ(k3.multiplicity(0, 2), 1u);
  EXPECT_EQ(k3.multiplicity(1, 2), 1u);

  const auto c1 = C(1);
  EXPECT_EQ(c1.vertex_count(), 1u);
  EXPECT_EQ(c1.loop_count(0), 1u);
  EXPECT_EQ(c1.degree(0), 2u);

  const auto c2 = C(2);
  EXPECT_EQ(c2.multiplicity(0, 1), 2u);

  EXPECT_EQ(O(0).vertex_count(), 0u);
  EXPECT_EQ(O(0).edge_count(), 0u);
  EXPECT_EQ(L(1), O(1));
  EXPECT_EQ(L(4).edge_count(), 3u);
  EXPECT_EQ(make_named("C5"), C(5));
}

TEST(MakeNamed, Errors) {
  EXPECT_THROW(K(0), invalid_input);
  EXPECT_THROW(C(0), invalid_input);
  EXPECT_THROW(L(0), invalid_input);
  EXPECT_THROW(make_named('X', 3), invalid_input);
  EXPECT_THROW(make_named("Q2"), invalid_input);
}

TEST(MultiGraph, RejectsOutOfRangeEndpoints) {
  EXPECT_THROW(MultiGraph(2, {{0, 2}}), invalid_input);
  MultiGraph g(1);
  EXPECT_THROW(g.add_edge(0, 1), invalid_input);
}

TEST(Gfmt, RoundTrip) {
  MultiGraph g(3, {{0, 1}, {0, 1}, {2, 2}});
  const auto text = to_gfmt(g);
  EXPECT_EQ(text, "graph 3\ne 0 1\ne 0 1\ne 2 2\n");
  EXPECT_EQ(parse_gfmt(text), g);
}

TEST(Gfmt, CommentsAndErrors) {
  EXPECT_EQ(parse_gfmt("# comment\ngraph 2\ne 1 0\n"), MultiGraph(2, {{0, 1}}));
  EXPECT_THROW(parse_gfmt("graph 2\ne 0 2\n"), parse_error);
  EXPECT_THROW(parse_gfmt("e 0 1\n"), parse_error);
  EXPECT_THROW(parse_gfmt("graph x\n"), parse_error);
  EXPECT_THROW(parse_gfmt("graph 2\nedge 0 1\n"), parse_error);
  EXPECT_THROW(parse_gfmt(""), parse_error);
}

TEST(Canonical, RelabelingInvariance) {
  const MultiGraph k3a(3, {{0, 1}, {1, 2}, {0, 2}});
  const MultiGraph k3b(3, {{2, 0}, {0, 1}, {2, 1}});
  EXPECT_EQ(canonical_form(k3a), canonical_form(k3b));
}

TEST(Canonical, PathVersusStar) {
  const MultiGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_NE(canonical_form(L(4)), canonical_form(star));
  EXPECT_FALSE(oracle::isomorphic(L(4), star));
}

TEST(Canonical, LoopCountsDiffer) {
  EXPECT_NE(canonical_form(MultiGraph(1, {{0, 0}})), canonical_form(MultiGraph(1, {{0, 0}, {0, 0}})));
}

TEST(Canonical, CodeLayout) {
  const auto code = canonical_form(K(2));
  EXPECT_EQ(code.hex(), "020001000100");
  EXPECT_EQ(CanonicalCode::from_hex(code.hex()), code);
  EXPECT_TRUE(is_isomorphic(graph_from_code(code), K(2)));
  EXPECT_EQ(canonical_form(O(0)).hex(), "000000");
}

TEST(Canonical, CapExceeded) {
  EXPECT_THROW(canonical_form(O(13)), cap_exceeded);
  EXPECT_NO_THROW(canonical_form(O(12)));
  MultiGraph heavy(2);
  for (int i = 0; i < 256; ++i) heavy.add_edge(0, 1);
  EXPECT_THROW(canonical_form(heavy), cap_exceeded);
}

TEST(Isomorphism, Examples) {
  const MultiGraph c4b(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
  EXPECT_TRUE(is_isomorphic(C(4), c4b));
  EXPECT_FALSE(is_isomorphic(C(4), L(4)));
  const MultiGraph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
  const MultiGraph diamond(4, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 3}});
  EXPECT_FALSE(is_isomorphic(bowtie, diamond));
}

TEST(Canonical, SoundUnderRandomPermutations) {
  std::mt19937 rng(7);
  for (const auto& g : enumerate_all_graphs(6, 7, false)) {
    std::vector<vertex_id> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto h = permuted(g, perm);
    auto edges = std::vector<Edge>(h.edges().begin(), h.edges().end());
    std::shuffle(edges.begin(), edges.end(), rng);
    ASSERT_EQ(canonical_form(g), canonical_form(MultiGraph(h.vertex_count(), edges))) << to_gfmt(g);
  }
}

TEST(Canonical, CompleteAgainstPermutationSearch) {
  // Group graphs of (5,6) by canonical code; no two groups may be isomorphic
  // and every labeled variant lands in its own group.
  const auto all = enumerate_all_graphs(5, 6, false);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i].vertex_count() == all[j].vertex_count() && all[i].edge_count() == all[j].edge_count()) {
        ASSERT_FALSE(oracle::isomorphic(all[i], all[j])) << to_gfmt(all[i]) << to_gfmt(all[j]);
      }
    }
  }
}

TEST(Canonical, RegularGraphsWithManyAutomorphisms) {
  // Petersen graph vs. a relabeling; exercises refinement with a single colour class.
  MultiGraph pet(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                      {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  std::vector<vertex_id> perm{3, 9, 0, 5, 1, 7, 2, 8, 6, 4};
  EXPECT_TRUE(is_isomorphic(pet, permuted(pet, perm)));
  // the 5-prism is 3-regular on 10 vertices too but not isomorphic
  MultiGraph prism(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 5},
                        {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
  EXPECT_FALSE(is_isomorphic(pet, prism));
}

TEST(Automorphisms, Counts) {
  EXPECT_EQ(automorphisms(K(4)).size(), 24u);
  EXPECT_EQ(automorphisms(C(5)).size(), 10u);
  EXPECT_EQ(automorphisms(L(4)).size(), 2u);
  EXPECT_EQ(automorphisms(O(0)).size(), 1u);
}

TEST(Embeddings, Examples) {
  EXPECT_EQ(enumerate_embeddings(K(2), K(3), false).size(), 6u);
  EXPECT_EQ(enumerate_embeddings(O(2), K(3), false).size(), 6u);
  EXPECT_TRUE(enumerate_embeddings(K(3), C(4), false).empty());
  EXPECT_TRUE(enumerate_embeddings(O(2), K(3), true).empty());
  EXPECT_EQ(enumerate_embeddings(O(2), C(4), true).size(), 4u);
}

TEST(Embeddings, LexicographicOrder) {
  const auto embs = enumerate_embeddings(K(2), C(2), false);
  ASSERT_EQ(embs.size(), 4u);
  EXPECT_EQ(embs[0].vertex_map, (std::vector<vertex_id>{0, 1}));
  EXPECT_EQ(embs[0].edge_map, (std::vector<edge_id>{0}));
  EXPECT_EQ(embs[1].edge_map, (std::vector<edge_id>{1}));
  EXPECT_EQ(embs[2].vertex_map, (std::vector<vertex_id>{1, 0}));
}

TEST(Embeddings, CountsMatchBruteForceAndAreValid) {
  const auto small = enumerate_all_graphs(3, 3, false);
  const auto hosts = enumerate_all_graphs(4, 4, false);
  for (const auto& p : small) {
    for (const auto& h : hosts) {
      for (bool induced : {false, true}) {
        const auto embs = enumerate_embeddings(p, h, induced);
        ASSERT_EQ(embs.size(), oracle::count_embeddings(p, h, induced)) << to_gfmt(p) << to_gfmt(h);
        for (const auto& e : embs) {
          ASSERT_TRUE(is_valid(e));
        }
        ASSERT_TRUE(std::is_sorted(embs.begin(), embs.end(), [](const Embedding& a, const Embedding& b) {
          return std::tie(a.vertex_map, a.edge_map) < std::tie(b.vertex_map, b.edge_map);
        }));
      }
    }
  }
}

TEST(Embeddings, ValidateRejectsMalformedMaps) {
  EXPECT_THROW(make_embedding(K(2), K(3), {0, 0}), invalid_input);
  EXPECT_THROW(make_embedding(K(2), O(3), {0, 1}), invalid_input);
  EXPECT_THROW(make_embedding(O(2), K(3), {0, 1}, {}, true), invalid_input);
  EXPECT_NO_THROW(make_embedding(K(2), K(3), {2, 0}));
}

TEST(Enumerate, SimpleFourVertexGraphs) {
  const auto all = enumerate_all_graphs(4, 6, true);
  const auto n4 = std::count_if(all.begin(), all.end(), [](const MultiGraph& g) { return g.vertex_count() == 4; });
  EXPECT_EQ(n4, 11);
  EXPECT_EQ(static_cast<std::size_t>(n4), oracle::iso_classes(4, 6, true).size());
}

TEST(Enumerate, SmallBounds) {
  const auto a = enumerate_all_graphs(1, 2, false);
  ASSERT_EQ(a.size(), 4u);  // O0 plus O1, C1 and the double loop
  EXPECT_EQ(a[0], O(0));
  EXPECT_EQ(a[1], O(1));
  EXPECT_EQ(a[2], C(1));
  EXPECT_EQ(a[3], MultiGraph(1, {{0, 0}, {0, 0}}));
  const auto z = enumerate_all_graphs(0, 0, false);
  ASSERT_EQ(z.size(), 1u);
  EXPECT_EQ(z[0], O(0));
}

TEST(Enumerate, MatchesBruteForceMultigraphClasses) {
  const auto all = enumerate_all_graphs(3, 4, false);
  for (std::size_t n = 0; n <= 3; ++n) {
    const auto cnt = std::count_if(all.begin(), all.end(), [&](const MultiGraph& g) { return g.vertex_count() == n; });
    EXPECT_EQ(static_cast<std::size_t>(cnt), oracle::iso_classes(n, 4, false).size()) << n;
  }
}

TEST(Enumerate, SortedByVertexThenEdgeCount) {
  const auto all = enumerate_all_coded(4, 4, false);
  for (std::size_t i = 1; i < all.size(); ++i) {
    ASSERT_LT(all[i - 1].code, all[i].code);
    const auto& a = all[i - 1].graph;
    const auto& b = all[i].graph;
    ASSERT_LE(std::pair(a.vertex_count(), a.edge_count()), std::pair(b.vertex_count(), b.edge_count()));
  }
}

}  // namespace
}  // namespace gluing
