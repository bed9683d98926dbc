#include <gtest/gtest.h>

#include "gluing/enumerate.hpp"
#include "gluing/glue.hpp"
#include "gluing/properties.hpp"
#include "oracles.hpp"

namespace gluing {
namespace {

using namespace shorthand;

TEST(Properties, Examples) {
  EXPECT_TRUE(holds(Property::euler, C(3)));
  EXPECT_FALSE(holds(Property::euler, L(3)));
  EXPECT_FALSE(holds(Property::chordal, C(4)));
  const auto bowtie = glue(make_spec(K(3), K(3), O(1), {0}, {0}));
  EXPECT_FALSE(holds(Property::hamiltonian, bowtie));
  EXPECT_FALSE(holds(Property::planar, K(5)));
  const MultiGraph two_k2(4, {{0, 1}, {2, 3}});
  EXPECT_TRUE(holds(PropertyKind(Property::components_isomorphic_to, {canonical_form(K(2))}), two_k2));
  EXPECT_FALSE(holds(PropertyKind(Property::components_isomorphic_to, {canonical_form(K(2))}), L(3)));
}

TEST(Properties, EdgeCases) {
  EXPECT_FALSE(is_connected(O(0)));
  EXPECT_TRUE(is_connected(O(1)));
  EXPECT_TRUE(is_euler(C(1)));
  EXPECT_TRUE(is_euler(O(1)));
  EXPECT_TRUE(is_hamiltonian(C(1)));
  EXPECT_TRUE(is_hamiltonian(C(2)));
  EXPECT_FALSE(is_hamiltonian(K(2)));
  EXPECT_FALSE(is_hamiltonian(O(1)));
  EXPECT_FALSE(is_bipartite(C(1)));
  EXPECT_TRUE(is_bipartite(C(2)));
  EXPECT_FALSE(is_forest(C(2)));
  EXPECT_TRUE(is_forest(O(0)));
  EXPECT_TRUE(is_maximal_planar(K(4)));
  EXPECT_FALSE(is_maximal_planar(C(4)));
  EXPECT_FALSE(is_topological(C(3)));
  EXPECT_TRUE(is_topological(K(4)));
  EXPECT_TRUE(has_perfect_edge_matching(C(4)));
  EXPECT_FALSE(has_perfect_edge_matching(MultiGraph(2, {{0, 0}, {1, 1}})));
  EXPECT_THROW(is_hamiltonian(O(13)), cap_exceeded);
}

TEST(Properties, NamesRoundTrip) {
  for (auto [tag, name] : property_names) {
    EXPECT_EQ(parse_property(name), tag);
  }
  EXPECT_FALSE(parse_property("nonsense").has_value());
}

TEST(Properties, AgreeWithOraclesOnAllSmallGraphs) {
  for (const auto& g : enumerate_all_graphs(5, 6, false)) {
    ASSERT_EQ(is_connected(g), oracle::connected(g)) << to_gfmt(g);
    ASSERT_EQ(is_simple(g), oracle::simple(g)) << to_gfmt(g);
    ASSERT_EQ(is_chordal(g), oracle::chordal(g)) << to_gfmt(g);
    ASSERT_EQ(is_euler(g), oracle::euler(g)) << to_gfmt(g);
    ASSERT_EQ(is_bipartite(g), oracle::bipartite(g)) << to_gfmt(g);
    ASSERT_EQ(is_hamiltonian(g), oracle::hamiltonian(g)) << to_gfmt(g);
    ASSERT_EQ(has_perfect_edge_matching(g), oracle::perfect_matching(g)) << to_gfmt(g);
    ASSERT_EQ(is_forest(g), oracle::forest(g)) << to_gfmt(g);
  }
}

TEST(Properties, PlanarityAgreesWithMinorSearch) {
  for (const auto& g : enumerate_all_graphs(6, 12, true)) {
    ASSERT_EQ(is_planar(g), oracle::planar(g)) << to_gfmt(g);
  }
  EXPECT_FALSE(is_planar(MultiGraph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}})));
}

TEST(Properties, ChordalAgreesOnSixVertexSimpleGraphs) {
  for (const auto& g : enumerate_all_graphs(6, 15, true)) {
    ASSERT_EQ(is_chordal(g), oracle::chordal(g)) << to_gfmt(g);
  }
}

TEST(Predicate, Combinators) {
  const Predicate p = Predicate(Property::connected) && !atoms::loopless();
  EXPECT_TRUE(p(C(1)));
  EXPECT_FALSE(p(K(2)));
  EXPECT_EQ(p.name(), "(connected and not loopless)");
  EXPECT_TRUE(atoms::no_long_cycles()(MultiGraph(2, {{0, 1}, {0, 0}, {0, 0}})));
  EXPECT_FALSE(atoms::no_long_cycles()(C(2)));
  EXPECT_TRUE(atoms::isomorphic_to(K(2), "K2")(MultiGraph(2, {{1, 0}})));
}

}  // namespace
}  // namespace gluing
