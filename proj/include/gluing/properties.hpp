#ifndef GLUING_PROPERTIES_HPP_
#define GLUING_PROPERTIES_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "gluing/canonical.hpp"
#include "gluing/error.hpp"
#include "gluing/multigraph.hpp"

namespace gluing {

/// Vertex cap for the exponential property tests (Hamiltonicity).
inline constexpr std::size_t property_vertex_cap = 12;

enum class Property {
  connected,
  simple,
  chordal,
  euler,
  bipartite,
  hamiltonian,
  planar,
  maximal_planar,
  forest,
  perfect_edge_matching,
  topological,
  components_isomorphic_to,
};

struct PropertyKind {
  Property tag;
  std::vector<CanonicalCode> codes;  // only for components_isomorphic_to

  PropertyKind(Property p) : tag(p) {}  // NOLINT(google-explicit-constructor)
  PropertyKind(Property p, std::vector<CanonicalCode> c) : tag(p), codes(std::move(c)) {}
};

inline constexpr std::array<std::pair<Property, std::string_view>, 12> property_names{{
    {Property::connected, "connected"},
    {Property::simple, "simple"},
    {Property::chordal, "chordal"},
    {Property::euler, "euler"},
    {Property::bipartite, "bipartite"},
    {Property::hamiltonian, "hamiltonian"},
    {Property::planar, "planar"},
    {Property::maximal_planar, "maximal_planar"},
    {Property::forest, "forest"},
    {Property::perfect_edge_matching, "perfect_edge_matching"},
    {Property::topological, "topological"},
    {Property::components_isomorphic_to, "components_isomorphic_to"},
}};

inline std::string_view name_of(Property p) {
  for (auto [tag, name] : property_names) {
    if (tag == p) {
      return name;
    }
  }
  return "?";
}

inline std::optional<Property> parse_property(std::string_view name) {
  for (auto [tag, n] : property_names) {
    if (n == name) {
      return tag;
    }
  }
  return std::nullopt;
}

namespace detail {

/// Adjacency bitmasks of the underlying simple graph (loops and multiplicities dropped).
inline std::vector<std::uint32_t> simple_masks(const MultiGraph& g) {
  std::vector<std::uint32_t> adj(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    if (!e.is_loop()) {
      adj[e.u] |= 1u << e.v;
      adj[e.v] |= 1u << e.u;
    }
  }
  return adj;
}

inline bool boost_planar(std::size_t n, const std::vector<std::pair<vertex_id, vertex_id>>& pairs) {
  using graph_t = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  graph_t bg(n);
  for (auto [u, v] : pairs) {
    boost::add_edge(u, v, bg);
  }
  return boost::boyer_myrvold_planarity_test(bg);
}

inline std::vector<std::pair<vertex_id, vertex_id>> simple_pairs(const MultiGraph& g) {
  std::vector<std::pair<vertex_id, vertex_id>> pairs;
  for (const Edge& e : g.edges()) {
    if (!e.is_loop()) {
      pairs.emplace_back(e.u, e.v);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

}  // namespace detail

/// Exactly one component; the null graph is not connected.
inline bool is_connected(const MultiGraph& g) { return g.vertex_count() > 0 && component_count(g) == 1; }

inline bool is_simple(const MultiGraph& g) {
  const MultiplicityMatrix a(g);
  for (const Edge& e : g.edges()) {
    if (e.is_loop() || a(e.u, e.v) > 1) {
      return false;
    }
  }
  return true;
}

inline bool is_loopless(const MultiGraph& g) { return g.total_loops() == 0; }

/// Maximum cardinality search followed by a perfect-elimination check on the underlying simple graph.
inline bool is_chordal(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  const auto pairs = detail::simple_pairs(g);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [u, v] : pairs) {
    adj[u][v] = adj[v][u] = true;
  }
  std::vector<std::size_t> weight(n, 0);
  std::vector<bool> numbered(n, false);
  std::vector<vertex_id> order;  // visit order
  for (std::size_t step = 0; step < n; ++step) {
    vertex_id best = n;
    for (vertex_id v = 0; v < n; ++v) {
      if (!numbered[v] && (best == n || weight[v] > weight[best])) {
        best = v;
      }
    }
    numbered[best] = true;
    order.push_back(best);
    for (vertex_id w = 0; w < n; ++w) {
      if (adj[best][w] && !numbered[w]) {
        ++weight[w];
      }
    }
  }
  // Reverse visit order is a perfect elimination order iff the graph is chordal.
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<vertex_id> earlier;
    for (std::size_t j = 0; j < i; ++j) {
      if (adj[order[i]][order[j]]) {
        earlier.push_back(order[j]);
      }
    }
    for (std::size_t a = 0; a < earlier.size(); ++a) {
      for (std::size_t b = a + 1; b < earlier.size(); ++b) {
        if (!adj[earlier[a]][earlier[b]]) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Connected with every degree even; a loop adds 2.
inline bool is_euler(const MultiGraph& g) {
  if (!is_connected(g)) {
    return false;
  }
  for (vertex_id v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) % 2 != 0) {
      return false;
    }
  }
  return true;
}

inline std::optional<std::vector<int>> two_coloring(const MultiGraph& g) {
  const auto adj = adjacency_lists(g);
  std::vector<int> side(g.vertex_count(), -1);
  for (vertex_id s = 0; s < g.vertex_count(); ++s) {
    if (side[s] >= 0) {
      continue;
    }
    side[s] = 0;
    std::vector<vertex_id> stack{s};
    while (!stack.empty()) {
      const vertex_id v = stack.back();
      stack.pop_back();
      for (vertex_id w : adj[v]) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

/// No loops and a proper 2-colouring exists.
inline bool is_bipartite(const MultiGraph& g) { return is_loopless(g) && two_coloring(g).has_value(); }

/// A cycle through every vertex: one vertex needs a loop, two vertices need a
/// double edge, larger graphs are decided by subset dynamic programming.
inline bool is_hamiltonian(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > property_vertex_cap) {
    throw cap_exceeded("hamiltonian: vertex cap exceeded");
  }
  if (n == 0) {
    return false;
  }
  if (n == 1) {
    return g.loop_count(0) > 0;
  }
  if (n == 2) {
    return g.multiplicity(0, 1) >= 2;
  }
  const auto adj = detail::simple_masks(g);
  const std::uint32_t full = (1u << n) - 1;
  // reach[mask] bit v: a path from vertex 0 through exactly mask ends at v
  std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
  reach[1] = 1;
  for (std::uint32_t mask = 1; mask <= full; mask += 2) {
    const std::uint32_t ends = reach[mask];
    if (!ends) {
      continue;
    }
    for (vertex_id v = 0; v < n; ++v) {
      if (!(ends >> v & 1u)) {
        continue;
      }
      std::uint32_t next = adj[v] & ~mask;
      while (next) {
        const int w = __builtin_ctz(next);
        next &= next - 1;
        reach[mask | (1u << w)] |= 1u << w;
      }
    }
  }
  return (reach[full] & adj[0]) != 0;
}

inline bool is_planar(const MultiGraph& g) {
  return detail::boost_planar(g.vertex_count(), detail::simple_pairs(g));
}

/// Simple, planar, and no edge can be added without losing planarity.
inline bool is_maximal_planar(const MultiGraph& g) {
  if (!is_simple(g) || !is_planar(g)) {
    return false;
  }
  auto pairs = detail::simple_pairs(g);
  const std::size_t n = g.vertex_count();
  for (vertex_id u = 0; u < n; ++u) {
    for (vertex_id v = u + 1; v < n; ++v) {
      if (std::binary_search(pairs.begin(), pairs.end(), std::pair(u, v))) {
        continue;
      }
      auto more = pairs;
      more.emplace_back(u, v);
      if (detail::boost_planar(n, more)) {
        return false;
      }
    }
  }
  return true;
}

/// No cycles: loopless and m = n - (number of components).
inline bool is_forest(const MultiGraph& g) {
  return is_loopless(g) && g.edge_count() + component_count(g) == g.vertex_count();
}

/// A set of non-loop edges covering every vertex exactly once.
inline bool has_perfect_edge_matching(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n % 2 != 0) {
    return false;
  }
  if (n > 2 * property_vertex_cap) {
    throw cap_exceeded("perfect_edge_matching: vertex cap exceeded");
  }
  const auto adj = detail::simple_masks(g);
  std::vector<std::int8_t> memo(std::size_t{1} << n, -1);
  std::function<bool(std::uint32_t)> solve = [&](std::uint32_t free) -> bool {
    if (free == 0) {
      return true;
    }
    auto& slot = memo[free];
    if (slot >= 0) {
      return slot != 0;
    }
    const int v = __builtin_ctz(free);
    std::uint32_t cand = adj[v] & free & ~(1u << v);
    bool ok = false;
    while (cand && !ok) {
      const int w = __builtin_ctz(cand);
      cand &= cand - 1;
      ok = solve(free & ~(1u << v) & ~(1u << w));
    }
    slot = ok ? 1 : 0;
    return ok;
  };
  return solve(n == 0 ? 0u : (1u << n) - 1);
}

/// No vertex of degree two.
inline bool is_topological(const MultiGraph& g) {
  for (vertex_id v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 2) {
      return false;
    }
  }
  return true;
}

/// Every connected component is isomorphic to one of `codes`.
inline bool components_isomorphic_to(const MultiGraph& g, const std::vector<CanonicalCode>& codes) {
  for (const auto& c : components(g)) {
    if (std::find(codes.begin(), codes.end(), canonical_form(c)) == codes.end()) {
      return false;
    }
  }
  return true;
}

inline bool holds(const PropertyKind& p, const MultiGraph& g) {
  switch (p.tag) {
    case Property::connected:
      return is_connected(g);
    case Property::simple:
      return is_simple(g);
    case Property::chordal:
      return is_chordal(g);
    case Property::euler:
      return is_euler(g);
    case Property::bipartite:
      return is_bipartite(g);
    case Property::hamiltonian:
      return is_hamiltonian(g);
    case Property::planar:
      return is_planar(g);
    case Property::maximal_planar:
      return is_maximal_planar(g);
    case Property::forest:
      return is_forest(g);
    case Property::perfect_edge_matching:
      return has_perfect_edge_matching(g);
    case Property::topological:
      return is_topological(g);
    case Property::components_isomorphic_to:
      return components_isomorphic_to(g, p.codes);
  }
  return false;
}

/// Named boolean combination of graph tests; the characteristic property of a class.
class Predicate {
 public:
  using function_type = std::function<bool(const MultiGraph&)>;

  Predicate() : Predicate("true", [](const MultiGraph&) { return true; }) {}
  Predicate(std::string name, function_type fn)
      : name_(std::move(name)), fn_(std::make_shared<function_type>(std::move(fn))) {}
  Predicate(const PropertyKind& p)  // NOLINT(google-explicit-constructor)
      : Predicate(std::string(name_of(p.tag)), [p](const MultiGraph& g) { return holds(p, g); }) {}
  Predicate(Property p) : Predicate(PropertyKind(p)) {}  // NOLINT(google-explicit-constructor)

  bool operator()(const MultiGraph& g) const { return (*fn_)(g); }
  const std::string& name() const noexcept { return name_; }

  friend Predicate operator&&(const Predicate& a, const Predicate& b) {
    return Predicate("(" + a.name_ + " and " + b.name_ + ")", [a, b](const MultiGraph& g) { return a(g) && b(g); });
  }
  friend Predicate operator||(const Predicate& a, const Predicate& b) {
    return Predicate("(" + a.name_ + " or " + b.name_ + ")", [a, b](const MultiGraph& g) { return a(g) || b(g); });
  }
  friend Predicate operator!(const Predicate& a) {
    return Predicate("not " + a.name_, [a](const MultiGraph& g) { return !a(g); });
  }

 private:
  std::string name_;
  std::shared_ptr<function_type> fn_;
};

/// Atoms used by the class catalog beyond the named properties.
namespace atoms {

inline Predicate loopless() { return {"loopless", is_loopless}; }

inline Predicate no_isolated_vertices() {
  return {"no_isolated", [](const MultiGraph& g) {
            for (vertex_id v = 0; v < g.vertex_count(); ++v) {
              if (g.degree(v) == 0) {
                return false;
              }
            }
            return true;
          }};
}

/// No cycle of length >= 2: no parallel edges and no cycle through distinct vertices. Loops allowed.
inline Predicate no_long_cycles() {
  return {"no_cycles_ge2", [](const MultiGraph& g) {
            std::size_t non_loops = 0;
            for (const Edge& e : g.edges()) {
              non_loops += !e.is_loop();
            }
            return non_loops + component_count(g) == g.vertex_count();
          }};
}

/// Every component is a single vertex (loops allowed).
inline Predicate single_vertex_components() {
  return {"single_vertex_components", [](const MultiGraph& g) {
            return std::all_of(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.is_loop(); });
          }};
}

/// Every component is a single vertex carrying at least one loop.
inline Predicate looped_single_vertex_components() {
  return {"looped_single_vertex_components", [](const MultiGraph& g) {
            if (!std::all_of(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.is_loop(); })) {
              return false;
            }
            for (vertex_id v = 0; v < g.vertex_count(); ++v) {
              if (g.loop_count(v) == 0) {
                return false;
              }
            }
            return true;
          }};
}

inline Predicate vertex_count_at_least(std::size_t k) {
  return {"n>=" + std::to_string(k), [k](const MultiGraph& g) { return g.vertex_count() >= k; }};
}
inline Predicate vertex_count_at_most(std::size_t k) {
  return {"n<=" + std::to_string(k), [k](const MultiGraph& g) { return g.vertex_count() <= k; }};
}
inline Predicate vertex_count_is(std::size_t k) {
  return {"n=" + std::to_string(k), [k](const MultiGraph& g) { return g.vertex_count() == k; }};
}
inline Predicate edge_count_at_least(std::size_t k) {
  return {"m>=" + std::to_string(k), [k](const MultiGraph& g) { return g.edge_count() >= k; }};
}
inline Predicate edge_count_is(std::size_t k) {
  return {"m=" + std::to_string(k), [k](const MultiGraph& g) { return g.edge_count() == k; }};
}

inline Predicate isomorphic_to(const MultiGraph& h, std::string label) {
  return {"iso_" + label, [code = canonical_form(h)](const MultiGraph& g) {
            return g.vertex_count() == code.vertex_count() && g.edge_count() == code.edge_count() &&
                   canonical_form(g) == code;
          }};
}

inline Predicate components_isomorphic_to(const std::vector<MultiGraph>& parts, std::string label) {
  std::vector<CanonicalCode> codes;
  for (const auto& p : parts) {
    codes.push_back(canonical_form(p));
  }
  return {"components_iso_" + label,
          [codes](const MultiGraph& g) { return gluing::components_isomorphic_to(g, codes); }};
}

}  // namespace atoms

}  // namespace gluing

#endif  // GLUING_PROPERTIES_HPP_
