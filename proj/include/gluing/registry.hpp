#ifndef GLUING_REGISTRY_HPP_
#define GLUING_REGISTRY_HPP_

#include <algorithm>
#include <array>
#include <charconv>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gluing/canonical.hpp"
#include "gluing/diagram_data.hpp"
#include "gluing/enumerate.hpp"
#include "gluing/error.hpp"
#include "gluing/guards.hpp"
#include "gluing/multigraph.hpp"
#include "gluing/properties.hpp"

namespace gluing {

/// A generating basis: finitely many named graphs plus an optional countable
/// family that is instantiated up to a size bound.
struct BasisSpec {
  using generator = std::function<std::vector<MultiGraph>(std::size_t max_n, std::size_t max_m)>;

  std::vector<std::string> labels;
  std::vector<MultiGraph> graphs;
  std::string rule;  // label of the countable part, empty when finite
  generator generate;

  bool finite() const { return !generate; }

  /// Members with n <= max_n and m <= max_m, one per isomorphism class, sorted by code.
  std::vector<MultiGraph> instantiate(std::size_t max_n, std::size_t max_m) const {
    std::map<CanonicalCode, MultiGraph> out;
    auto take = [&](const MultiGraph& g) {
      if (g.vertex_count() <= max_n && g.edge_count() <= max_m) {
        out.try_emplace(canonical_form(g), g);
      }
    };
    for (const auto& g : graphs) {
      take(g);
    }
    if (generate) {
      for (const auto& g : generate(max_n, max_m)) {
        take(g);
      }
    }
    std::vector<MultiGraph> v;
    for (auto& [c, g] : out) {
      v.push_back(std::move(g));
    }
    return v;
  }

  /// Codes of the finite part; throws invalid_input for a countable basis.
  std::vector<CanonicalCode> codes() const {
    if (!finite()) {
      throw invalid_input("basis " + rule + " is countable; instantiate it with a bound");
    }
    std::vector<CanonicalCode> out;
    for (const auto& g : graphs) {
      out.push_back(canonical_form(g));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::string describe() const {
    std::string s = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
      s += (i ? "," : "") + labels[i];
    }
    if (!rule.empty()) {
      s += (labels.empty() ? "" : ",") + rule;
    }
    return s + "}";
  }
};

/// One closed class: generating bases, gluing guards and characteristic property.
struct ClassDescriptor {
  int id = 0;  // 1..40 for the catalog, 0 for named special bases
  std::string name;
  BasisSpec elemental;
  BasisSpec operational;
  std::vector<BasisSpec> operational_alternatives;
  std::vector<GuardKind> guards;
  Predicate predicate;
  bool induced = false;  // identified subgraphs must be induced
  bool trivial = false;
};

namespace detail {

inline MultiGraph named_graph(std::string_view label) {
  using namespace shorthand;
  if (label == "(O1oK2)O0") return disjoint_union(O(1), K(2));
  if (label == "(O2oK2)O0") return disjoint_union(O(2), K(2));
  if (label == "(O3oK2)O0") return disjoint_union(O(3), K(2));
  if (label == "(K2oK2)O0") return disjoint_union(K(2), K(2));
  if (label == "((K2oK2)O0oO1)O0") return disjoint_union(disjoint_union(K(2), K(2)), O(1));
  if (label == "(O1oL3)O0") return disjoint_union(O(1), L(3));
  if (label == "(O2oL3)O0") return disjoint_union(O(2), L(3));
  if (label == "(O1oL4)O0") return disjoint_union(O(1), L(4));
  if (label == "(K2oL3)O0") return disjoint_union(K(2), L(3));
  return make_named(label);
}

template <class Labels>
BasisSpec finite_basis_of(const Labels& labels) {
  BasisSpec b;
  for (std::string_view l : labels) {
    b.labels.emplace_back(l);
    b.graphs.push_back(named_graph(l));
  }
  return b;
}

inline BasisSpec finite_basis(std::initializer_list<std::string_view> labels) { return finite_basis_of(labels); }

/// Adds the family `tag`_k for k >= first.
inline BasisSpec with_family(BasisSpec b, char tag, std::size_t first) {
  b.rule = std::string(1, tag) + "_k,k>=" + std::to_string(first);
  b.generate = [tag, first](std::size_t max_n, std::size_t) {
    std::vector<MultiGraph> out;
    for (std::size_t k = first; k <= max_n; ++k) {
      out.push_back(make_named(tag, k));
    }
    return out;
  };
  return b;
}

inline bool has_separating_triangle(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  const MultiplicityMatrix a(g);
  for (vertex_id x = 0; x < n; ++x) {
    for (vertex_id y = x + 1; y < n; ++y) {
      for (vertex_id z = y + 1; z < n; ++z) {
        if (a(x, y) && a(y, z) && a(x, z)) {
          std::vector<vertex_id> rest;
          for (vertex_id v = 0; v < n; ++v) {
            if (v != x && v != y && v != z) {
              rest.push_back(v);
            }
          }
          if (component_count(induced_subgraph(g, rest)) >= 2) {
            return true;
          }
        }
      }
    }
  }
  return false;
}

inline constexpr std::array<std::string_view, 16> sixteen_labels = {
    "O0", "O1", "O2", "K2", "O3", "(O1oK2)O0", "L3", "K3",
    "O4", "(O2oK2)O0", "(K2oK2)O0", "(O1oL3)O0", "L4", "C4", "L5", "C5"};

inline constexpr std::array<std::string_view, 22> twenty_two_labels = {
    "O0", "O1", "O2", "K2", "O3", "(O1oK2)O0", "L3", "K3", "O4", "(O2oK2)O0", "(K2oK2)O0",
    "(O1oL3)O0", "L4", "C4", "O5", "(O3oK2)O0", "((K2oK2)O0oO1)O0", "(O2oL3)O0", "(O1oL4)O0",
    "(K2oL3)O0", "L5", "C5"};

inline Predicate component_shapes(std::initializer_list<std::string_view> labels) {
  std::vector<MultiGraph> parts;
  std::string label;
  for (auto l : labels) {
    parts.push_back(named_graph(l));
    label += (label.empty() ? "" : "/") + std::string(l);
  }
  return atoms::components_isomorphic_to(parts, label);
}

/// Class ({C1,K2},{O0,O2}), read literally: components with two or
/// more vertices have a perfect edge matching, single vertices carry a loop, and
/// the loop parities agree.
inline bool loop_parity_condition(const MultiGraph& g) {
  if (g.vertex_count() == 0) {
    return false;
  }
  std::size_t big_loops = 0;
  std::size_t small_sum = 0;
  for (const auto& c : components(g)) {
    if (c.vertex_count() == 1) {
      if (c.edge_count() == 0) {
        return false;
      }
      small_sum += c.edge_count() - 1;
    } else {
      if (!has_perfect_edge_matching(c)) {
        return false;
      }
      big_loops += c.total_loops();
    }
  }
  return big_loops % 2 == small_sum % 2;
}

inline ClassDescriptor catalog_entry(int id) {
  using namespace atoms;
  const Predicate nonempty = vertex_count_at_least(1);
  const Predicate connected = Property::connected;
  const Predicate forest = nonempty && Predicate(Property::forest);
  const Predicate tree = connected && Predicate(Property::forest);
  const Predicate no_cycles = no_long_cycles();
  ClassDescriptor d;
  d.id = id;
  d.name = "class" + std::to_string(id);
  auto set = [&](std::initializer_list<std::string_view> be, std::initializer_list<std::string_view> bo, Predicate p) {
    d.elemental = finite_basis(be);
    d.operational = finite_basis(bo);
    d.predicate = std::move(p);
  };
  switch (id) {
    case 1: set({"O1", "C1", "K2"}, {"O0", "O1", "O2"}, nonempty); break;
    case 2: set({"O1", "C1", "K2"}, {"O1", "O2"}, connected); break;
    case 3: set({"C1", "K2"}, {"O0", "O1", "O2"}, nonempty && no_isolated_vertices()); break;
    case 4: set({"O1", "C1", "K2"}, {"O0", "O1"}, nonempty && no_cycles); break;
    case 5: set({"O1", "C1", "K2"}, {"O0", "O2"}, nonempty && !(vertex_count_is(1) && edge_count_at_least(2))); break;
    case 6: set({"O1", "K2"}, {"O1", "O2"}, connected && loopless()); break;
    case 7: set({"C1", "K2"}, {"O1", "O2"}, connected && edge_count_at_least(1)); break;
    case 8: set({"O1", "C1", "K2"}, {"O1"}, connected && no_cycles); break;
    case 9: set({"O1", "C1", "K2"}, {"O2"}, isomorphic_to(make_named("C1"), "C1") || (loopless() && connected && vertex_count_at_most(2))); break;
    case 10: set({"C1", "K2"}, {"O0", "O1"}, nonempty && no_isolated_vertices() && no_cycles); break;
    case 11: set({"C1", "K2"}, {"O0", "O2"}, Predicate("matching_loop_parity", loop_parity_condition)); break;
    case 12: set({"K2"}, {"O0", "O1", "O2"}, nonempty && loopless() && no_isolated_vertices()); break;
    case 13: set({"O1", "K2"}, {"O0", "O1"}, forest); break;
    case 14: set({"O1", "C1"}, {"O0", "O1"}, nonempty && single_vertex_components()); break;
    case 15: set({"O1", "C1"}, {"O0", "O2"}, nonempty && single_vertex_components() && !(vertex_count_is(1) && edge_count_at_least(2))); break;
    case 16: set({"O1", "C1", "K2"}, {"O0"}, nonempty && component_shapes({"O1", "C1", "K2"})); break;
    case 17: set({"O1", "K2"}, {"O0", "O2"}, nonempty && loopless()); break;
    case 18: set({"K2"}, {"O1", "O2"}, connected && loopless() && vertex_count_at_least(2)); break;
    case 19: set({"C1", "K2"}, {"O1"}, connected && edge_count_at_least(1) && no_cycles); break;
    case 20: set({"C1", "K2"}, {"O2"}, isomorphic_to(make_named("C1"), "C1") || (loopless() && connected && vertex_count_is(2))); break;
    case 21: set({"O1", "C1"}, {"O1"}, vertex_count_is(1)); break;
    case 22: set({"O1", "K2"}, {"O1"}, tree); break;
    case 23: set({"O1", "K2"}, {"O2"}, connected && loopless() && vertex_count_at_most(2)); break;
    case 24: set({"C1", "K2"}, {"O0"}, nonempty && component_shapes({"C1", "K2"})); break;
    case 25: set({"K2"}, {"O0", "O1"}, forest && no_isolated_vertices()); break;
    case 26:
      set({"C1"}, {"O0", "O2"},
          nonempty && looped_single_vertex_components() &&
              Predicate("m-n_even", [](const MultiGraph& g) { return (g.edge_count() - g.vertex_count()) % 2 == 0; }));
      break;
    case 27: set({"C1"}, {"O0", "O1"}, nonempty && looped_single_vertex_components()); break;
    case 28: set({"K2"}, {"O0", "O2"}, nonempty && loopless() && Predicate(Property::perfect_edge_matching)); break;
    case 29: set({"O1", "C1"}, {"O0"}, nonempty && component_shapes({"O1", "C1"})); break;
    case 30: set({"O1", "K2"}, {"O0"}, nonempty && component_shapes({"O1", "K2"})); break;
    case 31: set({"K2"}, {"O1"}, tree && vertex_count_at_least(2)); break;
    case 32: set({"K2"}, {"O2"}, loopless() && connected && vertex_count_is(2)); break;
    case 33: set({"C1"}, {"O1"}, vertex_count_is(1) && edge_count_at_least(1)); break;
    case 34: set({"C1"}, {"O0"}, nonempty && component_shapes({"C1"})); break;
    case 35: set({"K2"}, {"O0"}, nonempty && component_shapes({"K2"})); break;
    case 36: set({"O1"}, {"O0"}, nonempty && edge_count_is(0)); break;
    case 37: set({"K2"}, {"K2"}, isomorphic_to(make_named("K2"), "K2")); break;
    case 38: set({"C1"}, {"C1"}, isomorphic_to(make_named("C1"), "C1")); break;
    case 39: set({"O1"}, {"O1"}, isomorphic_to(make_named("O1"), "O1")); break;
    case 40: set({"O0"}, {"O0"}, vertex_count_is(0)); break;
    default:
      throw invalid_input("unknown class id " + std::to_string(id));
  }
  d.trivial = id >= 37;
  return d;
}

}  // namespace detail

inline constexpr int catalog_size = 40;

/// Descriptor of catalog class `id` (1..40). Catalog classes use unrestricted gluing.
inline ClassDescriptor get_descriptor(int id) { return detail::catalog_entry(id); }

/// Characteristic property of catalog class `id`.
inline bool membership(int id, const MultiGraph& g) {
  if (g.vertex_count() > property_vertex_cap) {
    throw cap_exceeded("membership: vertex cap exceeded");
  }
  static const std::vector<ClassDescriptor> all = [] {
    std::vector<ClassDescriptor> v;
    for (int i = 1; i <= catalog_size; ++i) {
      v.push_back(get_descriptor(i));
    }
    return v;
  }();
  if (id < 1 || id > catalog_size) {
    throw invalid_input("unknown class id " + std::to_string(id));
  }
  return all[id - 1].predicate(g);
}

// ---------------------------------------------------------------------------
// Special bases

/// Patterns of the minimal-separating planar gluing types (16 graphs).
inline BasisSpec sixteen_type_set() { return detail::finite_basis_of(detail::sixteen_labels); }

/// Patterns of the edge-minimal separating planar gluing types (22 graphs).
inline BasisSpec twenty_two_type_set() { return detail::finite_basis_of(detail::twenty_two_labels); }

inline constexpr std::array<std::string_view, 13> special_basis_names{
    "chordal_Ht",       "planar_Hp",         "simple_planar_Hp_simple", "planar_simple_Hps", "planar_simple_Hpv",
    "planar_simple_Hpve", "chordal_planar_Hp", "maximal_planar_Hp",       "euler_Hempty",      "euler_planar_Hp_empty",
    "hamiltonian_Hg",   "hamiltonian_Hg_canonical", "bipartite_Hb"};

inline ClassDescriptor special_basis(std::string_view name) {
  using namespace atoms;
  using detail::finite_basis;
  using detail::with_family;
  const Predicate nonempty = vertex_count_at_least(1);
  const Predicate simple = Property::simple;
  const Predicate planar = Property::planar;
  ClassDescriptor d;
  d.name = std::string(name);
  const BasisSpec planar_be = finite_basis({"O1", "K2", "K3", "K4"});
  if (name == "chordal_Ht") {
    d.elemental = with_family(finite_basis({"O1"}), 'K', 2);
    d.operational = with_family(finite_basis({"O1"}), 'K', 2);
    d.guards = {Guard::Ht};
    d.predicate = Predicate(Property::connected) && simple && Predicate(Property::chordal);
  } else if (name == "planar_Hp") {
    d.elemental = finite_basis({"O1", "C1", "K2"});
    d.operational = finite_basis({"O0", "O1", "O2"});
    d.guards = {Guard::Hp_face};
    d.predicate = nonempty && planar;
  } else if (name == "simple_planar_Hp_simple") {
    d.elemental = finite_basis({"O1", "K2"});
    d.operational = finite_basis({"O0", "O2"});
    d.guards = {Guard::Hp_face, Guard::simple_preserving};
    d.predicate = nonempty && simple && planar;
  } else if (name == "planar_simple_Hps") {
    d.elemental = planar_be;
    d.operational = finite_basis({"O0", "O1", "O2", "O3", "O4", "O5"});
    d.guards = {Guard::Hp_face, Guard::simple_preserving, Guard::Hs};
    d.predicate = nonempty && simple && planar;
  } else if (name == "planar_simple_Hpv") {
    d.elemental = planar_be;
    d.operational = sixteen_type_set();
    d.guards = {Guard::Hp_face, Guard::simple_preserving, Guard::Hpv_min_sep};
    d.predicate = nonempty && simple && planar;
    d.induced = true;
  } else if (name == "planar_simple_Hpve") {
    d.elemental = planar_be;
    d.operational = twenty_two_type_set();
    d.guards = {Guard::Hp_face, Guard::simple_preserving, Guard::Hpv_min_sep};
    d.predicate = nonempty && simple && planar;
    d.induced = true;
  } else if (name == "chordal_planar_Hp") {
    d.elemental = planar_be;
    d.operational = finite_basis({"O0", "O1", "K2", "K3"});
    d.guards = {Guard::Hp_face, Guard::Ht};
    d.predicate = nonempty && simple && planar && Predicate(Property::chordal);
    d.induced = true;
  } else if (name == "maximal_planar_Hp") {
    // Countable basis: maximal planar graphs without a separating triangle,
    // since gluing on a triangle always leaves that triangle separating.
    d.elemental.rule = "maximal_planar_without_separating_triangle";
    d.elemental.generate = [](std::size_t max_n, std::size_t max_m) {
      std::vector<MultiGraph> out;
      for (auto& g : enumerate_all_graphs(max_n, max_m, true)) {
        if (g.vertex_count() >= 1 && is_maximal_planar(g) && !detail::has_separating_triangle(g)) {
          out.push_back(std::move(g));
        }
      }
      return out;
    };
    d.operational = finite_basis({"K3"});
    d.guards = {Guard::Hp_face};
    d.predicate = nonempty && Predicate(Property::maximal_planar);
    d.induced = true;
  } else if (name == "euler_Hempty") {
    d.elemental = with_family({}, 'C', 1);
    d.operational = with_family({}, 'O', 1);
    d.guards = {Guard::H_empty_euler};
    d.predicate = Predicate(Property::euler) && edge_count_at_least(1);
  } else if (name == "euler_planar_Hp_empty") {
    d.elemental = with_family({}, 'C', 1);
    d.operational = finite_basis({"O1", "O2", "O3"});
    d.operational_alternatives = {finite_basis({"O1", "O2", "O4"}), finite_basis({"O1", "O2", "O5"})};
    d.guards = {Guard::H_empty_euler, Guard::Hp_face};
    d.predicate = Predicate(Property::euler) && edge_count_at_least(1) && planar;
  } else if (name == "hamiltonian_Hg" || name == "hamiltonian_Hg_canonical") {
    d.elemental = with_family({}, 'C', 1);
    BasisSpec chains = with_family(finite_basis({"O1", "K2"}), 'L', 3);
    BasisSpec pairs = finite_basis({"O1", "K2"});
    pairs.rule = "(L_aoL_b)O0,a,b>=2";
    pairs.generate = [](std::size_t max_n, std::size_t) {
      std::vector<MultiGraph> out;
      for (std::size_t a = 2; 2 * a <= max_n; ++a) {
        for (std::size_t b = a; a + b <= max_n; ++b) {
          out.push_back(disjoint_union(make_named('L', a), make_named('L', b)));
        }
      }
      return out;
    };
    if (name == "hamiltonian_Hg") {
      d.operational = with_family(finite_basis({"O1", "K2"}), 'C', 4);
      d.operational_alternatives = {chains, pairs};
    } else {
      d.operational = chains;
      d.operational_alternatives = {pairs};
    }
    d.guards = {Guard::Hg, Guard::simple_preserving};
    // a vertex looped in both operands is never identified, so no vertex gains a second loop
    d.predicate = Predicate(Property::hamiltonian) && Predicate("at_most_one_loop_per_vertex", [](const MultiGraph& g) {
                    for (vertex_id v = 0; v < g.vertex_count(); ++v) {
                      if (g.loop_count(v) > 1) {
                        return false;
                      }
                    }
                    return true;
                  });
  } else if (name == "bipartite_Hb") {
    d.elemental = finite_basis({"O1", "K2"});
    d.operational = finite_basis({"O0", "O2"});
    d.guards = {Guard::Hb};
    d.predicate = nonempty && Predicate(Property::bipartite);
  } else {
    throw invalid_input("unknown special basis " + std::string(name));
  }
  return d;
}

// ---------------------------------------------------------------------------
// Inclusion diagram

struct DiagramEdge {
  int upper;
  int lower;

  /// Unordered form, smaller id first.
  DiagramEdge normalized() const { return {std::min(upper, lower), std::max(upper, lower)}; }
  auto operator<=>(const DiagramEdge&) const = default;
};

enum class DiagramSource { listed, derived };

namespace detail {

inline std::pair<int, int> parse_link(std::string_view tok, std::size_t line) {
  const auto comma = tok.find(',');
  int a = 0;
  int b = 0;
  if (comma == std::string_view::npos ||
      std::from_chars(tok.data(), tok.data() + comma, a).ptr != tok.data() + comma ||
      std::from_chars(tok.data() + comma + 1, tok.data() + tok.size(), b).ptr != tok.data() + tok.size()) {
    throw parse_error("bad diagram link '" + std::string(tok) + "'", line);
  }
  if (a < 1 || a > catalog_size || b < 1 || b > catalog_size || a == b) {
    throw parse_error("diagram link out of range '" + std::string(tok) + "'", line);
  }
  return {a, b};
}

/// True when `sub` is `super` with exactly one element removed.
inline bool one_fewer(const std::vector<CanonicalCode>& super, const std::vector<CanonicalCode>& sub) {
  return sub.size() + 1 == super.size() && std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

}  // namespace detail

/// Listed: the transcribed links as drawn. Derived: pairs whose bases agree in
/// one component and differ by exactly one element in the other.
inline std::vector<DiagramEdge> diagram_edges(DiagramSource source) {
  std::vector<DiagramEdge> out;
  if (source == DiagramSource::listed) {
    std::istringstream in{std::string(data::inclusion_links)};
    std::string tok;
    while (in >> tok) {
      auto [a, b] = detail::parse_link(tok, 0);
      out.push_back({a, b});
    }
    return out;
  }
  std::vector<std::vector<CanonicalCode>> be(catalog_size + 1), bo(catalog_size + 1);
  for (int i = 1; i <= catalog_size; ++i) {
    const auto d = get_descriptor(i);
    be[i] = d.elemental.codes();
    bo[i] = d.operational.codes();
  }
  for (int i = 1; i <= catalog_size; ++i) {
    for (int j = 1; j <= catalog_size; ++j) {
      if ((be[i] == be[j] && detail::one_fewer(bo[i], bo[j])) || (bo[i] == bo[j] && detail::one_fewer(be[i], be[j]))) {
        out.push_back({i, j});
      }
    }
  }
  return out;
}

struct DiagramDiff {
  DiagramSource only_in;
  DiagramEdge edge;  // normalized
  std::string annotation;  // empty when not covered by the known-diffs list
};

struct KnownDiff {
  DiagramSource only_in;
  DiagramEdge edge;
  std::string annotation;
};

inline std::vector<KnownDiff> known_diagram_diffs() {
  std::vector<KnownDiff> out;
  std::istringstream in{std::string(data::inclusion_known_diffs)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    std::string note = hash == std::string::npos ? "" : line.substr(hash + 1);
    const std::string body = line.substr(0, hash);
    std::istringstream ls(body);
    std::string kind, link;
    if (!(ls >> kind)) {
      continue;
    }
    if (!(ls >> link) || (kind != "listed" && kind != "derived")) {
      throw parse_error("bad known-diff entry", lineno);
    }
    note.erase(0, note.find_first_not_of(' '));
    if (note.empty()) {
      throw parse_error("known-diff entry without a reason", lineno);
    }
    auto [a, b] = detail::parse_link(link, lineno);
    out.push_back({kind == "listed" ? DiagramSource::listed : DiagramSource::derived,
                   DiagramEdge{a, b}.normalized(), note});
  }
  return out;
}

/// Symmetric difference of listed and derived links (unordered), annotated from the known-diffs list.
inline std::vector<DiagramDiff> diagram_diff() {
  std::set<DiagramEdge> listed, derived;
  for (const auto& e : diagram_edges(DiagramSource::listed)) {
    listed.insert(e.normalized());
  }
  for (const auto& e : diagram_edges(DiagramSource::derived)) {
    derived.insert(e.normalized());
  }
  const auto known = known_diagram_diffs();
  auto note = [&](DiagramSource s, DiagramEdge e) -> std::string {
    for (const auto& k : known) {
      if (k.only_in == s && k.edge == e) {
        return k.annotation;
      }
    }
    return "";
  };
  std::vector<DiagramDiff> out;
  for (const auto& e : listed) {
    if (!derived.count(e)) {
      out.push_back({DiagramSource::listed, e, note(DiagramSource::listed, e)});
    }
  }
  for (const auto& e : derived) {
    if (!listed.count(e)) {
      out.push_back({DiagramSource::derived, e, note(DiagramSource::derived, e)});
    }
  }
  return out;
}

/// Known-diff entries that no longer correspond to an actual difference.
inline std::vector<KnownDiff> stale_known_diffs() {
  const auto diff = diagram_diff();
  std::vector<KnownDiff> out;
  for (const auto& k : known_diagram_diffs()) {
    const bool present = std::any_of(diff.begin(), diff.end(), [&](const DiagramDiff& d) {
      return d.only_in == k.only_in && d.edge == k.edge;
    });
    if (!present) {
      out.push_back(k);
    }
  }
  return out;
}

inline std::string to_dot(const std::vector<DiagramEdge>& edges) {
  std::set<DiagramEdge> seen;
  std::string s = "graph inclusions {\n";
  for (int i = 1; i <= catalog_size; ++i) {
    s += "  " + std::to_string(i) + ";\n";
  }
  for (const auto& e : edges) {
    if (seen.insert(e.normalized()).second) {
      s += "  " + std::to_string(e.upper) + " -- " + std::to_string(e.lower) + ";\n";
    }
  }
  return s + "}\n";
}

inline std::string format_diff(const std::vector<DiagramDiff>& diff) {
  std::string s;
  for (const auto& d : diff) {
    s += std::string(d.only_in == DiagramSource::listed ? "listed" : "derived") + " " + std::to_string(d.edge.upper) +
         "," + std::to_string(d.edge.lower) + "  # " + (d.annotation.empty() ? "UNANNOTATED" : d.annotation) + "\n";
  }
  return s;
}

/// `class <id> be <codes> bo <codes> pred <name>` for every catalog class.
inline std::string catalog_text() {
  std::string s;
  auto codes = [](const BasisSpec& b) {
    std::string out;
    for (const auto& c : b.codes()) {
      out += (out.empty() ? "" : ",") + c.hex();
    }
    return out;
  };
  for (int i = 1; i <= catalog_size; ++i) {
    const auto d = get_descriptor(i);
    s += "class " + std::to_string(i) + " be " + codes(d.elemental) + " bo " + codes(d.operational) + " pred " +
         d.predicate.name() + "\n";
  }
  return s;
}

/// Whether the operational basis is {O0, ..., On} with n the largest elemental vertex count,
/// so that canonical superpositions suffice.
inline bool canonical_sufficient(const ClassDescriptor& d) {
  if (!d.elemental.finite()) {
    throw invalid_input("canonical_sufficient: elemental basis " + d.elemental.describe() +
                        " has no vertex-count bound");
  }
  if (!d.operational.finite()) {
    return false;
  }
  std::size_t n = 0;
  for (const auto& g : d.elemental.graphs) {
    n = std::max(n, g.vertex_count());
  }
  std::vector<CanonicalCode> expect;
  for (std::size_t k = 0; k <= n; ++k) {
    expect.push_back(canonical_form(make_named(Family::empty, k)));
  }
  std::sort(expect.begin(), expect.end());
  return d.operational.codes() == expect;
}

}  // namespace gluing

#endif  // GLUING_REGISTRY_HPP_
