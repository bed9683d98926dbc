#ifndef GLUING_MULTIGRAPH_HPP_
#define GLUING_MULTIGRAPH_HPP_

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gluing/error.hpp"

namespace gluing {

using vertex_id = std::size_t;
using edge_id = std::size_t;

/// One edge instance. Endpoints are stored with u <= v; u == v is a loop.
struct Edge {
  vertex_id u = 0;
  vertex_id v = 0;

  constexpr Edge() = default;
  constexpr Edge(vertex_id a, vertex_id b) : u(std::min(a, b)), v(std::max(a, b)) {}

  constexpr bool is_loop() const noexcept { return u == v; }
  constexpr bool joins(vertex_id a, vertex_id b) const noexcept {
    return (u == a && v == b) || (u == b && v == a);
  }
  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite multigraph with loops and parallel edges.
///
/// Edge instances keep the index they were added with, so parallel edges stay
/// distinguishable. Equality is structural (same vertex count, same edge
/// sequence); use is_isomorphic() for equality up to relabeling.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(std::size_t vertex_count) : n_(vertex_count) {}
  MultiGraph(std::size_t vertex_count, std::vector<Edge> edges) : n_(vertex_count), edges_(std::move(edges)) {
    for (const Edge& e : edges_) {
      if (e.v >= n_) {
        throw invalid_input("edge endpoint " + std::to_string(e.v) + " out of range for " + std::to_string(n_) +
                            " vertices");
      }
    }
  }
  MultiGraph(std::size_t vertex_count, std::initializer_list<std::pair<vertex_id, vertex_id>> edges)
      : MultiGraph(vertex_count, to_edges(edges)) {}

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return n_ == 0; }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(edge_id e) const { return edges_.at(e); }

  vertex_id add_vertex() { return n_++; }
  edge_id add_edge(vertex_id a, vertex_id b) {
    if (a >= n_ || b >= n_) {
      throw invalid_input("edge endpoint out of range");
    }
    edges_.emplace_back(a, b);
    return edges_.size() - 1;
  }

  /// Number of edge instances joining a and b (loops at a when a == b).
  std::size_t multiplicity(vertex_id a, vertex_id b) const noexcept {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.joins(a, b); }));
  }

  /// Degree with loops counted twice.
  std::size_t degree(vertex_id a) const noexcept {
    std::size_t d = 0;
    for (const Edge& e : edges_) {
      d += (e.u == a) + (e.v == a);
    }
    return d;
  }

  std::size_t loop_count(vertex_id a) const noexcept { return multiplicity(a, a); }

  std::size_t total_loops() const noexcept {
    return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); }));
  }

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  static std::vector<Edge> to_edges(std::initializer_list<std::pair<vertex_id, vertex_id>> list) {
    std::vector<Edge> out;
    out.reserve(list.size());
    for (auto [a, b] : list) {
      out.emplace_back(a, b);
    }
    return out;
  }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// Dense symmetric multiplicity matrix, row-major; the diagonal holds loop counts.
class MultiplicityMatrix {
 public:
  explicit MultiplicityMatrix(const MultiGraph& g) : n_(g.vertex_count()), cells_(n_ * n_, 0) {
    for (const Edge& e : g.edges()) {
      ++cells_[e.u * n_ + e.v];
      if (!e.is_loop()) {
        ++cells_[e.v * n_ + e.u];
      }
    }
  }

  std::size_t size() const noexcept { return n_; }
  std::size_t operator()(vertex_id a, vertex_id b) const noexcept { return cells_[a * n_ + b]; }

 private:
  std::size_t n_;
  std::vector<std::size_t> cells_;
};

/// Neighbour lists (one entry per non-loop edge instance, so parallel edges repeat).
inline std::vector<std::vector<vertex_id>> adjacency_lists(const MultiGraph& g) {
  std::vector<std::vector<vertex_id>> adj(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (!e.is_loop()) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
  }
  return adj;
}

/// Component label per vertex, labels numbered in order of smallest member.
inline std::vector<std::size_t> component_labels(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      x = parent[x] = parent[parent[x]];
    }
    return x;
  };
  for (const Edge& e : g.edges()) {
    const std::size_t a = find(e.u);
    const std::size_t b = find(e.v);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::size_t> label(n);
  std::vector<std::size_t> id_of_root(n, n);
  std::size_t next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t r = find(v);
    if (id_of_root[r] == n) {
      id_of_root[r] = next++;
    }
    label[v] = id_of_root[r];
  }
  return label;
}

inline std::size_t component_count(const MultiGraph& g) {
  const auto labels = component_labels(g);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

/// Subgraph induced by `vertices` (kept in the given order) with every edge instance between them.
inline MultiGraph induced_subgraph(const MultiGraph& g, std::span<const vertex_id> vertices) {
  std::vector<std::size_t> slot(g.vertex_count(), g.vertex_count());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    slot[vertices[i]] = i;
  }
  MultiGraph out(vertices.size());
  for (const Edge& e : g.edges()) {
    if (slot[e.u] < vertices.size() && slot[e.v] < vertices.size()) {
      out.add_edge(slot[e.u], slot[e.v]);
    }
  }
  return out;
}

/// Connected components as separate graphs, vertices renumbered in ascending order.
inline std::vector<MultiGraph> components(const MultiGraph& g) {
  const auto labels = component_labels(g);
  const std::size_t k = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<std::vector<vertex_id>> members(k);
  for (vertex_id v = 0; v < g.vertex_count(); ++v) {
    members[labels[v]].push_back(v);
  }
  std::vector<MultiGraph> out;
  out.reserve(k);
  for (const auto& m : members) {
    out.push_back(induced_subgraph(g, m));
  }
  return out;
}

/// Disjoint union; vertices of `b` follow those of `a`.
inline MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b) {
  MultiGraph out(a.vertex_count() + b.vertex_count(), std::vector<Edge>(a.edges().begin(), a.edges().end()));
  for (const Edge& e : b.edges()) {
    out.add_edge(e.u + a.vertex_count(), e.v + a.vertex_count());
  }
  return out;
}

/// Relabel vertex v as perm[v].
inline MultiGraph permuted(const MultiGraph& g, std::span<const vertex_id> perm) {
  MultiGraph out(g.vertex_count());
  for (const Edge& e : g.edges()) {
    out.add_edge(perm[e.u], perm[e.v]);
  }
  return out;
}

/// Named families. C1 is a single loop, C2 two parallel edges, L1 = O1.
enum class Family : char { complete = 'K', cycle = 'C', chain = 'L', empty = 'O' };

inline MultiGraph make_named(Family family, std::size_t n) {
  if (family != Family::empty && n == 0) {
    throw invalid_input(std::string("family ") + static_cast<char>(family) + " needs at least one vertex");
  }
  MultiGraph g(n);
  switch (family) {
    case Family::complete:
      for (vertex_id a = 0; a < n; ++a) {
        for (vertex_id b = a + 1; b < n; ++b) {
          g.add_edge(a, b);
        }
      }
      break;
    case Family::cycle:
      for (vertex_id a = 0; a < n; ++a) {
        g.add_edge(a, (a + 1) % n);
      }
      break;
    case Family::chain:
      for (vertex_id a = 0; a + 1 < n; ++a) {
        g.add_edge(a, a + 1);
      }
      break;
    case Family::empty:
      break;
    default:
      throw invalid_input("unknown graph family");
  }
  return g;
}

inline MultiGraph make_named(char tag, std::size_t n) {
  switch (tag) {
    case 'K':
    case 'C':
    case 'L':
    case 'O':
      return make_named(static_cast<Family>(tag), n);
    default:
      throw invalid_input(std::string("unknown graph family '") + tag + "'");
  }
}

/// Parses names such as "K3", "C1", "O0", "L12".
inline MultiGraph make_named(std::string_view name) {
  if (name.size() < 2) {
    throw invalid_input("graph name too short: " + std::string(name));
  }
  std::size_t n = 0;
  const auto* first = name.data() + 1;
  const auto* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr != last) {
    throw invalid_input("bad graph name: " + std::string(name));
  }
  return make_named(name.front(), n);
}

namespace shorthand {
inline MultiGraph K(std::size_t n) { return make_named(Family::complete, n); }
inline MultiGraph C(std::size_t n) { return make_named(Family::cycle, n); }
inline MultiGraph L(std::size_t n) { return make_named(Family::chain, n); }
inline MultiGraph O(std::size_t n) { return make_named(Family::empty, n); }
}  // namespace shorthand

// ---------------------------------------------------------------------------
// GFMT text format
//
//   # optional comment lines
//   graph <n>
//   e <u> <v>        (one line per edge instance, u == v for a loop)
// ---------------------------------------------------------------------------

namespace detail {

inline std::size_t parse_index(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw parse_error("expected a non-negative integer, got '" + std::string(token) + "'", line);
  }
  return value;
}

inline std::vector<std::string_view> split_spaces(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') {
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ') {
      ++j;
    }
    if (j > i) {
      out.push_back(s.substr(i, j - i));
    }
    i = j;
  }
  return out;
}

}  // namespace detail

inline MultiGraph parse_gfmt(std::string_view text) {
  std::optional<MultiGraph> g;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') {
      continue;
    }
    const auto tokens = detail::split_spaces(line);
    if (tokens.empty()) {
      continue;
    }
    if (tokens[0] == "graph") {
      if (g) {
        throw parse_error("duplicate 'graph' header", line_no);
      }
      if (tokens.size() != 2) {
        throw parse_error("expected 'graph <n>'", line_no);
      }
      g.emplace(detail::parse_index(tokens[1], line_no));
    } else if (tokens[0] == "e") {
      if (!g) {
        throw parse_error("edge before 'graph' header", line_no);
      }
      if (tokens.size() != 3) {
        throw parse_error("expected 'e <u> <v>'", line_no);
      }
      const auto u = detail::parse_index(tokens[1], line_no);
      const auto v = detail::parse_index(tokens[2], line_no);
      if (u >= g->vertex_count() || v >= g->vertex_count()) {
        throw parse_error("vertex index out of range", line_no);
      }
      g->add_edge(u, v);
    } else {
      throw parse_error("unknown directive '" + std::string(tokens[0]) + "'", line_no);
    }
  }
  if (!g) {
    throw parse_error("missing 'graph <n>' header");
  }
  return *std::move(g);
}

inline MultiGraph read_gfmt_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw parse_error("cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_gfmt(buffer.str());
}

inline void write_gfmt(std::ostream& out, const MultiGraph& g) {
  out << "graph " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) {
    out << "e " << e.u << ' ' << e.v << '\n';
  }
}

inline std::string to_gfmt(const MultiGraph& g) {
  std::ostringstream out;
  write_gfmt(out, g);
  return out.str();
}

}  // namespace gluing

#endif  // GLUING_MULTIGRAPH_HPP_
