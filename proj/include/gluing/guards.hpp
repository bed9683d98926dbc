#ifndef GLUING_GUARDS_HPP_
#define GLUING_GUARDS_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gluing/embedding.hpp"
#include "gluing/error.hpp"
#include "gluing/glue.hpp"
#include "gluing/multigraph.hpp"
#include "gluing/properties.hpp"

namespace gluing {

// ---------------------------------------------------------------------------
// Block structure

/// Edge sets of the blocks (maximal 2-connected pieces, bridges, loops) of `g`.
inline std::vector<std::vector<edge_id>> blocks(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::pair<vertex_id, edge_id>>> inc(n);
  std::vector<std::vector<edge_id>> out;
  for (edge_id e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edges()[e];
    if (ed.is_loop()) {
      out.push_back({e});
      continue;
    }
    inc[ed.u].emplace_back(ed.v, e);
    inc[ed.v].emplace_back(ed.u, e);
  }
  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, unseen), low(n, 0);
  std::vector<edge_id> stack;
  std::size_t timer = 0;
  std::function<void(vertex_id, edge_id)> dfs = [&](vertex_id v, edge_id via) {
    disc[v] = low[v] = timer++;
    for (auto [w, e] : inc[v]) {
      if (e == via) {
        continue;
      }
      if (disc[w] == unseen) {
        stack.push_back(e);
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::vector<edge_id> block;
          for (;;) {
            const edge_id top = stack.back();
            stack.pop_back();
            block.push_back(top);
            if (top == e) {
              break;
            }
          }
          std::sort(block.begin(), block.end());
          out.push_back(std::move(block));
        }
      } else if (disc[w] < disc[v]) {
        stack.push_back(e);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (vertex_id v = 0; v < n; ++v) {
    if (disc[v] == unseen) {
      dfs(v, unseen);
    }
  }
  return out;
}

/// bridge[e] is true when deleting edge e disconnects its endpoints.
inline std::vector<bool> bridge_flags(const MultiGraph& g) {
  std::vector<bool> out(g.edge_count(), false);
  for (const auto& b : blocks(g)) {
    if (b.size() == 1 && !g.edges()[b[0]].is_loop()) {
      out[b[0]] = true;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// db-search

enum class TieBreak { ascending, descending };

using VertexOrdering = std::vector<vertex_id>;

/// Depth-first search that prefers, at the current tip, edges that are not
/// bridges of the unvisited part (unvisited vertices plus the tip); among such
/// bridges it prefers those that are not bridges of `g` itself. Remaining ties
/// go to the smallest (or largest) neighbour index. Loops are ignored.
inline VertexOrdering db_search(const MultiGraph& g, vertex_id start, TieBreak tie = TieBreak::ascending) {
  const std::size_t n = g.vertex_count();
  if (start >= n) {
    throw invalid_input("db_search: start vertex out of range");
  }
  if (!is_connected(g)) {
    throw invalid_input("db_search: graph is not connected");
  }
  const auto global_bridge = bridge_flags(g);
  std::vector<bool> visited(n, false);
  VertexOrdering order{start};
  visited[start] = true;
  std::vector<vertex_id> stack{start};
  while (!stack.empty()) {
    const vertex_id tip = stack.back();
    // unfinished subgraph: unvisited vertices plus the tip
    MultiGraph u(n);
    std::vector<edge_id> origin;
    for (edge_id e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edges()[e];
      if (ed.is_loop()) {
        continue;
      }
      const bool in_u = (!visited[ed.u] || ed.u == tip) && (!visited[ed.v] || ed.v == tip);
      if (in_u) {
        u.add_edge(ed.u, ed.v);
        origin.push_back(e);
      }
    }
    const auto local_bridge = bridge_flags(u);
    // rank 0: not a bridge of U; rank 1: bridge of U only; rank 2: bridge of g as well
    std::optional<std::pair<int, vertex_id>> best;
    for (edge_id le = 0; le < u.edge_count(); ++le) {
      const Edge& ed = u.edges()[le];
      if (ed.u != tip && ed.v != tip) {
        continue;
      }
      const vertex_id w = ed.u == tip ? ed.v : ed.u;
      const int rank = !local_bridge[le] ? 0 : (global_bridge[origin[le]] ? 2 : 1);
      const auto key = std::pair(rank, tie == TieBreak::ascending ? w : n - 1 - w);
      if (!best || key < *best) {
        best = key;
      }
    }
    if (!best) {
      stack.pop_back();
      continue;
    }
    const vertex_id w = tie == TieBreak::ascending ? best->second : n - 1 - best->second;
    visited[w] = true;
    order.push_back(w);
    stack.push_back(w);
  }
  return order;
}

// ---------------------------------------------------------------------------
// Faces

/// Host graph restricted to the edges outside the image of `sub`, on the host's vertex set.
inline MultiGraph shell(const Embedding& sub) {
  std::vector<bool> in_image(sub.host.edge_count(), false);
  for (edge_id e : sub.edge_map) {
    in_image[e] = true;
  }
  MultiGraph out(sub.host.vertex_count());
  for (edge_id e = 0; e < sub.host.edge_count(); ++e) {
    if (!in_image[e]) {
      out.add_edge(sub.host.edges()[e].u, sub.host.edges()[e].v);
    }
  }
  return out;
}

/// Image of an embedding as a standalone graph; `vertices` lists the host vertex behind each index.
struct ImageGraph {
  MultiGraph graph;
  std::vector<vertex_id> vertices;
};

inline ImageGraph image_graph(const Embedding& sub) {
  ImageGraph out;
  out.vertices.assign(sub.vertex_map.begin(), sub.vertex_map.end());
  std::sort(out.vertices.begin(), out.vertices.end());
  auto local = [&](vertex_id h) {
    return static_cast<vertex_id>(std::lower_bound(out.vertices.begin(), out.vertices.end(), h) - out.vertices.begin());
  };
  out.graph = MultiGraph(out.vertices.size());
  for (edge_id e : sub.edge_map) {
    const Edge& ed = sub.host.edges()[e];
    out.graph.add_edge(local(ed.u), local(ed.v));
  }
  return out;
}

inline constexpr std::size_t face_vertex_cap = 10;

namespace detail {

/// Vertices of a cycle block in cyclic order.
inline std::vector<vertex_id> cycle_order(const MultiGraph& g, const std::vector<edge_id>& block) {
  const Edge& first = g.edges()[block[0]];
  std::vector<vertex_id> seq{first.u};
  if (first.is_loop()) {
    return seq;
  }
  std::vector<bool> used(g.edge_count(), false);
  used[block[0]] = true;
  vertex_id cur = first.v;
  while (cur != first.u) {
    seq.push_back(cur);
    for (edge_id e : block) {
      if (!used[e] && (g.edges()[e].u == cur || g.edges()[e].v == cur)) {
        used[e] = true;
        cur = g.edges()[e].u == cur ? g.edges()[e].v : g.edges()[e].u;
        break;
      }
    }
  }
  return seq;
}

struct Chain {
  vertex_id a;
  vertex_id b;
  std::vector<edge_id> edges;     // shell edge ids
  std::vector<vertex_id> inner;   // interior vertices
};

/// Endpoints (p, q) and (r, s) alternate along a cycle given as position map.
inline bool alternate(std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
  if (p > q) {
    std::swap(p, q);
  }
  const bool r_in = p < r && r < q;
  const bool s_in = p < s && s < q;
  return r_in != s_in;
}

/// Six internally disjoint paths joining each of `left` to each of `right` in `g`.
inline bool disjoint_k33_paths(const MultiGraph& g, std::array<vertex_id, 3> left, std::array<vertex_id, 2> right) {
  const std::size_t n = g.vertex_count();
  const auto adj = adjacency_lists(g);
  std::vector<bool> blocked(n, false);
  for (auto v : left) blocked[v] = true;
  for (auto v : right) blocked[v] = true;
  std::vector<std::pair<vertex_id, vertex_id>> pairs;
  for (auto a : left) {
    for (auto x : right) {
      pairs.emplace_back(a, x);
    }
  }
  // parallel direct edges may serve only once
  std::map<std::pair<vertex_id, vertex_id>, std::size_t> direct_left;
  for (const Edge& e : g.edges()) {
    if (!e.is_loop()) {
      ++direct_left[{e.u, e.v}];
    }
  }
  std::function<bool(std::size_t)> route = [&](std::size_t k) -> bool {
    if (k == pairs.size()) {
      return true;
    }
    const auto [src, dst] = pairs[k];
    auto key = std::pair(std::min(src, dst), std::max(src, dst));
    if (direct_left[key] > 0) {
      --direct_left[key];
      if (route(k + 1)) {
        return true;
      }
      ++direct_left[key];
    }
    std::function<bool(vertex_id)> walk = [&](vertex_id v) -> bool {
      for (vertex_id w : adj[v]) {
        if (w == dst && v != src) {
          if (route(k + 1)) {
            return true;
          }
          continue;
        }
        if (blocked[w]) {
          continue;
        }
        blocked[w] = true;
        const bool ok = walk(w);
        blocked[w] = false;
        if (ok) {
          return true;
        }
      }
      return false;
    };
    return walk(src);
  };
  return route(0);
}

}  // namespace detail

/// Whether the image of `sub` could bound a maximal face of its host: the image
/// is connected and every block is an edge or a cycle, every shell edge lies on
/// a chordal chain, alternating chains of a cycle share an inner vertex, and no
/// three vertices of a cycle reach two shell vertices by six disjoint chains.
/// Host components that do not meet the image are ignored.
inline bool is_face_subgraph(const Embedding& sub) {
  const MultiGraph& host = sub.host;
  const std::size_t n = host.vertex_count();
  if (n > face_vertex_cap) {
    throw cap_exceeded("is_face_subgraph: vertex cap exceeded");
  }
  if (!is_planar(host)) {
    throw invalid_input("is_face_subgraph: host is not planar");
  }
  if (sub.vertex_map.empty()) {
    return false;
  }
  const ImageGraph img = image_graph(sub);
  if (!is_connected(img.graph)) {
    return false;
  }
  std::vector<std::vector<vertex_id>> cycles;  // host vertex ids in cyclic order
  for (const auto& block : blocks(img.graph)) {
    std::set<vertex_id> vs;
    for (edge_id e : block) {
      vs.insert(img.graph.edges()[e].u);
      vs.insert(img.graph.edges()[e].v);
    }
    if (block.size() == 1) {
      if (img.graph.edges()[block[0]].is_loop()) {
        cycles.push_back({img.vertices[img.graph.edges()[block[0]].u]});
      }
      continue;
    }
    if (block.size() != vs.size()) {
      return false;
    }
    auto seq = detail::cycle_order(img.graph, block);
    for (auto& v : seq) {
      v = img.vertices[v];
    }
    cycles.push_back(std::move(seq));
  }

  std::vector<bool> in_image(n, false);
  for (vertex_id v : sub.vertex_map) {
    in_image[v] = true;
  }
  const auto labels = component_labels(host);
  const std::size_t face_component = labels[sub.vertex_map[0]];
  MultiGraph sh(n);
  {
    const MultiGraph full = shell(sub);
    for (const Edge& e : full.edges()) {
      if (labels[e.u] == face_component) {
        sh.add_edge(e.u, e.v);
      }
    }
  }
  if (sh.edge_count() == 0) {
    return true;
  }

  // cycle membership: position of each host vertex on each cycle
  std::vector<std::map<vertex_id, std::size_t>> position(cycles.size());
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    for (std::size_t i = 0; i < cycles[c].size(); ++i) {
      position[c][cycles[c][i]] = i;
    }
  }
  auto common_cycle = [&](vertex_id a, vertex_id b) -> std::optional<std::size_t> {
    for (std::size_t c = 0; c < cycles.size(); ++c) {
      if (position[c].count(a) && position[c].count(b)) {
        return c;
      }
    }
    return std::nullopt;
  };

  // all chordal chains
  std::vector<std::vector<std::pair<vertex_id, edge_id>>> inc(n);
  for (edge_id e = 0; e < sh.edge_count(); ++e) {
    const Edge& ed = sh.edges()[e];
    if (ed.is_loop()) {
      return false;  // a loop of the shell is never part of a chain with distinct ends
    }
    inc[ed.u].emplace_back(ed.v, e);
    inc[ed.v].emplace_back(ed.u, e);
  }
  std::vector<std::vector<detail::Chain>> chains(cycles.size());
  std::vector<bool> covered(sh.edge_count(), false);
  std::vector<bool> on_path(n, false);
  std::vector<edge_id> path_edges;
  std::vector<vertex_id> path_inner;
  for (vertex_id a = 0; a < n; ++a) {
    if (!in_image[a]) {
      continue;
    }
    std::function<void(vertex_id)> extend = [&](vertex_id v) {
      for (auto [w, e] : inc[v]) {
        if (on_path[w]) {
          continue;
        }
        path_edges.push_back(e);
        if (in_image[w]) {
          if (w > a) {
            if (auto c = common_cycle(a, w)) {
              for (edge_id pe : path_edges) {
                covered[pe] = true;
              }
              chains[*c].push_back({a, w, path_edges, path_inner});
            }
          }
        } else {
          on_path[w] = true;
          path_inner.push_back(w);
          extend(w);
          path_inner.pop_back();
          on_path[w] = false;
        }
        path_edges.pop_back();
      }
    };
    on_path[a] = true;
    extend(a);
    on_path[a] = false;
  }
  if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; })) {
    return false;
  }

  for (std::size_t c = 0; c < cycles.size(); ++c) {
    const auto& list = chains[c];
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        const auto& x = list[i];
        const auto& y = list[j];
        std::set<vertex_id> ends{x.a, x.b, y.a, y.b};
        if (ends.size() != 4) {
          continue;
        }
        if (!detail::alternate(position[c][x.a], position[c][x.b], position[c][y.a], position[c][y.b])) {
          continue;
        }
        const bool share = std::any_of(x.inner.begin(), x.inner.end(), [&](vertex_id v) {
          return std::find(y.inner.begin(), y.inner.end(), v) != y.inner.end();
        });
        if (!share) {
          return false;
        }
      }
    }
  }

  std::vector<std::size_t> shell_degree(n, 0);
  for (const Edge& e : sh.edges()) {
    ++shell_degree[e.u];
    ++shell_degree[e.v];
  }
  for (const auto& cyc : cycles) {
    std::vector<vertex_id> cand;
    for (vertex_id v : cyc) {
      if (shell_degree[v] >= 2) {
        cand.push_back(v);
      }
    }
    for (std::size_t i = 0; i < cand.size(); ++i) {
      for (std::size_t j = i + 1; j < cand.size(); ++j) {
        for (std::size_t k = j + 1; k < cand.size(); ++k) {
          const std::array<vertex_id, 3> abc{cand[i], cand[j], cand[k]};
          for (vertex_id x = 0; x < n; ++x) {
            for (vertex_id y = x + 1; y < n; ++y) {
              if (shell_degree[x] < 3 || shell_degree[y] < 3) {
                continue;
              }
              if (std::find(abc.begin(), abc.end(), x) != abc.end() || std::find(abc.begin(), abc.end(), y) != abc.end()) {
                continue;
              }
              if (detail::disjoint_k33_paths(sh, abc, {x, y})) {
                return false;
              }
            }
          }
        }
      }
    }
  }
  return true;
}

/// All face subgraphs of `host` that contain the image of `sub`, as embeddings of the face graph.
inline std::vector<Embedding> faces_containing(const Embedding& sub, std::size_t edge_cap = 14) {
  const MultiGraph& host = sub.host;
  if (host.vertex_count() > face_vertex_cap || host.edge_count() > edge_cap) {
    throw missing_parameter("face search exceeds the caps; supply face subgraphs explicitly");
  }
  std::vector<bool> fixed(host.edge_count(), false);
  for (edge_id e : sub.edge_map) {
    fixed[e] = true;
  }
  std::vector<edge_id> optional_edges;
  for (edge_id e = 0; e < host.edge_count(); ++e) {
    if (!fixed[e]) {
      optional_edges.push_back(e);
    }
  }
  std::vector<Embedding> out;
  const std::size_t combos = std::size_t{1} << optional_edges.size();
  for (std::size_t mask = 0; mask < combos; ++mask) {
    std::vector<edge_id> edges(sub.edge_map.begin(), sub.edge_map.end());
    for (std::size_t i = 0; i < optional_edges.size(); ++i) {
      if (mask >> i & 1u) {
        edges.push_back(optional_edges[i]);
      }
    }
    std::sort(edges.begin(), edges.end());
    std::set<vertex_id> vs(sub.vertex_map.begin(), sub.vertex_map.end());
    for (edge_id e : edges) {
      vs.insert(host.edges()[e].u);
      vs.insert(host.edges()[e].v);
    }
    if (vs.empty()) {
      continue;
    }
    std::vector<vertex_id> vlist(vs.begin(), vs.end());
    MultiGraph face(vlist.size());
    auto local = [&](vertex_id h) {
      return static_cast<vertex_id>(std::lower_bound(vlist.begin(), vlist.end(), h) - vlist.begin());
    };
    for (edge_id e : edges) {
      face.add_edge(local(host.edges()[e].u), local(host.edges()[e].v));
    }
    Embedding emb{face, host, vlist, edges, false};
    if (is_connected(face) && is_face_subgraph(emb)) {
      out.push_back(std::move(emb));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Guards

enum class Guard { Ht, Hb, Hg, H_empty_euler, simple_preserving, Hs, Hpv_min_sep, Hp_face };

inline constexpr std::array<std::pair<Guard, std::string_view>, 8> guard_names{{
    {Guard::Ht, "Ht"},
    {Guard::Hb, "Hb"},
    {Guard::Hg, "Hg"},
    {Guard::H_empty_euler, "H_empty_euler"},
    {Guard::simple_preserving, "simple_preserving"},
    {Guard::Hs, "Hs"},
    {Guard::Hpv_min_sep, "Hpv_min_sep"},
    {Guard::Hp_face, "Hp_face"},
}};

inline std::string_view name_of(Guard g) {
  for (auto [tag, name] : guard_names) {
    if (tag == g) {
      return name;
    }
  }
  return "?";
}

inline std::optional<Guard> parse_guard(std::string_view name) {
  for (auto [tag, n] : guard_names) {
    if (n == name) {
      return tag;
    }
  }
  return std::nullopt;
}

/// Optional guard inputs. Missing Hamiltonian cycles or faces are searched for within the caps.
struct GuardParams {
  std::optional<std::vector<vertex_id>> left_cycle;
  std::optional<std::vector<vertex_id>> right_cycle;
  std::optional<Embedding> left_face;
  std::optional<Embedding> right_face;
};

struct GuardKind {
  Guard tag;
  GuardParams params;

  GuardKind(Guard g) : tag(g) {}  // NOLINT(google-explicit-constructor)
  GuardKind(Guard g, GuardParams p) : tag(g), params(std::move(p)) {}
};

namespace detail {

inline bool pattern_is_complete(const MultiGraph& p) {
  const std::size_t n = p.vertex_count();
  return p.edge_count() == n * (n - (n > 0)) / 2 && is_simple(p);
}

/// Parity sets of simple chains between vertices of `terminals` in `g`:
/// bit 0 even length seen, bit 1 odd length seen.
inline std::vector<std::vector<unsigned>> chain_parities(const MultiGraph& g, std::span<const vertex_id> terminals) {
  const std::size_t n = g.vertex_count();
  if (n > 10) {
    throw cap_exceeded("chain parity search: vertex cap exceeded");
  }
  const auto adj = adjacency_lists(g);
  const std::size_t t = terminals.size();
  std::vector<std::size_t> slot(n, t);
  for (std::size_t i = 0; i < t; ++i) {
    slot[terminals[i]] = i;
  }
  std::vector<std::vector<unsigned>> out(t, std::vector<unsigned>(t, 0));
  std::vector<bool> on(n, false);
  for (std::size_t i = 0; i < t; ++i) {
    std::function<void(vertex_id, std::size_t)> walk = [&](vertex_id v, std::size_t len) {
      if (slot[v] < t && slot[v] != i) {
        out[i][slot[v]] |= 1u << (len % 2);
      }
      for (vertex_id w : adj[v]) {
        if (!on[w]) {
          on[w] = true;
          walk(w, len + 1);
          on[w] = false;
        }
      }
    };
    on[terminals[i]] = true;
    walk(terminals[i], 0);
    on[terminals[i]] = false;
  }
  return out;
}

inline MultiGraph without_edges(const MultiGraph& g, std::span<const edge_id> removed) {
  std::vector<bool> drop(g.edge_count(), false);
  for (edge_id e : removed) {
    drop[e] = true;
  }
  MultiGraph out(g.vertex_count());
  for (edge_id e = 0; e < g.edge_count(); ++e) {
    if (!drop[e]) {
      out.add_edge(g.edges()[e].u, g.edges()[e].v);
    }
  }
  return out;
}

/// Union-find with parity along the path to the root.
class ParityUnion {
 public:
  explicit ParityUnion(std::size_t n) : parent_(n), parity_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::pair<std::size_t, unsigned> find(std::size_t x) {
    unsigned p = 0;
    while (parent_[x] != x) {
      p ^= parity_[x];
      x = parent_[x];
    }
    return {x, p};
  }

  /// Records parity(a) xor parity(b) == odd; false on contradiction.
  bool unite(std::size_t a, std::size_t b, unsigned odd) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) {
      return (pa ^ pb) == odd;
    }
    parent_[ra] = rb;
    parity_[ra] = pa ^ pb ^ odd;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned> parity_;
};

/// Hb: parities of chains between pattern vertices, taken in both operands
/// without the identified edges and together with the pattern edges, admit a
/// consistent 2-colouring of the pattern vertices.
inline bool chain_parity_consistent(const GluingView& s) {
  const std::size_t p = s.pattern.vertex_count();
  ParityUnion uf(p);
  for (const Edge& e : s.pattern.edges()) {
    if (!uf.unite(e.u, e.v, 1)) {
      return false;
    }
  }
  auto side = [&](const MultiGraph& g, std::span<const vertex_id> vm, std::span<const edge_id> em) {
    const auto par = chain_parities(without_edges(g, em), vm);
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = i + 1; j < p; ++j) {
        if (par[i][j] == 3u) {
          return false;
        }
        if (par[i][j] != 0 && !uf.unite(i, j, par[i][j] == 2u ? 1u : 0u)) {
          return false;
        }
      }
    }
    return true;
  };
  return side(s.left, s.left_vertices, s.left_edges) && side(s.right, s.right_vertices, s.right_edges);
}

/// adjacent_on_cycle[a][b]: a and b are consecutive on some Hamiltonian cycle of g.
inline std::vector<std::vector<bool>> hamiltonian_adjacency(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > property_vertex_cap) {
    throw missing_parameter("Hg: operand too large to search Hamiltonian cycles; supply them");
  }
  std::vector<std::vector<bool>> out(n, std::vector<bool>(n, false));
  if (n == 2) {
    out[0][1] = out[1][0] = g.multiplicity(0, 1) >= 2;
    return out;
  }
  if (n < 3) {
    return out;
  }
  const auto adj = simple_masks(g);
  const std::uint32_t full = (1u << n) - 1;
  for (vertex_id a = 0; a < n; ++a) {
    std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
    reach[1u << a] = 1u << a;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      std::uint32_t ends = reach[mask];
      while (ends) {
        const int v = __builtin_ctz(ends);
        ends &= ends - 1;
        std::uint32_t next = adj[v] & ~mask;
        while (next) {
          const int w = __builtin_ctz(next);
          next &= next - 1;
          reach[mask | (1u << w)] |= 1u << w;
        }
      }
    }
    for (vertex_id b = 0; b < n; ++b) {
      if (b != a && (reach[full] >> b & 1u) && (adj[a] >> b & 1u)) {
        out[a][b] = true;
      }
    }
  }
  return out;
}

inline bool consecutive_on(const std::vector<vertex_id>& cycle, vertex_id a, vertex_id b) {
  const std::size_t k = cycle.size();
  for (std::size_t i = 0; i < k; ++i) {
    const vertex_id x = cycle[i];
    const vertex_id y = cycle[(i + 1) % k];
    if ((x == a && y == b) || (x == b && y == a)) {
      return true;
    }
  }
  return false;
}

inline bool hamiltonian_condition(const GluingView& s, const GuardParams& params) {
  const std::size_t p = s.pattern.vertex_count();
  if (p == s.left.vertex_count() || p == s.right.vertex_count()) {
    return true;
  }
  if (p != 2) {
    return false;
  }
  auto adjacent = [&](const MultiGraph& g, std::span<const vertex_id> vm, const std::optional<std::vector<vertex_id>>& cyc) {
    if (cyc) {
      return consecutive_on(*cyc, vm[0], vm[1]);
    }
    return static_cast<bool>(hamiltonian_adjacency(g)[vm[0]][vm[1]]);
  };
  return adjacent(s.left, s.left_vertices, params.left_cycle) && adjacent(s.right, s.right_vertices, params.right_cycle);
}

inline bool simple_condition(const GluingView& s) {
  const std::size_t p = s.pattern.vertex_count();
  const MultiplicityMatrix pm(s.pattern);
  const MultiplicityMatrix lm(s.left);
  const MultiplicityMatrix rm(s.right);
  for (vertex_id a = 0; a < p; ++a) {
    for (vertex_id b = a; b < p; ++b) {
      if (pm(a, b) == 0 && lm(s.left_vertices[a], s.left_vertices[b]) > 0 &&
          rm(s.right_vertices[a], s.right_vertices[b]) > 0) {
        return false;
      }
    }
  }
  return true;
}

inline std::size_t components_without(const MultiGraph& g, const std::vector<bool>& removed) {
  std::vector<vertex_id> keep;
  for (vertex_id v = 0; v < g.vertex_count(); ++v) {
    if (!removed[v]) {
      keep.push_back(v);
    }
  }
  return component_count(induced_subgraph(g, keep));
}

/// Result vertices that the pattern was identified with.
inline std::vector<vertex_id> pattern_vertices_in_result(const GluingView& s) {
  return {s.left_vertices.begin(), s.left_vertices.end()};
}

inline bool separating(const GluingView& s) {
  const auto r = glue_with_maps(s);
  std::vector<bool> removed(r.graph.vertex_count(), false);
  for (vertex_id v : pattern_vertices_in_result(s)) {
    removed[v] = true;
  }
  return components_without(r.graph, removed) >= 2;
}

inline bool minimal_separating(const GluingView& s) {
  const auto r = glue_with_maps(s);
  const auto pv = pattern_vertices_in_result(s);
  const std::size_t k = pv.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<bool> removed(r.graph.vertex_count(), false);
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1u) {
        removed[pv[i]] = true;
      }
    }
    const bool sep = components_without(r.graph, removed) >= 2;
    const bool whole = mask + 1 == (std::size_t{1} << k);
    if (sep != whole) {
      return false;
    }
  }
  return true;
}

inline bool induced_on(const MultiGraph& pattern, const MultiGraph& host, std::span<const vertex_id> vm) {
  const MultiplicityMatrix pm(pattern);
  const MultiplicityMatrix hm(host);
  for (vertex_id a = 0; a < pattern.vertex_count(); ++a) {
    for (vertex_id b = a; b < pattern.vertex_count(); ++b) {
      if (pm(a, b) != hm(vm[a], vm[b])) {
        return false;
      }
    }
  }
  return true;
}

/// Orders in which pattern vertices appear along db-searches of a face, one
/// sequence of pattern indices per (start, tie-break) choice.
inline std::set<std::vector<vertex_id>> pattern_orders(const Embedding& face, std::span<const vertex_id> pattern_map) {
  const ImageGraph img = image_graph(face);
  std::set<std::vector<vertex_id>> out;
  std::vector<std::size_t> rank(face.host.vertex_count(), 0);
  for (vertex_id start = 0; start < img.graph.vertex_count(); ++start) {
    for (TieBreak tie : {TieBreak::ascending, TieBreak::descending}) {
      const auto order = db_search(img.graph, start, tie);
      for (std::size_t i = 0; i < order.size(); ++i) {
        rank[img.vertices[order[i]]] = i;
      }
      std::vector<vertex_id> seq(pattern_map.size());
      std::iota(seq.begin(), seq.end(), 0);
      std::sort(seq.begin(), seq.end(), [&](vertex_id a, vertex_id b) { return rank[pattern_map[a]] < rank[pattern_map[b]]; });
      out.insert(std::move(seq));
    }
  }
  return out;
}

inline bool contains_image(const Embedding& face, std::span<const vertex_id> vm, std::span<const edge_id> em) {
  for (vertex_id v : vm) {
    if (std::find(face.vertex_map.begin(), face.vertex_map.end(), v) == face.vertex_map.end()) {
      return false;
    }
  }
  for (edge_id e : em) {
    if (std::find(face.edge_map.begin(), face.edge_map.end(), e) == face.edge_map.end()) {
      return false;
    }
  }
  return true;
}

/// Pattern orders over all faces containing the image. When the image meets several
/// components, each component contributes one of its faces and the component blocks
/// follow each other around a common face in any order.
inline std::set<std::vector<vertex_id>> searched_orders(const MultiGraph& pattern, const MultiGraph& g,
                                                        std::span<const vertex_id> vm, std::span<const edge_id> em) {
  const auto label = component_labels(g);
  std::map<std::size_t, std::vector<vertex_id>> groups;  // component -> pattern vertices
  for (vertex_id i = 0; i < vm.size(); ++i) {
    groups[label[vm[i]]].push_back(i);
  }
  std::vector<std::vector<std::vector<vertex_id>>> per_group;
  for (const auto& [c, idx] : groups) {
    MultiGraph part = induced_subgraph(pattern, idx);
    std::vector<vertex_id> pvm;
    for (vertex_id i : idx) {
      pvm.push_back(vm[i]);
    }
    std::vector<edge_id> pem;
    for (edge_id e = 0; e < pattern.edge_count(); ++e) {
      if (std::binary_search(idx.begin(), idx.end(), pattern.edges()[e].u)) {
        pem.push_back(em[e]);
      }
    }
    // edge order of induced_subgraph follows the pattern's edge order, as does pem
    Embedding image{part, g, pvm, pem, false};
    std::set<std::vector<vertex_id>> seqs;
    for (const auto& f : faces_containing(image)) {
      for (const auto& o : pattern_orders(f, pvm)) {
        std::vector<vertex_id> global;
        for (vertex_id k : o) {
          global.push_back(idx[k]);
        }
        seqs.insert(std::move(global));
      }
    }
    if (seqs.empty()) {
      return {};
    }
    per_group.emplace_back(seqs.begin(), seqs.end());
  }
  std::size_t combos = 1;
  for (std::size_t k = 2; k <= per_group.size(); ++k) {
    combos *= k;
  }
  for (const auto& s : per_group) {
    combos *= s.size();
  }
  if (combos > 1'000'000) {
    throw missing_parameter("Hp_face: too many face arrangements; supply face subgraphs explicitly");
  }
  std::set<std::vector<vertex_id>> out;
  std::vector<std::size_t> perm(per_group.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<vertex_id> seq;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == perm.size()) {
        out.insert(seq);
        return;
      }
      for (const auto& part : per_group[perm[k]]) {
        seq.insert(seq.end(), part.begin(), part.end());
        rec(k + 1);
        seq.resize(seq.size() - part.size());
      }
    };
    rec(0);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline bool face_condition(const GluingView& s, const GuardParams& params) {
  if (s.pattern.vertex_count() == 0) {
    return true;
  }
  auto orders = [&](const MultiGraph& g, std::span<const vertex_id> vm, std::span<const edge_id> em,
                    const std::optional<Embedding>& given) {
    if (!given) {
      return searched_orders(s.pattern, g, vm, em);
    }
    if (!(given->host == g)) {
      throw invalid_input("Hp_face: face embedding does not target the operand");
    }
    std::set<std::vector<vertex_id>> out;
    if (contains_image(*given, vm, em) && is_face_subgraph(*given)) {
      out = pattern_orders(*given, vm);
    }
    return out;
  };
  if (!is_planar(s.left) || !is_planar(s.right)) {
    return false;
  }
  const auto lo = orders(s.left, s.left_vertices, s.left_edges, params.left_face);
  if (lo.empty()) {
    return false;
  }
  const auto ro = orders(s.right, s.right_vertices, s.right_edges, params.right_face);
  return std::any_of(ro.begin(), ro.end(), [&](const auto& seq) { return lo.count(seq) > 0; });
}

}  // namespace detail

/// Every pattern vertex has even degree in the pattern, and the pattern is nonempty.
inline bool euler_degree_condition(const MultiGraph& pattern) {
  if (pattern.vertex_count() == 0) {
    return false;
  }
  for (vertex_id v = 0; v < pattern.vertex_count(); ++v) {
    if (pattern.degree(v) % 2 != 0) {
      return false;
    }
  }
  return true;
}

inline bool check_guard(const GuardKind& k, const GluingView& s) {
  switch (k.tag) {
    case Guard::Ht:
      return detail::pattern_is_complete(s.pattern);
    case Guard::Hb:
      return detail::chain_parity_consistent(s);
    case Guard::Hg:
      return detail::hamiltonian_condition(s, k.params);
    case Guard::H_empty_euler:
      return s.pattern.vertex_count() > 0 && s.pattern.edge_count() == 0;
    case Guard::simple_preserving:
      return detail::simple_condition(s);
    case Guard::Hs:
      return detail::separating(s);
    case Guard::Hpv_min_sep:
      return detail::induced_on(s.pattern, s.left, s.left_vertices) &&
             detail::induced_on(s.pattern, s.right, s.right_vertices) && detail::minimal_separating(s);
    case Guard::Hp_face:
      return detail::face_condition(s, k.params);
  }
  return false;
}

inline bool check_guard(const GuardKind& k, const GluingSpec& s) {
  validate(s);
  return check_guard(k, view_of(s));
}

inline bool check_guards(std::span<const GuardKind> guards, const GluingView& s) {
  return std::all_of(guards.begin(), guards.end(), [&](const GuardKind& g) { return check_guard(g, s); });
}

// ---------------------------------------------------------------------------
// Planar gluing along faces

struct HpOptions {
  std::optional<std::size_t> identify;  // number of vertex pairs; default: the smaller face
  vertex_id left_start = 0;             // start index within the face graph
  vertex_id right_start = 0;
  TieBreak left_tie = TieBreak::ascending;
  TieBreak right_tie = TieBreak::ascending;
};

/// Glues two planar graphs along face subgraphs: the first k vertices of a
/// db-search on each face are identified in order, and parallel face edges
/// arising between identified vertices are merged pairwise. The result is
/// verified to be planar.
inline MultiGraph hp_glue(const MultiGraph& left, const MultiGraph& right, const Embedding& left_face,
                          const Embedding& right_face, const HpOptions& opt = {}) {
  if (!(left_face.host == left) || !(right_face.host == right)) {
    throw invalid_input("hp_glue: face embeddings do not target the operands");
  }
  validate(left_face);
  validate(right_face);
  if (!is_planar(left) || !is_planar(right)) {
    throw invalid_input("hp_glue: operands must be planar");
  }
  if (!is_face_subgraph(left_face) || !is_face_subgraph(right_face)) {
    throw invalid_input("hp_glue: face embedding is not a maximal face subgraph");
  }
  const ImageGraph lf = image_graph(left_face);
  const ImageGraph rf = image_graph(right_face);
  const std::size_t k = opt.identify.value_or(std::min(lf.graph.vertex_count(), rf.graph.vertex_count()));
  if (k > lf.graph.vertex_count() || k > rf.graph.vertex_count()) {
    throw invalid_input("hp_glue: more identified vertices than face vertices");
  }
  if (opt.left_start >= lf.graph.vertex_count() || opt.right_start >= rf.graph.vertex_count()) {
    throw invalid_input("hp_glue: db-search start outside the face");
  }
  const auto lo = db_search(lf.graph, opt.left_start, opt.left_tie);
  const auto ro = db_search(rf.graph, opt.right_start, opt.right_tie);
  std::vector<vertex_id> lmap(k), rmap(k);
  for (std::size_t i = 0; i < k; ++i) {
    lmap[i] = lf.vertices[lo[i]];
    rmap[i] = rf.vertices[ro[i]];
  }
  // identified edges: face edges between identified vertices, paired by endpoints
  MultiGraph pattern(k);
  std::vector<edge_id> lemap, remap;
  std::vector<bool> lused(left.edge_count(), false), rused(right.edge_count(), false);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      std::vector<edge_id> le, re;
      for (edge_id e : left_face.edge_map) {
        if (left.edges()[e].joins(lmap[i], lmap[j])) le.push_back(e);
      }
      for (edge_id e : right_face.edge_map) {
        if (right.edges()[e].joins(rmap[i], rmap[j])) re.push_back(e);
      }
      std::sort(le.begin(), le.end());
      std::sort(re.begin(), re.end());
      for (std::size_t t = 0; t < std::min(le.size(), re.size()); ++t) {
        pattern.add_edge(i, j);
        lemap.push_back(le[t]);
        remap.push_back(re[t]);
      }
    }
  }
  const auto spec = make_spec(left, right, pattern, lmap, rmap, lemap, remap);
  auto g = glue(spec);
  if (!is_planar(g)) {
    throw internal_inconsistency("hp_glue: result is not planar");
  }
  return g;
}

}  // namespace gluing

#endif  // GLUING_GUARDS_HPP_
