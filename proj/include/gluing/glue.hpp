#ifndef GLUING_GLUE_HPP_
#define GLUING_GLUE_HPP_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "gluing/canonical.hpp"
#include "gluing/embedding.hpp"
#include "gluing/error.hpp"
#include "gluing/multigraph.hpp"

namespace gluing {

/// Complete input of one gluing (left o right) pattern.
struct GluingSpec {
  MultiGraph left;
  MultiGraph right;
  MultiGraph pattern;
  Embedding left_emb;
  Embedding right_emb;
};

/// Non-owning form of a spec for hot loops; maps must already be valid.
struct GluingView {
  const MultiGraph& left;
  const MultiGraph& right;
  const MultiGraph& pattern;
  std::span<const vertex_id> left_vertices;
  std::span<const edge_id> left_edges;
  std::span<const vertex_id> right_vertices;
  std::span<const edge_id> right_edges;
};

inline GluingView view_of(const GluingSpec& s) {
  return {s.left,
          s.right,
          s.pattern,
          s.left_emb.vertex_map,
          s.left_emb.edge_map,
          s.right_emb.vertex_map,
          s.right_emb.edge_map};
}

/// Glued graph plus the maps of both operands into it.
struct GluingResult {
  MultiGraph graph;
  std::vector<vertex_id> left_vertex;
  std::vector<edge_id> left_edge;
  std::vector<vertex_id> right_vertex;
  std::vector<edge_id> right_edge;
};

/// Left vertices and edges keep their indices. Unmatched right vertices follow
/// in ascending order, then right edges that are not identified.
inline GluingResult glue_with_maps(const GluingView& s) {
  const std::size_t nl = s.left.vertex_count();
  const std::size_t nr = s.right.vertex_count();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  GluingResult r;
  r.right_vertex.assign(nr, unset);
  for (std::size_t i = 0; i < s.right_vertices.size(); ++i) {
    r.right_vertex[s.right_vertices[i]] = s.left_vertices[i];
  }
  std::size_t next = nl;
  for (vertex_id v = 0; v < nr; ++v) {
    if (r.right_vertex[v] == unset) {
      r.right_vertex[v] = next++;
    }
  }
  r.graph = MultiGraph(next, std::vector<Edge>(s.left.edges().begin(), s.left.edges().end()));
  r.left_vertex.resize(nl);
  for (vertex_id v = 0; v < nl; ++v) {
    r.left_vertex[v] = v;
  }
  r.left_edge.resize(s.left.edge_count());
  for (edge_id e = 0; e < s.left.edge_count(); ++e) {
    r.left_edge[e] = e;
  }
  r.right_edge.assign(s.right.edge_count(), unset);
  for (std::size_t i = 0; i < s.right_edges.size(); ++i) {
    r.right_edge[s.right_edges[i]] = s.left_edges[i];
  }
  for (edge_id e = 0; e < s.right.edge_count(); ++e) {
    if (r.right_edge[e] == unset) {
      const Edge& ed = s.right.edges()[e];
      r.right_edge[e] = r.graph.add_edge(r.right_vertex[ed.u], r.right_vertex[ed.v]);
    }
  }
  return r;
}

/// Throws invalid_input unless both embeddings are valid occurrences of the spec's pattern in its operands.
inline void validate(const GluingSpec& s) {
  if (!(s.left_emb.pattern == s.pattern) || !(s.right_emb.pattern == s.pattern)) {
    throw invalid_input("gluing embeddings use a different pattern than the spec");
  }
  if (!(s.left_emb.host == s.left) || !(s.right_emb.host == s.right)) {
    throw invalid_input("gluing embeddings do not target the spec's operands");
  }
  validate(s.left_emb);
  validate(s.right_emb);
}

inline MultiGraph glue(const GluingSpec& s) {
  validate(s);
  return glue_with_maps(view_of(s)).graph;
}

/// Result together with embeddings of the left and right operands into it.
struct GluedWithEmbeddings {
  MultiGraph graph;
  Embedding left;
  Embedding right;
};

inline GluedWithEmbeddings glue_with_embeddings(const GluingSpec& s) {
  validate(s);
  auto r = glue_with_maps(view_of(s));
  Embedding le{s.left, r.graph, r.left_vertex, r.left_edge, false};
  Embedding re{s.right, r.graph, r.right_vertex, r.right_edge, false};
  return {std::move(r.graph), std::move(le), std::move(re)};
}

/// Builds a validated spec from explicit vertex maps; empty edge maps are completed first-fit.
inline GluingSpec make_spec(MultiGraph left, MultiGraph right, MultiGraph pattern, std::vector<vertex_id> lmap,
                            std::vector<vertex_id> rmap, std::vector<edge_id> lemap = {},
                            std::vector<edge_id> remap = {}) {
  auto le = make_embedding(pattern, left, std::move(lmap), std::move(lemap));
  auto re = make_embedding(pattern, right, std::move(rmap), std::move(remap));
  GluingSpec s{std::move(left), std::move(right), std::move(pattern), std::move(le), std::move(re)};
  return s;
}

inline GluingSpec swapped(const GluingSpec& s) { return {s.right, s.left, s.pattern, s.right_emb, s.left_emb}; }

/// Trivial when the identified subgraph is an entire operand.
inline bool is_trivial(const GluingView& s) {
  const auto covers = [&](const MultiGraph& g) {
    return s.pattern.vertex_count() == g.vertex_count() && s.pattern.edge_count() == g.edge_count();
  };
  return covers(s.left) || covers(s.right);
}

inline bool is_trivial(const GluingSpec& s) { return is_trivial(view_of(s)); }

/// The gluing type: canonical code of the pattern.
inline CanonicalCode classify_gluing(const GluingSpec& s) { return canonical_form(s.pattern); }

}  // namespace gluing

#endif  // GLUING_GLUE_HPP_
