#ifndef GLUING_EMBEDDING_HPP_
#define GLUING_EMBEDDING_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gluing/error.hpp"
#include "gluing/multigraph.hpp"

namespace gluing {

/// Occurrence of `pattern` inside `host`: an injective vertex map plus an
/// injective, incidence-compatible map of edge instances.
struct Embedding {
  MultiGraph pattern;
  MultiGraph host;
  std::vector<vertex_id> vertex_map;
  std::vector<edge_id> edge_map;
  bool induced = false;

  bool covers_host() const noexcept {
    return pattern.vertex_count() == host.vertex_count() && pattern.edge_count() == host.edge_count();
  }
};

namespace detail {

/// Host edge ids bucketed by unordered endpoint pair.
class EdgeBuckets {
 public:
  explicit EdgeBuckets(const MultiGraph& g) : n_(g.vertex_count()), cells_(n_ * n_) {
    for (edge_id e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edges()[e];
      cells_[ed.u * n_ + ed.v].push_back(e);
    }
  }

  const std::vector<edge_id>& at(vertex_id a, vertex_id b) const {
    return a <= b ? cells_[a * n_ + b] : cells_[b * n_ + a];
  }

 private:
  std::size_t n_;
  std::vector<std::vector<edge_id>> cells_;
};

}  // namespace detail

/// Calls `f(vertex_map)` for every injective vertex map under which each
/// pattern pair has at most (exactly, if `induced`) the host multiplicity.
/// Maps arrive in lexicographic order. `f` returns false to stop early.
template <class F>
void for_each_vertex_map(const MultiGraph& pattern, const MultiGraph& host, bool induced, F&& f) {
  const std::size_t p = pattern.vertex_count();
  const std::size_t h = host.vertex_count();
  if (p > h) {
    return;
  }
  const MultiplicityMatrix pm(pattern);
  const MultiplicityMatrix hm(host);
  std::vector<vertex_id> map(p);
  std::vector<bool> used(h, false);
  bool stop = false;
  auto fits = [&](std::size_t pa, std::size_t ha) { return induced ? pa == ha : pa <= ha; };
  std::function<void(vertex_id)> extend = [&](vertex_id i) {
    if (i == p) {
      stop = !f(std::span<const vertex_id>(map));
      return;
    }
    for (vertex_id w = 0; w < h && !stop; ++w) {
      if (used[w] || !fits(pm(i, i), hm(w, w))) {
        continue;
      }
      bool ok = true;
      for (vertex_id j = 0; j < i && ok; ++j) {
        ok = fits(pm(j, i), hm(map[j], w));
      }
      if (!ok) {
        continue;
      }
      used[w] = true;
      map[i] = w;
      extend(i + 1);
      used[w] = false;
    }
  };
  extend(0);
}

/// Smallest edge map compatible with `vertex_map`: each pattern edge takes the
/// lowest unused host edge between the image endpoints. Empty optional if none.
inline std::optional<std::vector<edge_id>> first_fit_edge_map(const MultiGraph& pattern, const MultiGraph& host,
                                                              std::span<const vertex_id> vertex_map) {
  const detail::EdgeBuckets buckets(host);
  std::vector<edge_id> out(pattern.edge_count());
  std::vector<bool> used(host.edge_count(), false);
  for (edge_id e = 0; e < pattern.edge_count(); ++e) {
    const Edge& pe = pattern.edges()[e];
    bool found = false;
    for (edge_id he : buckets.at(vertex_map[pe.u], vertex_map[pe.v])) {
      if (!used[he]) {
        used[he] = true;
        out[e] = he;
        found = true;
        break;
      }
    }
    if (!found) {
      return std::nullopt;
    }
  }
  return out;
}

/// Calls `f(edge_map)` for every injective edge map compatible with `vertex_map`, in lexicographic order.
template <class F>
void for_each_edge_map(const MultiGraph& pattern, const MultiGraph& host, std::span<const vertex_id> vertex_map, F&& f) {
  const detail::EdgeBuckets buckets(host);
  const std::size_t q = pattern.edge_count();
  std::vector<edge_id> map(q);
  std::vector<bool> used(host.edge_count(), false);
  bool stop = false;
  std::function<void(edge_id)> extend = [&](edge_id e) {
    if (e == q) {
      stop = !f(std::span<const edge_id>(map));
      return;
    }
    const Edge& pe = pattern.edges()[e];
    for (edge_id he : buckets.at(vertex_map[pe.u], vertex_map[pe.v])) {
      if (stop) {
        return;
      }
      if (used[he]) {
        continue;
      }
      used[he] = true;
      map[e] = he;
      extend(e + 1);
      used[he] = false;
    }
  };
  extend(0);
}

enum class EdgeMapMode { all, first_fit };

/// All occurrences of `pattern` in `host`, ordered by vertex map then edge map.
/// With EdgeMapMode::first_fit only one edge map per vertex map is produced;
/// the others differ by permuting parallel edges and give isomorphic gluings.
inline std::vector<Embedding> enumerate_embeddings(const MultiGraph& pattern, const MultiGraph& host, bool induced,
                                                   EdgeMapMode mode = EdgeMapMode::all) {
  std::vector<Embedding> out;
  for_each_vertex_map(pattern, host, induced, [&](std::span<const vertex_id> vm) {
    auto push = [&](std::span<const edge_id> em) {
      out.push_back(Embedding{pattern, host, {vm.begin(), vm.end()}, {em.begin(), em.end()}, induced});
      return true;
    };
    if (mode == EdgeMapMode::first_fit) {
      if (auto em = first_fit_edge_map(pattern, host, vm)) {
        push(*em);
      }
    } else {
      for_each_edge_map(pattern, host, vm, push);
    }
    return true;
  });
  return out;
}

/// Throws invalid_input unless `emb` satisfies the embedding invariants.
inline void validate(const Embedding& emb) {
  const auto& p = emb.pattern;
  const auto& h = emb.host;
  if (emb.vertex_map.size() != p.vertex_count() || emb.edge_map.size() != p.edge_count()) {
    throw invalid_input("embedding map sizes do not match the pattern");
  }
  std::vector<bool> vseen(h.vertex_count(), false);
  for (vertex_id v : emb.vertex_map) {
    if (v >= h.vertex_count() || vseen[v]) {
      throw invalid_input("embedding vertex map is not injective into the host");
    }
    vseen[v] = true;
  }
  std::vector<bool> eseen(h.edge_count(), false);
  for (edge_id e = 0; e < p.edge_count(); ++e) {
    const edge_id he = emb.edge_map[e];
    if (he >= h.edge_count() || eseen[he]) {
      throw invalid_input("embedding edge map is not injective into the host");
    }
    eseen[he] = true;
    const Edge& pe = p.edges()[e];
    if (!h.edges()[he].joins(emb.vertex_map[pe.u], emb.vertex_map[pe.v])) {
      throw invalid_input("embedding edge map is not incidence-compatible with the vertex map");
    }
  }
  if (emb.induced) {
    const MultiplicityMatrix pm(p);
    const MultiplicityMatrix hm(h);
    for (vertex_id a = 0; a < p.vertex_count(); ++a) {
      for (vertex_id b = a; b < p.vertex_count(); ++b) {
        if (pm(a, b) != hm(emb.vertex_map[a], emb.vertex_map[b])) {
          throw invalid_input("embedding flagged induced but host has extra edges between image vertices");
        }
      }
    }
  }
}

inline bool is_valid(const Embedding& emb) {
  try {
    validate(emb);
    return true;
  } catch (const invalid_input&) {
    return false;
  }
}

/// Builds an embedding from explicit maps. An empty `edge_map` with a nonempty
/// pattern edge set is completed by first_fit_edge_map.
inline Embedding make_embedding(const MultiGraph& pattern, const MultiGraph& host, std::vector<vertex_id> vertex_map,
                                std::vector<edge_id> edge_map = {}, bool induced = false) {
  if (edge_map.empty() && pattern.edge_count() > 0) {
    if (vertex_map.size() != pattern.vertex_count()) {
      throw invalid_input("vertex map size does not match the pattern");
    }
    for (vertex_id v : vertex_map) {
      if (v >= host.vertex_count()) {
        throw invalid_input("vertex map entry out of range");
      }
    }
    auto ff = first_fit_edge_map(pattern, host, vertex_map);
    if (!ff) {
      throw invalid_input("host lacks edges required by the pattern under this vertex map");
    }
    edge_map = std::move(*ff);
  }
  Embedding emb{pattern, host, std::move(vertex_map), std::move(edge_map), induced};
  validate(emb);
  return emb;
}

}  // namespace gluing

#endif  // GLUING_EMBEDDING_HPP_
