#ifndef GLUING_ENUMERATE_HPP_
#define GLUING_ENUMERATE_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

#include "gluing/canonical.hpp"
#include "gluing/error.hpp"
#include "gluing/multigraph.hpp"

namespace gluing {

struct CodedGraph {
  CanonicalCode code;
  MultiGraph graph;
};

/// One representative per isomorphism class with n <= max_n and m <= max_m,
/// sorted by canonical code (and hence by (n, m, code)). Includes the null graph.
///
/// Built by edge augmentation: every class with m edges arises from some class
/// with m - 1 edges by adding one edge, so extending each stored representative
/// by every possible pair reaches all classes.
inline std::vector<CodedGraph> enumerate_all_coded(std::size_t max_n, std::size_t max_m, bool simple_only) {
  if (max_n > default_vertex_cap || max_m > default_vertex_cap * default_vertex_cap) {
    throw cap_exceeded("enumerate_all_graphs: bound exceeds the caps");
  }
  std::vector<CodedGraph> out;
  for (std::size_t n = 0; n <= max_n; ++n) {
    std::map<CanonicalCode, MultiGraph> level;
    level.emplace(canonical_form(MultiGraph(n)), MultiGraph(n));
    for (std::size_t m = 0; m <= max_m; ++m) {
      for (auto& [code, g] : level) {
        out.push_back({code, g});
      }
      if (m == max_m) {
        break;
      }
      std::map<CanonicalCode, MultiGraph> next;
      for (const auto& [code, g] : level) {
        const MultiplicityMatrix a(g);
        for (vertex_id u = 0; u < n; ++u) {
          for (vertex_id v = u; v < n; ++v) {
            if (simple_only && (u == v || a(u, v) > 0)) {
              continue;
            }
            MultiGraph h = g;
            h.add_edge(u, v);
            auto c = canonical_form(h);
            next.try_emplace(std::move(c), std::move(h));
          }
        }
      }
      if (next.empty()) {
        break;
      }
      level = std::move(next);
    }
  }
  std::sort(out.begin(), out.end(), [](const CodedGraph& x, const CodedGraph& y) { return x.code < y.code; });
  return out;
}

inline std::vector<MultiGraph> enumerate_all_graphs(std::size_t max_n, std::size_t max_m, bool simple_only) {
  std::vector<MultiGraph> out;
  for (auto& cg : enumerate_all_coded(max_n, max_m, simple_only)) {
    out.push_back(std::move(cg.graph));
  }
  return out;
}

}  // namespace gluing

#endif  // GLUING_ENUMERATE_HPP_
