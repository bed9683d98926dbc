#ifndef GLUING_CANONICAL_HPP_
#define GLUING_CANONICAL_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gluing/error.hpp"
#include "gluing/multigraph.hpp"

namespace gluing {

/// Largest vertex count accepted by canonical labeling and the exhaustive searches built on it.
inline constexpr std::size_t default_vertex_cap = 12;

/// Label-independent serialization of an isomorphism class.
///
/// Layout: vertex count (1 byte), edge count (2 bytes, big-endian), then the
/// upper triangle of the canonically ordered multiplicity matrix column by
/// column, one byte per cell. Byte order therefore sorts by (n, m, matrix).
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

  const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
  std::size_t vertex_count() const noexcept { return bytes_.empty() ? 0 : bytes_[0]; }
  std::size_t edge_count() const noexcept {
    return bytes_.size() < 3 ? 0 : (static_cast<std::size_t>(bytes_[1]) << 8) | bytes_[2];
  }

  std::string hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes_.size() * 2);
    for (std::uint8_t b : bytes_) {
      out.push_back(digits[b >> 4]);
      out.push_back(digits[b & 0xF]);
    }
    return out;
  }

  static CanonicalCode from_hex(std::string_view text) {
    if (text.size() % 2 != 0) {
      throw parse_error("odd-length hex code");
    }
    auto nibble = [](char c) -> int {
      if (c >= '0' && c <= '9') return c - '0';
      if (c >= 'a' && c <= 'f') return c - 'a' + 10;
      if (c >= 'A' && c <= 'F') return c - 'A' + 10;
      throw parse_error(std::string("bad hex digit '") + c + "'");
    };
    std::vector<std::uint8_t> bytes(text.size() / 2);
    for (std::size_t i = 0; i < bytes.size(); ++i) {
      bytes[i] = static_cast<std::uint8_t>(nibble(text[2 * i]) * 16 + nibble(text[2 * i + 1]));
    }
    return CanonicalCode(std::move(bytes));
  }

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode& a, const CanonicalCode& b) { return a.bytes_ <=> b.bytes_; }

 private:
  std::vector<std::uint8_t> bytes_;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (std::uint8_t b : c.bytes()) {
      h = (h ^ b) * 1099511628211ULL;
    }
    return h;
  }
};

namespace detail {

/// Colour refinement on the multiplicity matrix. The resulting colours are
/// label-invariant (ranks of sorted signatures) and constant on automorphism orbits.
inline std::vector<std::size_t> refine_colors(const MultiplicityMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> color(n, 0);
  std::size_t classes = n == 0 ? 0 : 1;
  using signature = std::vector<std::size_t>;
  for (;;) {
    std::vector<signature> sig(n);
    for (vertex_id v = 0; v < n; ++v) {
      signature s{color[v], a(v, v)};
      std::vector<std::pair<std::size_t, std::size_t>> nbr;
      for (vertex_id u = 0; u < n; ++u) {
        if (u != v && a(v, u) > 0) {
          nbr.emplace_back(color[u], a(v, u));
        }
      }
      std::sort(nbr.begin(), nbr.end());
      for (auto [c, m] : nbr) {
        s.push_back(c);
        s.push_back(m);
      }
      sig[v] = std::move(s);
    }
    std::vector<signature> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (vertex_id v = 0; v < n; ++v) {
      color[v] = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    }
    if (distinct.size() == classes) {
      return color;
    }
    classes = distinct.size();
  }
}

/// Twin classes: u ~ v when swapping u and v is an automorphism (equal rows outside {u, v}, equal loops).
inline std::vector<std::size_t> twin_representatives(const MultiplicityMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> rep(n);
  for (vertex_id v = 0; v < n; ++v) {
    rep[v] = v;
    for (vertex_id u = 0; u < v; ++u) {
      if (rep[u] != u || a(u, u) != a(v, v)) {
        continue;
      }
      bool twins = true;
      for (vertex_id w = 0; w < n && twins; ++w) {
        if (w != u && w != v && a(u, w) != a(v, w)) {
          twins = false;
        }
      }
      if (twins) {
        rep[v] = u;
        break;
      }
    }
  }
  return rep;
}

/// Branch-and-bound search for the lexicographically largest column-wise
/// upper-triangle sequence over all vertex orders that list colour classes in
/// ascending colour order. Unplaced twins are interchangeable, so only one per
/// twin class is tried at each position.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const MultiplicityMatrix& a)
      : a_(a),
        n_(a.size()),
        color_(refine_colors(a)),
        twin_(twin_representatives(a)),
        placed_(n_, false),
        parent_state_(n_ + 1, state::equal) {
    slot_color_ = color_;
    std::sort(slot_color_.begin(), slot_color_.end());
    for (vertex_id u = 0; u < n_; ++u) {
      for (vertex_id v = u; v < n_; ++v) {
        if (a(u, v) > 255) {
          throw cap_exceeded("edge multiplicity above 255 is not supported by canonical labeling");
        }
      }
    }
    current_.reserve(n_ * (n_ + 1) / 2);
    order_.reserve(n_);
  }

  std::vector<std::uint8_t> run() {
    search(0);
    return best_;
  }

  const std::vector<vertex_id>& best_order() const noexcept { return best_order_; }

 private:
  enum class state { equal, greater };

  void search(std::size_t k) {
    if (k == n_) {
      if (!have_best_ || parent_state_[k] == state::greater) {
        best_ = current_;
        best_order_ = order_;
        have_best_ = true;
        ++version_;
      }
      return;
    }
    const std::size_t want = slot_color_[k];
    const std::size_t offset = k * (k + 1) / 2;
    for (vertex_id v = 0; v < n_; ++v) {
      if (placed_[v] || color_[v] != want || !first_unplaced_twin(v)) {
        continue;
      }
      const std::size_t seen = version_;
      const state before = parent_state_[k];
      for (std::size_t i = 0; i < k; ++i) {
        current_.push_back(static_cast<std::uint8_t>(a_(order_[i], v)));
      }
      current_.push_back(static_cast<std::uint8_t>(a_(v, v)));
      state next = state::greater;
      if (have_best_ && before == state::equal) {
        int cmp = 0;
        for (std::size_t i = offset; i <= offset + k && cmp == 0; ++i) {
          cmp = current_[i] < best_[i] ? -1 : (current_[i] > best_[i] ? 1 : 0);
        }
        if (cmp < 0) {
          current_.resize(offset);
          continue;
        }
        next = cmp > 0 ? state::greater : state::equal;
      }
      parent_state_[k + 1] = next;
      placed_[v] = true;
      order_.push_back(v);
      search(k + 1);
      order_.pop_back();
      placed_[v] = false;
      current_.resize(offset);
      if (version_ != seen) {
        // best was replaced by a leaf below this node, so this prefix now equals best's.
        parent_state_[k] = state::equal;
      }
    }
  }

  bool first_unplaced_twin(vertex_id v) const {
    for (vertex_id u = 0; u < v; ++u) {
      if (!placed_[u] && twin_[u] == twin_[v]) {
        return false;
      }
    }
    return true;
  }

  const MultiplicityMatrix& a_;
  std::size_t n_;
  std::vector<std::size_t> color_;
  std::vector<std::size_t> slot_color_;
  std::vector<std::size_t> twin_;
  std::vector<bool> placed_;
  std::vector<state> parent_state_;
  std::vector<vertex_id> order_;
  std::vector<std::uint8_t> current_;
  std::vector<std::uint8_t> best_;
  std::vector<vertex_id> best_order_;
  bool have_best_ = false;
  std::size_t version_ = 0;
};

}  // namespace detail

/// Canonical code of `g`. Equal codes if and only if the graphs are isomorphic.
inline CanonicalCode canonical_form(const MultiGraph& g, std::size_t vertex_cap = default_vertex_cap) {
  if (g.vertex_count() > vertex_cap || g.vertex_count() > 255) {
    throw cap_exceeded("canonical_form: " + std::to_string(g.vertex_count()) + " vertices exceed the cap of " +
                       std::to_string(vertex_cap));
  }
  if (g.edge_count() > 0xFFFF) {
    throw cap_exceeded("canonical_form: too many edges");
  }
  const MultiplicityMatrix a(g);
  std::vector<std::uint8_t> bytes{static_cast<std::uint8_t>(g.vertex_count()),
                                  static_cast<std::uint8_t>(g.edge_count() >> 8),
                                  static_cast<std::uint8_t>(g.edge_count() & 0xFF)};
  const auto body = detail::CanonicalSearch(a).run();
  bytes.insert(bytes.end(), body.begin(), body.end());
  return CanonicalCode(std::move(bytes));
}

/// Canonical order: position i of the result holds the vertex of `g` placed i-th.
inline std::vector<vertex_id> canonical_order(const MultiGraph& g, std::size_t vertex_cap = default_vertex_cap) {
  if (g.vertex_count() > vertex_cap) {
    throw cap_exceeded("canonical_order: vertex cap exceeded");
  }
  const MultiplicityMatrix a(g);
  detail::CanonicalSearch search(a);
  search.run();
  return search.best_order();
}

/// Rebuilds a representative graph from a canonical code.
inline MultiGraph graph_from_code(const CanonicalCode& code) {
  const auto& b = code.bytes();
  if (b.size() < 3) {
    throw parse_error("canonical code too short");
  }
  const std::size_t n = b[0];
  if (b.size() != 3 + n * (n + 1) / 2) {
    throw parse_error("canonical code has the wrong length");
  }
  MultiGraph g(n);
  std::size_t pos = 3;
  for (vertex_id k = 0; k < n; ++k) {
    for (vertex_id i = 0; i <= k; ++i) {
      for (std::uint8_t c = 0; c < b[pos]; ++c) {
        g.add_edge(i, k);
      }
      ++pos;
    }
  }
  if (g.edge_count() != code.edge_count()) {
    throw parse_error("canonical code edge count mismatch");
  }
  return g;
}

inline bool is_isomorphic(const MultiGraph& a, const MultiGraph& b, std::size_t vertex_cap = default_vertex_cap) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
    if (a.vertex_count() > vertex_cap || b.vertex_count() > vertex_cap) {
      throw cap_exceeded("is_isomorphic: vertex cap exceeded");
    }
    return false;
  }
  return canonical_form(a, vertex_cap) == canonical_form(b, vertex_cap);
}

/// All automorphisms of `g` as vertex permutations (perm[v] is the image of v).
inline std::vector<std::vector<vertex_id>> automorphisms(const MultiGraph& g, std::size_t vertex_cap = 10) {
  const std::size_t n = g.vertex_count();
  if (n > vertex_cap) {
    throw cap_exceeded("automorphisms: vertex cap exceeded");
  }
  const MultiplicityMatrix a(g);
  const auto color = detail::refine_colors(a);
  std::vector<std::vector<vertex_id>> out;
  std::vector<vertex_id> perm(n);
  std::vector<bool> used(n, false);
  std::function<void(vertex_id)> extend = [&](vertex_id v) {
    if (v == n) {
      out.push_back(perm);
      return;
    }
    for (vertex_id w = 0; w < n; ++w) {
      if (used[w] || color[w] != color[v] || a(w, w) != a(v, v)) {
        continue;
      }
      bool ok = true;
      for (vertex_id u = 0; u < v && ok; ++u) {
        ok = a(perm[u], w) == a(u, v);
      }
      if (!ok) {
        continue;
      }
      used[w] = true;
      perm[v] = w;
      extend(v + 1);
      used[w] = false;
    }
  };
  extend(0);
  return out;
}

}  // namespace gluing

#endif  // GLUING_CANONICAL_HPP_
