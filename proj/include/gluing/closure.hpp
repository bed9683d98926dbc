#ifndef GLUING_CLOSURE_HPP_
#define GLUING_CLOSURE_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "gluing/canonical.hpp"
#include "gluing/embedding.hpp"
#include "gluing/enumerate.hpp"
#include "gluing/error.hpp"
#include "gluing/glue.hpp"
#include "gluing/guards.hpp"
#include "gluing/multigraph.hpp"
#include "gluing/registry.hpp"

namespace gluing {

/// Largest bound accepted by the closure routines.
inline constexpr std::size_t closure_vertex_cap = 10;

struct ClosureReport {
  std::vector<CanonicalCode> members;  // sorted
  std::size_t max_n = 0;
  std::size_t max_m = 0;
  std::size_t iterations = 0;
  std::vector<CanonicalCode> closure_not_predicate;
  std::vector<CanonicalCode> predicate_not_closure;
  std::vector<std::string> warnings;

  bool contains(const CanonicalCode& c) const { return std::binary_search(members.begin(), members.end(), c); }
  std::size_t mismatches() const { return closure_not_predicate.size() + predicate_not_closure.size(); }
};

/// `closure n<=N m<=M count=K`, one hex code per line, then the mismatch sections.
inline void write_report(std::ostream& out, const ClosureReport& r) {
  out << "closure n<=" << r.max_n << " m<=" << r.max_m << " count=" << r.members.size() << "\n";
  for (const auto& c : r.members) {
    out << c.hex() << "\n";
  }
  out << "in_closure_not_predicate " << r.closure_not_predicate.size() << "\n";
  for (const auto& c : r.closure_not_predicate) {
    out << c.hex() << "\n";
  }
  out << "predicate_not_in_closure " << r.predicate_not_closure.size() << "\n";
  for (const auto& c : r.predicate_not_closure) {
    out << c.hex() << "\n";
  }
}

/// Gluing rules shared by the closure routines.
struct GluingRules {
  std::vector<MultiGraph> patterns;
  std::vector<GuardKind> guards;
  bool induced = false;
};

namespace detail {

/// A graph with the occurrences of every pattern, reduced modulo its automorphisms.
struct Operand {
  MultiGraph graph;
  CanonicalCode code;
  std::vector<std::vector<Embedding>> occurrences;  // per pattern
};

inline Operand make_operand(MultiGraph g, CanonicalCode code, const GluingRules& rules) {
  Operand op{std::move(g), std::move(code), {}};
  const auto auts = automorphisms(op.graph, closure_vertex_cap);
  for (const auto& p : rules.patterns) {
    std::vector<Embedding> occ;
    for_each_vertex_map(p, op.graph, rules.induced, [&](std::span<const vertex_id> vm) {
      // keep the lexicographically smallest map of each automorphism orbit
      for (const auto& a : auts) {
        for (std::size_t i = 0; i < vm.size(); ++i) {
          if (a[vm[i]] != vm[i]) {
            if (a[vm[i]] < vm[i]) {
              return true;
            }
            break;
          }
        }
      }
      if (auto em = first_fit_edge_map(p, op.graph, vm)) {
        occ.push_back(Embedding{p, op.graph, {vm.begin(), vm.end()}, std::move(*em), rules.induced});
      }
      return true;
    });
    op.occurrences.push_back(std::move(occ));
  }
  return op;
}

/// Calls `f(result)` for every admissible nontrivial gluing of `a` and `b` whose result fits the bound.
template <class F>
void for_each_gluing(const Operand& a, const Operand& b, const GluingRules& rules, std::size_t max_n,
                     std::size_t max_m, F&& f) {
  const std::size_t na = a.graph.vertex_count(), ma = a.graph.edge_count();
  const std::size_t nb = b.graph.vertex_count(), mb = b.graph.edge_count();
  for (std::size_t k = 0; k < rules.patterns.size(); ++k) {
    const MultiGraph& p = rules.patterns[k];
    const std::size_t np = p.vertex_count(), mp = p.edge_count();
    if (np > std::min(na, nb) || mp > std::min(ma, mb) || na + nb - np > max_n || ma + mb - mp > max_m) {
      continue;
    }
    if ((np == na && mp == ma) || (np == nb && mp == mb)) {
      continue;  // trivial: reproduces an operand
    }
    for (const auto& le : a.occurrences[k]) {
      for (const auto& re : b.occurrences[k]) {
        const GluingView v{a.graph, b.graph, p, le.vertex_map, le.edge_map, re.vertex_map, re.edge_map};
        if (!check_guards(rules.guards, v)) {
          continue;
        }
        f(glue_with_maps(v).graph);
      }
    }
  }
}

/// Runs `work(i, out)` for i in [0, count) on up to `jobs` threads; per-thread maps are merged.
template <class Work>
std::map<CanonicalCode, MultiGraph> parallel_collect(std::size_t count, std::size_t jobs, Work work) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  std::vector<std::map<CanonicalCode, MultiGraph>> parts(jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      work(i, parts[0]);
    }
  } else {
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(jobs);
    for (std::size_t t = 0; t < jobs; ++t) {
      threads.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < count; i += jobs) {
            work(i, parts[t]);
          }
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : threads) {
      th.join();
    }
    for (auto& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
  }
  for (std::size_t t = 1; t < jobs; ++t) {
    parts[0].merge(parts[t]);
  }
  return std::move(parts[0]);
}

inline void check_bound(std::size_t max_n, std::size_t max_m) {
  if (max_n > closure_vertex_cap || max_m > 2 * closure_vertex_cap) {
    throw cap_exceeded("closure bound exceeds n<=" + std::to_string(closure_vertex_cap) +
                       ", m<=" + std::to_string(2 * closure_vertex_cap));
  }
}

}  // namespace detail

inline GluingRules rules_of(const ClassDescriptor& d, std::size_t max_n, std::size_t max_m) {
  return {d.operational.instantiate(max_n, max_m), d.guards, d.induced};
}

/// Least set containing `basis` and closed under the admissible gluings whose results fit the bound.
/// With `canonical_only` every gluing has a basis graph as one operand.
inline ClosureReport closure_from(const std::vector<MultiGraph>& basis, const GluingRules& rules, std::size_t max_n,
                                  std::size_t max_m, bool canonical_only, std::size_t jobs = 1) {
  detail::check_bound(max_n, max_m);
  std::vector<detail::Operand> members;
  std::map<CanonicalCode, std::size_t> index;
  for (const auto& g : basis) {
    if (g.vertex_count() > max_n || g.edge_count() > max_m) {
      continue;
    }
    auto c = canonical_form(g);
    if (index.count(c)) {
      continue;
    }
    index.emplace(c, members.size());
    members.push_back(detail::make_operand(g, std::move(c), rules));
  }
  if (members.empty()) {
    throw invalid_input("closure: elemental basis is empty within the bound");
  }
  const std::size_t basis_size = members.size();
  ClosureReport r;
  r.max_n = max_n;
  r.max_m = max_m;
  std::size_t frontier = 0;
  while (frontier < members.size()) {
    const std::size_t end = members.size();
    ++r.iterations;
    auto found = detail::parallel_collect(end - frontier, jobs, [&](std::size_t t, auto& out) {
      const std::size_t i = frontier + t;
      const std::size_t partners = canonical_only ? basis_size : end;
      for (std::size_t j = 0; j < partners; ++j) {
        if (j >= frontier && j > i) {
          continue;  // unordered pairs within the frontier
        }
        detail::for_each_gluing(members[i], members[j], rules, max_n, max_m, [&](MultiGraph g) {
          auto c = canonical_form(g);
          if (!index.count(c)) {
            out.try_emplace(std::move(c), std::move(g));
          }
        });
      }
    });
    frontier = end;
    for (auto& [c, g] : found) {
      index.emplace(c, members.size());
      members.push_back(detail::make_operand(std::move(g), c, rules));
    }
  }
  for (const auto& [c, i] : index) {
    r.members.push_back(c);
  }
  return r;
}

inline ClosureReport closure_fixpoint(const ClassDescriptor& d, std::size_t max_n, std::size_t max_m,
                                      bool canonical_only, std::size_t jobs = 1) {
  return closure_from(d.elemental.instantiate(max_n, max_m), rules_of(d, max_n, max_m), max_n, max_m, canonical_only,
                      jobs);
}

/// Closure plus comparison against the descriptor's predicate over all graphs within the bound.
inline ClosureReport verify_descriptor(const ClassDescriptor& d, std::size_t max_n, std::size_t max_m,
                                       std::size_t jobs = 1) {
  auto r = closure_fixpoint(d, max_n, max_m, false, jobs);
  std::set<CanonicalCode> expected;
  for (const auto& cg : enumerate_all_coded(max_n, max_m, false)) {
    if (d.predicate(cg.graph)) {
      expected.insert(cg.code);
    }
  }
  for (const auto& c : r.members) {
    if (!expected.count(c)) {
      r.closure_not_predicate.push_back(c);
    }
  }
  for (const auto& c : expected) {
    if (!r.contains(c)) {
      r.predicate_not_closure.push_back(c);
    }
  }
  return r;
}

inline ClosureReport verify_class(int id, std::size_t max_n, std::size_t max_m, std::size_t jobs = 1) {
  return verify_descriptor(get_descriptor(id), max_n, max_m, jobs);
}

struct BasisReport {
  std::vector<CanonicalCode> candidates;  // sorted
  std::vector<std::string> warnings;
};

/// Class members within the bound (by predicate) that no nontrivial admissible gluing of two
/// members produces. The elemental basis given in `d` is ignored.
inline BasisReport find_elemental_basis(const ClassDescriptor& d, std::size_t max_n, std::size_t max_m,
                                        std::size_t jobs = 1) {
  detail::check_bound(max_n, max_m);
  const GluingRules rules = rules_of(d, max_n, max_m);
  std::vector<detail::Operand> members;
  std::set<CanonicalCode> codes;
  for (auto& cg : enumerate_all_coded(max_n, max_m, false)) {
    if (d.predicate(cg.graph)) {
      codes.insert(cg.code);
      members.push_back(detail::make_operand(std::move(cg.graph), std::move(cg.code), rules));
    }
  }
  auto produced = detail::parallel_collect(members.size(), jobs, [&](std::size_t i, auto& out) {
    for (std::size_t j = 0; j <= i; ++j) {
      detail::for_each_gluing(members[i], members[j], rules, max_n, max_m, [&](MultiGraph g) {
        out.try_emplace(canonical_form(g), std::move(g));
      });
    }
  });
  BasisReport r;
  std::size_t outside = 0;
  for (const auto& [c, g] : produced) {
    outside += !codes.count(c);
  }
  for (const auto& c : codes) {
    if (!produced.count(c)) {
      r.candidates.push_back(c);
      if (c.vertex_count() == max_n || c.edge_count() == max_m) {
        r.warnings.push_back("candidate " + c.hex() + " lies on the bound; the basis may continue beyond it");
      }
    }
  }
  if (outside > 0) {
    r.warnings.push_back(std::to_string(outside) + " gluing results violate the predicate");
  }
  return r;
}

}  // namespace gluing

#endif  // GLUING_CLOSURE_HPP_
