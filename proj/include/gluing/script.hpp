#ifndef GLUING_SCRIPT_HPP_
#define GLUING_SCRIPT_HPP_

#include <cctype>
#include <charconv>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gluing/error.hpp"
#include "gluing/glue.hpp"
#include "gluing/guards.hpp"
#include "gluing/multigraph.hpp"

namespace gluing {

/// Operand of a glue step: an earlier step's output or a basis graph.
struct ScriptRef {
  enum class Kind { step, basis } kind;
  std::size_t index;
};

struct LoadStep {
  std::optional<std::size_t> basis_index;  // `load #i`
  std::optional<MultiGraph> graph;          // `load <path>`
  std::string source;
};

struct GlueStep {
  ScriptRef left;
  ScriptRef right;
  MultiGraph pattern;
  std::vector<vertex_id> lmap;
  std::vector<vertex_id> rmap;
  std::vector<edge_id> lemap;
  std::vector<edge_id> remap;
};

struct AssemblyScript {
  std::vector<std::variant<LoadStep, GlueStep>> steps;
};

/// One executed step: its graph and, for glue steps, the validated spec.
struct TraceEntry {
  MultiGraph graph;
  std::optional<GluingSpec> spec;
};

namespace detail {

template <class T>
std::vector<T> parse_index_list(std::string_view text, std::size_t line) {
  std::vector<T> out;
  if (text == "-") {
    return out;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view tok = text.substr(pos, comma - pos);
    T v{};
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size()) {
      throw parse_error("bad index list '" + std::string(text) + "'", line);
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

inline std::size_t parse_ref_index(std::string_view tok, std::size_t line) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), v);
  if (tok.size() < 2 || ec != std::errc() || p != tok.data() + tok.size()) {
    throw parse_error("bad reference '" + std::string(tok) + "'", line);
  }
  return v;
}

inline ScriptRef parse_ref(std::string_view tok, std::size_t line, std::size_t step) {
  if (!tok.empty() && tok[0] == '$') {
    const std::size_t k = parse_ref_index(tok, line);
    if (k >= step) {
      throw parse_error("reference " + std::string(tok) + " does not name an earlier step", line);
    }
    return {ScriptRef::Kind::step, k};
  }
  if (!tok.empty() && tok[0] == '#') {
    return {ScriptRef::Kind::basis, parse_ref_index(tok, line)};
  }
  throw parse_error("bad reference '" + std::string(tok) + "'", line);
}

}  // namespace detail

/// Parses the line-oriented script text. Graph paths are resolved against `base_dir`.
inline AssemblyScript parse_script(std::string_view text, const std::filesystem::path& base_dir = {}) {
  AssemblyScript s;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  auto load_graph = [&](const std::string& path) {
    const std::filesystem::path p = std::filesystem::path(path).is_absolute() ? std::filesystem::path(path) : base_dir / path;
    try {
      return read_gfmt_file(p.string());
    } catch (const parse_error& e) {
      throw parse_error(p.string() + ": " + e.what(), line);
    }
  };
  while (std::getline(in, raw)) {
    ++line;
    // `#` starts a comment unless it begins a basis reference such as #0
    std::vector<std::string> toks;
    std::istringstream ls(raw);
    for (std::string t; ls >> t;) {
      if (t[0] == '#' && (t.size() < 2 || !std::isdigit(static_cast<unsigned char>(t[1])))) {
        break;
      }
      toks.push_back(t);
    }
    if (toks.empty()) {
      continue;
    }
    const std::size_t step = s.steps.size();
    if (toks[0] == "load") {
      if (toks.size() != 2) {
        throw parse_error("load takes one argument", line);
      }
      LoadStep ld;
      ld.source = toks[1];
      if (toks[1][0] == '#') {
        ld.basis_index = detail::parse_ref_index(toks[1], line);
      } else {
        ld.graph = load_graph(toks[1]);
      }
      s.steps.emplace_back(std::move(ld));
    } else if (toks[0] == "glue") {
      if (toks.size() != 9 && toks.size() != 13) {
        throw parse_error("glue expects: glue A B pattern P lmap .. rmap .. [lemap .. remap ..]", line);
      }
      GlueStep g;
      g.left = detail::parse_ref(toks[1], line, step);
      g.right = detail::parse_ref(toks[2], line, step);
      if (toks[3] != "pattern" || toks[5] != "lmap" || toks[7] != "rmap") {
        throw parse_error("glue expects keywords pattern, lmap, rmap", line);
      }
      g.pattern = load_graph(toks[4]);
      g.lmap = detail::parse_index_list<vertex_id>(toks[6], line);
      g.rmap = detail::parse_index_list<vertex_id>(toks[8], line);
      if (toks.size() == 13) {
        if (toks[9] != "lemap" || toks[11] != "remap") {
          throw parse_error("glue expects keywords lemap, remap", line);
        }
        g.lemap = detail::parse_index_list<edge_id>(toks[10], line);
        g.remap = detail::parse_index_list<edge_id>(toks[12], line);
      }
      s.steps.emplace_back(std::move(g));
    } else {
      throw parse_error("unknown step '" + toks[0] + "'", line);
    }
  }
  return s;
}

inline AssemblyScript read_script_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw parse_error("cannot open " + path);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_script(ss.str(), std::filesystem::path(path).parent_path());
}

/// Executes the script; every glue step must pass every guard. Returns the last step's graph.
inline MultiGraph run_script(const AssemblyScript& script, const std::vector<MultiGraph>& basis,
                             const std::vector<GuardKind>& guards, std::vector<TraceEntry>* trace = nullptr) {
  if (script.steps.empty()) {
    throw invalid_input("script has no steps");
  }
  std::vector<MultiGraph> out;
  auto basis_at = [&](std::size_t i, std::size_t step) -> const MultiGraph& {
    if (i >= basis.size()) {
      throw invalid_input("step " + std::to_string(step) + ": basis index #" + std::to_string(i) + " out of range");
    }
    return basis[i];
  };
  auto resolve = [&](const ScriptRef& r, std::size_t step) -> const MultiGraph& {
    if (r.kind == ScriptRef::Kind::basis) {
      return basis_at(r.index, step);
    }
    if (r.index >= step) {
      throw invalid_input("step " + std::to_string(step) + ": dangling reference $" + std::to_string(r.index));
    }
    return out[r.index];
  };
  for (std::size_t k = 0; k < script.steps.size(); ++k) {
    std::optional<GluingSpec> spec;
    if (const auto* ld = std::get_if<LoadStep>(&script.steps[k])) {
      out.push_back(ld->graph ? *ld->graph : basis_at(*ld->basis_index, k));
    } else {
      const auto& g = std::get<GlueStep>(script.steps[k]);
      try {
        spec = make_spec(resolve(g.left, k), resolve(g.right, k), g.pattern, g.lmap, g.rmap, g.lemap, g.remap);
      } catch (const invalid_input& e) {
        throw invalid_input("step " + std::to_string(k) + ": " + e.what());
      }
      for (const auto& guard : guards) {
        if (!check_guard(guard, *spec)) {
          throw guard_rejected(std::string(name_of(guard.tag)), k);
        }
      }
      out.push_back(glue(*spec));
    }
    if (trace) {
      trace->push_back({out.back(), std::move(spec)});
    }
  }
  return out.back();
}

/// True when every glue step has an operand that is a basis graph, either directly or via a load step.
inline bool is_canonical(const AssemblyScript& script) {
  auto from_basis = [&](const ScriptRef& r) {
    return r.kind == ScriptRef::Kind::basis || std::holds_alternative<LoadStep>(script.steps[r.index]);
  };
  for (const auto& st : script.steps) {
    if (const auto* g = std::get_if<GlueStep>(&st)) {
      if (!from_basis(g->left) && !from_basis(g->right)) {
        return false;
      }
    }
  }
  return true;
}

inline bool is_canonical(const AssemblyScript& script, const std::vector<MultiGraph>&) { return is_canonical(script); }

}  // namespace gluing

#endif  // GLUING_SCRIPT_HPP_
