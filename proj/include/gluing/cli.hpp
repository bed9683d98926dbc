#ifndef GLUING_CLI_HPP_
#define GLUING_CLI_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gluing/closure.hpp"
#include "gluing/error.hpp"
#include "gluing/glue.hpp"
#include "gluing/guards.hpp"
#include "gluing/multigraph.hpp"
#include "gluing/properties.hpp"
#include "gluing/registry.hpp"
#include "gluing/script.hpp"

namespace gluing {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int negative = 1;  // property false, mismatches, unannotated diffs
inline constexpr int rejected = 2;  // guard rejection
inline constexpr int usage = 3;     // usage or parse error
}  // namespace exit_code

namespace detail {

/// Splits "1,2,3" into numbers; an empty string or "-" yields an empty list.
inline std::vector<std::size_t> split_indices(const std::string& text) {
  if (text.empty() || text == "-") {
    return {};
  }
  return parse_index_list<std::size_t>(text, 0);
}

inline std::vector<GuardKind> parse_guards(const std::vector<std::string>& names) {
  std::vector<GuardKind> out;
  for (const auto& n : names) {
    auto g = parse_guard(n);
    if (!g) {
      throw parse_error("unknown guard '" + n + "'");
    }
    out.emplace_back(*g);
  }
  return out;
}

inline ClassDescriptor descriptor_for(int id, const std::string& special) {
  if (!special.empty()) {
    return special_basis(special);
  }
  if (id < 1 || id > catalog_size) {
    throw parse_error("class id must be in 1.." + std::to_string(catalog_size));
  }
  return get_descriptor(id);
}

}  // namespace detail

/// Runs one CLI invocation (`args` excludes the program name) and returns the exit code.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gluing operations, closed graph classes and guards", "gluing_cli"};
  app.require_subcommand(1);
  int code = exit_code::ok;

  // glue
  auto* glue_cmd = app.add_subcommand("glue", "Glue two GFMT graphs along a pattern");
  std::string left_path, right_path, pattern_path, lmap, rmap, lemap, remap;
  std::vector<std::string> guard_names;
  glue_cmd->add_option("left", left_path)->required();
  glue_cmd->add_option("right", right_path)->required();
  glue_cmd->add_option("--pattern", pattern_path)->required();
  glue_cmd->add_option("--lmap", lmap)->required();
  glue_cmd->add_option("--rmap", rmap)->required();
  glue_cmd->add_option("--lemap", lemap);
  glue_cmd->add_option("--remap", remap);
  glue_cmd->add_option("--guard", guard_names);

  // script run
  auto* script_cmd = app.add_subcommand("script", "Assembly scripts");
  script_cmd->require_subcommand(1);
  auto* script_run = script_cmd->add_subcommand("run", "Execute a script and print the final graph");
  std::string script_path;
  std::vector<std::string> basis_paths;
  bool canonical = false;
  script_run->add_option("file", script_path)->required();
  script_run->add_option("--basis", basis_paths);
  script_run->add_option("--guard", guard_names);
  script_run->add_flag("--canonical", canonical, "Require every gluing to use a basis operand");

  // check
  auto* check_cmd = app.add_subcommand("check", "Test a property of a graph");
  std::string property, graph_path;
  check_cmd->add_option("--property", property)->required();
  check_cmd->add_option("graph", graph_path)->required();

  // closure
  auto* closure_cmd = app.add_subcommand("closure", "Bounded closure of a class");
  int class_id = 0;
  std::string special;
  std::vector<std::string> be_paths, bo_paths;
  std::size_t max_n = 0, max_m = 0, jobs = 1;
  auto* class_opt = closure_cmd->add_option("--class", class_id);
  auto* special_opt = closure_cmd->add_option("--special", special);
  auto* be_opt = closure_cmd->add_option("--be", be_paths);
  closure_cmd->add_option("--bo", bo_paths)->needs(be_opt);
  class_opt->excludes(special_opt)->excludes(be_opt);
  special_opt->excludes(be_opt);
  closure_cmd->add_option("--guard", guard_names)->needs(be_opt);
  closure_cmd->add_option("--max-n", max_n)->required();
  closure_cmd->add_option("--max-m", max_m)->required();
  closure_cmd->add_flag("--canonical", canonical);
  closure_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  // verify-class
  auto* verify_cmd = app.add_subcommand("verify-class", "Compare a closure with its characteristic property");
  verify_cmd->add_option("--class", class_id);
  verify_cmd->add_option("--special", special);
  verify_cmd->add_option("--max-n", max_n)->required();
  verify_cmd->add_option("--max-m", max_m)->required();
  verify_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  // find-basis
  auto* basis_cmd = app.add_subcommand("find-basis", "Members not produced by any nontrivial gluing");
  basis_cmd->add_option("--class", class_id);
  basis_cmd->add_option("--special", special);
  basis_cmd->add_option("--max-n", max_n)->required();
  basis_cmd->add_option("--max-m", max_m)->required();
  basis_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  // diagram
  auto* diagram_cmd = app.add_subcommand("diagram", "Inclusion diagram of the class catalog");
  bool listed = false, derived = false, diff = false;
  auto* listed_flag = diagram_cmd->add_flag("--listed", listed);
  auto* derived_flag = diagram_cmd->add_flag("--derived", derived);
  auto* diff_flag = diagram_cmd->add_flag("--diff", diff);
  listed_flag->excludes(derived_flag)->excludes(diff_flag);
  derived_flag->excludes(diff_flag);

  // catalog
  auto* catalog_cmd = app.add_subcommand("catalog", "Print the class catalog");

  // dbsearch
  auto* db_cmd = app.add_subcommand("dbsearch", "Bridge-deferring depth-first order");
  std::size_t start = 0;
  std::string tie = "asc";
  db_cmd->add_option("graph", graph_path)->required();
  db_cmd->add_option("--start", start)->required();
  db_cmd->add_option("--tie", tie)->check(CLI::IsMember({"asc", "desc"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  }

  try {
    if (glue_cmd->parsed()) {
      auto spec = make_spec(read_gfmt_file(left_path), read_gfmt_file(right_path), read_gfmt_file(pattern_path),
                            detail::split_indices(lmap), detail::split_indices(rmap), detail::split_indices(lemap),
                            detail::split_indices(remap));
      for (const auto& g : detail::parse_guards(guard_names)) {
        if (!check_guard(g, spec)) {
          throw guard_rejected(std::string(name_of(g.tag)), 0);
        }
      }
      write_gfmt(out, glue(spec));
    } else if (script_run->parsed()) {
      const auto script = read_script_file(script_path);
      std::vector<MultiGraph> basis;
      for (const auto& p : basis_paths) {
        basis.push_back(read_gfmt_file(p));
      }
      if (canonical && !is_canonical(script)) {
        err << "script is not canonical\n";
        return exit_code::negative;
      }
      write_gfmt(out, run_script(script, basis, detail::parse_guards(guard_names)));
    } else if (check_cmd->parsed()) {
      const auto p = parse_property(property);
      if (!p || *p == Property::components_isomorphic_to) {
        throw parse_error("unknown property '" + property + "'");
      }
      const bool v = holds(*p, read_gfmt_file(graph_path));
      out << (v ? "true" : "false") << "\n";
      code = v ? exit_code::ok : exit_code::negative;
    } else if (closure_cmd->parsed()) {
      ClassDescriptor d;
      if (!be_paths.empty()) {
        for (const auto& p : be_paths) {
          d.elemental.graphs.push_back(read_gfmt_file(p));
          d.elemental.labels.push_back(p);
        }
        for (const auto& p : bo_paths) {
          d.operational.graphs.push_back(read_gfmt_file(p));
          d.operational.labels.push_back(p);
        }
        d.guards = detail::parse_guards(guard_names);
      } else if (class_id != 0 || !special.empty()) {
        d = detail::descriptor_for(class_id, special);
      } else {
        throw parse_error("closure needs --class, --special or --be/--bo");
      }
      write_report(out, closure_fixpoint(d, max_n, max_m, canonical, jobs));
    } else if (verify_cmd->parsed()) {
      const auto r = verify_descriptor(detail::descriptor_for(class_id, special), max_n, max_m, jobs);
      out << "mismatches=" << r.mismatches() << "\n";
      for (const auto& c : r.closure_not_predicate) {
        out << "in_closure_not_predicate " << c.hex() << "\n";
      }
      for (const auto& c : r.predicate_not_closure) {
        out << "predicate_not_in_closure " << c.hex() << "\n";
      }
      code = r.mismatches() == 0 ? exit_code::ok : exit_code::negative;
    } else if (basis_cmd->parsed()) {
      const auto r = find_elemental_basis(detail::descriptor_for(class_id, special), max_n, max_m, jobs);
      out << "basis n<=" << max_n << " m<=" << max_m << " count=" << r.candidates.size() << "\n";
      for (const auto& c : r.candidates) {
        out << c.hex() << "\n";
      }
      for (const auto& w : r.warnings) {
        err << "warning: " << w << "\n";
      }
    } else if (diagram_cmd->parsed()) {
      if (diff) {
        const auto d = diagram_diff();
        out << format_diff(d);
        const bool annotated = std::all_of(d.begin(), d.end(), [](const DiagramDiff& x) { return !x.annotation.empty(); });
        const auto stale = stale_known_diffs();
        for (const auto& s : stale) {
          err << "stale known diff " << s.edge.upper << "," << s.edge.lower << "\n";
        }
        code = annotated && stale.empty() ? exit_code::ok : exit_code::negative;
      } else if (listed || derived) {
        out << to_dot(diagram_edges(listed ? DiagramSource::listed : DiagramSource::derived));
      } else {
        throw parse_error("diagram needs --listed, --derived or --diff");
      }
    } else if (catalog_cmd->parsed()) {
      out << catalog_text();
    } else if (db_cmd->parsed()) {
      const auto g = read_gfmt_file(graph_path);
      if (start >= g.vertex_count()) {
        throw invalid_input("start vertex out of range");
      }
      const auto order = db_search(g, start, tie == "asc" ? TieBreak::ascending : TieBreak::descending);
      for (std::size_t i = 0; i < order.size(); ++i) {
        out << (i ? " " : "") << order[i];
      }
      out << "\n";
    }
  } catch (const guard_rejected& e) {
    err << "rejected: " << e.what() << "\n";
    return exit_code::rejected;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  }
  return code;
}

}  // namespace gluing

#endif  // GLUING_CLI_HPP_
