// Command-line front end: classify, reduce, verify, solve, draw, gen.
// Exit status: 0 success, 1 verification failure, 2 bad input or usage.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "pmsat/core.hpp"
#include "pmsat/corpus.hpp"
#include "pmsat/draw.hpp"
#include "pmsat/graph.hpp"
#include "pmsat/io.hpp"
#include "pmsat/reduce.hpp"
#include "pmsat/verify.hpp"

namespace {

using namespace pmsat;

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string histogram_text(const std::map<std::size_t, std::size_t>& h) {
  std::vector<std::string> parts;
  for (auto [w, n] : h) parts.push_back(std::to_string(w) + ":" + std::to_string(n));
  return parts.empty() ? "-" : join(parts, " ");
}

std::string profile_text(const VariantProfile& p) {
  std::ostringstream os;
  os << "variables: " << p.num_vars << "\n";
  os << "clauses: " << p.num_clauses << "\n";
  os << "mode: " << (p.mode == ClauseMode::multiset ? "multiset" : "set") << "\n";
  os << "widths: " << histogram_text(p.width_histogram) << "\n";
  os << "occurrences: min " << p.min_occurrences << ", max " << p.max_occurrences;
  if (p.exact_occurrences) os << ", exactly " << *p.exact_occurrences;
  os << "\n";
  os << "monotone: " << yes_no(p.all_monotone) << "\n";
  os << "3-clauses positive: " << yes_no(p.all_3clauses_positive) << "\n";
  os << "each variable negated once: " << yes_no(p.each_var_negated_exactly_once) << "\n";
  os << "repeated literals: " << yes_no(p.multiset_used) << "\n";
  os << "planar: " << yes_no(p.planar) << "\n";
  os << "connected: " << yes_no(p.connected) << "\n";
  os << "biconnected: " << yes_no(p.biconnected) << "\n";
  const auto members = to_json(p).at("variants").get<std::vector<std::string>>();
  os << "variants: " << (members.empty() ? "-" : join(members, ", ")) << "\n";
  return os.str();
}

std::string report_text(const ReductionReport& r) {
  std::ostringstream os;
  os << "rule: " << r.rule << "\n";
  os << "equisatisfiable: " << verdict_name(r.equisat) << " (" << r.equisat_engine << ")\n";
  if (r.counterexample) {
    os << "counterexample (" << r.counterexample_side << " model): " << to_json(*r.counterexample).dump() << "\n";
  }
  os << "planarity: input " << (r.input_planar ? "planar" : "non-planar") << ", output "
     << (r.output_planar ? "planar" : "non-planar");
  if (!r.planarity_preserved) os << (r.planarity_expected ? " (LOST)" : " (not preserved; expected for this rule)");
  os << "\n";
  os << "target: " << r.target_variant << " " << (r.conforms ? "conforms" : "violated") << "\n";
  for (const auto& v : r.violations) os << "  - " << v << "\n";
  os << "output: " << r.output_profile.num_vars << " variables, " << r.output_profile.num_clauses << " clauses\n";
  os << "result: " << (r.ok() ? "OK" : "FAIL") << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar monotone SAT reduction toolkit"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string out_path = "-";
  bool as_json = false;

  auto* classify_cmd = app.add_subcommand("classify", "Print the variant profile of a DIMACS instance");
  classify_cmd->add_option("input", input, "DIMACS file, '-' for stdin")->required();
  classify_cmd->add_flag("--json", as_json, "Emit the profile as JSON");

  std::string rule;
  std::string trace_path;
  std::optional<Variable> variable;
  std::optional<std::size_t> clause_index;
  bool skip_triconnected = false;
  auto* reduce_cmd = app.add_subcommand("reduce", "Apply one reduction and write the resulting DIMACS");
  reduce_cmd->add_option("input", input, "DIMACS file, '-' for stdin")->required();
  reduce_cmd->add_option("--rule", rule, "Reduction rule")->required()->check(CLI::IsMember(rule_names()));
  reduce_cmd->add_option("--out", out_path, "Output DIMACS path (default stdout)");
  reduce_cmd->add_option("--trace", trace_path, "Write the reduction trace as JSON to this path");
  reduce_cmd->add_option("--variable", variable, "boost: variable to boost (default: first with < 3 occurrences)");
  reduce_cmd->add_option("--clause", clause_index,
                         "r1: 0-based index of the 2-clause to replace (default: first monotone 2-clause)");
  reduce_cmd->add_flag("--skip-triconnected-check", skip_triconnected,
                       "ring-e5: skip the brute-force 3-connectivity check of the input");

  std::uint32_t cap = kDefaultBruteForceCap;
  bool timings = false;
  auto* verify_cmd = app.add_subcommand("verify", "Apply a reduction and check every property it claims");
  verify_cmd->add_option("input", input, "DIMACS file, '-' for stdin")->required();
  verify_cmd->add_option("--rule", rule, "Reduction rule")->required()->check(CLI::IsMember(rule_names()));
  verify_cmd->add_option("--cap", cap, "Largest variable count solved by brute force (DPLL above)");
  verify_cmd->add_option("--variable", variable, "boost: variable to boost");
  verify_cmd->add_option("--clause", clause_index, "r1: 0-based index of the 2-clause to replace");
  verify_cmd->add_flag("--skip-triconnected-check", skip_triconnected, "ring-e5: skip the 3-connectivity check");
  verify_cmd->add_flag("--json", as_json, "Emit the report as JSON");
  verify_cmd->add_flag("--timings", timings, "Include timings in the JSON report");

  std::string engine = "dpll";
  auto* solve_cmd = app.add_subcommand("solve", "Decide satisfiability and print a model");
  solve_cmd->add_option("input", input, "DIMACS file, '-' for stdin")->required();
  solve_cmd->add_option("--engine", engine, "Solver")->check(CLI::IsMember({"brute", "dpll"}));
  solve_cmd->add_option("--cap", cap, "Variable cap for the brute-force engine");

  std::string format = "svg";
  bool normalize = false;
  auto* draw_cmd = app.add_subcommand("draw", "Draw the incidence graph on an orthogonal grid");
  draw_cmd->add_option("input", input, "DIMACS file, '-' for stdin")->required();
  draw_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"svg", "ascii", "json"}));
  draw_cmd->add_option("--out", out_path, "Output path (default stdout)");
  draw_cmd->add_flag("--normalize-ports", normalize, "Reroute degree-3 variables to the W,E,S port pattern");

  std::string family;
  std::uint64_t seed = 0;
  std::uint32_t size = 4;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a corpus instance as DIMACS on stdout");
  gen_cmd->add_option("--family", family, "Instance family")
      ->required()
      ->check(CLI::IsMember({"dahlhaus", "planar-monotone", "kratochvil"}));
  gen_cmd->add_option("--seed", seed, "Random seed");
  gen_cmd->add_option("--size", size, "Variable count (kratochvil: fixture index)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    RuleArguments args;
    args.variable = variable;
    args.clause_index = clause_index;
    args.ring_e5.check_triconnected = !skip_triconnected;

    if (*classify_cmd) {
      const VariantProfile p = classify(parse_dimacs(read_file(input)));
      std::cout << (as_json ? write_json(to_json(p)) : profile_text(p));
      return 0;
    }
    if (*reduce_cmd) {
      const Reduction r = apply_rule(rule, parse_dimacs(read_file(input)), args);
      write_file(out_path, write_dimacs(r.instance));
      if (!trace_path.empty()) write_file(trace_path, write_json(to_json(r.trace)));
      return 0;
    }
    if (*verify_cmd) {
      CheckOptions options;
      options.cap = cap;
      options.rule_args = args;
      const ReductionReport report = check_reduction(rule, parse_dimacs(read_file(input)), options);
      std::cout << (as_json ? write_json(to_json(report, timings)) : report_text(report));
      return report.ok() ? 0 : 1;
    }
    if (*solve_cmd) {
      const Instance inst = parse_dimacs(read_file(input));
      const auto model = engine == "brute" ? brute_force_sat(inst, cap) : dpll_sat(inst);
      if (!model) {
        std::cout << "UNSAT\n";
        return 0;
      }
      std::cout << "SAT\nv";
      for (Variable v = 1; v <= inst.num_vars(); ++v) std::cout << ' ' << ((*model)[v] ? "" : "-") << v;
      std::cout << " 0\n";
      return 0;
    }
    if (*draw_cmd) {
      const IncidenceGraph g = incidence_graph(parse_dimacs(read_file(input)));
      OrthogonalDrawing d = orthogonal_layout(g, is_planar(g));
      if (normalize) d = normalize_variable_ports(d, g).drawing;
      std::string text;
      if (format == "json") {
        text = write_json(to_json(d));
      } else {
        text = render(d, format == "svg" ? RenderFormat::svg : RenderFormat::ascii, g);
      }
      write_file(out_path, text);
      return 0;
    }
    if (*gen_cmd) {
      Instance inst;
      if (family == "dahlhaus") {
        inst = gen_dahlhaus({seed, size});
      } else if (family == "planar-monotone") {
        inst = gen_planar_monotone({seed, size});
      } else {
        inst = gen_kratochvil_fixture(size).instance;
      }
      std::cout << write_dimacs(inst);
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    // InstanceError, PreconditionError, LayoutError, GeneratorError
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
