#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pmsat/core.hpp"
#include "pmsat/corpus.hpp"
#include "pmsat/draw.hpp"
#include "pmsat/graph.hpp"
#include "pmsat/io.hpp"
#include "pmsat/reduce.hpp"
#include "pmsat/verify.hpp"

namespace py = pybind11;
using namespace pmsat;

namespace {

Instance make_instance(std::uint32_t num_vars, const std::vector<std::vector<int>>& clauses, bool multiset) {
  std::vector<Clause> cs;
  for (const auto& c : clauses) {
    Clause clause;
    for (int lit : c) clause.push_back(Literal::from_dimacs(lit));
    cs.push_back(std::move(clause));
  }
  return Instance(num_vars, std::move(cs), multiset ? ClauseMode::multiset : ClauseMode::set);
}

std::vector<std::vector<int>> clause_ints(const Instance& inst) {
  std::vector<std::vector<int>> out;
  for (const auto& c : inst.clauses()) {
    std::vector<int> ints;
    for (Literal l : c) ints.push_back(l.to_dimacs());
    out.push_back(std::move(ints));
  }
  return out;
}

// DIMACS-style signed model, or None.
std::optional<std::vector<long long>> model(const std::optional<Assignment>& a) {
  if (!a) return std::nullopt;
  return to_json(*a).get<std::vector<long long>>();
}

}  // namespace

PYBIND11_MODULE(_pmsat, m) {
  m.doc() = "Planar monotone SAT reductions, verification and drawings";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

  py::class_<Instance>(m, "Instance")
      .def(py::init(&make_instance), py::arg("num_vars"), py::arg("clauses"), py::arg("multiset") = false)
      .def_property_readonly("num_vars", &Instance::num_vars)
      .def_property_readonly("num_clauses", &Instance::num_clauses)
      .def_property_readonly("clauses", &clause_ints)
      .def_property_readonly("multiset", [](const Instance& i) { return i.mode() == ClauseMode::multiset; })
      .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; })
      .def("__repr__", [](const Instance& i) {
        return "<Instance vars=" + std::to_string(i.num_vars()) + " clauses=" + std::to_string(i.num_clauses()) + ">";
      });

  m.def("parse_dimacs", [](const std::string& text) { return parse_dimacs(text); });
  m.def("write_dimacs", &write_dimacs);

  // JSON-valued results cross as text; the Python package decodes them.
  m.def("classify_json", [](const Instance& i) { return write_json(to_json(classify(i))); });
  m.def("rule_names", &rule_names);
  m.def(
      "apply_rule_json",
      [](const std::string& rule, const Instance& i, std::optional<Variable> variable,
         std::optional<std::size_t> clause_index) {
        RuleArguments args;
        args.variable = variable;
        args.clause_index = clause_index;
        Reduction r = apply_rule(rule, i, args);
        return std::make_pair(std::move(r.instance), write_json(to_json(r.trace)));
      },
      py::arg("rule"), py::arg("instance"), py::arg("variable") = py::none(), py::arg("clause_index") = py::none());
  m.def(
      "check_reduction_json",
      [](const std::string& rule, const Instance& i, std::uint32_t cap) {
        CheckOptions options;
        options.cap = cap;
        return write_json(to_json(check_reduction(rule, i, options)));
      },
      py::arg("rule"), py::arg("instance"), py::arg("cap") = kDefaultBruteForceCap);

  m.def(
      "brute_force_sat", [](const Instance& i, std::uint32_t cap) { return model(brute_force_sat(i, cap)); },
      py::arg("instance"), py::arg("cap") = kDefaultBruteForceCap);
  m.def("dpll_sat", [](const Instance& i) { return model(dpll_sat(i)); });
  m.def("is_planar", [](const Instance& i) { return is_planar(incidence_graph(i)).planar; });
  m.def("export_dot", [](const Instance& i) { return export_dot(incidence_graph(i)); });

  m.def(
      "draw",
      [](const Instance& i, const std::string& format, bool normalize_ports) {
        const IncidenceGraph g = incidence_graph(i);
        OrthogonalDrawing d = orthogonal_layout(g, is_planar(g));
        if (normalize_ports) d = normalize_variable_ports(d, g).drawing;
        if (format == "json") return write_json(to_json(d));
        if (format == "svg") return render(d, RenderFormat::svg, g);
        if (format == "ascii") return render(d, RenderFormat::ascii, g);
        throw std::invalid_argument("unknown format '" + format + "' (svg, ascii, json)");
      },
      py::arg("instance"), py::arg("format") = "svg", py::arg("normalize_ports") = false);

  m.def("gen_dahlhaus", [](std::uint64_t seed, std::uint32_t n) { return gen_dahlhaus({seed, n}); }, py::arg("seed"),
        py::arg("num_vars"));
  m.def(
      "gen_planar_monotone", [](std::uint64_t seed, std::uint32_t n) { return gen_planar_monotone({seed, n}); },
      py::arg("seed"), py::arg("num_vars"));
  m.def("kratochvil_fixture_count", &kratochvil_fixture_count);
  m.def("kratochvil_fixture", [](std::size_t index) {
    auto f = gen_kratochvil_fixture(index);
    return py::make_tuple(f.name, f.instance, f.satisfiable);
  });
}
