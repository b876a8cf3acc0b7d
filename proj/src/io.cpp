#include "pmsat/io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace pmsat {

using nlohmann::json;

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long long> to_integer(std::string_view tok) {
  long long v = 0;
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

}  // namespace

Instance parse_dimacs(std::string_view text) {
  ClauseMode mode = ClauseMode::set;
  std::optional<std::pair<long long, long long>> header;
  std::size_t header_line = 0;
  std::vector<Clause> clauses;
  Clause current;
  std::size_t current_line = 0;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == 'c') {
      if (!header && trim(line.substr(1)) == "mode: multiset") mode = ClauseMode::multiset;
      continue;
    }
    if (line.front() == '%') break;
    if (line.front() == 'p') {
      if (header) throw ParseError(line_no, "second problem line");
      const auto t = tokens(line);
      if (t.size() != 4 || t[0] != "p" || t[1] != "cnf") throw ParseError(line_no, "malformed problem line");
      const auto n = to_integer(t[2]);
      const auto m = to_integer(t[3]);
      if (!n || !m || *n < 0 || *m < 0 || *n > 1'000'000'000) {
        throw ParseError(line_no, "malformed problem line");
      }
      header = {*n, *m};
      header_line = line_no;
      continue;
    }
    if (!header) throw ParseError(line_no, "clause before the problem line");
    for (std::string_view tok : tokens(line)) {
      const auto value = to_integer(tok);
      if (!value) throw ParseError(line_no, "not an integer: '" + std::string(tok) + "'");
      if (*value == 0) {
        if (auto why = clause_violation(current, static_cast<std::uint32_t>(header->first), mode)) {
          if (why->rfind("duplicate", 0) == 0) *why += " (add 'c mode: multiset' before the header to allow it)";
          throw ParseError(current_line ? current_line : line_no, *why);
        }
        clauses.push_back(std::move(current));
        current.clear();
        current_line = 0;
        continue;
      }
      if (*value < -header->first || *value > header->first) {
        throw ParseError(line_no, "literal " + std::string(tok) + " out of range 1.." + std::to_string(header->first));
      }
      if (current.empty()) current_line = line_no;
      current.push_back(Literal::from_dimacs(static_cast<int>(*value)));
    }
  }
  if (!header) throw ParseError(line_no, "missing problem line 'p cnf <vars> <clauses>'");
  if (!current.empty()) throw ParseError(current_line, "clause not terminated by 0");
  if (static_cast<long long>(clauses.size()) != header->second) {
    throw ParseError(header_line, "header declares " + std::to_string(header->second) + " clauses but " +
                                      std::to_string(clauses.size()) + " were found");
  }
  return Instance(static_cast<std::uint32_t>(header->first), std::move(clauses), mode);
}

std::string write_dimacs(const Instance& instance) {
  std::string out;
  if (instance.mode() == ClauseMode::multiset) out += "c mode: multiset\n";
  out += "p cnf " + std::to_string(instance.num_vars()) + " " + std::to_string(instance.num_clauses()) + "\n";
  for (const Clause& c : instance.clauses()) {
    for (Literal l : c) out += std::to_string(l.to_dimacs()) + " ";
    out += "0\n";
  }
  return out;
}

std::string export_dot(const IncidenceGraph& g) {
  std::string out = "graph incidence {\n";
  for (Vertex v = 0; v < g.graph.num_vertices(); ++v) {
    out += "  n" + std::to_string(v) + " [label=\"" + g.label(v) + "\", shape=" + (g.is_variable(v) ? "circle" : "box") +
           "];\n";
  }
  for (auto [u, v] : g.graph.edges()) out += "  n" + std::to_string(u) + " -- n" + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

namespace {

std::string origin_name(ClauseOrigin o) {
  switch (o) {
    case ClauseOrigin::copied:
      return "copied";
    case ClauseOrigin::modified:
      return "modified";
    case ClauseOrigin::gadget:
      return "gadget";
  }
  return "";
}

ClauseOrigin origin_from(const std::string& s) {
  if (s == "copied") return ClauseOrigin::copied;
  if (s == "modified") return ClauseOrigin::modified;
  if (s == "gadget") return ClauseOrigin::gadget;
  throw std::invalid_argument("unknown clause origin '" + s + "'");
}

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json histogram(const std::map<std::size_t, std::size_t>& h) {
  json out = json::object();
  for (auto [width, count] : h) out[std::to_string(width)] = count;
  return out;
}

json point(const GridPoint& p) { return json::array({p.x, p.y}); }

GridPoint point_from(const json& j) { return {j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>()}; }

}  // namespace

json to_json(const ReductionTrace& trace) {
  json vars = json::array();
  for (const TraceVariable& v : trace.variables) {
    vars.push_back({{"id", v.id},
                    {"role", v.role},
                    {"origin_variable", v.origin_variable},
                    {"origin_clause", optional_json(v.origin_clause)},
                    {"unit", v.unit},
                    {"fresh", v.fresh}});
  }
  json tags = json::array();
  for (const ClauseTag& t : trace.clause_map) {
    tags.push_back({{"origin", origin_name(t.origin)},
                    {"source", optional_json(t.source)},
                    {"gadget", t.gadget},
                    {"anchor", t.anchor}});
  }
  return {{"rule", trace.rule}, {"input_vars", trace.input_vars}, {"fresh_variables", vars}, {"clause_map", tags}};
}

ReductionTrace trace_from_json(const json& j) {
  ReductionTrace t;
  t.rule = j.at("rule").get<std::string>();
  t.input_vars = j.at("input_vars").get<std::uint32_t>();
  for (const json& v : j.at("fresh_variables")) {
    TraceVariable tv;
    tv.id = v.at("id").get<Variable>();
    tv.role = v.at("role").get<std::string>();
    tv.origin_variable = v.at("origin_variable").get<Variable>();
    if (!v.at("origin_clause").is_null()) tv.origin_clause = v.at("origin_clause").get<std::size_t>();
    tv.unit = v.at("unit").get<std::size_t>();
    tv.fresh = v.at("fresh").get<bool>();
    t.variables.push_back(std::move(tv));
  }
  for (const json& c : j.at("clause_map")) {
    ClauseTag tag;
    tag.origin = origin_from(c.at("origin").get<std::string>());
    if (!c.at("source").is_null()) tag.source = c.at("source").get<std::size_t>();
    tag.gadget = c.at("gadget").get<std::string>();
    tag.anchor = c.at("anchor").get<Variable>();
    t.clause_map.push_back(std::move(tag));
  }
  return t;
}

json to_json(const VariantProfile& p) {
  json occ = json::array();
  for (std::size_t v = 1; v < p.occurrences.size(); ++v) {
    occ.push_back({{"var", v}, {"pos", p.occurrences[v].pos}, {"neg", p.occurrences[v].neg}});
  }
  json variants = json::array();
  for (Variant v : {Variant::pm23sat, Variant::pm23sat_3, Variant::pm23sat_e3, Variant::rpm23sat, Variant::rpm23sat_4,
                    Variant::rpm23sat_e4, Variant::pm3sat_star, Variant::pm3sat_star_e4, Variant::pm3sat_star_e5}) {
    if (is_member(p, v)) variants.push_back(variant_name(v));
  }
  return {{"num_vars", p.num_vars},
          {"num_clauses", p.num_clauses},
          {"mode", p.mode == ClauseMode::multiset ? "multiset" : "set"},
          {"occurrences", occ},
          {"width_histogram", histogram(p.width_histogram)},
          {"distinct_width_histogram", histogram(p.distinct_width_histogram)},
          {"all_monotone", p.all_monotone},
          {"all_3clauses_positive", p.all_3clauses_positive},
          {"each_var_negated_exactly_once", p.each_var_negated_exactly_once},
          {"multiset_used", p.multiset_used},
          {"planar", p.planar},
          {"connected", p.connected},
          {"biconnected", p.biconnected},
          {"max_occurrences", p.max_occurrences},
          {"min_occurrences", p.min_occurrences},
          {"exact_occurrences", optional_json(p.exact_occurrences)},
          {"isolated_variables", p.isolated_variables},
          {"variants", variants}};
}

json to_json(const Assignment& a) {
  json out = json::array();
  for (std::size_t v = 1; v < a.size(); ++v) out.push_back(a[v] ? static_cast<long long>(v) : -static_cast<long long>(v));
  return out;
}

json to_json(const ReductionReport& r, bool include_timings) {
  json out = {{"rule", r.rule},
              {"ok", r.ok()},
              {"equisat", verdict_name(r.equisat)},
              {"equisat_engine", r.equisat_engine},
              {"counterexample", r.counterexample ? to_json(*r.counterexample) : json(nullptr)},
              {"counterexample_side", r.counterexample ? json(r.counterexample_side) : json(nullptr)},
              {"input_planar", r.input_planar},
              {"output_planar", r.output_planar},
              {"planarity_preserved", r.planarity_preserved},
              {"planarity_expected", r.planarity_expected},
              {"target_variant", r.target_variant},
              {"conforms", r.conforms},
              {"violations", r.violations},
              {"input_profile", to_json(r.input_profile)},
              {"output_profile", to_json(r.output_profile)},
              {"trace", to_json(r.trace)}};
  if (include_timings) out["timings_ms"] = {{"reduce", r.reduce_ms}, {"verify", r.verify_ms}};
  return out;
}

json to_json(const OrthogonalDrawing& d) {
  json vertices = json::array();
  for (const auto& p : d.vertices) vertices.push_back(point(p));
  json edges = json::array();
  for (const auto& e : d.edges) {
    json pts = json::array();
    for (const auto& p : e.points) pts.push_back(point(p));
    edges.push_back({{"from", e.from}, {"to", e.to}, {"points", pts}});
  }
  return {{"width", d.width}, {"height", d.height}, {"vertices", vertices}, {"edges", edges}};
}

OrthogonalDrawing drawing_from_json(const json& j) {
  OrthogonalDrawing d;
  d.width = j.at("width").get<std::int64_t>();
  d.height = j.at("height").get<std::int64_t>();
  for (const json& p : j.at("vertices")) d.vertices.push_back(point_from(p));
  for (const json& e : j.at("edges")) {
    EdgeRoute r;
    r.from = e.at("from").get<Vertex>();
    r.to = e.at("to").get<Vertex>();
    for (const json& p : e.at("points")) r.points.push_back(point_from(p));
    d.edges.push_back(std::move(r));
  }
  return d;
}

std::string write_json(const json& value) { return value.dump() + "\n"; }

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  if (path == "-") {
    std::cout << contents;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

}  // namespace pmsat
