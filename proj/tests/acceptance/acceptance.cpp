// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Exit status is non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "corpus_set.hpp"
#include "oracles.hpp"
#include "pmsat/corpus.hpp"
#include "pmsat/draw.hpp"
#include "pmsat/io.hpp"
#include "pmsat/reduce.hpp"
#include "pmsat/verify.hpp"

using namespace pmsat;

namespace {

// Pinned thresholds.
constexpr std::size_t kMinEquisatInstances = 300;
constexpr std::uint32_t kEquisatMaxVars = 20;
constexpr double kEquisatBudgetSeconds = 60.0;
constexpr std::uint32_t kOracleAgreementMaxVars = 25;
constexpr double kDrawBudgetMs = 100.0;
constexpr std::size_t kMaxBendsPerEdge = 2;
constexpr std::size_t kMaxBendExceptions = 1;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Application {
  std::string name;
  std::string rule;
  const Instance* input;
  Reduction result;
};

std::optional<Reduction> try_rule(const std::string& rule, const Instance& inst) {
  try {
    return apply_rule(rule, inst);
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
}

// Corpus with every stage of the chain present, including multiset outputs.
std::vector<testing_corpus::Item> full_corpus() {
  auto items = testing_corpus::with_intermediates();
  const std::size_t n = items.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (const char* rule : {"pad-e4", "multiset-e4", "ring-e5"}) {
      if (auto r = try_rule(rule, items[i].instance)) items.push_back({items[i].name + "/" + rule, r->instance});
    }
  }
  return items;
}

bool widths_in(const VariantProfile& p, std::set<std::size_t> allowed) {
  for (auto [w, count] : p.distinct_width_histogram) {
    if (!allowed.count(w)) return false;
  }
  return true;
}

// The claim each rule makes about its output, restated from the flags.
std::vector<std::string> claim_failures(const std::string& rule, const VariantProfile& in, const VariantProfile& out) {
  std::vector<std::string> f;
  auto need = [&](bool ok, const char* what) {
    if (!ok) f.push_back(what);
  };
  const bool in_bounded = in.max_occurrences <= 3 && widths_in(in, {2, 3}) && !in.multiset_used;
  if (rule == "gold") {
    need(out.all_monotone, "monotone");
    if (in_bounded) {
      need(widths_in(out, {2, 3}), "widths {2,3}");
      need(out.max_occurrences <= 3, "occurrences <= 3");
    }
  } else if (rule == "boost") {
    need(out.all_monotone, "monotone");
    need(widths_in(out, {2, 3}), "widths {2,3}");
    need(out.max_occurrences <= 3, "occurrences <= 3");
  } else if (rule == "e3") {
    need(out.all_monotone, "monotone");
    need(widths_in(out, {2, 3}), "widths {2,3}");
    need(out.exact_occurrences == 3u, "exactly 3 occurrences");
  } else if (rule == "ring-t3" || rule == "pad-e4") {
    need(out.all_monotone, "monotone");
    need(widths_in(out, {2, 3}), "widths {2,3}");
    need(out.all_3clauses_positive, "3-clauses positive");
    need(out.each_var_negated_exactly_once, "negated exactly once");
    need(out.min_occurrences >= 3, "at least 3 occurrences");
    need(out.max_occurrences <= 4, "at most 4 occurrences");
    if (rule == "pad-e4") need(out.exact_occurrences == 4u, "exactly 4 occurrences");
  } else if (rule == "multiset-e4") {
    need(out.mode == ClauseMode::multiset, "multiset");
    need(out.all_monotone, "monotone");
    need(out.width_histogram.size() == 1 && out.width_histogram.begin()->first == 3, "width 3");
    need(out.exact_occurrences == 4u, "exactly 4 occurrences");
  } else if (rule == "ring-e5") {
    need(out.all_monotone, "monotone");
    need(out.width_histogram.size() == 1 && out.width_histogram.begin()->first == 3, "width 3");
    need(out.exact_occurrences == 5u, "exactly 5 occurrences");
    need(out.biconnected, "biconnected");
  } else if (rule == "r1") {
    need(out.all_monotone == in.all_monotone, "monotonicity kept");
    need(widths_in(out, {2, 3}) == widths_in(in, {2, 3}), "widths kept");
  }
  return f;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome equisatisfiability(const std::vector<Application>& apps) {
  const auto start = Clock::now();
  std::set<std::string> instances;
  std::size_t checked = 0, mismatches = 0, disagreements = 0;
  for (const auto& a : apps) {
    if (a.result.instance.num_vars() > kEquisatMaxVars) continue;
    const bool in = brute_force_sat(*a.input).has_value();
    const bool out = brute_force_sat(a.result.instance).has_value();
    // Second route: the test-side enumerator.
    if (in != oracle::sat(*a.input) || out != oracle::sat(a.result.instance)) ++disagreements;
    if (in != out) {
      ++mismatches;
      std::cerr << "  mismatch: " << a.name << " / " << a.rule << "\n";
    }
    instances.insert(a.name);
    ++checked;
  }
  const double secs = seconds_since(start);
  std::ostringstream os;
  os << instances.size() << " instances, " << checked << " reductions, " << mismatches << " mismatches, "
     << disagreements << " solver disagreements, " << secs << " s (need >= " << kMinEquisatInstances << ", <= "
     << kEquisatBudgetSeconds << " s)";
  return {instances.size() >= kMinEquisatInstances && mismatches == 0 && disagreements == 0 &&
              secs <= kEquisatBudgetSeconds,
          os.str()};
}

Outcome conformance(const std::vector<Application>& apps) {
  std::size_t violations = 0;
  std::set<std::string> rules;
  for (const auto& a : apps) {
    const auto in = classify(*a.input);
    const auto out = classify(a.result.instance);
    auto failures = claim_failures(a.rule, in, out);
    // Library route: the variant table used by the verifier.
    const auto report = check_reduction(a.rule, *a.input, CheckOptions{0, {}});
    if (!report.conforms) failures.push_back("variant " + report.target_variant);
    if (!failures.empty()) {
      ++violations;
      std::cerr << "  " << a.name << " / " << a.rule << ": " << failures.front() << "\n";
    }
    rules.insert(a.rule);
  }
  std::ostringstream os;
  os << apps.size() << " reductions over " << rules.size() << " rules, " << violations << " violations";
  return {violations == 0 && rules.size() == rule_names().size(), os.str()};
}

Outcome planarity(const std::vector<Application>& apps) {
  std::size_t checked = 0, lost = 0;
  for (const auto& a : apps) {
    if (!preserves_planarity(a.rule) || !is_planar(incidence_graph(*a.input)).planar) continue;
    ++checked;
    if (!is_planar(incidence_graph(a.result.instance)).planar) {
      ++lost;
      std::cerr << "  planarity lost: " << a.name << " / " << a.rule << "\n";
    }
  }
  // r1 on {x,y}: the four new clauses alone are already non-planar.
  const Instance xy(2, {{Literal::pos(1), Literal::pos(2)}});
  const auto r1 = r1_replace(xy, 0);
  const std::vector<std::size_t> fresh{0, 1, 2, 3};
  const auto g = incidence_graph(r1.instance.restricted_to(fresh));
  const auto p = is_planar(g);
  const bool witness_ok = !p.planar && !oracle::planar(Graph(g.graph.num_vertices(), p.witness)) &&
                          p.witness_kind == KuratowskiKind::k33;
  std::ostringstream os;
  os << checked << " planar inputs, " << lost << " lost; r1({x,y}) witness " << kuratowski_name(p.witness_kind)
     << (witness_ok ? " re-verified non-planar" : " NOT confirmed");
  return {lost == 0 && checked > 0 && witness_ok, os.str()};
}

Outcome forcing() {
  // One k=3 ring taken from a real reduction output.
  const Instance in = gen_dahlhaus({0, 3});
  const auto r = ring_replace_t3(in);
  const Variable x = 1;
  std::vector<Variable> xs(3), as(3);
  for (const auto& v : r.trace.variables) {
    if (v.origin_variable != x) continue;
    if (v.role == "ring-x") xs.at(v.unit) = v.id;
    if (v.role == "ring-a") as.at(v.unit) = v.id;
  }
  std::vector<Clause> gadget;
  for (std::size_t j = 0; j < r.trace.clause_map.size(); ++j) {
    const auto& tag = r.trace.clause_map[j];
    if (tag.origin == ClauseOrigin::gadget && std::count(xs.begin(), xs.end(), tag.anchor)) {
      gadget.push_back(r.instance.clause(j));
    }
  }
  std::size_t satisfying = 0, violating = 0;
  for (unsigned mask = 0; mask < 64; ++mask) {
    Assignment a(r.instance.num_vars() + 1, false);
    for (std::size_t i = 0; i < 3; ++i) {
      a[xs[i]] = mask >> (2 * i) & 1;
      a[as[i]] = mask >> (2 * i + 1) & 1;
    }
    bool sat = true;
    for (const auto& c : gadget) {
      bool any = false;
      for (Literal l : c) any = any || (a[l.var()] != l.negated());
      sat = sat && any;
    }
    if (!sat) continue;
    ++satisfying;
    const bool forced = a[xs[0]] == a[xs[1]] && a[xs[1]] == a[xs[2]] && a[as[0]] != a[xs[0]] &&
                        a[as[1]] != a[xs[1]] && a[as[2]] != a[xs[2]];
    if (!forced) ++violating;
  }
  std::ostringstream os;
  os << gadget.size() << " gadget clauses, 64 assignments, " << satisfying << " satisfying, " << violating
     << " violate x1=x2=x3, a_i=~x_i";
  return {gadget.size() == 9 && satisfying == 2 && violating == 0, os.str()};
}

Outcome oracle_agreement(const std::vector<testing_corpus::Item>& corpus) {
  std::size_t checked = 0, disagreements = 0;
  for (const auto& item : corpus) {
    if (item.instance.num_vars() > kOracleAgreementMaxVars) continue;
    const auto d = dpll_sat(item.instance);
    const auto b = brute_force_sat(item.instance, kOracleAgreementMaxVars);
    if (d.has_value() != b.has_value() || (d && !satisfies(item.instance, *d))) {
      ++disagreements;
      std::cerr << "  disagreement: " << item.name << "\n";
    }
    ++checked;
  }
  std::ostringstream os;
  os << checked << " instances with n <= " << kOracleAgreementMaxVars << ", " << disagreements << " disagreements";
  return {checked > 0 && disagreements == 0, os.str()};
}

Outcome drawings(const std::vector<testing_corpus::Item>& corpus) {
  std::size_t drawn = 0, invalid = 0, oversized = 0, bend_failures = 0, slow = 0;
  double worst_ms = 0;
  for (const auto& item : corpus) {
    const auto g = incidence_graph(item.instance);
    if (g.graph.max_degree() > 4) continue;
    const auto start = Clock::now();
    const auto p = is_planar(g);
    if (!p.planar) continue;
    const auto d = orthogonal_layout(g, p);
    const double ms = seconds_since(start) * 1000;
    worst_ms = std::max(worst_ms, ms);
    ++drawn;
    if (!validate_drawing(d, g).ok()) ++invalid;
    const auto n = static_cast<std::int64_t>(std::max<std::size_t>(g.graph.num_vertices(), 1));
    if (d.width > n || d.height > n) ++oversized;
    std::size_t exceptions = 0;
    for (const auto& e : d.edges) exceptions += e.bends() > kMaxBendsPerEdge;
    if (exceptions > kMaxBendExceptions) ++bend_failures;
    if (ms >= kDrawBudgetMs) ++slow;
  }
  std::ostringstream os;
  os << drawn << " graphs, " << invalid << " invalid, " << oversized << " over |V|x|V|, " << bend_failures
     << " over the bend limit, " << slow << " over " << kDrawBudgetMs << " ms (worst " << worst_ms << " ms)";
  return {drawn > 0 && invalid == 0 && oversized == 0 && bend_failures == 0 && slow == 0, os.str()};
}

Outcome round_trip(const std::vector<testing_corpus::Item>& corpus) {
  std::size_t checked = 0, failures = 0, triple_negations = 0;
  for (const auto& item : corpus) {
    const std::string text = write_dimacs(item.instance);
    const Instance back = parse_dimacs(text);
    if (!(back == item.instance) || write_dimacs(back) != text) {
      ++failures;
      std::cerr << "  round trip failed: " << item.name << "\n";
    }
    for (const auto& c : item.instance.clauses()) {
      if (c.size() == 3 && c[0] == c[1] && c[1] == c[2] && c[0].negated()) {
        ++triple_negations;
        break;
      }
    }
    ++checked;
  }
  for (const auto& [name, text] : testing_corpus::fixture_files()) {
    const Instance once = parse_dimacs(text);
    if (!(parse_dimacs(write_dimacs(once)) == once)) {
      ++failures;
      std::cerr << "  round trip failed: " << name << "\n";
    }
    ++checked;
  }
  std::ostringstream os;
  os << checked << " instances and files, " << failures << " failures, " << triple_negations
     << " with {~z,~z,~z} clauses";
  return {failures == 0 && triple_negations > 0, os.str()};
}

// gen -> reduce -> verify -> draw, serialised.
std::string pipeline_artifacts() {
  std::string out;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Instance d = gen_dahlhaus({seed, 5});
    const Instance m = gen_planar_monotone({seed, 8});
    out += write_dimacs(d) + write_dimacs(m);
    const auto ring = ring_replace_t3(d);
    const auto pad = pad_to_e4(ring.instance);
    const auto e3 = to_exactly_3(gold_rule(m).instance);
    for (const auto* r : {&ring, &pad, &e3}) {
      out += write_dimacs(r->instance) + write_json(to_json(r->trace));
      const auto g = incidence_graph(r->instance);
      const auto drawing = orthogonal_layout(g, is_planar(g));
      out += write_json(to_json(drawing));
      out += render(normalize_variable_ports(drawing, g).drawing, RenderFormat::svg, g);
    }
    out += write_json(to_json(check_reduction("ring-t3", d)));
    out += write_json(to_json(check_reduction("multiset-e4", e3.instance)));
  }
  return out;
}

Outcome determinism() {
  const std::string a = pipeline_artifacts();
  const std::string b = pipeline_artifacts();
  std::ostringstream os;
  os << a.size() << " bytes per run, " << (a == b ? "identical" : "DIFFERENT");
  return {a == b && !a.empty(), os.str()};
}

}  // namespace

int main() {
  const auto corpus = full_corpus();
  std::vector<Application> apps;
  for (const auto& item : corpus) {
    for (const auto& rule : rule_names()) {
      if (auto r = try_rule(rule, item.instance)) apps.push_back({item.name, rule, &item.instance, std::move(*r)});
    }
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 equisatisfiability", [&] { return equisatisfiability(apps); }},
      {"2 target conformance", [&] { return conformance(apps); }},
      {"3 planarity", [&] { return planarity(apps); }},
      {"4 ring forcing", [] { return forcing(); }},
      {"5 dpll vs brute force", [&] { return oracle_agreement(corpus); }},
      {"6 drawings", [&] { return drawings(corpus); }},
      {"7 dimacs round trip", [&] { return round_trip(corpus); }},
      {"8 determinism", [] { return determinism(); }},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
    failed += !o.pass;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << (criteria.size() - failed) << "/" << criteria.size()
            << std::endl;
  return failed ? 1 : 0;
}
