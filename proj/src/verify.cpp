#include "pmsat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <thread>

#include "pmsat/graph.hpp"

namespace pmsat {

namespace {

struct MaskClause {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
};

// First satisfying index in [begin, end), or end.
std::uint64_t scan(const std::vector<MaskClause>& clauses, std::uint64_t begin, std::uint64_t end) {
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    const std::uint64_t inv = ~idx;
    bool ok = true;
    for (const MaskClause& c : clauses) {
      if (((idx & c.pos) | (inv & c.neg)) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) return idx;
  }
  return end;
}

}  // namespace

std::optional<Assignment> brute_force_sat(const Instance& instance, std::uint32_t cap) {
  const std::uint32_t n = instance.num_vars();
  if (n > cap || n > 62) {
    throw CapExceeded("brute force refused: " + std::to_string(n) + " variables exceed cap " + std::to_string(cap));
  }
  // Variable i maps to bit n - i so that counting upwards is lexicographic.
  std::vector<MaskClause> clauses;
  clauses.reserve(instance.num_clauses());
  for (const Clause& c : instance.clauses()) {
    MaskClause m;
    for (Literal l : c) (l.negated() ? m.neg : m.pos) |= std::uint64_t{1} << (n - l.var());
    clauses.push_back(m);
  }
  const std::uint64_t total = std::uint64_t{1} << n;

  std::uint64_t found = total;
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (n >= 18 && workers > 1) {
    const std::uint64_t chunk = (total + workers - 1) / workers;
    std::vector<std::future<std::uint64_t>> parts;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t b = std::min(total, w * chunk);
      const std::uint64_t e = std::min(total, b + chunk);
      parts.push_back(std::async(std::launch::async, [&, b, e] {
        const std::uint64_t r = scan(clauses, b, e);
        return r == e ? total : r;
      }));
    }
    for (auto& p : parts) found = std::min(found, p.get());
  } else {
    found = scan(clauses, 0, total);
  }
  if (found == total) return std::nullopt;
  Assignment a(n + 1, false);
  for (Variable v = 1; v <= n; ++v) a[v] = (found >> (n - v)) & 1;
  return a;
}

std::optional<PartialAssignment> unit_propagate(const Instance& instance, PartialAssignment partial) {
  partial.resize(instance.num_vars() + 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Clause& c : instance.clauses()) {
      std::optional<Literal> unassigned;
      bool multiple = false;
      bool satisfied = false;
      for (Literal l : c) {
        const auto& val = partial[l.var()];
        if (!val) {
          if (unassigned && *unassigned != l) multiple = true;
          unassigned = l;
        } else if (*val != l.negated()) {
          satisfied = true;
          break;
        }
      }
      if (satisfied || multiple) continue;
      if (!unassigned) return std::nullopt;
      partial[unassigned->var()] = !unassigned->negated();
      changed = true;
    }
  }
  return partial;
}

namespace {

bool dpll(const Instance& instance, PartialAssignment& partial) {
  auto propagated = unit_propagate(instance, partial);
  if (!propagated) return false;
  auto it = std::find_if(propagated->begin() + 1, propagated->end(), [](const auto& v) { return !v.has_value(); });
  if (it == propagated->end()) {
    partial = std::move(*propagated);
    return true;
  }
  const std::size_t var = static_cast<std::size_t>(it - propagated->begin());
  for (bool value : {true, false}) {
    PartialAssignment branch = *propagated;
    branch[var] = value;
    if (dpll(instance, branch)) {
      partial = std::move(branch);
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<Assignment> dpll_sat(const Instance& instance) {
  PartialAssignment partial(instance.num_vars() + 1);
  if (!dpll(instance, partial)) return std::nullopt;
  Assignment a(instance.num_vars() + 1, false);
  for (Variable v = 1; v <= instance.num_vars(); ++v) a[v] = partial[v].value_or(false);
  return a;
}

std::string verdict_name(EquisatVerdict v) {
  switch (v) {
    case EquisatVerdict::sat_sat:
      return "sat/sat";
    case EquisatVerdict::unsat_unsat:
      return "unsat/unsat";
    case EquisatVerdict::mismatch:
      break;
  }
  return "mismatch";
}

bool ReductionReport::ok() const {
  return equisat != EquisatVerdict::mismatch && conforms && (planarity_preserved || !planarity_expected);
}

namespace {

// Gold's rule keeps the (2,3)/-3 bounds only when the input already has them.
Variant gold_target(const VariantProfile& input) {
  const bool bounded = input.max_occurrences <= 3 && !input.multiset_used &&
                       std::all_of(input.width_histogram.begin(), input.width_histogram.end(),
                                   [](const auto& kv) { return kv.first >= 2 && kv.first <= 3; });
  return bounded ? Variant::pm23sat_3 : Variant::pm23sat;
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

}  // namespace

ReductionReport check_reduction(const std::string& rule, const Instance& instance, const CheckOptions& options) {
  ReductionReport report;
  report.rule = rule;

  auto t0 = std::chrono::steady_clock::now();
  Reduction result = apply_rule(rule, instance, options.rule_args);
  report.reduce_ms = elapsed_ms(t0);

  t0 = std::chrono::steady_clock::now();
  report.input_profile = classify(instance);
  report.output_profile = classify(result.instance);
  report.trace = std::move(result.trace);

  const Instance& out = result.instance;
  const bool brute = instance.num_vars() <= options.cap && out.num_vars() <= options.cap;
  report.equisat_engine = brute ? "brute" : "dpll";
  const auto in_model = brute ? brute_force_sat(instance, options.cap) : dpll_sat(instance);
  const auto out_model = brute ? brute_force_sat(out, options.cap) : dpll_sat(out);
  if (in_model.has_value() == out_model.has_value()) {
    report.equisat = in_model ? EquisatVerdict::sat_sat : EquisatVerdict::unsat_unsat;
  } else {
    report.equisat = EquisatVerdict::mismatch;
    report.counterexample = in_model ? in_model : out_model;
    report.counterexample_side = in_model ? "input" : "output";
  }

  report.input_planar = report.input_profile.planar;
  report.output_planar = report.output_profile.planar;
  report.planarity_preserved = !report.input_planar || report.output_planar;
  report.planarity_expected = preserves_planarity(rule);

  const Variant target = rule == "gold" ? gold_target(report.input_profile) : target_variant(rule);
  report.target_variant = variant_name(target);
  report.violations = variant_violations(report.output_profile, target);
  if (!report.input_planar || !report.planarity_expected) {
    // Planarity is judged separately; the variant check covers the rest.
    std::erase(report.violations, std::string("incidence graph not planar"));
  }
  report.conforms = report.violations.empty();
  report.verify_ms = elapsed_ms(t0);
  return report;
}

}  // namespace pmsat
