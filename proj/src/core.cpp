#include "pmsat/core.hpp"

#include <algorithm>
#include <set>

#include "pmsat/graph.hpp"

namespace pmsat {

Literal Literal::from_dimacs(int value) {
  if (value == 0) throw InstanceError("0 is not a literal");
  return value > 0 ? pos(static_cast<Variable>(value)) : neg(static_cast<Variable>(-static_cast<long long>(value)));
}

bool is_positive(std::span<const Literal> clause) {
  return std::none_of(clause.begin(), clause.end(), [](Literal l) { return l.negated(); });
}

bool is_negative(std::span<const Literal> clause) {
  return std::all_of(clause.begin(), clause.end(), [](Literal l) { return l.negated(); });
}

bool is_monotone(std::span<const Literal> clause) { return is_positive(clause) || is_negative(clause); }

std::size_t distinct_variables(std::span<const Literal> clause) {
  std::set<Variable> vars;
  for (Literal l : clause) vars.insert(l.var());
  return vars.size();
}

bool has_repeated_literal(std::span<const Literal> clause) {
  std::set<Literal> seen;
  for (Literal l : clause) {
    if (!seen.insert(l).second) return true;
  }
  return false;
}

std::optional<std::string> clause_violation(std::span<const Literal> clause, std::uint32_t num_vars,
                                            ClauseMode mode) {
  if (clause.size() < 2) return "clause has fewer than two literals";
  std::set<Literal> seen;
  for (Literal l : clause) {
    if (l.var() == 0 || l.var() > num_vars) {
      return "literal " + std::to_string(l.to_dimacs()) + " out of range 1.." + std::to_string(num_vars);
    }
    if (seen.count(~l)) return "tautological clause on variable " + std::to_string(l.var());
    if (!seen.insert(l).second && mode == ClauseMode::set) {
      return "duplicate literal " + std::to_string(l.to_dimacs()) + " in set mode";
    }
  }
  return std::nullopt;
}

Instance::Instance(std::uint32_t num_vars, std::vector<Clause> clauses, ClauseMode mode)
    : num_vars_(num_vars), clauses_(std::move(clauses)), mode_(mode) {
  for (std::size_t j = 0; j < clauses_.size(); ++j) {
    if (auto why = clause_violation(clauses_[j], num_vars_, mode_)) {
      throw InstanceError("clause " + std::to_string(j + 1) + ": " + *why);
    }
  }
}

Instance Instance::restricted_to(std::span<const std::size_t> clause_indices) const {
  std::vector<Clause> kept;
  kept.reserve(clause_indices.size());
  for (std::size_t j : clause_indices) kept.push_back(clause(j));
  return Instance(num_vars_, std::move(kept), mode_);
}

std::vector<OccurrenceCount> occurrence_counts(const Instance& instance) {
  std::vector<OccurrenceCount> counts(instance.num_vars() + 1);
  for (const Clause& c : instance.clauses()) {
    for (Literal l : c) {
      if (l.negated()) {
        ++counts[l.var()].neg;
      } else {
        ++counts[l.var()].pos;
      }
    }
  }
  return counts;
}

bool satisfies(const Instance& instance, const Assignment& assignment) {
  for (const Clause& c : instance.clauses()) {
    bool sat = std::any_of(c.begin(), c.end(), [&](Literal l) { return assignment.at(l.var()) != l.negated(); });
    if (!sat) return false;
  }
  return true;
}

VariantProfile classify(const Instance& instance) {
  VariantProfile p;
  p.num_vars = instance.num_vars();
  p.num_clauses = instance.num_clauses();
  p.mode = instance.mode();
  p.occurrences = occurrence_counts(instance);

  p.all_monotone = true;
  p.all_3clauses_positive = true;
  for (const Clause& c : instance.clauses()) {
    const std::size_t k = distinct_variables(c);
    ++p.width_histogram[c.size()];
    ++p.distinct_width_histogram[k];
    p.all_monotone = p.all_monotone && is_monotone(c);
    if (k == 3 && !is_positive(c)) p.all_3clauses_positive = false;
    if (has_repeated_literal(c)) p.multiset_used = true;
  }

  p.each_var_negated_exactly_once = true;
  p.min_occurrences = instance.num_vars() == 0 ? 0 : UINT32_MAX;
  for (Variable v = 1; v <= instance.num_vars(); ++v) {
    const auto& oc = p.occurrences[v];
    if (oc.neg != 1) p.each_var_negated_exactly_once = false;
    if (oc.total() == 0) ++p.isolated_variables;
    p.max_occurrences = std::max(p.max_occurrences, oc.total());
    p.min_occurrences = std::min(p.min_occurrences, oc.total());
  }
  if (instance.num_vars() > 0 && p.min_occurrences == p.max_occurrences) p.exact_occurrences = p.max_occurrences;

  const IncidenceGraph g = incidence_graph(instance);
  p.planar = is_planar(g).planar;
  p.connected = is_connected(g.graph);
  p.biconnected = is_biconnected(g.graph);
  return p;
}

namespace {

struct VariantInfo {
  Variant variant;
  const char* name;
};

constexpr VariantInfo kVariants[] = {
    {Variant::pm23sat, "PM23SAT"},           {Variant::pm23sat_3, "PM23SAT-3"},
    {Variant::pm23sat_e3, "PM23SAT-E3"},     {Variant::rpm23sat, "RPM23SAT"},
    {Variant::rpm23sat_4, "RPM23SAT-4"},     {Variant::rpm23sat_e4, "RPM23SAT-E4"},
    {Variant::pm3sat_star, "PM3SAT*"},       {Variant::pm3sat_star_e4, "PM3SAT*-E4"},
    {Variant::pm3sat_star_e5, "PM3SAT*-E5"},
};

bool widths_within(const std::map<std::size_t, std::size_t>& hist, std::size_t lo, std::size_t hi) {
  return std::all_of(hist.begin(), hist.end(), [&](const auto& kv) { return kv.first >= lo && kv.first <= hi; });
}

void require(std::vector<std::string>& out, bool cond, const char* what) {
  if (!cond) out.emplace_back(what);
}

void require_occurrences(std::vector<std::string>& out, const VariantProfile& p, std::uint32_t lo,
                         std::uint32_t hi) {
  if (p.num_vars == 0) return;
  if (p.min_occurrences < lo || p.max_occurrences > hi) {
    std::string range = lo == hi ? "exactly " + std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
    out.push_back("occurrences " + std::to_string(p.min_occurrences) + ".." + std::to_string(p.max_occurrences) +
                  " not within " + range);
  }
}

}  // namespace

std::string variant_name(Variant v) {
  for (const auto& info : kVariants) {
    if (info.variant == v) return info.name;
  }
  return "?";
}

std::optional<Variant> variant_from_name(const std::string& name) {
  for (const auto& info : kVariants) {
    if (name == info.name) return info.variant;
  }
  return std::nullopt;
}

std::vector<std::string> variant_violations(const VariantProfile& p, Variant v) {
  std::vector<std::string> out;
  require(out, p.planar, "incidence graph not planar");
  require(out, p.all_monotone, "mixed clause present");

  switch (v) {
    case Variant::pm23sat:
    case Variant::pm23sat_3:
    case Variant::pm23sat_e3:
    case Variant::rpm23sat:
    case Variant::rpm23sat_4:
    case Variant::rpm23sat_e4:
      require(out, !p.multiset_used, "repeated literal in a clause");
      require(out, widths_within(p.width_histogram, 2, 3), "clause width outside {2,3}");
      break;
    case Variant::pm3sat_star:
    case Variant::pm3sat_star_e4:
    case Variant::pm3sat_star_e5:
      require(out, widths_within(p.width_histogram, 3, 3), "clause width not exactly 3");
      break;
  }

  switch (v) {
    case Variant::rpm23sat:
    case Variant::rpm23sat_4:
    case Variant::rpm23sat_e4:
      require(out, p.all_3clauses_positive, "3-clause with negative literal");
      require(out, p.each_var_negated_exactly_once, "variable not negated exactly once");
      break;
    default:
      break;
  }

  switch (v) {
    case Variant::pm23sat_3:
      require_occurrences(out, p, 0, 3);
      break;
    case Variant::pm23sat_e3:
      require_occurrences(out, p, 3, 3);
      break;
    case Variant::rpm23sat_4:
      require_occurrences(out, p, 3, 4);
      break;
    case Variant::rpm23sat_e4:
    case Variant::pm3sat_star_e4:
      require_occurrences(out, p, 4, 4);
      break;
    case Variant::pm3sat_star_e5:
      require_occurrences(out, p, 5, 5);
      require(out, p.biconnected, "incidence graph not biconnected");
      break;
    default:
      break;
  }
  return out;
}

std::vector<std::string> dahlhaus_violations(const Instance& instance) {
  std::vector<std::string> out;
  if (instance.mode() != ClauseMode::set) out.emplace_back("instance is in multiset mode");
  for (std::size_t j = 0; j < instance.num_clauses(); ++j) {
    const std::size_t w = instance.clause(j).size();
    if (w < 2 || w > 3) out.push_back("clause " + std::to_string(j + 1) + " has width " + std::to_string(w));
  }
  const auto counts = occurrence_counts(instance);
  std::vector<std::set<std::size_t>> clauses_of(instance.num_vars() + 1);
  for (std::size_t j = 0; j < instance.num_clauses(); ++j) {
    for (Literal l : instance.clause(j)) clauses_of[l.var()].insert(j);
  }
  for (Variable v = 1; v <= instance.num_vars(); ++v) {
    const auto& c = counts[v];
    const std::string name = "variable " + std::to_string(v);
    if (c.total() != 3) {
      out.push_back(name + " occurs " + std::to_string(c.total()) + " times, expected 3");
    } else if (!((c.pos == 2 && c.neg == 1) || (c.pos == 1 && c.neg == 2))) {
      out.push_back(name + " has polarity split (" + std::to_string(c.pos) + "," + std::to_string(c.neg) +
                    "), expected (2,1) or (1,2)");
    } else if (clauses_of[v].size() != 3) {
      out.push_back(name + " does not occur in three distinct clauses");
    }
  }
  return out;
}

std::vector<std::string> kratochvil_violations(const Instance& instance) {
  std::vector<std::string> out;
  if (instance.mode() != ClauseMode::set) out.emplace_back("instance is in multiset mode");
  for (std::size_t j = 0; j < instance.num_clauses(); ++j) {
    const Clause& c = instance.clause(j);
    if (c.size() != 3 || distinct_variables(c) != 3) {
      out.push_back("clause " + std::to_string(j + 1) + " does not contain exactly three distinct variables");
    }
  }
  const auto counts = occurrence_counts(instance);
  for (Variable v = 1; v <= instance.num_vars(); ++v) {
    const auto t = counts[v].total();
    if (t < 3 || t > 4) {
      out.push_back("variable " + std::to_string(v) + " occurs " + std::to_string(t) + " times, expected 3 or 4");
    }
  }
  return out;
}

}  // namespace pmsat
