#include "pmsat/reduce.hpp"

#include <algorithm>
#include <set>

#include "pmsat/graph.hpp"

namespace pmsat {

namespace {

// Accumulates output clauses, tags and trace variables with sequential ids.
class Builder {
 public:
  Builder(std::string rule, std::uint32_t input_vars) : next_(input_vars + 1) {
    trace_.rule = std::move(rule);
    trace_.input_vars = input_vars;
  }

  Variable fresh(std::string role, Variable origin_var, std::optional<std::size_t> origin_clause,
                 std::size_t unit) {
    const Variable id = next_++;
    trace_.variables.push_back({id, std::move(role), origin_var, origin_clause, unit, true});
    return id;
  }

  void reuse(Variable id, std::string role, Variable origin_var, std::optional<std::size_t> origin_clause,
             std::size_t unit) {
    trace_.variables.push_back({id, std::move(role), origin_var, origin_clause, unit, false});
  }

  void copy(const Clause& c, std::size_t source) {
    clauses_.push_back(c);
    trace_.clause_map.push_back({ClauseOrigin::copied, source, "", 0});
  }
  void modified(Clause c, std::size_t source, std::string gadget, Variable anchor) {
    clauses_.push_back(std::move(c));
    trace_.clause_map.push_back({ClauseOrigin::modified, source, std::move(gadget), anchor});
  }
  void gadget(Clause c, std::string gadget, Variable anchor) {
    clauses_.push_back(std::move(c));
    trace_.clause_map.push_back({ClauseOrigin::gadget, std::nullopt, std::move(gadget), anchor});
  }

  Reduction finish(ClauseMode mode) {
    return {Instance(next_ - 1, std::move(clauses_), mode), std::move(trace_)};
  }

 private:
  Variable next_;
  std::vector<Clause> clauses_;
  ReductionTrace trace_;
};

[[noreturn]] void reject(const std::string& rule, const std::string& why) {
  throw PreconditionError(rule + ": " + why);
}

void reject_if(const std::string& rule, const std::vector<std::string>& violations) {
  if (!violations.empty()) reject(rule, violations.front());
}

// Monotone clauses of two or three distinct variables, set mode.
std::vector<std::string> pm23_shape_violations(const Instance& instance) {
  std::vector<std::string> out;
  if (instance.mode() != ClauseMode::set) out.emplace_back("instance is in multiset mode");
  for (std::size_t j = 0; j < instance.num_clauses(); ++j) {
    const Clause& c = instance.clause(j);
    const std::string name = "clause " + std::to_string(j + 1);
    if (c.size() < 2 || c.size() > 3) out.push_back(name + " has width " + std::to_string(c.size()));
    if (!is_monotone(c)) out.push_back(name + " is mixed");
  }
  return out;
}

std::vector<std::string> occurrence_violations(const Instance& instance, std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::string> out;
  const auto counts = occurrence_counts(instance);
  for (Variable v = 1; v <= instance.num_vars(); ++v) {
    const auto t = counts[v].total();
    if (t < lo || t > hi) {
      out.push_back("variable " + std::to_string(v) + " occurs " + std::to_string(t) + " times, expected " +
                    (lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi)));
    }
  }
  return out;
}

void append_boost_gadget(Builder& b, Variable x, std::size_t unit) {
  const Variable u = b.fresh("boost-u", x, std::nullopt, unit);
  const Variable v = b.fresh("boost-v", x, std::nullopt, unit);
  b.gadget({Literal::pos(x), Literal::pos(u), Literal::pos(v)}, "boost-xuv", u);
  b.gadget({Literal::pos(u), Literal::pos(v)}, "boost-uv", u);
  b.gadget({Literal::neg(u), Literal::neg(v)}, "boost-nunv", u);
}

}  // namespace

Reduction gold_rule(const Instance& instance) {
  if (instance.mode() != ClauseMode::set) reject("gold", "rule is defined on set-mode instances");
  Builder b("gold", instance.num_vars());
  for (std::size_t j = 0; j < instance.num_clauses(); ++j) {
    const Clause& c = instance.clause(j);
    if (is_monotone(c)) {
      b.copy(c, j);
      continue;
    }
    const Variable u = b.fresh("gold-u", 0, j, 0);
    Clause plus, minus;
    for (Literal l : c) (l.negated() ? minus : plus).push_back(l);
    plus.push_back(Literal::pos(u));
    minus.push_back(Literal::neg(u));
    b.modified(std::move(plus), j, "gold-pos", u);
    b.modified(std::move(minus), j, "gold-neg", u);
  }
  return b.finish(ClauseMode::set);
}

Reduction boost_occurrence(const Instance& instance, Variable x) {
  reject_if("boost", pm23_shape_violations(instance));
  reject_if("boost", occurrence_violations(instance, 0, 3));
  if (x == 0 || x > instance.num_vars()) reject("boost", "variable " + std::to_string(x) + " out of range");
  const auto t = occurrence_counts(instance)[x].total();
  if (t >= 3) {
    reject("boost", "variable " + std::to_string(x) + " already occurs " + std::to_string(t) + " times");
  }
  Builder b("boost", instance.num_vars());
  for (std::size_t j = 0; j < instance.num_clauses(); ++j) b.copy(instance.clause(j), j);
  append_boost_gadget(b, x, 0);
  return b.finish(ClauseMode::set);
}

Reduction to_exactly_3(const Instance& instance) {
  reject_if("e3", pm23_shape_violations(instance));
  reject_if("e3", occurrence_violations(instance, 0, 3));
  const auto counts = occurrence_counts(instance);
  Builder b("e3", instance.num_vars());
  for (std::size_t j = 0; j < instance.num_clauses(); ++j) b.copy(instance.clause(j), j);
  std::size_t unit = 0;
  for (Variable x = 1; x <= instance.num_vars(); ++x) {
    for (auto t = counts[x].total(); t < 3; ++t) append_boost_gadget(b, x, unit++);
  }
  return b.finish(ClauseMode::set);
}

// ---------------------------------------------------------------------------
// Ring gadget

namespace {

struct Appearance {
  std::size_t clause;
  std::size_t position;
  Literal literal;
};

// Appearances of each variable in ring order: start at the lowest clause,
// then walk the variable's rotation in the planar embedding towards the
// smaller neighbouring clause. For three appearances this is clause order.
std::vector<std::vector<Appearance>> ring_order(const Instance& instance, const PlanarityResult& planarity) {
  const IncidenceGraph g = incidence_graph(instance);
  std::vector<std::vector<Appearance>> by_var(instance.num_vars() + 1);
  for (std::size_t j = 0; j < instance.num_clauses(); ++j) {
    const Clause& c = instance.clause(j);
    for (std::size_t p = 0; p < c.size(); ++p) by_var[c[p].var()].push_back({j, p, c[p]});
  }
  for (Variable x = 1; x <= instance.num_vars(); ++x) {
    auto& apps = by_var[x];
    if (apps.size() < 2) continue;
    std::vector<std::size_t> rot;
    for (Vertex w : planarity.embedding[g.variable_vertex(x)]) rot.push_back(w - g.num_vars);
    const auto lowest = std::min_element(rot.begin(), rot.end()) - rot.begin();
    std::rotate(rot.begin(), rot.begin() + lowest, rot.end());
    if (rot.size() > 2 && rot.back() < rot[1]) std::reverse(rot.begin() + 1, rot.end());
    std::vector<Appearance> ordered;
    for (std::size_t j : rot) {
      for (const Appearance& a : apps) {
        if (a.clause == j) ordered.push_back(a);
      }
    }
    apps = std::move(ordered);
  }
  return by_var;
}

struct RingUnit {
  Variable x = 0;
  Variable a = 0;
  bool external_positive = true;
};

Reduction ring_replace(const std::string& rule, const Instance& instance, const PlanarityResult& planarity,
                       bool duplicate_to_five) {
  const auto order = ring_order(instance, planarity);

  // Unit index of each (clause, position).
  std::vector<std::vector<std::size_t>> unit_of(instance.num_clauses());
  for (std::size_t j = 0; j < instance.num_clauses(); ++j) unit_of[j].assign(instance.clause(j).size(), 0);
  for (Variable x = 1; x <= instance.num_vars(); ++x) {
    for (std::size_t i = 0; i < order[x].size(); ++i) unit_of[order[x][i].clause][order[x][i].position] = i;
  }

  Builder b(rule, instance.num_vars());
  std::vector<std::vector<RingUnit>> units(instance.num_vars() + 1);
  for (Variable x = 1; x <= instance.num_vars(); ++x) units[x].resize(order[x].size());

  // Allocation in clause order, literals left to right.
  for (std::size_t j = 0; j < instance.num_clauses(); ++j) {
    const Clause& c = instance.clause(j);
    for (std::size_t p = 0; p < c.size(); ++p) {
      const Variable x = c[p].var();
      const std::size_t i = unit_of[j][p];
      RingUnit& u = units[x][i];
      if (i == 0) {
        u.x = x;
        b.reuse(x, "ring-x", x, j, i);
      } else {
        u.x = b.fresh("ring-x", x, j, i);
      }
      u.a = b.fresh("ring-a", x, j, i);
      u.external_positive = !c[p].negated();
    }
  }

  for (std::size_t j = 0; j < instance.num_clauses(); ++j) {
    Clause out;
    for (std::size_t p = 0; p < instance.clause(j).size(); ++p) {
      const Literal l = instance.clause(j)[p];
      const RingUnit& u = units[l.var()][unit_of[j][p]];
      out.push_back(Literal::pos(l.negated() ? u.a : u.x));
    }
    b.modified(std::move(out), j, "ring-external", 0);
  }

  for (Variable x = 1; x <= instance.num_vars(); ++x) {
    const auto& ring = units[x];
    const std::size_t k = ring.size();
    for (std::size_t i = 0; i < k; ++i) {
      const RingUnit& u = ring[i];
      const Literal xi = Literal::pos(u.x);
      const Literal ai = Literal::pos(u.a);
      const Literal next_a = Literal::pos(ring[(i + 1) % k].a);
      if (!duplicate_to_five) {
        b.gadget({xi, ai}, "ring-pair-pos", u.x);
        b.gadget({~xi, ~ai}, "ring-pair-neg", u.x);
        b.gadget({xi, next_a}, "ring-link", u.x);
        continue;
      }
      // x_i is duplicated in its link clause. If that brings it to five
      // (external appearance positive) a_i is padded in both pair clauses,
      // otherwise x_i in the positive one and ~a_i in the negative one.
      if (u.external_positive) {
        b.gadget({xi, ai, ai}, "ring-pair-pos-dup-a", u.x);
      } else {
        b.gadget({xi, xi, ai}, "ring-pair-pos-dup-x", u.x);
      }
      b.gadget({~xi, ~ai, ~ai}, "ring-pair-neg-dup-a", u.x);
      b.gadget({xi, xi, next_a}, "ring-link-dup-x", u.x);
    }
  }
  return b.finish(duplicate_to_five ? ClauseMode::multiset : ClauseMode::set);
}

}  // namespace

Reduction ring_replace_t3(const Instance& instance) {
  reject_if("ring-t3", dahlhaus_violations(instance));
  const PlanarityResult planarity = is_planar(incidence_graph(instance));
  if (!planarity.planar) reject("ring-t3", "incidence graph is not planar");
  return ring_replace("ring-t3", instance, planarity, false);
}

Reduction ring_replace_e5(const Instance& instance, RingE5Options options) {
  reject_if("ring-e5", kratochvil_violations(instance));
  const IncidenceGraph g = incidence_graph(instance);
  const PlanarityResult planarity = is_planar(g);
  if (!planarity.planar) reject("ring-e5", "incidence graph is not planar");
  if (options.check_triconnected && !is_triconnected(g)) reject("ring-e5", "incidence graph is not 3-connected");
  return ring_replace("ring-e5", instance, planarity, true);
}

Reduction pad_to_e4(const Instance& instance) {
  const std::string rule = "pad-e4";
  reject_if(rule, pm23_shape_violations(instance));
  for (std::size_t j = 0; j < instance.num_clauses(); ++j) {
    const Clause& c = instance.clause(j);
    if (c.size() == 3 && !is_positive(c)) reject(rule, "clause " + std::to_string(j + 1) + " is a negative 3-clause");
  }
  const auto counts = occurrence_counts(instance);
  for (Variable v = 1; v <= instance.num_vars(); ++v) {
    if (counts[v].neg != 1) reject(rule, "variable " + std::to_string(v) + " is not negated exactly once");
  }
  reject_if(rule, occurrence_violations(instance, 3, 4));

  Builder b(rule, instance.num_vars());
  for (std::size_t j = 0; j < instance.num_clauses(); ++j) b.copy(instance.clause(j), j);
  std::size_t unit = 0;
  for (Variable x = 1; x <= instance.num_vars(); ++x) {
    if (counts[x].total() != 3) continue;
    const Literal a = Literal::pos(b.fresh("pad-a", x, std::nullopt, unit));
    const Literal bb = Literal::pos(b.fresh("pad-b", x, std::nullopt, unit));
    const Literal c = Literal::pos(b.fresh("pad-c", x, std::nullopt, unit));
    const Literal d = Literal::pos(b.fresh("pad-d", x, std::nullopt, unit));
    const Variable anchor = a.var();
    b.gadget({Literal::pos(x), a, bb}, "pad-xab", anchor);
    b.gadget({a, c, d}, "pad-acd", anchor);
    b.gadget({bb, c, d}, "pad-bcd", anchor);
    b.gadget({a, bb}, "pad-ab", anchor);
    b.gadget({~a, ~bb}, "pad-nanb", anchor);
    b.gadget({c, d}, "pad-cd", anchor);
    b.gadget({~c, ~d}, "pad-ncnd", anchor);
    ++unit;
  }
  return b.finish(ClauseMode::set);
}

Reduction multiset_e4(const Instance& instance) {
  const std::string rule = "multiset-e4";
  reject_if(rule, pm23_shape_violations(instance));
  reject_if(rule, occurrence_violations(instance, 3, 3));

  Builder b(rule, instance.num_vars());
  std::size_t unit = 0;
  for (std::size_t j = 0; j < instance.num_clauses(); ++j) {
    const Clause& c = instance.clause(j);
    if (c.size() == 3) {
      b.copy(c, j);
      continue;
    }
    // A negative 2-clause gets the mirrored pair.
    const Variable zv = b.fresh("multiset-z", 0, j, unit++);
    const Literal z = c.front().negated() ? Literal::neg(zv) : Literal::pos(zv);
    b.modified({c[0], c[1], z}, j, "multiset-xyz", zv);
    b.modified({~z, ~z, ~z}, j, "multiset-zzz", zv);
  }
  for (Variable x = 1; x <= instance.num_vars(); ++x) {
    const Literal u = Literal::pos(b.fresh("multiset-u", x, std::nullopt, x));
    const Literal v = Literal::pos(b.fresh("multiset-v", x, std::nullopt, x));
    b.gadget({Literal::pos(x), u, u}, "multiset-xuu", u.var());
    b.gadget({u, u, v}, "multiset-uuv", u.var());
    b.gadget({v, v, v}, "multiset-vvv", u.var());
  }
  return b.finish(ClauseMode::multiset);
}

Reduction r1_replace(const Instance& instance, std::size_t clause_index) {
  const std::string rule = "r1";
  reject_if(rule, pm23_shape_violations(instance));
  if (clause_index >= instance.num_clauses()) {
    reject(rule, "clause index " + std::to_string(clause_index) + " out of range");
  }
  const Clause& target = instance.clause(clause_index);
  if (target.size() != 2 || distinct_variables(target) != 2) reject(rule, "target clause is not a 2-clause");
  if (!is_monotone(target)) reject(rule, "target clause is mixed");
  const bool negative = target.front().negated();

  Builder b(rule, instance.num_vars());
  for (std::size_t j = 0; j < instance.num_clauses(); ++j) {
    if (j != clause_index) {
      b.copy(instance.clause(j), j);
      continue;
    }
    const auto sign = [&](Variable v) { return negative ? Literal::neg(v) : Literal::pos(v); };
    const Variable u = b.fresh("r1-u", 0, j, 0);
    const Variable v = b.fresh("r1-v", 0, j, 0);
    const Variable w = b.fresh("r1-w", 0, j, 0);
    b.modified({target[0], target[1], sign(u)}, j, "r1-u", u);
    b.modified({target[0], target[1], sign(v)}, j, "r1-v", v);
    b.modified({target[0], target[1], sign(w)}, j, "r1-w", w);
    b.modified({~sign(u), ~sign(v), ~sign(w)}, j, "r1-uvw", u);
  }
  return b.finish(instance.mode());
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& rule_names() {
  static const std::vector<std::string> names{"gold",     "boost",       "e3",      "ring-t3",
                                              "pad-e4",   "multiset-e4", "ring-e5", "r1"};
  return names;
}

Reduction apply_rule(const std::string& rule, const Instance& instance, const RuleArguments& args) {
  if (rule == "gold") return gold_rule(instance);
  if (rule == "boost") {
    Variable x = args.variable.value_or(0);
    if (!args.variable) {
      const auto counts = occurrence_counts(instance);
      for (Variable v = 1; v <= instance.num_vars() && x == 0; ++v) {
        if (counts[v].total() < 3) x = v;
      }
      if (x == 0) reject("boost", "no variable occurs fewer than three times");
    }
    return boost_occurrence(instance, x);
  }
  if (rule == "e3") return to_exactly_3(instance);
  if (rule == "ring-t3") return ring_replace_t3(instance);
  if (rule == "pad-e4") return pad_to_e4(instance);
  if (rule == "multiset-e4") return multiset_e4(instance);
  if (rule == "ring-e5") return ring_replace_e5(instance, args.ring_e5);
  if (rule == "r1") {
    std::optional<std::size_t> index = args.clause_index;
    for (std::size_t j = 0; j < instance.num_clauses() && !index; ++j) {
      const Clause& c = instance.clause(j);
      if (c.size() == 2 && distinct_variables(c) == 2 && is_monotone(c)) index = j;
    }
    if (!index) reject("r1", "no monotone 2-clause to replace");
    return r1_replace(instance, *index);
  }
  throw std::invalid_argument("unknown rule '" + rule + "'");
}

Variant target_variant(const std::string& rule) {
  if (rule == "gold" || rule == "boost") return Variant::pm23sat_3;
  if (rule == "e3") return Variant::pm23sat_e3;
  if (rule == "ring-t3") return Variant::rpm23sat_4;
  if (rule == "pad-e4") return Variant::rpm23sat_e4;
  if (rule == "multiset-e4") return Variant::pm3sat_star_e4;
  if (rule == "ring-e5") return Variant::pm3sat_star_e5;
  if (rule == "r1") return Variant::pm23sat;
  throw std::invalid_argument("unknown rule '" + rule + "'");
}

bool preserves_planarity(const std::string& rule) { return rule != "r1"; }

}  // namespace pmsat
