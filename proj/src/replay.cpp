#include <map>
#include <tuple>

#include "pmsat/reduce.hpp"

namespace pmsat {

namespace {

class TraceIndex {
 public:
  explicit TraceIndex(const ReductionTrace& trace) {
    for (const TraceVariable& v : trace.variables) {
      by_id_[v.id] = &v;
      by_unit_[{v.role, v.origin_variable, v.unit}] = v.id;
      ++ring_size_[v.role == "ring-x" ? v.origin_variable : 0];
    }
  }

  const TraceVariable& at(Variable id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) throw std::invalid_argument("trace has no variable " + std::to_string(id));
    return *it->second;
  }

  Variable sibling(const std::string& role, Variable origin, std::size_t unit) const {
    auto it = by_unit_.find({role, origin, unit});
    if (it == by_unit_.end()) {
      throw std::invalid_argument("trace has no " + role + " for variable " + std::to_string(origin) + " unit " +
                                  std::to_string(unit));
    }
    return it->second;
  }

  // Ring unit holding the appearance of `var` in clause `j`.
  const TraceVariable& ring_unit(Variable var, std::size_t j) const {
    for (const auto& [id, v] : by_id_) {
      if (v->role == "ring-x" && v->origin_variable == var && v->origin_clause == j) return *v;
    }
    throw std::invalid_argument("trace has no ring unit for variable " + std::to_string(var));
  }

  std::size_t ring_size(Variable origin) const { return ring_size_.at(origin); }

 private:
  std::map<Variable, const TraceVariable*> by_id_;
  std::map<std::tuple<std::string, Variable, std::size_t>, Variable> by_unit_;
  std::map<Variable, std::size_t> ring_size_;
};

Literal pos(Variable v) { return Literal::pos(v); }

}  // namespace

Instance replay_trace(const Instance& input, const ReductionTrace& trace) {
  const TraceIndex index(trace);
  std::uint32_t num_vars = input.num_vars();
  for (const TraceVariable& v : trace.variables) num_vars += v.fresh ? 1 : 0;

  std::vector<Clause> out;
  out.reserve(trace.clause_map.size());
  for (const ClauseTag& tag : trace.clause_map) {
    const Clause* src = tag.source ? &input.clause(*tag.source) : nullptr;
    if (tag.origin == ClauseOrigin::copied) {
      out.push_back(*src);
      continue;
    }
    const std::string& g = tag.gadget;
    const Variable anchor = tag.anchor;

    if (g == "gold-pos" || g == "gold-neg") {
      const bool neg = g == "gold-neg";
      Clause c;
      for (Literal l : *src) {
        if (l.negated() == neg) c.push_back(l);
      }
      c.push_back(neg ? Literal::neg(anchor) : pos(anchor));
      out.push_back(std::move(c));
    } else if (g.rfind("boost-", 0) == 0) {
      const TraceVariable& u = index.at(anchor);
      const Variable v = index.sibling("boost-v", u.origin_variable, u.unit);
      if (g == "boost-xuv") out.push_back({pos(u.origin_variable), pos(u.id), pos(v)});
      if (g == "boost-uv") out.push_back({pos(u.id), pos(v)});
      if (g == "boost-nunv") out.push_back({Literal::neg(u.id), Literal::neg(v)});
    } else if (g == "ring-external") {
      Clause c;
      for (Literal l : *src) {
        const TraceVariable& x = index.ring_unit(l.var(), *tag.source);
        c.push_back(pos(l.negated() ? index.sibling("ring-a", x.origin_variable, x.unit) : x.id));
      }
      out.push_back(std::move(c));
    } else if (g.rfind("ring-", 0) == 0) {
      const TraceVariable& x = index.at(anchor);
      const std::size_t k = index.ring_size(x.origin_variable);
      const Literal xi = pos(x.id);
      const Literal ai = pos(index.sibling("ring-a", x.origin_variable, x.unit));
      const Literal next_a = pos(index.sibling("ring-a", x.origin_variable, (x.unit + 1) % k));
      if (g == "ring-pair-pos") out.push_back({xi, ai});
      if (g == "ring-pair-neg") out.push_back({~xi, ~ai});
      if (g == "ring-link") out.push_back({xi, next_a});
      if (g == "ring-pair-pos-dup-a") out.push_back({xi, ai, ai});
      if (g == "ring-pair-pos-dup-x") out.push_back({xi, xi, ai});
      if (g == "ring-pair-neg-dup-a") out.push_back({~xi, ~ai, ~ai});
      if (g == "ring-link-dup-x") out.push_back({xi, xi, next_a});
    } else if (g.rfind("pad-", 0) == 0) {
      const TraceVariable& a = index.at(anchor);
      const Literal x = pos(a.origin_variable);
      const Literal av = pos(a.id);
      const Literal b = pos(index.sibling("pad-b", a.origin_variable, a.unit));
      const Literal c = pos(index.sibling("pad-c", a.origin_variable, a.unit));
      const Literal d = pos(index.sibling("pad-d", a.origin_variable, a.unit));
      if (g == "pad-xab") out.push_back({x, av, b});
      if (g == "pad-acd") out.push_back({av, c, d});
      if (g == "pad-bcd") out.push_back({b, c, d});
      if (g == "pad-ab") out.push_back({av, b});
      if (g == "pad-nanb") out.push_back({~av, ~b});
      if (g == "pad-cd") out.push_back({c, d});
      if (g == "pad-ncnd") out.push_back({~c, ~d});
    } else if (g == "multiset-xyz" || g == "multiset-zzz") {
      const Literal z = src->front().negated() ? Literal::neg(anchor) : pos(anchor);
      if (g == "multiset-xyz") out.push_back({(*src)[0], (*src)[1], z});
      if (g == "multiset-zzz") out.push_back({~z, ~z, ~z});
    } else if (g.rfind("multiset-", 0) == 0) {
      const TraceVariable& u = index.at(anchor);
      const Literal x = pos(u.origin_variable);
      const Literal uu = pos(u.id);
      const Literal v = pos(index.sibling("multiset-v", u.origin_variable, u.unit));
      if (g == "multiset-xuu") out.push_back({x, uu, uu});
      if (g == "multiset-uuv") out.push_back({uu, uu, v});
      if (g == "multiset-vvv") out.push_back({v, v, v});
    } else if (g.rfind("r1-", 0) == 0) {
      const bool neg = src->front().negated();
      auto sign = [&](Variable v) { return neg ? Literal::neg(v) : pos(v); };
      const Variable u = index.sibling("r1-u", 0, 0);
      const Variable v = index.sibling("r1-v", 0, 0);
      const Variable w = index.sibling("r1-w", 0, 0);
      if (g == "r1-uvw") {
        out.push_back({~sign(u), ~sign(v), ~sign(w)});
      } else {
        out.push_back({(*src)[0], (*src)[1], sign(anchor)});
      }
    } else {
      throw std::invalid_argument("unknown gadget '" + g + "' in trace");
    }
  }

  const bool multiset = trace.rule == "multiset-e4" || trace.rule == "ring-e5" || input.mode() == ClauseMode::multiset;
  return Instance(num_vars, std::move(out), multiset ? ClauseMode::multiset : ClauseMode::set);
}

}  // namespace pmsat
