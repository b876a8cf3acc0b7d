#include <doctest.h>

#include <set>

#include "corpus_set.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "pmsat/core.hpp"
#include "pmsat/reduce.hpp"

using namespace pmsat;

TEST_CASE("literal negation is an involution and round-trips through DIMACS") {
  for (int v : {1, -1, 7, -42}) {
    const Literal l = Literal::from_dimacs(v);
    CHECK(l.to_dimacs() == v);
    CHECK(~~l == l);
    CHECK((~l).to_dimacs() == -v);
  }
  CHECK_THROWS_AS(Literal::from_dimacs(0), InstanceError);
}

TEST_CASE("instance construction rejects malformed clauses") {
  CHECK_THROWS_AS(make(2, {{1}}), InstanceError);
  CHECK_THROWS_AS(make(1, {{1, -1}}), InstanceError);
  CHECK_THROWS_AS(make(2, {{1, 3}}), InstanceError);
  CHECK_THROWS_AS(make(2, {{1, 1}}), InstanceError);
  CHECK_THROWS_AS(make(1, {{1, -1, -1}}, ClauseMode::multiset), InstanceError);
  CHECK_NOTHROW(make(1, {{1, 1, 1}}, ClauseMode::multiset));
  CHECK_NOTHROW(make(3, {}));
}

TEST_CASE("occurrence counts") {
  SUBCASE("one positive and one negative each") {
    const auto c = occurrence_counts(make(2, {{1, 2}, {-1, -2}}));
    CHECK(c[1] == OccurrenceCount{1, 1});
    CHECK(c[2] == OccurrenceCount{1, 1});
  }
  SUBCASE("duplicates count with multiplicity") {
    const auto c = occurrence_counts(make(3, {{1, 2, 2}, {2, 2, 3}, {3, 3, 3}}, ClauseMode::multiset));
    CHECK(c[1] == OccurrenceCount{1, 0});
    CHECK(c[2] == OccurrenceCount{4, 0});
    CHECK(c[3] == OccurrenceCount{4, 0});
  }
  SUBCASE("no clauses") {
    const auto c = occurrence_counts(make(3, {}));
    for (Variable v = 1; v <= 3; ++v) CHECK(c[v].total() == 0);
  }
}

TEST_CASE("monotonicity predicate") {
  CHECK(is_monotone(clause_of({1, 2, 3})));
  CHECK_FALSE(is_monotone(clause_of({1, -2})));
  CHECK(is_monotone(clause_of({-4, -5, -6})));
  CHECK(is_positive(clause_of({1, 2})));
  CHECK(is_negative(clause_of({-1, -2})));
}

TEST_CASE("classify a single repeated-literal clause") {
  const auto p = classify(make(1, {{1, 1, 1}}, ClauseMode::multiset));
  CHECK(p.width_histogram == std::map<std::size_t, std::size_t>{{3, 1}});
  CHECK(p.distinct_width_histogram == std::map<std::size_t, std::size_t>{{1, 1}});
  CHECK(p.occurrences[1] == OccurrenceCount{3, 0});
  CHECK(p.multiset_used);
  CHECK(p.all_monotone);
}

TEST_CASE("variant names round-trip") {
  for (Variant v : {Variant::pm23sat, Variant::pm23sat_3, Variant::pm23sat_e3, Variant::rpm23sat, Variant::rpm23sat_4,
                    Variant::rpm23sat_e4, Variant::pm3sat_star, Variant::pm3sat_star_e4, Variant::pm3sat_star_e5}) {
    CHECK(variant_from_name(variant_name(v)) == v);
  }
  CHECK_FALSE(variant_from_name("nonsense").has_value());
}

TEST_CASE("membership examples") {
  CHECK(is_member(classify(make(2, {{1, 2}})), Variant::pm23sat_3));
  CHECK_FALSE(is_member(classify(make(2, {{1, -2}})), Variant::pm23sat));
  // RPM23SAT needs each variable negated exactly once and positive 3-clauses.
  const auto restricted = classify(make(3, {{1, 2, 3}, {-1, -2}, {-3, -1}}));
  CHECK_FALSE(is_member(restricted, Variant::rpm23sat));
  const auto ok = classify(make(4, {{1, 2, 3}, {-1, -2}, {-3, -4}, {4, 1}}));
  CHECK(is_member(ok, Variant::rpm23sat));
  // Multiset family requires width exactly three.
  CHECK(is_member(classify(make(1, {{-1, -1, -1}}, ClauseMode::multiset)), Variant::pm3sat_star));
  CHECK_FALSE(is_member(classify(make(2, {{1, 2}})), Variant::pm3sat_star));
}

// Flags recomputed by a direct scan, independent of classify.
TEST_CASE("classify agrees with an independent scan over the corpus") {
  for (const auto& item : testing_corpus::with_intermediates()) {
    CAPTURE(item.name);
    const Instance& inst = item.instance;
    const VariantProfile p = classify(inst);
    const auto occ = oracle::occurrences(inst);

    std::size_t width_sum = 0;
    bool monotone = true, positive3 = true;
    std::map<std::size_t, std::size_t> widths;
    for (const auto& c : inst.clauses()) {
      width_sum += c.size();
      ++widths[c.size()];
      bool pos = false, neg = false;
      for (Literal l : c) (l.negated() ? neg : pos) = true;
      monotone = monotone && !(pos && neg);
      std::set<Variable> distinct;
      for (Literal l : c) distinct.insert(l.var());
      if (distinct.size() == 3 && neg) positive3 = false;
    }
    std::size_t occ_sum = 0;
    bool negated_once = true;
    unsigned lo = ~0u, hi = 0;
    for (Variable v = 1; v <= inst.num_vars(); ++v) {
      CHECK(p.occurrences[v].pos == occ[v].first);
      CHECK(p.occurrences[v].neg == occ[v].second);
      occ_sum += occ[v].first + occ[v].second;
      negated_once = negated_once && occ[v].second == 1;
      lo = std::min(lo, occ[v].first + occ[v].second);
      hi = std::max(hi, occ[v].first + occ[v].second);
    }
    CHECK(occ_sum == width_sum);
    CHECK(p.width_histogram == widths);
    CHECK(p.all_monotone == monotone);
    CHECK(p.all_3clauses_positive == positive3);
    CHECK(p.each_var_negated_exactly_once == negated_once);
    if (inst.num_vars() > 0) {
      CHECK(p.min_occurrences == lo);
      CHECK(p.max_occurrences == hi);
      CHECK(p.exact_occurrences.has_value() == (lo == hi));
    }
    CHECK(classify(inst) == p);
  }
}

TEST_CASE("restricting to clauses keeps order and mode") {
  const Instance inst = make(3, {{1, 2}, {2, 3}, {-1, -3}});
  const std::vector<std::size_t> keep{2, 0};
  const Instance r = inst.restricted_to(keep);
  CHECK(r.num_clauses() == 2);
  CHECK(r.clause(0) == clause_of({-1, -3}));
  CHECK(r.clause(1) == clause_of({1, 2}));
  CHECK(r.num_vars() == 3);
}
