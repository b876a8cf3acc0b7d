#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pmsat/core.hpp"

namespace pmsat {

// A reduction's input does not meet its precondition. The message names the
// violated condition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A variable a reduction introduced (or, for ring units, re-used as x_1).
struct TraceVariable {
  Variable id = 0;
  std::string role;                     // gold-u, boost-u, ring-x, ring-a, pad-a, multiset-z, r1-u, ...
  Variable origin_variable = 0;         // variable the gadget stands for, 0 if none
  std::optional<std::size_t> origin_clause;  // input clause the variable is tied to
  std::size_t unit = 0;                 // ring unit index (0-based) or gadget index
  bool fresh = true;                    // false only for re-used ids

  friend bool operator==(const TraceVariable&, const TraceVariable&) = default;
};

enum class ClauseOrigin { copied, modified, gadget };

struct ClauseTag {
  ClauseOrigin origin = ClauseOrigin::copied;
  std::optional<std::size_t> source;  // input clause index for copied / modified
  std::string gadget;                 // gadget clause name, empty for copied
  Variable anchor = 0;                // variable the gadget clause is generated from

  friend bool operator==(const ClauseTag&, const ClauseTag&) = default;
};

struct ReductionTrace {
  std::string rule;
  std::uint32_t input_vars = 0;
  std::vector<TraceVariable> variables;
  std::vector<ClauseTag> clause_map;  // one tag per output clause

  friend bool operator==(const ReductionTrace&, const ReductionTrace&) = default;
};

struct Reduction {
  Instance instance;
  ReductionTrace trace;
};

// Mixed clause C+ u C- becomes C+ + {u}, C- + {~u}.
Reduction gold_rule(const Instance& instance);

// Adds {x,u,v}, {u,v}, {~u,~v}; x must occur at most twice.
Reduction boost_occurrence(const Instance& instance, Variable x);

// Boosts every variable of a PM23SAT-3 instance to exactly three occurrences.
Reduction to_exactly_3(const Instance& instance);

// Replaces every variable of a Dahlhaus-form instance by a ring of
// (x_i, a_i) units.
Reduction ring_replace_t3(const Instance& instance);

// Raises three-occurrence variables of an RPM23SAT-4 instance to four.
Reduction pad_to_e4(const Instance& instance);

// PM23SAT-E3 to multiset PM3SAT*-E4.
Reduction multiset_e4(const Instance& instance);

struct RingE5Options {
  // Run the brute-force 3-connectivity check on the input incidence graph.
  bool check_triconnected = true;
};

// Kratochvil-form input to multiset PM3SAT*-E5 with biconnected graph.
Reduction ring_replace_e5(const Instance& instance, RingE5Options options = {});

// Replaces a monotone 2-clause {x,y} by {x,y,u}, {x,y,v}, {x,y,w}, {~u,~v,~w}.
// The input must be monotone with clause widths in {2,3}.
Reduction r1_replace(const Instance& instance, std::size_t clause_index);

// Rebuilds the output instance from the input and the trace alone.
Instance replay_trace(const Instance& input, const ReductionTrace& trace);

// Rule names as used on the command line.
const std::vector<std::string>& rule_names();

struct RuleArguments {
  std::optional<Variable> variable;         // boost; default: first variable with < 3 occurrences
  std::optional<std::size_t> clause_index;  // r1; default: first monotone 2-clause
  RingE5Options ring_e5;
};

Reduction apply_rule(const std::string& rule, const Instance& instance, const RuleArguments& args = {});

// Variant the rule's output is claimed to belong to.
Variant target_variant(const std::string& rule);

// Whether the rule is claimed to keep planar inputs planar.
bool preserves_planarity(const std::string& rule);

}  // namespace pmsat
