#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmsat/core.hpp"
#include "pmsat/reduce.hpp"

namespace pmsat {

inline constexpr std::uint32_t kDefaultBruteForceCap = 25;

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive search; returns the lexicographically first model (x1 most
// significant, false < true) or nullopt when unsatisfiable. Throws
// CapExceeded if num_vars > cap.
std::optional<Assignment> brute_force_sat(const Instance& instance, std::uint32_t cap = kDefaultBruteForceCap);

using PartialAssignment = std::vector<std::optional<bool>>;  // index 0 unused

// Applies unit propagation to fixpoint. Returns nullopt on a conflict.
std::optional<PartialAssignment> unit_propagate(const Instance& instance, PartialAssignment partial);

// DPLL with unit propagation, branching on the lowest unassigned variable,
// true first.
std::optional<Assignment> dpll_sat(const Instance& instance);

enum class EquisatVerdict { sat_sat, unsat_unsat, mismatch };

std::string verdict_name(EquisatVerdict v);

struct ReductionReport {
  std::string rule;
  VariantProfile input_profile;
  VariantProfile output_profile;

  EquisatVerdict equisat = EquisatVerdict::sat_sat;
  std::string equisat_engine;  // "brute" or "dpll"
  // Model of whichever side is satisfiable when the verdict is a mismatch.
  std::optional<Assignment> counterexample;
  std::string counterexample_side;  // "input" or "output"

  bool input_planar = false;
  bool output_planar = false;
  bool planarity_preserved = false;
  bool planarity_expected = true;

  std::string target_variant;
  bool conforms = false;
  std::vector<std::string> violations;

  ReductionTrace trace;
  double reduce_ms = 0;
  double verify_ms = 0;

  // True when every claim the rule makes holds.
  bool ok() const;
};

struct CheckOptions {
  std::uint32_t cap = kDefaultBruteForceCap;
  RuleArguments rule_args;
};

ReductionReport check_reduction(const std::string& rule, const Instance& instance, const CheckOptions& options = {});

}  // namespace pmsat
