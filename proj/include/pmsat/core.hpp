#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pmsat {

// Raised when a clause list cannot form a valid Instance.
class InstanceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// 1-based variable index.
using Variable = std::uint32_t;

enum class Polarity : std::uint8_t { positive, negative };

class Literal {
 public:
  constexpr Literal() = default;
  constexpr Literal(Variable var, Polarity pol) : var_(var), negated_(pol == Polarity::negative) {}

  static constexpr Literal pos(Variable v) { return {v, Polarity::positive}; }
  static constexpr Literal neg(Variable v) { return {v, Polarity::negative}; }
  // DIMACS integer encoding: +v / -v. Zero is not a literal.
  static Literal from_dimacs(int value);

  constexpr Variable var() const { return var_; }
  constexpr bool negated() const { return negated_; }
  constexpr Polarity polarity() const { return negated_ ? Polarity::negative : Polarity::positive; }
  constexpr int to_dimacs() const { return negated_ ? -static_cast<int>(var_) : static_cast<int>(var_); }

  constexpr Literal operator~() const { return {var_, negated_ ? Polarity::positive : Polarity::negative}; }

  friend constexpr bool operator==(Literal, Literal) = default;
  friend constexpr auto operator<=>(Literal a, Literal b) { return a.to_dimacs() <=> b.to_dimacs(); }

 private:
  Variable var_ = 0;
  bool negated_ = false;
};

using Clause = std::vector<Literal>;

enum class ClauseMode : std::uint8_t { set, multiset };

// Uniform polarity. The empty clause counts as monotone.
bool is_monotone(std::span<const Literal> clause);
bool is_positive(std::span<const Literal> clause);
bool is_negative(std::span<const Literal> clause);
// Number of distinct variables (the k of a k-clause).
std::size_t distinct_variables(std::span<const Literal> clause);
bool has_repeated_literal(std::span<const Literal> clause);

// A CNF formula over variables 1..n. Immutable after construction; the
// constructor rejects clauses with fewer than two literals, tautologies,
// out-of-range variables and (in set mode) repeated variables.
class Instance {
 public:
  Instance() = default;
  Instance(std::uint32_t num_vars, std::vector<Clause> clauses, ClauseMode mode = ClauseMode::set);

  std::uint32_t num_vars() const { return num_vars_; }
  std::size_t num_clauses() const { return clauses_.size(); }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& clause(std::size_t j) const { return clauses_.at(j); }
  ClauseMode mode() const { return mode_; }

  // Keeps the listed clauses (in the given order) over the same variable set.
  Instance restricted_to(std::span<const std::size_t> clause_indices) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::uint32_t num_vars_ = 0;
  std::vector<Clause> clauses_;
  ClauseMode mode_ = ClauseMode::set;
};

// Returns the reason the clause is invalid under `mode`, or nullopt.
std::optional<std::string> clause_violation(std::span<const Literal> clause, std::uint32_t num_vars,
                                            ClauseMode mode);

struct OccurrenceCount {
  std::uint32_t pos = 0;
  std::uint32_t neg = 0;
  std::uint32_t total() const { return pos + neg; }
  friend bool operator==(const OccurrenceCount&, const OccurrenceCount&) = default;
};

// Indexed by variable id; slot 0 is unused. Duplicated literals count with multiplicity.
std::vector<OccurrenceCount> occurrence_counts(const Instance& instance);

// Truth value per variable; index 0 unused.
using Assignment = std::vector<bool>;

bool satisfies(const Instance& instance, const Assignment& assignment);

// ---------------------------------------------------------------------------
// Variant classification

struct VariantProfile {
  std::uint32_t num_vars = 0;
  std::size_t num_clauses = 0;
  ClauseMode mode = ClauseMode::set;
  std::vector<OccurrenceCount> occurrences;  // slot 0 unused
  std::map<std::size_t, std::size_t> width_histogram;           // literals, with multiplicity
  std::map<std::size_t, std::size_t> distinct_width_histogram;  // distinct variables

  bool all_monotone = false;
  bool all_3clauses_positive = false;
  bool each_var_negated_exactly_once = false;
  bool multiset_used = false;
  bool planar = false;
  bool connected = false;
  bool biconnected = false;

  std::uint32_t max_occurrences = 0;
  std::uint32_t min_occurrences = 0;
  std::optional<std::uint32_t> exact_occurrences;
  std::size_t isolated_variables = 0;

  friend bool operator==(const VariantProfile&, const VariantProfile&) = default;
};

VariantProfile classify(const Instance& instance);

enum class Variant {
  pm23sat,        // planar monotone (2,3)-SAT
  pm23sat_3,
  pm23sat_e3,
  rpm23sat,       // restricted planar monotone (2,3)-SAT
  rpm23sat_4,     // ... -4 with every variable at least three times
  rpm23sat_e4,
  pm3sat_star,    // planar monotone 3-SAT* (multiset clauses)
  pm3sat_star_e4,
  pm3sat_star_e5  // ... -E5 with a biconnected incidence graph
};

std::string variant_name(Variant v);
std::optional<Variant> variant_from_name(const std::string& name);

// Conditions of `v` the profile fails; empty means membership.
std::vector<std::string> variant_violations(const VariantProfile& profile, Variant v);
inline bool is_member(const VariantProfile& profile, Variant v) { return variant_violations(profile, v).empty(); }

// Input shape consumed by the ring reduction: every variable occurs in
// exactly three distinct clauses, one literal twice and its complement once,
// clause widths in {2,3}.
std::vector<std::string> dahlhaus_violations(const Instance& instance);

// Input shape consumed by the E5 reduction: set mode, every clause exactly
// three distinct variables, every variable three or four times. Graph
// conditions (planar, 3-connected) are checked separately.
std::vector<std::string> kratochvil_violations(const Instance& instance);

}  // namespace pmsat
