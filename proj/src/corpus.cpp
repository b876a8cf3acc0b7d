#include "pmsat/corpus.hpp"

#include <array>
#include <random>

namespace pmsat {

namespace {

// Portable bounded draw (the standard distributions differ across libraries).
std::size_t draw(std::mt19937_64& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

// Random non-crossing partition of positions [lo, hi) into blocks of two or
// three positions. Gaps of one position are never left behind.
void noncrossing_blocks(std::mt19937_64& rng, std::size_t lo, std::size_t hi, std::vector<std::vector<std::size_t>>& out) {
  if (hi - lo < 2) return;
  auto fillable = [](std::size_t len) { return len != 1; };
  // Block containing `lo`: {lo, b} or {lo, b, c}.
  std::vector<std::array<std::size_t, 2>> choices;  // c == 0 marks a pair
  for (std::size_t b = lo + 1; b < hi; ++b) {
    if (!fillable(b - lo - 1)) continue;
    if (fillable(hi - b - 1)) choices.push_back({b, 0});
    for (std::size_t c = b + 1; c < hi; ++c) {
      if (fillable(c - b - 1) && fillable(hi - c - 1)) choices.push_back({b, c});
    }
  }
  const auto [b, c] = choices[draw(rng, choices.size())];
  if (c == 0) {
    out.push_back({lo, b});
    noncrossing_blocks(rng, lo + 1, b, out);
    noncrossing_blocks(rng, b + 1, hi, out);
  } else {
    out.push_back({lo, b, c});
    noncrossing_blocks(rng, lo + 1, b, out);
    noncrossing_blocks(rng, b + 1, c, out);
    noncrossing_blocks(rng, c + 1, hi, out);
  }
}

// Variables 1..k on a cycle of 2-clauses (a single clause when k == 2),
// plus one clause per block of a non-crossing partition of the cycle. Each
// block clause sits inside or outside the cycle, so the incidence graph stays
// planar.
std::vector<std::vector<Variable>> cycle_with_blocks(std::mt19937_64& rng, std::uint32_t k, bool double_edge_for_two) {
  std::vector<std::vector<Variable>> clauses;
  if (k == 2) {
    clauses.push_back({1, 2});
    if (double_edge_for_two) clauses.push_back({1, 2});
  } else {
    for (Variable v = 1; v <= k; ++v) clauses.push_back({v, v % k + 1});
  }
  std::vector<std::vector<std::size_t>> blocks;
  noncrossing_blocks(rng, 0, k, blocks);
  for (const auto& b : blocks) {
    std::vector<Variable> c;
    for (std::size_t p : b) c.push_back(static_cast<Variable>(p + 1));
    clauses.push_back(std::move(c));
  }
  return clauses;
}

}  // namespace

Instance gen_dahlhaus(const GeneratorConfig& config) {
  if (config.num_vars < 2) throw GeneratorError("gen_dahlhaus needs at least 2 variables");
  std::mt19937_64 rng(config.seed);
  const auto shape = cycle_with_blocks(rng, config.num_vars, true);

  // For each variable, one of its three occurrences carries the minority sign.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> slots(config.num_vars + 1);
  for (std::size_t j = 0; j < shape.size(); ++j) {
    for (std::size_t i = 0; i < shape[j].size(); ++i) slots[shape[j][i]].push_back({j, i});
  }
  std::vector<Clause> clauses(shape.size());
  for (std::size_t j = 0; j < shape.size(); ++j) {
    for (Variable v : shape[j]) clauses[j].push_back(Literal::pos(v));
  }
  for (Variable v = 1; v <= config.num_vars; ++v) {
    const bool majority_negative = draw(rng, 2) == 1;
    const std::size_t odd = draw(rng, slots[v].size());
    for (std::size_t s = 0; s < slots[v].size(); ++s) {
      const bool negative = (s == odd) != majority_negative;
      auto [j, i] = slots[v][s];
      if (negative) clauses[j][i] = Literal::neg(v);
    }
  }
  return Instance(config.num_vars, std::move(clauses));
}

Instance gen_planar_monotone(const GeneratorConfig& config) {
  if (config.num_vars < 1) throw GeneratorError("gen_planar_monotone needs at least 1 variable");
  if (config.num_vars == 1) return Instance(1, {});
  std::mt19937_64 rng(config.seed);
  const auto shape = cycle_with_blocks(rng, config.num_vars, false);
  const std::size_t cycle_clauses = config.num_vars == 2 ? 1 : config.num_vars;
  std::vector<Clause> clauses;
  for (std::size_t j = 0; j < shape.size(); ++j) {
    // Roughly a quarter of the block clauses are left out.
    if (j >= cycle_clauses && draw(rng, 4) == 0) continue;
    const bool negative = draw(rng, 2) == 1;
    Clause c;
    for (Variable v : shape[j]) c.push_back(negative ? Literal::neg(v) : Literal::pos(v));
    clauses.push_back(std::move(c));
  }
  return Instance(config.num_vars, std::move(clauses));
}

namespace {

struct FixtureShape {
  const char* name;
  std::uint32_t num_vars;
  std::vector<std::array<Variable, 3>> clauses;
};

// Vertex-face incidences of the three triangulated spheres whose vertex
// degrees are all 3 or 4: tetrahedron, triangular bipyramid, octahedron.
const std::vector<FixtureShape>& shapes() {
  static const std::vector<FixtureShape> s{
      {"tetrahedron", 4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}},
      // 1 = north, 2 = south, 3..5 = equator
      {"bipyramid", 5, {{1, 3, 4}, {1, 4, 5}, {1, 5, 3}, {2, 3, 4}, {2, 4, 5}, {2, 5, 3}}},
      // 1/2 = +X/-X, 3/4 = +Y/-Y, 5/6 = +Z/-Z
      {"octahedron",
       6,
       {{1, 3, 5}, {1, 3, 6}, {1, 4, 5}, {1, 4, 6}, {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {2, 4, 6}}},
  };
  return s;
}

struct FixtureEntry {
  std::size_t shape;
  const char* signs;  // "positive", "alternating" or "negated-first"
  bool satisfiable;
};

// Satisfiability recorded from exhaustive search.
constexpr std::array<FixtureEntry, 7> kFixtures{{
    {0, "positive", true},
    {0, "alternating", true},
    {1, "positive", true},
    {1, "alternating", true},
    {2, "positive", true},
    {2, "alternating", true},
    {2, "negated-first", true},
}};

}  // namespace

std::size_t kratochvil_fixture_count() { return kFixtures.size(); }

KratochvilFixture gen_kratochvil_fixture(std::size_t index) {
  if (index >= kFixtures.size()) {
    throw GeneratorError("unknown Kratochvil fixture " + std::to_string(index) + " (have " +
                         std::to_string(kFixtures.size()) + ")");
  }
  const FixtureEntry& entry = kFixtures[index];
  const FixtureShape& shape = shapes()[entry.shape];
  const std::string signs = entry.signs;
  std::vector<Clause> clauses;
  for (std::size_t j = 0; j < shape.clauses.size(); ++j) {
    Clause c;
    for (std::size_t i = 0; i < 3; ++i) {
      bool negated = false;
      if (signs == "alternating") negated = (j + i) % 2 == 1;
      if (signs == "negated-first") negated = i == 0;
      c.push_back(Literal(shape.clauses[j][i], negated ? Polarity::negative : Polarity::positive));
    }
    clauses.push_back(std::move(c));
  }
  return {std::string(shape.name) + "-" + signs, Instance(shape.num_vars, std::move(clauses)), entry.satisfiable};
}

}  // namespace pmsat
