#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmsat/core.hpp"

namespace pmsat {

class GeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GeneratorConfig {
  std::uint64_t seed = 0;
  std::uint32_t num_vars = 4;
};

// Planar instance where every variable occurs in exactly three distinct
// clauses, one literal twice and the other once; widths in {2,3}.
// num_vars >= 2.
Instance gen_dahlhaus(const GeneratorConfig& config);

// Planar monotone instance, widths in {2,3} with distinct variables, every
// variable at most three times. num_vars >= 2.
Instance gen_planar_monotone(const GeneratorConfig& config);

struct KratochvilFixture {
  std::string name;
  Instance instance;
  bool satisfiable = false;
};

std::size_t kratochvil_fixture_count();
// Planar, 3-connected incidence graph; every clause three distinct
// variables, every variable three or four times. Throws GeneratorError for
// an unknown index.
KratochvilFixture gen_kratochvil_fixture(std::size_t index);

}  // namespace pmsat
