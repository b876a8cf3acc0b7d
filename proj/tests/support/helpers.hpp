#pragma once

#include <initializer_list>
#include <vector>

#include "pmsat/core.hpp"

inline pmsat::Instance make(std::uint32_t n, std::initializer_list<std::initializer_list<int>> clauses,
                            pmsat::ClauseMode mode = pmsat::ClauseMode::set) {
  std::vector<pmsat::Clause> cs;
  for (const auto& c : clauses) {
    pmsat::Clause clause;
    for (int lit : c) clause.push_back(pmsat::Literal::from_dimacs(lit));
    cs.push_back(std::move(clause));
  }
  return pmsat::Instance(n, std::move(cs), mode);
}

inline pmsat::Clause clause_of(std::initializer_list<int> lits) {
  pmsat::Clause c;
  for (int l : lits) c.push_back(pmsat::Literal::from_dimacs(l));
  return c;
}
