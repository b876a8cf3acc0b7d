#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "pmsat/core.hpp"
#include "pmsat/draw.hpp"
#include "pmsat/graph.hpp"
#include "pmsat/reduce.hpp"
#include "pmsat/verify.hpp"

namespace pmsat {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// DIMACS CNF. A `c mode: multiset` comment before the header switches the
// instance to multiset mode (repeated literals allowed).
Instance parse_dimacs(std::string_view text);
std::string write_dimacs(const Instance& instance);

std::string export_dot(const IncidenceGraph& graph);

nlohmann::json to_json(const ReductionTrace& trace);
nlohmann::json to_json(const VariantProfile& profile);
nlohmann::json to_json(const ReductionReport& report, bool include_timings = false);
nlohmann::json to_json(const OrthogonalDrawing& drawing);
nlohmann::json to_json(const Assignment& assignment);

// Compact, sorted-key JSON followed by a newline.
std::string write_json(const nlohmann::json& value);

ReductionTrace trace_from_json(const nlohmann::json& value);
OrthogonalDrawing drawing_from_json(const nlohmann::json& value);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace pmsat
