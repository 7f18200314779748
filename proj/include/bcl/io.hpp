#pragma once
// JSON serialization of instances and solutions.  One canonical format; all
// decimals survive a round-trip bit-exactly.

#include <optional>
#include <string>
#include <vector>

#include "bcl/model.hpp"

namespace bcl {

// Optional fields carried by an instance document beyond the instance itself.
struct DocumentExtras {
  std::optional<std::vector<std::size_t>> order;  // 0-based internally
  std::optional<std::string> generator;
  std::optional<std::uint64_t> seed;
};

// Parses the canonical instance document.  Throws std::invalid_argument
// naming the offending field on syntax or validation errors.
ProblemInstance parse_instance(const std::string& text);

// Same parse, also surfacing the optional order/metadata fields.
ProblemInstance parse_instance(const std::string& text, DocumentExtras& extras);

std::string serialize_instance(const ProblemInstance& inst,
                               const DocumentExtras& extras = {});

// Solution documents record the deployment along with how it was obtained.
struct SolutionMeta {
  std::string solver;
  double epsilon = 0.0;
  std::optional<double> wall_time_seconds;  // emitted only when requested
};

Solution parse_solution(const std::string& text, std::size_t n);

std::string serialize_solution(const Solution& sol, const SolutionMeta& meta);

}  // namespace bcl
