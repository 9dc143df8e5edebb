#pragma once

// Problem specifications: the conditions, flags and per-condition strategies
// of a Schubert problem as a small JSON document.
//
//   {"n": 4, "a": [2],
//    "conditions": ["24|13", "24|13", "24|13", "24|13"],
//    "flags": ["random:1", "random:2", "standard", "flags/f.json"],
//    "strategy": ["auto"]}
//
// A flag entry is "random:<seed>", "standard", "opposite", a path (relative
// to the spec file) or an inline {"basis": ...} object. "strategy" may list
// one entry per condition or the single word "auto".

#include <string>
#include <vector>

#include "schubert/formulations.hpp"
#include "schubert/io.hpp"

namespace schubert {

struct ProblemSpec {
  int n = 0;
  std::vector<int> a;
  std::vector<std::string> conditions;
  std::vector<Json> flags;
  std::vector<std::string> strategy;
  /// Directory against which relative flag paths resolve.
  std::string base_dir = ".";
};

ProblemSpec problem_spec_from_json(const Json& j, const std::string& base_dir = ".");
Json problem_spec_to_json(const ProblemSpec& spec);
ProblemSpec read_problem_spec(const std::string& path);

/// Flags are drawn with seed offset `seed` added to every random:<s> entry.
SchubertProblem build_problem(const ProblemSpec& spec, std::uint64_t seed = 0);
std::vector<ConditionStrategy> resolve_strategy(const ProblemSpec& spec, const SchubertProblem& p);

}  // namespace schubert
