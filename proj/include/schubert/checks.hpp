#pragma once

// Invariant batteries shared by the `check` command and the test suites.

#include <cstdint>
#include <string>
#include <vector>

namespace schubert {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

enum class CheckLevel { Fast, Exhaustive7, Exhaustive9Census };
CheckLevel parse_check_level(const std::string& text);

/// dim + |alpha| - #eqs = ell(w) and the same for beta, for all W^{a}, n <= n_max.
CheckResult check_complete_intersection(int n_max);
/// Pattern variables = ell(w); the dual involution preserves ell and |w|.
CheckResult check_patterns_and_duality(int n_max);
/// Enforcing only the essential rank conditions cuts out the same cells as
/// enforcing all of them, for all W^{a}, n <= n_max.
CheckResult check_essential_pairs(int n_max);
CheckResult check_grassmannian_lemma(int n_max);

struct LiftSoundness {
  int in_cell_samples = 0;
  int in_cell_unique = 0;
  int out_of_cell_samples = 0;
  int out_of_cell_rejected = 0;
};
/// In-cell points must lift uniquely with zero residual (full and reduced
/// sets); generic points must not lift.
LiftSoundness lift_soundness(const std::string& condition, int samples, std::uint64_t seed);
CheckResult check_lift_soundness(int samples, std::uint64_t seed);

struct SolveCount {
  std::size_t solutions = 0;
  std::size_t certified = 0;
  /// Certified solutions provably distinct from every other certified one.
  std::size_t pairwise_distinct = 0;
  std::size_t real = 0;
};
/// Solves `count` copies of a hypersurface condition on random flags.
SolveCount solve_and_certify(const std::string& condition, int count, int n, std::uint64_t seed);
/// Four-lines in Gr(2,4) and six 35|124 conditions in Gr(2,5) over several instances.
CheckResult check_solve_counts(int instances, std::uint64_t seed);

CheckResult check_census_consistency(int n, int jobs);
std::vector<CheckResult> check_census_n9(int jobs);

std::vector<CheckResult> run_checks(CheckLevel level, int jobs = 1, std::uint64_t seed = 1);

}  // namespace schubert
