#pragma once

// Census of relevant Schubert varieties (1 < |w| < dim/2) on the flag
// manifolds of C^n, comparing new-variable counts of the reduced lifted
// formulation against the primal-dual formulation.

#include <cstdint>
#include <string>
#include <vector>

#include "schubert/combinatorics.hpp"

namespace schubert {

enum class CensusMode { AllManifolds, FavorableOfDualPair };
std::string to_string(CensusMode mode);
CensusMode parse_census_mode(const std::string& text);

struct ManifoldCounts {
  DescentType type;
  std::uint64_t relevant = 0;
  std::uint64_t pd_wins = 0;
  std::uint64_t lifted_wins = 0;
  std::uint64_t ties = 0;
};

struct CensusReport {
  int n = 0;
  CensusMode mode = CensusMode::AllManifolds;
  bool reduced_pd = true;
  std::uint64_t total_varieties = 0;
  std::uint64_t wins_primal_dual = 0;
  std::uint64_t wins_lifted = 0;
  std::uint64_t ties = 0;
  /// Manifolds contributing to the totals, ordered as all_descent_types(n).
  std::vector<ManifoldCounts> manifolds;
};

/// |beta(w)| without materializing the index set.
int beta_size(std::span<const int> w, const DescentType& t);

/// New variables of the primal-dual formulation: ell(w), or with
/// reduced = true the minimum of ell(v) over codimension-preserving
/// projections to coarser flag manifolds.
int primal_dual_variables(std::span<const int> w, const DescentType& t, bool reduced);

inline constexpr int kMaxCensusN = 10;

ManifoldCounts manifold_census(const DescentType& t, bool reduced_pd);

/// jobs <= 0 uses the hardware concurrency.
CensusReport run_census(int n, CensusMode mode, bool reduced_pd, int jobs = 1);

struct LemmaCheck {
  bool ok = true;
  std::uint64_t conditions_checked = 0;
  std::uint64_t remark_cases_checked = 0;
  std::vector<std::string> counterexamples;
};

/// On every Gr(k, n) with 2k <= n <= n_max: |beta(w)| < ell(w) whenever
/// |w| < k(n-k)/2. Also checks k(n-k) - c1 - c2 > k(k-1) for k < (n+2)/3
/// and c1 + c2 < k(n-k)/2, and |beta(w)| <= k(k-1) throughout.
LemmaCheck grassmannian_lemma_check(int n_max);

std::string census_text(const CensusReport& r);
std::string census_csv(const CensusReport& r);

}  // namespace schubert
