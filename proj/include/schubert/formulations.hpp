#pragma once

// Membership in a Schubert variety as polynomial systems in Stiefel
// coordinates: determinantal rank conditions, the lifted square formulation
// (auxiliary coefficients alpha_{k,i} with memberships g_k in F_{w(k)}) and
// its reduced variant (beta_{k,i}, memberships g_k in F_{w(k)+m(k)}), plus
// variable counts for the primal-dual formulation and the assembler for
// whole Schubert problems.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schubert/combinatorics.hpp"
#include "schubert/coordinates.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

enum class FormulationKind { Determinantal, Lifted, ReducedLifted, PrimalDualCount };
std::string to_string(FormulationKind kind);

template <class T>
struct Formulation {
  FormulationKind kind;
  std::optional<PolySystem<T>> system;
  std::size_t new_variable_count = 0;
  std::size_t equation_count = 0;
  SchubertCondition condition;
};

/// Rank conditions kept by the determinantal formulation: pairs (i, j) whose
/// rank bound is not implied by a neighbouring pair or by genericity.
std::vector<std::pair<int, int>> essential_pairs(const SchubertCondition& c);

/// Upper bound on minors emitted by determinantal().
inline constexpr std::size_t kMaxMinors = 20000;

template <class T>
Formulation<T> determinantal(const SchubertCondition& c, const BasicFlag<T>& flag, const PatternMatrix& coords);

/// #{increasing k-subsets p of [n] with p not <= sorted(w(1..k))}.
std::size_t grassmannian_determinantal_count(const SchubertCondition& c);

template <class T>
Formulation<T> lifted(const SchubertCondition& c, const BasicFlag<T>& flag, const PatternMatrix& coords);

template <class T>
Formulation<T> reduced_lifted(const SchubertCondition& c, const BasicFlag<T>& flag, const PatternMatrix& coords);

struct LiftSolution {
  LiftingIndexSet set;
  /// values[k-1][t] pairs with set.entries[k-1][t].
  std::vector<std::vector<Rational>> values;
  /// Every g_k avoids F_{w(k)-1} (full kind) i.e. E lies in the open cell.
  bool in_open_cell = true;

  /// Values in the (k, i) lexicographic variable order.
  std::vector<Rational> flattened() const;
};

/// Exact lift coefficients for E in X_w F. Throws InconsistentSystemError if
/// E is not in X_w F and GenericityError if the coefficients are not unique.
LiftSolution solve_lift(const SchubertCondition& c, const FlagMatrix& flag, const RationalMatrix& e,
                        LiftingIndexSet::Kind kind);

struct PrimalDualCount {
  std::size_t new_variables = 0;
  /// k(n-k) bilinear equations on Grassmannians; not tracked otherwise.
  std::optional<std::size_t> bilinear_equations;
};

PrimalDualCount primal_dual_counts(const SchubertCondition& c, bool reduced);
/// Grassmannian primal-dual variant parametrizing two Schubert conditions at once.
PrimalDualCount primal_dual_pair_counts(const SchubertCondition& c1, const SchubertCondition& c2);

struct SchubertProblem {
  std::vector<SchubertCondition> conditions;
  FlagTuple flags;

  /// Throws InputError unless types agree, flags match, and sum |w_i| = dim.
  void validate() const;
};

enum class ConditionStrategy { Chart, Lifted, Reduced, Determinantal };
std::string to_string(ConditionStrategy s);
ConditionStrategy parse_strategy(const std::string& text);

struct ConditionContribution {
  ConditionStrategy strategy;
  std::size_t new_variables = 0;
  std::size_t equations = 0;
};

struct AssembledProblem {
  PolySystem<Rational> system;
  PatternMatrix chart;
  std::vector<ConditionContribution> contributions;
  /// Flags after the change of basis that makes the chart flags standard
  /// (and opposite, for a pair chart).
  FlagTuple normalized_flags;
  /// Original coordinates = change_of_basis * normalized coordinates.
  RationalMatrix change_of_basis;
};

/// Chart for condition 1 (and 2 on Grassmannians), determinantal where
/// |w| = 1, reduced lifted otherwise.
std::vector<ConditionStrategy> auto_strategy(const SchubertProblem& p);

AssembledProblem assemble_problem(const SchubertProblem& p, std::span<const ConditionStrategy> strategy);

/// Chart matrix E(x) with entries as polynomials over `nvars` variables, the
/// chart's Var ids mapped to indices offset.. offset+count-1.
template <class T>
Matrix<Polynomial<T>> chart_matrix(const PatternMatrix& coords, std::size_t nvars, std::size_t offset = 0);

}  // namespace schubert
