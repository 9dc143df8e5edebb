#pragma once

// Permutation-level data for Schubert conditions on partial flag manifolds:
// descent types, inversion counts, rank tables, lifting index sets and the
// projections used by the reduced primal-dual count.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

/// A strictly increasing sequence 1 <= a_1 < ... < a_s <= n-1.
class DescentType {
 public:
  DescentType(int n, std::vector<int> a);

  /// Grassmannian Gr(k; n).
  static DescentType grassmannian(int k, int n) { return DescentType(n, {k}); }

  int n() const { return n_; }
  const std::vector<int>& a() const { return a_; }
  int s() const { return static_cast<int>(a_.size()); }
  /// a_j for 1 <= j <= s; a_0 = 0 and a_{s+1} = n by convention.
  int at(int j) const;
  int last() const { return a_.back(); }
  bool is_grassmannian() const { return a_.size() == 1; }
  bool contains(int v) const;

  /// Dimension of the flag manifold.
  int dim() const { return dim_; }
  /// Type of the annihilating flag: {n - a_j}.
  DescentType dual() const;

  std::string to_string() const;
  friend bool operator==(const DescentType&, const DescentType&) = default;

 private:
  int n_;
  std::vector<int> a_;
  int dim_;
};

/// A permutation w in W^{a} (descents only at positions in a), one-line
/// notation with 1-based values stored at 0-based positions.
class SchubertCondition {
 public:
  SchubertCondition(std::vector<int> w, DescentType type);

  const std::vector<int>& w() const { return w_; }
  /// w(k) for 1 <= k <= n.
  int operator()(int k) const { return w_[static_cast<std::size_t>(k - 1)]; }
  const DescentType& type() const { return type_; }
  int n() const { return type_.n(); }

  std::string to_string() const;
  friend bool operator==(const SchubertCondition&, const SchubertCondition&) = default;

 private:
  std::vector<int> w_;
  DescentType type_;
};

/// Parses "358|47|126" (bars at the descent type), "35847126" (n <= 9) or a
/// delimited form "5 9 10|1 2 3 4 6 7 8". Without bars and without an
/// explicit type the descent set of w is used.
SchubertCondition parse_condition(std::string_view text,
                                  const std::optional<DescentType>& type = std::nullopt);

/// Lifting coordinates: for each k = 1..a_s the indices i paired with k.
struct LiftingIndexSet {
  enum class Kind { FullAlpha, ReducedBeta };
  Kind kind = Kind::FullAlpha;
  /// entries[k-1] lists i (1-based, ascending) for the variable (k, i).
  std::vector<std::vector<int>> entries;
  /// offsets[k-1] = m(k); all zero for the full kind.
  std::vector<int> offsets;

  std::size_t size() const;
};

int ceil_a(int k, const DescentType& t);
int length(const SchubertCondition& c);
int codim(const SchubertCondition& c);
/// r_{i,j}(w) = #{k <= a_j : w(k) <= i}; i = 0 gives 0.
int rank_function(const SchubertCondition& c, int i, int j);

LiftingIndexSet alpha_set(const SchubertCondition& c);
LiftingIndexSet beta_set(const SchubertCondition& c);

/// Number of membership equations: sum_k (n - w(k) - m(k)).
int lifted_equation_count(const SchubertCondition& c, const LiftingIndexSet& lift);

/// (w0 w w0, a^perp).
SchubertCondition dual_condition(const SchubertCondition& c);

struct Projection {
  SchubertCondition v;
  /// True iff codim is preserved, i.e. X_w = pi^{-1}(X_v).
  bool codim_preserved;
};

/// Projects w in W^{a} to W^{b} for b a nonempty subset of a by sorting
/// the values inside every b-block (including the final block).
Projection block_sort_projection(const SchubertCondition& c, const DescentType& b);

/// Codimension window lo <= |w| <= hi, or the census window 1 < |w| < dim/2.
struct CodimFilter {
  int lo = 0;
  int hi = 1 << 30;
  bool census = false;

  static CodimFilter all() { return {}; }
  static CodimFilter relevant() { return {0, 1 << 30, true}; }
  bool accepts(int codim, int dim) const {
    if (census) return codim > 1 && 2 * codim < dim;
    return codim >= lo && codim <= hi;
  }
};

/// Calls `visit` once for every w in W^{a}, in lexicographic order of the
/// one-line notation. The span is only valid during the call.
void for_each_permutation(const DescentType& t, const std::function<void(std::span<const int>)>& visit);

/// Streams every condition of type t whose codimension passes the filter.
void enumerate_conditions(const DescentType& t, const CodimFilter& filter,
                          const std::function<void(const SchubertCondition&)>& visit);

/// All nonempty descent types in C^n (2^(n-1) - 1 of them), ordered by bitmask.
std::vector<DescentType> all_descent_types(int n);

/// |W^{a}| = n! / prod (a_j - a_{j-1})!.
std::uint64_t multinomial_count(const DescentType& t);

}  // namespace schubert
