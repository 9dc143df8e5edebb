#pragma once

// Stiefel coordinate patterns, flags given by bases, samplers for points in
// Schubert cells and the inverse map (relative position of a flag).

#include <cstdint>
#include <span>
#include <vector>

#include "schubert/combinatorics.hpp"
#include "schubert/errors.hpp"
#include "schubert/matrix.hpp"

namespace schubert {

/// A complete flag F_1 < ... < F_n given by a basis (columns f_1..f_n), with
/// the dual linear forms (rows of the inverse): F_j = {f_{j+1} = ... = f_n = 0}.
template <class T>
struct BasicFlag {
  Matrix<T> basis;
  Matrix<T> dual_forms;

  /// Throws GenericityError on a singular basis.
  static BasicFlag from_basis(Matrix<T> b) {
    auto inv = inverse(b);
    if (!inv) throw GenericityError("flag basis is singular");
    return {std::move(b), std::move(*inv)};
  }
  static BasicFlag standard(std::size_t n) { return {Matrix<T>::identity(n), Matrix<T>::identity(n)}; }
  /// F_j spanned by the last j coordinate vectors.
  static BasicFlag opposite(std::size_t n) {
    Matrix<T> p(n, n);
    for (std::size_t i = 0; i < n; ++i) p(i, n - 1 - i) = T(1);
    return {p, p};
  }

  std::size_t n() const { return basis.rows(); }
  /// The n x k matrix F_k.
  Matrix<T> subspace(std::size_t k) const { return basis.block(0, 0, n(), k); }
  bool is_standard() const { return basis == Matrix<T>::identity(n()); }
};

using FlagMatrix = BasicFlag<Rational>;
using ComplexFlag = BasicFlag<Complex>;

struct FlagTuple {
  std::vector<FlagMatrix> flags;
  bool first_is_standard() const { return !flags.empty() && flags.front().is_standard(); }
};

struct PatternCell {
  enum class Kind : std::uint8_t { Zero, One, Var };
  Kind kind = Kind::Zero;
  int var = -1;
};

/// An n x a_s matrix of structural zeros, ones and free entries.
class PatternMatrix {
 public:
  PatternMatrix(int rows, int cols, std::vector<SchubertCondition> conditions);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  /// 0-based access.
  const PatternCell& at(int i, int j) const { return cells_[static_cast<std::size_t>(i * cols_ + j)]; }
  void set(int i, int j, PatternCell cell) { cells_[static_cast<std::size_t>(i * cols_ + j)] = cell; }

  int variable_count() const { return static_cast<int>(var_positions_.size()); }
  /// (row, col), 1-based, of variable id v; variables are numbered column by column.
  std::pair<int, int> variable_position(int v) const { return var_positions_[static_cast<std::size_t>(v)]; }
  /// Renumbers Var cells column-major; call after editing with set().
  void number_variables();

  /// The conditions this pattern parametrizes (one cell, or a Grassmannian pair).
  const std::vector<SchubertCondition>& conditions() const { return conditions_; }

  /// Substitutes values for the Var cells.
  template <class T>
  Matrix<T> substitute(std::span<const T> values) const {
    if (static_cast<int>(values.size()) != variable_count()) throw InputError("pattern: wrong number of values");
    Matrix<T> m(static_cast<std::size_t>(rows_), static_cast<std::size_t>(cols_));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        const auto& c = at(i, j);
        if (c.kind == PatternCell::Kind::One) m(i, j) = T(1);
        if (c.kind == PatternCell::Kind::Var) m(i, j) = values[static_cast<std::size_t>(c.var)];
      }
    return m;
  }

  std::string to_string() const;

 private:
  int rows_;
  int cols_;
  std::vector<PatternCell> cells_;
  std::vector<std::pair<int, int>> var_positions_;
  std::vector<SchubertCondition> conditions_;
};

/// Stiefel coordinates X_w for the Schubert cell of the standard flag.
PatternMatrix stiefel_pattern(const SchubertCondition& c);

/// Coordinates for a dense subset of X_{w1}(standard) and X_{w2}(opposite)
/// in a Grassmannian; ell(w1) - |w2| free entries.
PatternMatrix pair_pattern(const SchubertCondition& c1, const SchubertCondition& c2);

/// Random invertible rational flag, deterministic in the seed.
FlagMatrix random_flag(int n, std::uint64_t seed);
/// Random complex flag with unit-modulus entries.
ComplexFlag random_complex_flag(int n, std::uint64_t seed);

/// Columns e_k in F_{w(k)} \ F_{w(k)-1} with random rational coefficients.
RationalMatrix sample_cell_point(const SchubertCondition& c, const FlagMatrix& flag, std::uint64_t seed);

/// Random rational values for the free entries of a pattern.
std::vector<Rational> sample_pattern_values(const PatternMatrix& p, std::uint64_t seed);

/// dim(F_i ∩ E_{a_j}) for i = 0..n, j = 1..s (row-major, (n+1) x s).
std::vector<int> intersection_dimensions(const RationalMatrix& e, const FlagMatrix& flag, const DescentType& t);

/// The unique w with E in the Schubert cell X°_w F. Exact.
SchubertCondition position(const RationalMatrix& e, const FlagMatrix& flag, const DescentType& t);

}  // namespace schubert
