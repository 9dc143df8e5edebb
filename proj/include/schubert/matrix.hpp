#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "schubert/rational.hpp"

namespace schubert {

/// Dense row-major matrix over a field (Rational, ComplexRational, Complex).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const T& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  /// Copy of the sub-block starting at (r0, c0).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using ComplexMatrix = Matrix<Complex>;

namespace detail {

// Pivot preference: exact fields take the first nonzero entry, floating
// point takes the entry of largest modulus.
inline double pivot_weight(const Complex& z) { return std::abs(z); }
template <class T>
double pivot_weight(const T& x) {
  return is_zero(x) ? 0.0 : 1.0;
}
template <class T>
constexpr bool exact_field = !std::is_same_v<T, Complex>;

/// In-place row reduction to reduced row echelon form; returns pivot columns.
/// Columns at index >= `limit` are carried along but never pivoted on.
template <class T>
std::vector<std::size_t> row_reduce(Matrix<T>& m, std::size_t limit, double tol = 0.0) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < limit && row < m.rows(); ++col) {
    std::size_t best = m.rows();
    double best_w = tol;
    for (std::size_t i = row; i < m.rows(); ++i) {
      const double w = pivot_weight(m(i, col));
      if (w > best_w) {
        best = i;
        best_w = w;
        if constexpr (exact_field<T>) break;
      }
    }
    if (best == m.rows()) continue;
    if (best != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(best, j), m(row, j));
    const T inv = T(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      const T factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

template <class T>
std::size_t rank(Matrix<T> m) {
  return detail::row_reduce(m, m.cols()).size();
}

/// Fraction-free (Bareiss) determinant; exact for exact fields.
template <class T>
T determinant(Matrix<T> m) {
  assert(m.rows() == m.cols());
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  T sign(1);
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t swap_row = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (!is_zero(m(i, k))) {
          swap_row = i;
          break;
        }
      if (swap_row == n) return T(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = T(0);
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& a) {
  assert(a.rows() == a.cols());
  const std::size_t n = a.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = T(1);
  }
  const auto pivots = detail::row_reduce(aug, n);
  if (pivots.size() != n) return std::nullopt;
  return aug.block(0, n, n, n);
}

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

template <class T>
struct LinearSolution {
  SolveStatus status = SolveStatus::Inconsistent;
  std::vector<T> x;  // filled when status == Unique
};

/// Solves A x = b exactly (for exact fields).
template <class T>
LinearSolution<T> solve_linear(const Matrix<T>& a, const std::vector<T>& b) {
  assert(a.rows() == b.size());
  Matrix<T> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = detail::row_reduce(aug, a.cols());
  LinearSolution<T> out;
  for (std::size_t i = pivots.size(); i < aug.rows(); ++i)
    if (!is_zero(aug(i, a.cols()))) {
      out.status = SolveStatus::Inconsistent;
      return out;
    }
  if (pivots.size() < a.cols()) {
    out.status = SolveStatus::Underdetermined;
    return out;
  }
  out.status = SolveStatus::Unique;
  out.x.resize(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) out.x[pivots[r]] = aug(r, a.cols());
  return out;
}

/// Basis of the right null space, as columns of the returned matrix.
template <class T>
Matrix<T> null_space(Matrix<T> m) {
  const auto pivots = detail::row_reduce(m, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix<T> basis(m.cols(), free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    basis(free_cols[f], f) = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], f) = -m(r, free_cols[f]);
  }
  return basis;
}

}  // namespace schubert
