#include "schubert/coordinates.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "schubert/random.hpp"

namespace schubert {

PatternMatrix::PatternMatrix(int rows, int cols, std::vector<SchubertCondition> conditions)
    : rows_(rows),
      cols_(cols),
      cells_(static_cast<std::size_t>(rows * cols)),
      conditions_(std::move(conditions)) {}

void PatternMatrix::number_variables() {
  var_positions_.clear();
  for (int j = 0; j < cols_; ++j)
    for (int i = 0; i < rows_; ++i) {
      auto& c = cells_[static_cast<std::size_t>(i * cols_ + j)];
      if (c.kind != PatternCell::Kind::Var) {
        c.var = -1;
        continue;
      }
      c.var = static_cast<int>(var_positions_.size());
      var_positions_.emplace_back(i + 1, j + 1);
    }
}

std::string PatternMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      const auto& c = at(i, j);
      os << (j ? " " : "");
      switch (c.kind) {
        case PatternCell::Kind::Zero: os << '0'; break;
        case PatternCell::Kind::One: os << '1'; break;
        case PatternCell::Kind::Var: os << 'x'; break;
      }
    }
    os << '\n';
  }
  return os.str();
}

PatternMatrix stiefel_pattern(const SchubertCondition& c) {
  const int n = c.n();
  const int as = c.type().last();
  PatternMatrix p(n, as, {c});
  for (int k = 1; k <= as; ++k) {
    for (int i = 1; i <= n; ++i) {
      PatternCell cell;
      if (i == c(k)) {
        cell.kind = PatternCell::Kind::One;
      } else if (i > c(k)) {
        cell.kind = PatternCell::Kind::Zero;
      } else {
        bool earlier_pivot = false;
        for (int l = 1; l < k; ++l)
          if (c(l) == i) earlier_pivot = true;
        cell.kind = earlier_pivot ? PatternCell::Kind::Zero : PatternCell::Kind::Var;
      }
      p.set(i - 1, k - 1, cell);
    }
  }
  p.number_variables();
  return p;
}

PatternMatrix pair_pattern(const SchubertCondition& c1, const SchubertCondition& c2) {
  if (!c1.type().is_grassmannian() || !(c1.type() == c2.type()))
    throw InputError("pair_pattern needs two conditions on the same Grassmannian");
  const int n = c1.n();
  const int k = c1.type().last();
  PatternMatrix p(n, k, {c1, c2});
  for (int j = 1; j <= k; ++j) {
    const int upper = c1(j);
    const int lower = n + 1 - c2(k + 1 - j);
    if (lower > upper)
      throw InputError("pair_pattern: " + c1.to_string() + " and " + c2.to_string() +
                       " have empty intersection for opposite flags");
    for (int i = lower; i < upper; ++i) p.set(i - 1, j - 1, {PatternCell::Kind::Var, -1});
    p.set(upper - 1, j - 1, {PatternCell::Kind::One, -1});
  }
  p.number_variables();
  return p;
}

FlagMatrix random_flag(int n, std::uint64_t seed) {
  if (n < 1) throw InputError("random_flag needs n >= 1");
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng(seed + attempt * 0x9E3779B97F4A7C15ULL);
    RationalMatrix b(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b(i, j) = rng.small_rational();
    if (auto inv = inverse(b)) return {std::move(b), std::move(*inv)};
  }
}

ComplexFlag random_complex_flag(int n, std::uint64_t seed) {
  if (n < 1) throw InputError("random_complex_flag needs n >= 1");
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng(seed + attempt * 0x9E3779B97F4A7C15ULL);
    ComplexMatrix b(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b(i, j) = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform01());
    auto inv = inverse(b);
    if (inv && std::abs(determinant(b)) > 1e-8) return {std::move(b), std::move(*inv)};
  }
}

RationalMatrix sample_cell_point(const SchubertCondition& c, const FlagMatrix& flag, std::uint64_t seed) {
  const int n = c.n();
  if (static_cast<int>(flag.n()) != n) throw InputError("sample_cell_point: flag dimension mismatch");
  const int as = c.type().last();
  Rng rng(seed);
  RationalMatrix e(static_cast<std::size_t>(n), static_cast<std::size_t>(as));
  for (int k = 1; k <= as; ++k) {
    for (int i = 1; i <= c(k); ++i) {
      const Rational coeff = i == c(k) ? rng.nonzero_rational() : rng.small_rational();
      if (sgn(coeff) == 0) continue;
      for (int r = 0; r < n; ++r) e(r, k - 1) += coeff * flag.basis(r, i - 1);
    }
  }
  return e;
}

std::vector<Rational> sample_pattern_values(const PatternMatrix& p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Rational> values(static_cast<std::size_t>(p.variable_count()));
  for (auto& v : values) v = rng.small_rational();
  return values;
}

std::vector<int> intersection_dimensions(const RationalMatrix& e, const FlagMatrix& flag, const DescentType& t) {
  const int n = t.n();
  if (static_cast<int>(e.rows()) != n || static_cast<int>(e.cols()) != t.last() || static_cast<int>(flag.n()) != n)
    throw InputError("position: shape mismatch");
  const RationalMatrix y = flag.dual_forms * e;
  if (static_cast<int>(rank(y)) != t.last()) throw InputError("position: E is rank deficient");
  const int s = t.s();
  std::vector<int> dims(static_cast<std::size_t>((n + 1) * s));
  for (int j = 1; j <= s; ++j) {
    const int aj = t.at(j);
    for (int i = 0; i <= n; ++i) {
      // v in F_i iff coordinates i+1..n vanish.
      const int r = i == n ? 0 : static_cast<int>(rank(y.block(static_cast<std::size_t>(i), 0,
                                                              static_cast<std::size_t>(n - i),
                                                              static_cast<std::size_t>(aj))));
      dims[static_cast<std::size_t>(i * s + (j - 1))] = aj - r;
    }
  }
  return dims;
}

SchubertCondition position(const RationalMatrix& e, const FlagMatrix& flag, const DescentType& t) {
  const int n = t.n();
  const int s = t.s();
  const auto dims = intersection_dimensions(e, flag, t);
  auto d = [&](int i, int j) { return j == 0 ? 0 : dims[static_cast<std::size_t>(i * s + (j - 1))]; };
  std::vector<int> w;
  std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
  for (int j = 1; j <= s; ++j) {
    for (int i = 1; i <= n; ++i) {
      const int jump = (d(i, j) - d(i - 1, j)) - (d(i, j - 1) - d(i - 1, j - 1));
      if (jump == 1) {
        w.push_back(i);
        used[static_cast<std::size_t>(i)] = true;
      } else if (jump != 0) {
        throw InputError("position: inconsistent intersection dimensions");
      }
    }
    if (static_cast<int>(w.size()) != t.at(j)) throw InputError("position: inconsistent intersection dimensions");
  }
  for (int v = 1; v <= n; ++v)
    if (!used[static_cast<std::size_t>(v)]) w.push_back(v);
  return SchubertCondition(std::move(w), t);
}

}  // namespace schubert
