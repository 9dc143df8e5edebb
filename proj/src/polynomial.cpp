#include "schubert/polynomial.hpp"

#include <bit>
#include <unordered_map>

namespace schubert {

PolySystem<Complex> to_complex(const PolySystem<Rational>& s) {
  return s.map_coefficients<Complex>([](const Rational& q) { return Complex(q.get_d(), 0.0); });
}

template <class T>
Polynomial<T> det(const Matrix<Polynomial<T>>& m) {
  if (m.rows() != m.cols()) throw InputError("det: matrix is not square");
  const std::size_t n = m.rows();
  if (n > kMaxDeterminantSize)
    throw CapacityError("det: size " + std::to_string(n) + " exceeds the guard " + std::to_string(kMaxDeterminantSize));
  std::size_t nvars = 0;
  bool all_constant = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      nvars = std::max(nvars, m(i, j).nvars());
      all_constant = all_constant && m(i, j).is_constant();
    }
  if (n == 0) return Polynomial<T>::constant(nvars, T(1));
  if (all_constant) {
    Matrix<T> c(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c(i, j) = m(i, j).constant_term();
    return Polynomial<T>::constant(nvars, determinant(c));
  }

  // Constant columns first; track the sign of the column permutation.
  std::vector<std::size_t> order;
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t j = 0; j < n; ++j) {
      bool constant = true;
      for (std::size_t i = 0; i < n; ++i) constant = constant && m(i, j).is_constant();
      if (constant == (pass == 0)) order.push_back(j);
    }
  int inversions = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (order[a] > order[b]) ++inversions;

  auto widen = [&](const Polynomial<T>& p) {
    if (p.nvars() == nvars) return p;
    Polynomial<T> out = Polynomial<T>::constant(nvars, T(0));
    out += p;
    return out;
  };

  // level[S] = det of rows S against the first |S| ordered columns.
  std::unordered_map<std::uint32_t, Polynomial<T>> level;
  level.emplace(0u, Polynomial<T>::constant(nvars, T(1)));
  for (std::size_t col = 0; col < n; ++col) {
    std::unordered_map<std::uint32_t, Polynomial<T>> next;
    for (const auto& [subset, minor] : level) {
      if (minor.is_zero()) continue;
      for (std::size_t r = 0; r < n; ++r) {
        if (subset & (1u << r)) continue;
        const auto& entry = m(r, order[col]);
        if (entry.is_zero()) continue;
        // Row r is placed at position idx within the sorted set S ∪ {r};
        // expanding along the last column gives sign (-1)^(idx + col).
        const int idx = std::popcount(subset & ((1u << r) - 1u));
        Polynomial<T> term = widen(entry) * minor;
        if ((idx + static_cast<int>(col)) % 2) term.scale(T(-1));
        auto [it, inserted] = next.try_emplace(subset | (1u << r), std::move(term));
        if (!inserted) it->second += term;
      }
    }
    level = std::move(next);
  }
  auto it = level.find((n == 32 ? 0u : (1u << n)) - 1u);
  Polynomial<T> out = it == level.end() ? Polynomial<T>::constant(nvars, T(0)) : it->second;
  if (inversions % 2) out.scale(T(-1));
  return out;
}

template Polynomial<Rational> det(const Matrix<Polynomial<Rational>>&);
template Polynomial<Complex> det(const Matrix<Polynomial<Complex>>&);

}  // namespace schubert
