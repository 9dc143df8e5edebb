#pragma once

// Smale alpha-theory certificates computed in exact rational arithmetic.
// Norms are max-norms on C^n; every magnitude is replaced by a rational
// upper bound, so a positive answer is a proof.

#include <span>
#include <vector>

#include "schubert/polynomial.hpp"

namespace schubert {

/// Rational constant just below (13 - 3 sqrt(17)) / 4.
Rational alpha_threshold();

struct Certificate {
  std::vector<ComplexRational> point;
  Rational alpha;
  Rational beta;
  Rational gamma;
  bool certified = false;
  bool real_certified = false;
  /// Df(x) is not invertible; alpha, beta, gamma are meaningless.
  bool singular = false;
  /// Indices of certified peers whose associated zeros provably differ.
  std::vector<std::size_t> distinct_from;
};

/// beta = |Df(x)^{-1} f(x)|, gamma = max_k |Df(x)^{-1} D^k f(x) / k!|^{1/(k-1)}
/// (upper bounds), alpha = beta gamma; certified iff alpha <= alpha_threshold().
Certificate alpha_test(const PolySystem<Rational>& s, std::span<const ComplexRational> x);

/// True when the zero associated with a certified point is real: x is real,
/// or alpha < 3/100 and 20 gamma |x - conj(x)| < 1 so x and conj(x) share
/// their zero. False means undetermined.
bool certify_real(const PolySystem<Rational>& s, const Certificate& c);

/// Associated zeros lie within 2 beta of their points, so separation above
/// 2 (beta_a + beta_b) proves they differ.
bool certainly_distinct(const Certificate& a, const Certificate& b);

/// Certifies every point, checks reality, and fills distinct_from.
std::vector<Certificate> certify_all(const PolySystem<Rational>& s, const std::vector<std::vector<ComplexRational>>& points);

}  // namespace schubert
