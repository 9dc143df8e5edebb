#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "schubert/polynomial.hpp"
#include "schubert/random.hpp"

using namespace schubert;

namespace {

using P = Polynomial<Rational>;

// Leibniz expansion over all permutations.
P leibniz(const Matrix<P>& m, std::size_t nvars) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  P total(nvars);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    P term = P::constant(nvars, Rational(inversions % 2 ? -1 : 1));
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

P random_poly(Rng& rng, std::size_t nvars, int max_terms) {
  P p(nvars);
  const int terms = static_cast<int>(rng.uniform_int(0, max_terms));
  for (int t = 0; t < terms; ++t) {
    Exponents e(nvars, 0);
    e[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(nvars) - 1))] =
        static_cast<std::uint8_t>(rng.uniform_int(0, 1));
    p.add_term(e, rng.small_rational());
  }
  return p;
}

}  // namespace

TEST_CASE("arithmetic") {
  const auto x = P::variable(2, 0);
  const auto y = P::variable(2, 1);
  const auto one = P::constant(2, Rational(1));
  const auto p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK(p.total_degree() == 2);
  CHECK((p - p).is_zero());
  CHECK((x + one).constant_term() == 1);
  CHECK(P(0).is_zero());
  CHECK((x * P(3)).terms().begin()->second == 3);
  const std::vector<Rational> pt{Rational(2), Rational(3)};
  CHECK(p.evaluate<Rational>(pt) == -5);
  CHECK_THROWS_AS(p.evaluate<Rational>(std::span<const Rational>(pt.data(), 1)), InputError);
  CHECK_THROWS_AS(x + P::variable(3, 0), InputError);
}

TEST_CASE("derivatives match finite differences") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    P p = random_poly(rng, 3, 4) * random_poly(rng, 3, 4) * random_poly(rng, 3, 3);
    const auto pc = p.map_coefficients<Complex>([](const Rational& q) { return Complex(q.get_d(), 0); });
    const std::vector<Complex> at{{0.3, -0.2}, {1.1, 0.4}, {-0.7, 0.25}};
    for (std::size_t v = 0; v < 3; ++v) {
      const double h = 1e-6;
      auto plus = at, minus = at;
      plus[v] += h;
      minus[v] -= h;
      const Complex fd = (pc.evaluate<Complex>(plus) - pc.evaluate<Complex>(minus)) / (2 * h);
      const Complex exact = p.derivative(v).map_coefficients<Complex>([](const Rational& q) {
        return Complex(q.get_d(), 0);
      }).evaluate<Complex>(at);
      CHECK(std::abs(fd - exact) <= 1e-6 * (1 + std::abs(exact)));
    }
  }
}

TEST_CASE("determinants agree with the Leibniz expansion") {
  Rng rng(11);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 6; ++trial) {
      const std::size_t nvars = 3;
      Matrix<P> m(n, n, P(nvars));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          m(i, j) = trial % 2 == 0 && j % 2 == 0 ? P::constant(nvars, rng.small_rational()) : random_poly(rng, nvars, 2);
      CHECK(det(m) == leibniz(m, nvars));
    }
  // Constant matrices go through Bareiss.
  Matrix<P> c(3, 3, P(1));
  const int vals[3][3] = {{2, 0, 1}, {1, 3, 2}, {1, 1, 2}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) c(i, j) = P::constant(1, Rational(vals[i][j]));
  CHECK(det(c) == P::constant(1, Rational(6)));
  CHECK_THROWS_AS(det(Matrix<P>(13, 13, P(1))), CapacityError);
}

TEST_CASE("systems: Jacobian, Bezout number and bilinearity") {
  PolySystem<Rational> s;
  s.variables = {{"x", "g1"}, {"y", "g2"}};
  const auto x = P::variable(2, 0);
  const auto y = P::variable(2, 1);
  s.equations = {x * y + x - P::constant(2, Rational(1)), x * y * P(2) + y};
  CHECK(s.is_square());
  CHECK(s.is_bilinear("g1", "g2"));
  CHECK(s.bezout_number() == 4);
  CHECK(s.groups() == std::vector<std::string>{"g1", "g2"});
  const auto j = jacobian(s);
  CHECK(j(0, 0) == y + P::constant(2, Rational(1)));
  CHECK(j(1, 1) == x * P(2) + P::constant(2, Rational(1)));
  s.equations.push_back(x * x);
  CHECK_FALSE(s.is_bilinear("g1", "g2"));
  const std::vector<Rational> pt{Rational(1), Rational(0)};
  CHECK(evaluate(s, std::span<const Rational>(pt)) == std::vector<Rational>{0, 0, 1});
}
