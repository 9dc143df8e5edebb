#include <doctest.h>

#include "schubert/coordinates.hpp"
#include "schubert/errors.hpp"

using namespace schubert;

namespace {

// dim(F_i ∩ E) = i + dim E - rank[F_i | E].
int intersection_dim(const FlagMatrix& f, const RationalMatrix& e, int i, int cols) {
  const std::size_t n = f.n();
  RationalMatrix m(n, static_cast<std::size_t>(i + cols));
  for (std::size_t r = 0; r < n; ++r) {
    for (int q = 0; q < i; ++q) m(r, q) = f.basis(r, q);
    for (int q = 0; q < cols; ++q) m(r, i + q) = e(r, q);
  }
  return i + cols - static_cast<int>(rank(m));
}

}  // namespace

TEST_CASE("Stiefel patterns") {
  const auto c = parse_condition("358|12467");
  const auto p = stiefel_pattern(c);
  CHECK(p.rows() == 8);
  CHECK(p.cols() == 3);
  CHECK(p.variable_count() == 10);
  CHECK(p.at(2, 0).kind == PatternCell::Kind::One);
  CHECK(p.at(2, 1).kind == PatternCell::Kind::Zero);  // row w(1) in a later column
  CHECK(p.at(3, 1).kind == PatternCell::Kind::Var);
  CHECK(p.at(5, 1).kind == PatternCell::Kind::Zero);  // below the 1
  CHECK(p.variable_position(0) == std::pair{1, 1});

  // 57|246|13 on Fl(2,5;7) has ell = 14 free entries.
  const auto big = parse_condition("57|246|13");
  CHECK(length(big) == 14);
  CHECK(stiefel_pattern(big).variable_count() == 14);

  for (int n = 2; n <= 6; ++n)
    for (const auto& t : all_descent_types(n))
      enumerate_conditions(t, CodimFilter::all(), [&](const SchubertCondition& w) {
        CHECK(stiefel_pattern(w).variable_count() == length(w));
      });
}

TEST_CASE("random pattern points lie in the right cells") {
  for (int n = 3; n <= 5; ++n)
    for (const auto& t : all_descent_types(n))
      enumerate_conditions(t, CodimFilter::all(), [&](const SchubertCondition& w) {
        const auto p = stiefel_pattern(w);
        auto values = sample_pattern_values(p, 7);
        for (auto& v : values)
          if (sgn(v) == 0) v = 1;
        const auto e = p.substitute<Rational>(values);
        CHECK(position(e, FlagMatrix::standard(static_cast<std::size_t>(n)), t) == w);
      });
}

TEST_CASE("pair patterns") {
  const auto w1 = parse_condition("489|123567");
  const auto p = pair_pattern(w1, w1);
  CHECK(p.variable_count() == 18 - 3 - 3);
  const auto w3 = parse_condition("5 9 10|1 2 3 4 6 7 8");
  CHECK(pair_pattern(w3, w3).variable_count() == 21 - 3 - 3);

  // A generic point is in the open cells of X_{w1}(standard) and X_{w2}(opposite).
  const auto u = parse_condition("35|124");
  const auto v = parse_condition("34|125");
  const auto q = pair_pattern(u, v);
  CHECK(q.variable_count() == length(u) - codim(v));
  const auto e = q.substitute<Rational>(sample_pattern_values(q, 3));
  CHECK(position(e, FlagMatrix::standard(5), u.type()) == u);
  CHECK(position(e, FlagMatrix::opposite(5), u.type()) == v);

  // Codimensions that add up past the dimension leave nothing to parametrize.
  const auto low = parse_condition("12|345");
  CHECK_THROWS_AS(pair_pattern(low, low), InputError);
  CHECK_THROWS_AS(pair_pattern(u, parse_condition("358|12467")), InputError);
}

TEST_CASE("flags") {
  const auto f = random_flag(6, 42);
  CHECK(f.dual_forms * f.basis == RationalMatrix::identity(6));
  CHECK(random_flag(6, 42).basis == f.basis);
  CHECK_FALSE(random_flag(6, 43).basis == f.basis);
  CHECK(FlagMatrix::standard(4).is_standard());
  const auto o = FlagMatrix::opposite(4);
  CHECK(o.basis(3, 0) == 1);
  CHECK(o.dual_forms * o.basis == RationalMatrix::identity(4));
  CHECK_THROWS_AS(FlagMatrix::from_basis(RationalMatrix(3, 3)), GenericityError);
  const auto cf = random_complex_flag(4, 1);
  CHECK(std::abs(cf.basis(0, 0)) == doctest::Approx(1.0));
}

TEST_CASE("sampled cell points: position round trip and intersection dimensions") {
  std::uint64_t seed = 1;
  for (int n = 2; n <= 5; ++n)
    for (const auto& t : all_descent_types(n))
      enumerate_conditions(t, CodimFilter::all(), [&](const SchubertCondition& w) {
        const auto f = random_flag(n, seed++);
        const auto e = sample_cell_point(w, f, seed++);
        CHECK(position(e, f, t) == w);
        const auto dims = intersection_dimensions(e, f, t);
        for (int i = 0; i <= n; ++i)
          for (int j = 1; j <= t.s(); ++j) {
            const int expected = intersection_dim(f, e, i, t.at(j));
            CHECK(dims[static_cast<std::size_t>(i * t.s() + j - 1)] == expected);
            // and the intersection dimensions are the rank function of w
            CHECK(expected == rank_function(w, i, j));
          }
      });
}

TEST_CASE("position rejects rank-deficient input") {
  RationalMatrix e(4, 2);
  e(0, 0) = 1;
  e(1, 0) = 2;
  e(0, 1) = 2;
  e(1, 1) = 4;
  CHECK_THROWS(position(e, FlagMatrix::standard(4), DescentType::grassmannian(2, 4)));
}
