#include <doctest.h>

#include <set>

#include "schubert/formulations.hpp"

using namespace schubert;

namespace {

SchubertCondition longest(const DescentType& t) {
  std::vector<int> w;
  int top = t.n();
  for (int p = 0; p <= t.s(); ++p) {
    const int len = t.at(p + 1) - t.at(p);
    for (int v = top - len + 1; v <= top; ++v) w.push_back(v);
    top -= len;
  }
  return SchubertCondition(w, t);
}

std::uint64_t binom(int n, int k) {
  std::uint64_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return b;
}

// C(n,k) minus the k-subsets p with X_p inside X_w (rank-function order).
std::size_t plucker_oracle(const SchubertCondition& w) {
  const int n = w.n();
  const int k = w.type().last();
  std::size_t below = 0;
  enumerate_conditions(w.type(), CodimFilter::all(), [&](const SchubertCondition& p) {
    bool le = true;
    for (int i = 1; i <= n; ++i) le = le && rank_function(p, i, 1) >= rank_function(w, i, 1);
    below += le;
  });
  return binom(n, k) - below;
}

// Column operations within E_{a_1} < ... < E_{a_s} that bring E into the
// chart of the open cell (identity on the rows of each block's values).
std::optional<RationalMatrix> to_open_chart(const RationalMatrix& e, const DescentType& t) {
  const std::size_t n = e.rows();
  RationalMatrix out(n, static_cast<std::size_t>(t.last()));
  for (int p = 1; p <= t.s(); ++p) {
    const auto ap = static_cast<std::size_t>(t.at(p));
    const auto prev = static_cast<std::size_t>(t.at(p - 1));
    const RationalMatrix head = e.block(0, 0, n, ap);
    const auto inv = inverse(head.block(n - ap, 0, ap, ap));
    if (!inv) return std::nullopt;
    const RationalMatrix cols = head * inv->block(0, 0, ap, ap - prev);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < ap - prev; ++c) out(r, prev + c) = cols(r, c);
  }
  return out;
}

SchubertProblem make_problem(const std::vector<std::string>& conds, int n, std::uint64_t seed = 100) {
  SchubertProblem p;
  for (std::size_t i = 0; i < conds.size(); ++i) {
    p.conditions.push_back(parse_condition(conds[i]));
    p.flags.flags.push_back(random_flag(n, seed + i));
  }
  return p;
}

}  // namespace

TEST_CASE("essential rank conditions") {
  const auto x = parse_condition("3478|1256");
  CHECK(essential_pairs(x) == std::vector<std::pair<int, int>>{{4, 1}});
  const auto f = determinantal(x, random_flag(8, 3), stiefel_pattern(longest(x.type())));
  // rank(F_4 | E) <= 6: all 7 x 7 minors of an 8 x 8 matrix.
  CHECK(f.equation_count == 64);
  CHECK(f.new_variable_count == 0);
  // Hypersurfaces are one determinant.
  const auto h = parse_condition("24|13");
  const auto fh = determinantal(h, random_flag(4, 1), stiefel_pattern(longest(h.type())));
  CHECK(fh.equation_count == 1);
}

TEST_CASE("Grassmannian determinantal counts") {
  CHECK(grassmannian_determinantal_count(parse_condition("3478|1256")) == 17);
  CHECK(grassmannian_determinantal_count(parse_condition("489|123567")) == 10);
  CHECK(grassmannian_determinantal_count(parse_condition("5 9 10|1 2 3 4 6 7 8")) == 10);
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k < n; ++k)
      enumerate_conditions(DescentType::grassmannian(k, n), CodimFilter::all(), [&](const SchubertCondition& w) {
        CHECK(grassmannian_determinantal_count(w) == plucker_oracle(w));
      });
  CHECK_THROWS_AS(grassmannian_determinantal_count(parse_condition("358|47|126")), InputError);
}

TEST_CASE("lifted formulation sizes") {
  struct Case {
    const char* w;
    std::size_t alpha, alpha_eqs, beta, beta_eqs;
  };
  for (const auto& c : {Case{"358|12467", 3, 8, 3, 8}, Case{"59|47|12368", 5, 11, 4, 10},
                        Case{"458|12367", 3, 7, 2, 6}, Case{"358|47|126", 7, 13, 5, 11},
                        Case{"3478|1256", 6, 10, 4, 8}}) {
    const auto w = parse_condition(c.w);
    const auto chart = stiefel_pattern(longest(w.type()));
    const auto flag = random_flag(w.n(), 9);
    const auto fl = lifted(w, flag, chart);
    const auto fr = reduced_lifted(w, flag, chart);
    CHECK(fl.new_variable_count == c.alpha);
    CHECK(fl.equation_count == c.alpha_eqs);
    CHECK(fr.new_variable_count == c.beta);
    CHECK(fr.equation_count == c.beta_eqs);
    CHECK(fr.system->is_bilinear("stiefel", "lift"));
    CHECK(fl.system->is_bilinear("stiefel", "lift"));
    CHECK(fl.system->variable_count() == static_cast<std::size_t>(w.type().dim()) + c.alpha);
  }
}

TEST_CASE("lifted systems vanish at lifts of cell points") {
  std::uint64_t seed = 1;
  std::size_t cases = 0;
  std::size_t redraws = 0;
  for (int n = 3; n <= 5; ++n)
    for (const auto& t : all_descent_types(n)) {
      const auto chart = stiefel_pattern(longest(t));
      enumerate_conditions(t, CodimFilter::all(), [&](const SchubertCondition& w) {
        if (codim(w) == 0) return;
        ++cases;
        for (int attempt = 0;; ++attempt) {
          REQUIRE(attempt < 10);
          const FlagMatrix flag = random_flag(n, seed++);
          const RationalMatrix e = sample_cell_point(w, flag, seed++);
          REQUIRE(position(e, flag, t) == w);
          const auto moved = to_open_chart(e, t);
          if (!moved) {
            ++redraws;
            continue;
          }
          const RationalMatrix& normal = *moved;
          std::vector<Rational> coords;
          for (int v = 0; v < chart.variable_count(); ++v) {
            const auto [r, c] = chart.variable_position(v);
            coords.push_back(normal(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1)));
          }
          REQUIRE(chart.substitute<Rational>(coords) == normal);
          std::vector<std::pair<LiftingIndexSet::Kind, LiftSolution>> lifts;
          try {
            for (auto kind : {LiftingIndexSet::Kind::FullAlpha, LiftingIndexSet::Kind::ReducedBeta})
              lifts.emplace_back(kind, solve_lift(w, flag, normal, kind));
          } catch (const std::runtime_error&) {
            ++redraws;
            continue;
          }
          for (const auto& [kind, lift] : lifts) {
            const auto f =
                kind == LiftingIndexSet::Kind::FullAlpha ? lifted(w, flag, chart) : reduced_lifted(w, flag, chart);
            auto point = coords;
            for (const auto& v : lift.flattened()) point.push_back(v);
            for (const auto& r : evaluate(*f.system, std::span<const Rational>(point))) CHECK(sgn(r) == 0);
          }
          break;
        }
      });
    }
  // Points off the dense open set where lifts exist are rare.
  CHECK(redraws * 10 < cases);
}

TEST_CASE("lifts in general position on a Grassmannian") {
  const auto w = parse_condition("358|12467");
  const auto flag = random_flag(8, 5);
  const auto e = sample_cell_point(w, flag, 6);
  // Move E into the chart of the open cell: bottom 3 x 3 block = identity.
  RationalMatrix bottom(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) bottom(i, j) = e(5 + i, j);
  const RationalMatrix normal = e * *inverse(bottom);
  const auto chart = stiefel_pattern(longest(w.type()));
  std::vector<Rational> coords;
  for (int v = 0; v < chart.variable_count(); ++v) {
    const auto [r, c] = chart.variable_position(v);
    coords.push_back(normal(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1)));
  }
  CHECK(chart.substitute<Rational>(coords) == normal);
  for (auto kind : {LiftingIndexSet::Kind::FullAlpha, LiftingIndexSet::Kind::ReducedBeta}) {
    const auto lift = solve_lift(w, flag, normal, kind);
    const auto f = kind == LiftingIndexSet::Kind::FullAlpha ? lifted(w, flag, chart) : reduced_lifted(w, flag, chart);
    auto point = coords;
    for (const auto& v : lift.flattened()) point.push_back(v);
    for (const auto& r : evaluate(*f.system, std::span<const Rational>(point))) CHECK(sgn(r) == 0);
    // The determinantal equations vanish as well.
    const auto d = determinantal(w, flag, chart);
    for (const auto& r : evaluate(*d.system, std::span<const Rational>(coords))) CHECK(sgn(r) == 0);
  }
  // A generic 3-plane is not in the Schubert variety.
  RationalMatrix generic = normal;
  generic(0, 0) += 1;
  CHECK_THROWS_AS(solve_lift(w, flag, generic, LiftingIndexSet::Kind::FullAlpha), InconsistentSystemError);
}

TEST_CASE("primal-dual counts") {
  const auto x = parse_condition("3478|1256");
  CHECK(primal_dual_counts(x, false).new_variables == 12);
  CHECK(primal_dual_counts(x, false).bilinear_equations == 16);
  CHECK(primal_dual_counts(parse_condition("489|123567"), false).bilinear_equations == 18);
  CHECK(primal_dual_counts(parse_condition("5 9 10|1 2 3 4 6 7 8"), false).new_variables == 18);
  CHECK(primal_dual_counts(parse_condition("5 9 10|1 2 3 4 6 7 8"), false).bilinear_equations == 21);
  // 78|45|3|126: the first three blocks lie above one another, so the
  // projection to 34578|126 keeps the codimension; ell drops from 20 to 12.
  const auto r = parse_condition("78|45|3|126");
  CHECK(primal_dual_counts(r, false).new_variables == 20);
  CHECK(primal_dual_counts(r, true).new_variables == 12);
  CHECK_FALSE(primal_dual_counts(r, false).bilinear_equations.has_value());
  const auto pair = primal_dual_pair_counts(parse_condition("489|123567"), parse_condition("489|123567"));
  CHECK(pair.new_variables == 12);
  CHECK(pair.bilinear_equations == 18);
}

TEST_CASE("assembled example problems") {
  std::vector<std::string> g437(4, "489|123567");
  g437.insert(g437.end(), 6, "689|123457");
  const auto a437 = assemble_problem(make_problem(g437, 9), auto_strategy(make_problem(g437, 9)));
  CHECK(a437.system.variable_count() == 16);
  CHECK(a437.system.equation_count() == 16);
  CHECK(a437.contributions[2].new_variables == 2);
  CHECK(a437.contributions[2].equations == 5);
  CHECK(a437.system.equations.back().total_degree() == 3);

  const std::vector<std::string> f128{"47|38|5|126", "48|57|3|126", "78|45|3|126", "78|45|3|126", "68|57|4|123",
                                      "68|57|4|123", "78|46|5|123", "78|46|5|123", "78|46|5|123"};
  const auto p128 = make_problem(f128, 8);
  const auto a128 = assemble_problem(p128, auto_strategy(p128));
  CHECK(a128.system.variable_count() == 33);
  CHECK(a128.system.equation_count() == 33);
  std::multiset<int> degrees;
  for (const auto& eq : a128.system.equations) degrees.insert(eq.total_degree());
  CHECK(degrees.count(2) == 30);
  CHECK(degrees.count(4) == 3);
  CHECK(a128.contributions[1].new_variables == 5);
  CHECK(a128.contributions[2].new_variables == 6);
  CHECK(a128.contributions[1].equations == 10);
  CHECK(a128.contributions[2].equations == 9);

  std::vector<std::string> g28490(3, "5 9 10|1 2 3 4 6 7 8");
  g28490.insert(g28490.end(), 12, "7 9 10|1 2 3 4 5 6 8");
  const auto p28490 = make_problem(g28490, 10);
  const auto a28490 = assemble_problem(p28490, auto_strategy(p28490));
  CHECK(a28490.system.variable_count() == 17);
  CHECK(a28490.system.equation_count() == 17);
}

TEST_CASE("flag normalization") {
  const auto p = make_problem({"24|13", "24|13", "24|13", "24|13"}, 4, 7);
  const auto a = assemble_problem(p, auto_strategy(p));
  CHECK(a.normalized_flags.flags[0].is_standard());
  CHECK(a.normalized_flags.flags[1].basis == FlagMatrix::opposite(4).basis);
  const auto to_chart = *inverse(a.change_of_basis);
  for (std::size_t i = 2; i < 4; ++i) CHECK(a.normalized_flags.flags[i].basis == to_chart * p.flags.flags[i].basis);
  // The change of basis carries the standard flag to flag 1 and the opposite flag to flag 2.
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto span1 = a.change_of_basis * FlagMatrix::standard(4).subspace(k);
    RationalMatrix joined(4, 2 * k);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < k; ++c) {
        joined(r, c) = span1(r, c);
        joined(r, k + c) = p.flags.flags[0].basis(r, c);
      }
    CHECK(rank(joined) == k);
  }
}

TEST_CASE("assembly errors") {
  const auto p = make_problem({"24|13", "24|13", "24|13"}, 4);
  CHECK_THROWS_WITH_AS(assemble_problem(p, auto_strategy(p)), doctest::Contains("not zero-dimensional"), InputError);
  auto ok = make_problem({"24|13", "24|13", "24|13", "24|13"}, 4);
  using S = ConditionStrategy;
  const std::vector<S> bad_first{S::Determinantal, S::Chart, S::Determinantal, S::Determinantal};
  CHECK_THROWS_AS(assemble_problem(ok, bad_first), InputError);
  const std::vector<S> bad_chart{S::Chart, S::Chart, S::Chart, S::Determinantal};
  CHECK_THROWS_AS(assemble_problem(ok, bad_chart), InputError);
  const std::vector<S> single{S::Chart, S::Determinantal, S::Determinantal, S::Determinantal};
  CHECK(assemble_problem(ok, single).system.variable_count() == 3);
  // Two equal flags are not in general position for the pair chart.
  ok.flags.flags[1] = ok.flags.flags[0];
  CHECK_THROWS_AS(assemble_problem(ok, auto_strategy(ok)), GenericityError);
  auto mixed = make_problem({"24|13", "24|13", "24|13", "24|13"}, 4);
  mixed.conditions[3] = parse_condition("2|4|13");
  CHECK_THROWS_AS(mixed.validate(), InputError);
  CHECK(parse_strategy("reduced") == S::Reduced);
  CHECK_THROWS_AS(parse_strategy("fancy"), InputError);
}
