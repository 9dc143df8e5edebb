#include "schubert/checks.hpp"

#include <sstream>

#include "schubert/census.hpp"
#include "schubert/certify.hpp"
#include "schubert/formulations.hpp"
#include "schubert/random.hpp"
#include "schubert/solve.hpp"

namespace schubert {

CheckLevel parse_check_level(const std::string& text) {
  if (text == "fast") return CheckLevel::Fast;
  if (text == "exhaustive-7") return CheckLevel::Exhaustive7;
  if (text == "exhaustive-9-census") return CheckLevel::Exhaustive9Census;
  throw InputError("unknown check level '" + text + "' (expected fast, exhaustive-7 or exhaustive-9-census)");
}

namespace {

/// The longest element of W^{a}: blocks take the largest values first.
SchubertCondition longest_element(const DescentType& t) {
  std::vector<int> w;
  int top = t.n();
  for (int p = 0; p <= t.s(); ++p) {
    const int len = t.at(p + 1) - t.at(p);
    for (int v = top - len + 1; v <= top; ++v) w.push_back(v);
    top -= len;
  }
  return SchubertCondition(w, t);
}

std::string summary(std::uint64_t checked, std::uint64_t failures, const std::string& first) {
  std::ostringstream os;
  os << checked << " cases, " << failures << " failures";
  if (!first.empty()) os << " (first: " << first << ")";
  return os.str();
}

}  // namespace

CheckResult check_complete_intersection(int n_max) {
  std::uint64_t checked = 0, failures = 0;
  std::string first;
  for (int n = 2; n <= n_max; ++n)
    for (const auto& t : all_descent_types(n)) {
      const auto chart = n <= 4 ? std::optional(stiefel_pattern(longest_element(t))) : std::nullopt;
      const auto flag = random_flag(n, static_cast<std::uint64_t>(n));
      enumerate_conditions(t, CodimFilter::all(), [&](const SchubertCondition& c) {
        ++checked;
        const int ell = length(c);
        const auto a = alpha_set(c);
        const auto b = beta_set(c);
        bool ok = t.dim() + static_cast<int>(a.size()) - lifted_equation_count(c, a) == ell &&
                  t.dim() + static_cast<int>(b.size()) - lifted_equation_count(c, b) == ell;
        if (ok && chart) {
          const auto fl = lifted(c, flag, *chart);
          const auto fr = reduced_lifted(c, flag, *chart);
          ok = static_cast<int>(fl.system->variable_count()) - static_cast<int>(fl.system->equation_count()) == ell &&
               static_cast<int>(fr.system->variable_count()) - static_cast<int>(fr.system->equation_count()) == ell;
        }
        if (!ok && failures++ == 0) first = c.to_string();
      });
    }
  return {"complete-intersection identity (n<=" + std::to_string(n_max) + ")", failures == 0,
          summary(checked, failures, first)};
}

CheckResult check_patterns_and_duality(int n_max) {
  std::uint64_t checked = 0, failures = 0;
  std::string first;
  for (int n = 2; n <= n_max; ++n)
    for (const auto& t : all_descent_types(n))
      enumerate_conditions(t, CodimFilter::all(), [&](const SchubertCondition& c) {
        ++checked;
        const auto d = dual_condition(c);
        bool ok = stiefel_pattern(c).variable_count() == length(c) && length(d) == length(c) &&
                  codim(d) == codim(c) && dual_condition(d) == c && d.type() == t.dual();
        if (ok && codim(c) > 0)
          ok = primal_dual_variables(c.w(), t, true) == primal_dual_variables(d.w(), d.type(), true);
        if (!ok && failures++ == 0) first = c.to_string();
      });
  return {"pattern size and dual involution (n<=" + std::to_string(n_max) + ")", failures == 0,
          summary(checked, failures, first)};
}

CheckResult check_essential_pairs(int n_max) {
  std::uint64_t checked = 0, failures = 0;
  std::string first;
  for (int n = 2; n <= n_max; ++n)
    for (const auto& t : all_descent_types(n)) {
      std::vector<SchubertCondition> conds;
      enumerate_conditions(t, CodimFilter::all(), [&](const SchubertCondition& c) { conds.push_back(c); });
      const int s = t.s();
      std::vector<std::vector<int>> ranks;
      for (const auto& c : conds) {
        std::vector<int> r;
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= s; ++j) r.push_back(rank_function(c, i, j));
        ranks.push_back(std::move(r));
      }
      auto at = [&](std::size_t v, int i, int j) { return ranks[v][static_cast<std::size_t>((i - 1) * s + j - 1)]; };
      for (std::size_t w = 0; w < conds.size(); ++w) {
        const auto pairs = essential_pairs(conds[w]);
        for (std::size_t v = 0; v < conds.size(); ++v) {
          ++checked;
          bool all = true, essential = true;
          for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= s; ++j) all = all && at(v, i, j) >= at(w, i, j);
          for (const auto& [i, j] : pairs) essential = essential && at(v, i, j) >= at(w, i, j);
          if (all != essential && failures++ == 0) first = conds[w].to_string() + " vs " + conds[v].to_string();
        }
      }
    }
  return {"essential rank conditions (n<=" + std::to_string(n_max) + ")", failures == 0,
          summary(checked, failures, first)};
}

CheckResult check_grassmannian_lemma(int n_max) {
  const auto r = grassmannian_lemma_check(n_max);
  return {"Grassmannian lemma and remark (n<=" + std::to_string(n_max) + ")", r.ok,
          summary(r.conditions_checked + r.remark_cases_checked, r.counterexamples.size(),
                  r.counterexamples.empty() ? "" : r.counterexamples.front())};
}

LiftSoundness lift_soundness(const std::string& condition, int samples, std::uint64_t seed) {
  const auto c = parse_condition(condition);
  const int n = c.n();
  const int as = c.type().last();
  LiftSoundness out;
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const auto flag = random_flag(n, rng.next());
    const auto e = sample_cell_point(c, flag, rng.next());
    ++out.in_cell_samples;
    bool ok = true;
    for (auto kind : {LiftingIndexSet::Kind::FullAlpha, LiftingIndexSet::Kind::ReducedBeta}) {
      try {
        const auto lift = solve_lift(c, flag, e, kind);
        ok = ok && (kind == LiftingIndexSet::Kind::ReducedBeta || lift.in_open_cell);
        for (int k = 1; ok && k <= as; ++k) {
          std::vector<Rational> g(static_cast<std::size_t>(n));
          for (int r = 0; r < n; ++r) g[static_cast<std::size_t>(r)] = e(r, k - 1);
          const auto& partners = lift.set.entries[static_cast<std::size_t>(k - 1)];
          for (std::size_t t = 0; t < partners.size(); ++t)
            for (int r = 0; r < n; ++r)
              g[static_cast<std::size_t>(r)] += lift.values[static_cast<std::size_t>(k - 1)][t] * e(r, partners[t] - 1);
          const int target = c(k) + lift.set.offsets[static_cast<std::size_t>(k - 1)];
          for (int j = target + 1; ok && j <= n; ++j) {
            Rational residual(0);
            for (int r = 0; r < n; ++r)
              residual += flag.dual_forms(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(r)) *
                          g[static_cast<std::size_t>(r)];
            ok = sgn(residual) == 0;
          }
        }
      } catch (const std::runtime_error&) {
        ok = false;
      }
    }
    if (ok) ++out.in_cell_unique;

    RationalMatrix generic(static_cast<std::size_t>(n), static_cast<std::size_t>(as));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < as; ++j) generic(i, j) = rng.small_rational();
    ++out.out_of_cell_samples;
    try {
      solve_lift(c, flag, generic, LiftingIndexSet::Kind::FullAlpha);
    } catch (const InconsistentSystemError&) {
      ++out.out_of_cell_rejected;
    } catch (const GenericityError&) {
    }
  }
  return out;
}

CheckResult check_lift_soundness(int samples, std::uint64_t seed) {
  std::ostringstream os;
  bool ok = true;
  for (const char* cond : {"358|12467", "59|47|12368", "458|12367", "358|47|126", "3478|1256", "24|13"}) {
    const auto r = lift_soundness(cond, samples, seed);
    ok = ok && r.in_cell_unique == r.in_cell_samples && 100 * r.out_of_cell_rejected >= 99 * r.out_of_cell_samples;
    os << cond << " " << r.in_cell_unique << "/" << r.in_cell_samples << " lifted, " << r.out_of_cell_rejected << "/"
       << r.out_of_cell_samples << " rejected; ";
  }
  return {"lift soundness (" + std::to_string(samples) + " samples per condition)", ok, os.str()};
}

SolveCount solve_and_certify(const std::string& condition, int count, int n, std::uint64_t seed) {
  SchubertProblem p;
  const auto type = parse_condition(condition).type();
  for (int i = 0; i < count; ++i) {
    p.conditions.push_back(parse_condition(condition, type));
    p.flags.flags.push_back(random_flag(n, seed * 1000 + static_cast<std::uint64_t>(i)));
  }
  const auto assembled = assemble_problem(p, auto_strategy(p));
  const auto csys = to_complex(assembled.system);
  const auto result = solve_total_degree(csys, {seed, 1});
  std::vector<std::vector<ComplexRational>> points;
  for (const auto& s : result.solutions) points.push_back(rationalize(newton(csys, s.point, 3, 0).point));
  const auto certs = certify_all(assembled.system, points);
  SolveCount out;
  out.solutions = certs.size();
  for (const auto& c : certs) {
    if (!c.certified) continue;
    ++out.certified;
    if (c.real_certified) ++out.real;
  }
  for (const auto& c : certs)
    if (c.certified && c.distinct_from.size() + 1 == out.certified) ++out.pairwise_distinct;
  return out;
}

CheckResult check_solve_counts(int instances, std::uint64_t seed) {
  std::ostringstream os;
  bool ok = true;
  for (int i = 0; i < instances; ++i) {
    const auto s = seed + static_cast<std::uint64_t>(i);
    const auto four = solve_and_certify("24|13", 4, 4, s);
    const auto five = solve_and_certify("35|124", 6, 5, s);
    ok = ok && four.solutions == 2 && four.pairwise_distinct == 2 && five.solutions == 5 && five.pairwise_distinct == 5;
    os << "[" << four.pairwise_distinct << "/" << four.solutions << ", " << five.pairwise_distinct << "/"
       << five.solutions << "] ";
  }
  return {"certified solution counts Gr(2,4)=2, Gr(2,5)=5 (" + std::to_string(instances) + " instances)", ok,
          os.str()};
}

CheckResult check_census_consistency(int n, int jobs) {
  const auto one = run_census(n, CensusMode::AllManifolds, true, 1);
  const auto many = run_census(n, CensusMode::AllManifolds, true, std::max(2, jobs));
  std::uint64_t sum = 0;
  bool rows_equal = one.manifolds.size() == many.manifolds.size();
  for (std::size_t i = 0; i < one.manifolds.size(); ++i) {
    const auto direct = manifold_census(one.manifolds[i].type, true);
    sum += direct.relevant;
    rows_equal = rows_equal && i < many.manifolds.size() && one.manifolds[i].relevant == many.manifolds[i].relevant &&
                 one.manifolds[i].pd_wins == many.manifolds[i].pd_wins &&
                 one.manifolds[i].lifted_wins == many.manifolds[i].lifted_wins;
  }
  const bool ok = rows_equal && sum == one.total_varieties && one.total_varieties == many.total_varieties &&
                  one.wins_primal_dual + one.wins_lifted + one.ties == one.total_varieties;
  return {"census consistency (n=" + std::to_string(n) + ")", ok,
          std::to_string(one.total_varieties) + " relevant varieties over " + std::to_string(one.manifolds.size()) +
              " manifolds"};
}

std::vector<CheckResult> check_census_n9(int jobs) {
  std::vector<CheckResult> out;
  const auto all = run_census(9, CensusMode::AllManifolds, true, jobs);
  out.push_back({"census n=9 total", all.total_varieties == 3395742, std::to_string(all.total_varieties)});
  std::ostringstream split;
  split << all.wins_primal_dual << " / " << all.wins_lifted << " / " << all.ties;
  out.push_back({"census n=9 split", all.wins_primal_dual == 141256 && all.wins_lifted == 3161233 && all.ties == 93253,
                 split.str()});
  for (const auto& m : all.manifolds) {
    const auto name = m.type.to_string();
    if (name == "Fl(2,3,5;9)")
      out.push_back({"census Fl(2,3,5;9)", m.relevant == 1725 && m.pd_wins == 7,
                     std::to_string(m.relevant) + " relevant, " + std::to_string(m.pd_wins) + " primal-dual wins"});
    if (name == "Fl(4,6,7;9)")
      out.push_back({"census Fl(4,6,7;9)", m.relevant == 1725 && m.pd_wins == 124,
                     std::to_string(m.relevant) + " relevant, " + std::to_string(m.pd_wins) + " primal-dual wins"});
  }
  const auto fav = run_census(9, CensusMode::FavorableOfDualPair, true, jobs);
  std::ostringstream fs;
  fs << fav.total_varieties << ": " << fav.wins_primal_dual << " / " << fav.wins_lifted << " / " << fav.ties;
  out.push_back({"census n=9 favorable manifolds",
                 fav.total_varieties == 1877752 && fav.wins_primal_dual == 53698 && fav.wins_lifted == 1784646 &&
                     fav.ties == 39408,
                 fs.str()});
  return out;
}

std::vector<CheckResult> run_checks(CheckLevel level, int jobs, std::uint64_t seed) {
  switch (level) {
    case CheckLevel::Fast:
      return {check_complete_intersection(6), check_patterns_and_duality(6), check_essential_pairs(5),
              check_grassmannian_lemma(9),    check_lift_soundness(20, seed),  check_solve_counts(2, seed),
              check_census_consistency(6, jobs)};
    case CheckLevel::Exhaustive7:
      return {check_complete_intersection(7), check_patterns_and_duality(7), check_essential_pairs(6),
              check_grassmannian_lemma(9),    check_lift_soundness(100, seed), check_solve_counts(5, seed),
              check_census_consistency(7, jobs)};
    case CheckLevel::Exhaustive9Census:
      return check_census_n9(jobs);
  }
  return {};
}

}  // namespace schubert
