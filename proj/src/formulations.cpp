#include "schubert/formulations.hpp"

#include <algorithm>
#include <map>

namespace schubert {

std::string to_string(FormulationKind kind) {
  switch (kind) {
    case FormulationKind::Determinantal: return "determinantal";
    case FormulationKind::Lifted: return "lifted";
    case FormulationKind::ReducedLifted: return "reduced-lifted";
    case FormulationKind::PrimalDualCount: return "primal-dual-count";
  }
  return "?";
}

std::string to_string(ConditionStrategy s) {
  switch (s) {
    case ConditionStrategy::Chart: return "chart";
    case ConditionStrategy::Lifted: return "lifted";
    case ConditionStrategy::Reduced: return "reduced";
    case ConditionStrategy::Determinantal: return "det";
  }
  return "?";
}

ConditionStrategy parse_strategy(const std::string& text) {
  if (text == "chart") return ConditionStrategy::Chart;
  if (text == "lifted") return ConditionStrategy::Lifted;
  if (text == "reduced") return ConditionStrategy::Reduced;
  if (text == "det") return ConditionStrategy::Determinantal;
  throw InputError("unknown strategy '" + text + "' (expected chart, lifted, reduced, det or auto)");
}

std::vector<std::pair<int, int>> essential_pairs(const SchubertCondition& c) {
  const int n = c.n();
  const auto& t = c.type();
  const int s = t.s();
  // r(i, j) including the borders j = 0 (empty) and j = s+1 (all of C^n).
  auto r = [&](int i, int j) {
    if (j == 0 || i == 0) return 0;
    if (j == s + 1) return i;
    return rank_function(c, i, j);
  };
  std::vector<std::pair<int, int>> out;
  for (int j = 1; j <= s; ++j) {
    const int aj = t.at(j);
    for (int i = 1; i < n; ++i) {
      const int rij = r(i, j);
      if (rij <= std::max(0, i + aj - n)) continue;
      if (rij <= r(i - 1, j) || rij <= r(i, j - 1)) continue;
      if (rij <= r(i + 1, j) - 1) continue;
      if (rij <= r(i, j + 1) - (t.at(j + 1) - aj)) continue;
      out.emplace_back(i, j);
    }
  }
  return out;
}

template <class T>
Matrix<Polynomial<T>> chart_matrix(const PatternMatrix& coords, std::size_t nvars, std::size_t offset) {
  Matrix<Polynomial<T>> m(static_cast<std::size_t>(coords.rows()), static_cast<std::size_t>(coords.cols()),
                          Polynomial<T>(nvars));
  for (int i = 0; i < coords.rows(); ++i)
    for (int j = 0; j < coords.cols(); ++j) {
      const auto& cell = coords.at(i, j);
      if (cell.kind == PatternCell::Kind::One) m(i, j) = Polynomial<T>::constant(nvars, T(1));
      if (cell.kind == PatternCell::Kind::Var)
        m(i, j) = Polynomial<T>::variable(nvars, offset + static_cast<std::size_t>(cell.var));
    }
  return m;
}

namespace {

void check_shapes(const SchubertCondition& c, std::size_t flag_n, const PatternMatrix& coords) {
  if (static_cast<int>(flag_n) != c.n() || coords.rows() != c.n() || coords.cols() != c.type().last())
    throw InputError("formulation: incompatible shapes for " + c.to_string());
}

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(idx);
    int p = k - 1;
    while (p >= 0 && idx[static_cast<std::size_t>(p)] == n - k + p) --p;
    if (p < 0) break;
    ++idx[static_cast<std::size_t>(p)];
    for (int q = p + 1; q < k; ++q) idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
  }
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return b;
}

/// f_j(v) for a column of polynomials.
template <class T>
Polynomial<T> apply_form(const BasicFlag<T>& flag, int j, const Matrix<Polynomial<T>>& e, int col, std::size_t nvars) {
  Polynomial<T> out(nvars);
  for (std::size_t r = 0; r < flag.n(); ++r) {
    const T& coeff = flag.dual_forms(static_cast<std::size_t>(j - 1), r);
    if (is_zero(coeff)) continue;
    const auto& entry = e(r, static_cast<std::size_t>(col - 1));
    if (entry.is_zero()) continue;
    Polynomial<T> term = entry;
    term.scale(coeff);
    out += term;
  }
  return out;
}

/// Membership equations f_j(g_k) = 0, j > w(k) + m(k), with
/// g_k = e_k + sum_i lift_{k,i} e_i. Lift variables start at `lift_offset`.
template <class T>
std::vector<Polynomial<T>> membership_equations(const SchubertCondition& c, const BasicFlag<T>& flag,
                                                const Matrix<Polynomial<T>>& e, const LiftingIndexSet& set,
                                                std::size_t lift_offset, std::size_t nvars) {
  const int n = c.n();
  std::map<std::pair<int, int>, Polynomial<T>> form_cache;
  auto form = [&](int j, int col) -> const Polynomial<T>& {
    auto it = form_cache.find({j, col});
    if (it == form_cache.end()) it = form_cache.emplace(std::make_pair(j, col), apply_form(flag, j, e, col, nvars)).first;
    return it->second;
  };
  std::vector<Polynomial<T>> eqs;
  std::size_t var = lift_offset;
  for (int k = 1; k <= c.type().last(); ++k) {
    const auto& partners = set.entries[static_cast<std::size_t>(k - 1)];
    const int target = c(k) + set.offsets[static_cast<std::size_t>(k - 1)];
    for (int j = n; j > target; --j) {
      Polynomial<T> eq = form(j, k);
      for (std::size_t t = 0; t < partners.size(); ++t)
        eq += Polynomial<T>::variable(nvars, var + t) * form(j, partners[t]);
      if (eq.is_zero()) throw GenericityError("membership equation vanishes identically for " + c.to_string());
      eqs.push_back(std::move(eq));
    }
    var += partners.size();
  }
  return eqs;
}

template <class T>
std::vector<Polynomial<T>> rank_equations(const SchubertCondition& c, const BasicFlag<T>& flag,
                                          const Matrix<Polynomial<T>>& e, std::size_t nvars) {
  const int n = c.n();
  std::vector<Polynomial<T>> eqs;
  const auto pairs = essential_pairs(c);
  for (const auto& [i, j] : pairs) {
    const int aj = c.type().at(j);
    const int cols = i + aj;
    const int size = cols - rank_function(c, i, j) + 1;
    const std::uint64_t count = binomial(n, size) * binomial(cols, size);
    if (count > kMaxMinors)
      throw CapacityError("determinantal: " + std::to_string(count) + " minors for " + c.to_string() +
                          " exceed the guard");
    Matrix<Polynomial<T>> m(static_cast<std::size_t>(n), static_cast<std::size_t>(cols), Polynomial<T>(nvars));
    for (int r = 0; r < n; ++r) {
      for (int q = 0; q < i; ++q) m(r, q) = Polynomial<T>::constant(nvars, flag.basis(r, q));
      for (int q = 0; q < aj; ++q) m(r, i + q) = e(r, q);
    }
    const auto row_sets = combinations(n, size);
    const auto col_sets = combinations(cols, size);
    for (const auto& rows : row_sets)
      for (const auto& cs : col_sets) {
        Matrix<Polynomial<T>> minor(static_cast<std::size_t>(size), static_cast<std::size_t>(size), Polynomial<T>(nvars));
        for (int a = 0; a < size; ++a)
          for (int b = 0; b < size; ++b) minor(a, b) = m(rows[a], cs[b]);
        auto d = det(minor);
        if (!d.is_zero()) eqs.push_back(std::move(d));
      }
  }
  if (codim(c) == 1 && eqs.size() != 1)
    throw GenericityError("hypersurface condition " + c.to_string() + " did not give a single determinant");
  return eqs;
}

std::vector<Variable> chart_variables(const PatternMatrix& coords) {
  std::vector<Variable> vars;
  for (int v = 0; v < coords.variable_count(); ++v) {
    const auto [i, j] = coords.variable_position(v);
    vars.push_back({"x_" + std::to_string(i) + "_" + std::to_string(j), "stiefel"});
  }
  return vars;
}

void append_lift_variables(std::vector<Variable>& vars, const LiftingIndexSet& set, const std::string& prefix,
                           const std::string& group) {
  for (std::size_t k = 0; k < set.entries.size(); ++k)
    for (int i : set.entries[k])
      vars.push_back({prefix + "_" + std::to_string(k + 1) + "_" + std::to_string(i), group});
}

template <class T>
Formulation<T> lifted_impl(const SchubertCondition& c, const BasicFlag<T>& flag, const PatternMatrix& coords,
                           const LiftingIndexSet& set, FormulationKind kind) {
  check_shapes(c, flag.n(), coords);
  PolySystem<T> sys;
  sys.kind = to_string(kind);
  sys.variables = chart_variables(coords);
  const std::size_t offset = sys.variables.size();
  append_lift_variables(sys.variables, set, kind == FormulationKind::Lifted ? "a" : "b", "lift");
  const std::size_t nvars = sys.variables.size();
  const auto e = chart_matrix<T>(coords, nvars);
  sys.equations = membership_equations(c, flag, e, set, offset, nvars);
  Formulation<T> f{kind, std::nullopt, set.size(), sys.equations.size(), c};
  f.system = std::move(sys);
  return f;
}

}  // namespace

template <class T>
Formulation<T> determinantal(const SchubertCondition& c, const BasicFlag<T>& flag, const PatternMatrix& coords) {
  check_shapes(c, flag.n(), coords);
  PolySystem<T> sys;
  sys.kind = to_string(FormulationKind::Determinantal);
  sys.variables = chart_variables(coords);
  const std::size_t nvars = sys.variables.size();
  sys.equations = rank_equations(c, flag, chart_matrix<T>(coords, nvars), nvars);
  Formulation<T> f{FormulationKind::Determinantal, std::nullopt, 0, sys.equations.size(), c};
  f.system = std::move(sys);
  return f;
}

template <class T>
Formulation<T> lifted(const SchubertCondition& c, const BasicFlag<T>& flag, const PatternMatrix& coords) {
  return lifted_impl(c, flag, coords, alpha_set(c), FormulationKind::Lifted);
}

template <class T>
Formulation<T> reduced_lifted(const SchubertCondition& c, const BasicFlag<T>& flag, const PatternMatrix& coords) {
  return lifted_impl(c, flag, coords, beta_set(c), FormulationKind::ReducedLifted);
}

std::size_t grassmannian_determinantal_count(const SchubertCondition& c) {
  if (!c.type().is_grassmannian()) throw InputError("grassmannian_determinantal_count needs a Grassmannian condition");
  const int n = c.n();
  const int k = c.type().last();
  std::size_t count = 0;
  for (const auto& p : combinations(n, k)) {
    bool below = true;
    for (int m = 0; m < k; ++m) below = below && p[static_cast<std::size_t>(m)] + 1 <= c(m + 1);
    if (!below) ++count;
  }
  return count;
}

std::vector<Rational> LiftSolution::flattened() const {
  std::vector<Rational> out;
  for (const auto& v : values) out.insert(out.end(), v.begin(), v.end());
  return out;
}

LiftSolution solve_lift(const SchubertCondition& c, const FlagMatrix& flag, const RationalMatrix& e,
                        LiftingIndexSet::Kind kind) {
  const int n = c.n();
  const int as = c.type().last();
  if (static_cast<int>(e.rows()) != n || static_cast<int>(e.cols()) != as || static_cast<int>(flag.n()) != n)
    throw InputError("solve_lift: shape mismatch");
  LiftSolution out;
  out.set = kind == LiftingIndexSet::Kind::FullAlpha ? alpha_set(c) : beta_set(c);
  const RationalMatrix y = flag.dual_forms * e;  // y(j-1, k-1) = f_j(e_k)
  for (int k = 1; k <= as; ++k) {
    const auto& partners = out.set.entries[static_cast<std::size_t>(k - 1)];
    const int target = c(k) + out.set.offsets[static_cast<std::size_t>(k - 1)];
    const std::size_t rows = static_cast<std::size_t>(n - target);
    RationalMatrix a(rows, partners.size());
    std::vector<Rational> b(rows);
    for (int j = target + 1; j <= n; ++j) {
      const std::size_t r = static_cast<std::size_t>(j - target - 1);
      b[r] = -y(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(k - 1));
      for (std::size_t t = 0; t < partners.size(); ++t)
        a(r, t) = y(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(partners[t] - 1));
    }
    auto sol = solve_linear(a, b);
    if (sol.status == SolveStatus::Inconsistent)
      throw InconsistentSystemError("solve_lift: no lift for g_" + std::to_string(k) + "; E is not in X_" +
                                    c.to_string());
    if (sol.status == SolveStatus::Underdetermined)
      throw GenericityError("solve_lift: lift for g_" + std::to_string(k) + " is not unique (not in general position)");
    if (kind == LiftingIndexSet::Kind::FullAlpha) {
      Rational lead = y(static_cast<std::size_t>(c(k) - 1), static_cast<std::size_t>(k - 1));
      for (std::size_t t = 0; t < partners.size(); ++t)
        lead += sol.x[t] * y(static_cast<std::size_t>(c(k) - 1), static_cast<std::size_t>(partners[t] - 1));
      if (sgn(lead) == 0) out.in_open_cell = false;
    }
    out.values.push_back(std::move(sol.x));
  }
  return out;
}

PrimalDualCount primal_dual_counts(const SchubertCondition& c, bool reduced) {
  const auto& t = c.type();
  PrimalDualCount out;
  out.new_variables = static_cast<std::size_t>(length(c));
  if (t.is_grassmannian()) out.bilinear_equations = static_cast<std::size_t>(t.last() * (t.n() - t.last()));
  if (!reduced) return out;
  const int s = t.s();
  for (unsigned mask = 1; mask < (1u << s); ++mask) {
    std::vector<int> b;
    for (int j = 0; j < s; ++j)
      if (mask & (1u << j)) b.push_back(t.a()[static_cast<std::size_t>(j)]);
    const auto proj = block_sort_projection(c, DescentType(t.n(), b));
    if (proj.codim_preserved) out.new_variables = std::min(out.new_variables, static_cast<std::size_t>(length(proj.v)));
  }
  return out;
}

PrimalDualCount primal_dual_pair_counts(const SchubertCondition& c1, const SchubertCondition& c2) {
  if (!c1.type().is_grassmannian() || !(c1.type() == c2.type()))
    throw InputError("primal_dual_pair_counts needs two conditions on the same Grassmannian");
  const int dim = c1.type().dim();
  PrimalDualCount out;
  out.new_variables = static_cast<std::size_t>(dim - codim(c1) - codim(c2));
  out.bilinear_equations = static_cast<std::size_t>(dim);
  return out;
}

void SchubertProblem::validate() const {
  if (conditions.empty()) throw InputError("Schubert problem has no conditions");
  const auto& t = conditions.front().type();
  int total = 0;
  for (const auto& c : conditions) {
    if (!(c.type() == t)) throw InputError("Schubert problem mixes flag manifolds");
    total += codim(c);
  }
  if (total != t.dim())
    throw InputError("Schubert problem is not zero-dimensional: sum of codimensions " + std::to_string(total) +
                     " != dim " + std::to_string(t.dim()));
  if (flags.flags.size() != conditions.size()) throw InputError("Schubert problem needs one flag per condition");
  for (const auto& f : flags.flags)
    if (static_cast<int>(f.n()) != t.n()) throw InputError("flag dimension does not match n");
}

std::vector<ConditionStrategy> auto_strategy(const SchubertProblem& p) {
  std::vector<ConditionStrategy> out;
  const bool grass = !p.conditions.empty() && p.conditions.front().type().is_grassmannian();
  for (std::size_t i = 0; i < p.conditions.size(); ++i) {
    if (i == 0 || (i == 1 && grass)) {
      out.push_back(ConditionStrategy::Chart);
    } else if (codim(p.conditions[i]) == 1) {
      out.push_back(ConditionStrategy::Determinantal);
    } else {
      out.push_back(ConditionStrategy::Reduced);
    }
  }
  return out;
}

namespace {

/// Basis b_1..b_n with b_i spanning F1_i ∩ F2_{n+1-i}, as columns.
RationalMatrix opposite_pair_basis(const FlagMatrix& f1, const FlagMatrix& f2) {
  const std::size_t n = f1.n();
  const RationalMatrix psi = f1.dual_forms * f2.basis;  // F2 in F1 coordinates
  RationalMatrix basis(n, n);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t m = n + 1 - i;  // columns of F2 used
    // Combinations y of psi's first m columns with coordinates i+1..n zero.
    RationalMatrix lower = psi.block(i, 0, n - i, m);
    RationalMatrix ns = null_space(lower);
    if (ns.cols() != 1) throw GenericityError("flags 1 and 2 are not in general position");
    RationalMatrix v = psi.block(0, 0, n, m) * ns;
    if (sgn(v(i - 1, 0)) == 0) throw GenericityError("flags 1 and 2 are not in general position");
    for (std::size_t r = 0; r < n; ++r) basis(r, i - 1) = v(r, 0);
  }
  return f1.basis * basis;
}

}  // namespace

AssembledProblem assemble_problem(const SchubertProblem& p, std::span<const ConditionStrategy> strategy) {
  p.validate();
  const std::size_t r = p.conditions.size();
  if (strategy.size() != r) throw InputError("strategy must list one entry per condition");
  if (strategy[0] != ConditionStrategy::Chart) throw InputError("condition 1 must use the chart strategy");
  const bool pair = r > 1 && strategy[1] == ConditionStrategy::Chart;
  for (std::size_t i = pair ? 2 : 1; i < r; ++i)
    if (strategy[i] == ConditionStrategy::Chart)
      throw InputError("only condition 1 (and 2 on a Grassmannian) can be the chart");
  const auto& type = p.conditions.front().type();
  if (pair && !type.is_grassmannian()) throw InputError("a two-condition chart needs a Grassmannian");
  const std::size_t n = static_cast<std::size_t>(type.n());

  AssembledProblem out{PolySystem<Rational>{},
                       pair ? pair_pattern(p.conditions[0], p.conditions[1]) : stiefel_pattern(p.conditions[0]),
                       {},
                       {},
                       {}};
  out.change_of_basis = pair ? opposite_pair_basis(p.flags.flags[0], p.flags.flags[1]) : p.flags.flags[0].basis;
  const auto to_chart = inverse(out.change_of_basis);
  if (!to_chart) throw GenericityError("degenerate change of basis");
  for (std::size_t i = 0; i < r; ++i) {
    if (i == 0) {
      out.normalized_flags.flags.push_back(FlagMatrix::standard(n));
    } else if (i == 1 && pair) {
      out.normalized_flags.flags.push_back(FlagMatrix::opposite(n));
    } else {
      out.normalized_flags.flags.push_back(FlagMatrix::from_basis(*to_chart * p.flags.flags[i].basis));
    }
  }

  auto& sys = out.system;
  sys.kind = "schubert-problem";
  sys.variables = chart_variables(out.chart);
  std::vector<std::pair<std::size_t, LiftingIndexSet>> lifts(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (strategy[i] != ConditionStrategy::Lifted && strategy[i] != ConditionStrategy::Reduced) continue;
    const bool full = strategy[i] == ConditionStrategy::Lifted;
    lifts[i] = {sys.variables.size(), full ? alpha_set(p.conditions[i]) : beta_set(p.conditions[i])};
    append_lift_variables(sys.variables, lifts[i].second, (full ? "a" : "b") + std::to_string(i + 1),
                          "lift-" + std::to_string(i + 1));
  }
  const std::size_t nvars = sys.variables.size();
  const auto e = chart_matrix<Rational>(out.chart, nvars);
  for (std::size_t i = 0; i < r; ++i) {
    const auto& c = p.conditions[i];
    const auto& flag = out.normalized_flags.flags[i];
    ConditionContribution contrib{strategy[i], 0, 0};
    std::vector<Polynomial<Rational>> eqs;
    switch (strategy[i]) {
      case ConditionStrategy::Chart:
        contrib.new_variables = i == 0 ? static_cast<std::size_t>(out.chart.variable_count()) : 0;
        break;
      case ConditionStrategy::Lifted:
      case ConditionStrategy::Reduced:
        eqs = membership_equations(c, flag, e, lifts[i].second, lifts[i].first, nvars);
        contrib.new_variables = lifts[i].second.size();
        break;
      case ConditionStrategy::Determinantal:
        eqs = rank_equations(c, flag, e, nvars);
        break;
    }
    for (const auto& eq : eqs)
      if (eq.is_constant()) throw GenericityError("condition " + std::to_string(i + 1) + " gives a constant equation");
    contrib.equations = eqs.size();
    for (auto& eq : eqs) sys.equations.push_back(std::move(eq));
    out.contributions.push_back(contrib);
  }
  return out;
}

template Matrix<Polynomial<Rational>> chart_matrix(const PatternMatrix&, std::size_t, std::size_t);
template Matrix<Polynomial<Complex>> chart_matrix(const PatternMatrix&, std::size_t, std::size_t);
template Formulation<Rational> determinantal(const SchubertCondition&, const FlagMatrix&, const PatternMatrix&);
template Formulation<Complex> determinantal(const SchubertCondition&, const ComplexFlag&, const PatternMatrix&);
template Formulation<Rational> lifted(const SchubertCondition&, const FlagMatrix&, const PatternMatrix&);
template Formulation<Complex> lifted(const SchubertCondition&, const ComplexFlag&, const PatternMatrix&);
template Formulation<Rational> reduced_lifted(const SchubertCondition&, const FlagMatrix&, const PatternMatrix&);
template Formulation<Complex> reduced_lifted(const SchubertCondition&, const ComplexFlag&, const PatternMatrix&);

}  // namespace schubert
