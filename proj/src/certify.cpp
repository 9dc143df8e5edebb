#include "schubert/certify.hpp"

#include <limits>
#include <map>

namespace schubert {

template <class T>
concept ExactScalar = std::numeric_limits<T>::is_exact;
static_assert(ExactScalar<Rational>, "certification arithmetic must be exact");

namespace {

using CVector = std::vector<ComplexRational>;
using CMatrix = std::vector<CVector>;

Rational abs_rational(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

/// Exact Gauss-Jordan solve of J X = B for several right-hand sides.
/// Returns false when J is singular.
bool solve_exact(CMatrix j, CMatrix& rhs) {
  const std::size_t n = j.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && j[piv][col].is_zero()) ++piv;
    if (piv == n) return false;
    std::swap(j[piv], j[col]);
    std::swap(rhs[piv], rhs[col]);
    const ComplexRational inv = ComplexRational(1) / j[col][col];
    for (auto& v : j[col]) v *= inv;
    for (auto& v : rhs[col]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || j[r][col].is_zero()) continue;
      const ComplexRational factor = j[r][col];
      for (std::size_t c = col; c < n; ++c) j[r][c] -= factor * j[col][c];
      for (std::size_t c = 0; c < rhs[r].size(); ++c) rhs[r][c] -= factor * rhs[col][c];
    }
  }
  return true;
}

ComplexRational power(const ComplexRational& z, int k) {
  ComplexRational out(1);
  for (int i = 0; i < k; ++i) out *= z;
  return out;
}

Rational binomial(int n, int k) {
  Rational b(1);
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

/// Taylor coefficients of f at x: f(x + y) = sum_m c_m y^m.
std::map<Exponents, ComplexRational> taylor(const Polynomial<Rational>& f, std::span<const ComplexRational> x) {
  std::map<Exponents, ComplexRational> out;
  const std::size_t n = x.size();
  for (const auto& [e, c] : f.terms()) {
    std::map<Exponents, ComplexRational> partial{{Exponents(n, 0), ComplexRational(c)}};
    for (std::size_t v = 0; v < n; ++v) {
      if (e[v] == 0) continue;
      std::map<Exponents, ComplexRational> next;
      for (const auto& [m, a] : partial)
        for (int j = 0; j <= e[v]; ++j) {
          Exponents m2 = m;
          m2[v] = static_cast<std::uint8_t>(j);
          ComplexRational term = a * power(x[v], e[v] - j) * ComplexRational(binomial(e[v], j));
          auto [it, fresh] = next.try_emplace(m2, term);
          if (!fresh) it->second += term;
        }
      partial = std::move(next);
    }
    for (const auto& [m, a] : partial) {
      auto [it, fresh] = out.try_emplace(m, a);
      if (!fresh) it->second += a;
    }
  }
  return out;
}

int degree_of(const Exponents& e) {
  int d = 0;
  for (auto k : e) d += k;
  return d;
}

}  // namespace

Rational alpha_threshold() { return Rational(15767, 100000); }

Certificate alpha_test(const PolySystem<Rational>& s, std::span<const ComplexRational> x) {
  if (!s.is_square()) throw InputError("alpha_test needs a square system");
  if (x.size() != s.variable_count()) throw InputError("alpha_test: point has the wrong length");
  const std::size_t n = x.size();
  Certificate out;
  out.point.assign(x.begin(), x.end());

  std::vector<std::map<Exponents, ComplexRational>> coeffs;
  for (const auto& eq : s.equations) coeffs.push_back(taylor(eq, x));

  // Jacobian and value from the degree <= 1 Taylor coefficients.
  CMatrix jac(n, CVector(n));
  CMatrix rhs(n, CVector(1));
  int max_degree = 0;
  for (std::size_t l = 0; l < n; ++l)
    for (const auto& [m, c] : coeffs[l]) {
      const int d = degree_of(m);
      max_degree = std::max(max_degree, d);
      if (d == 0) rhs[l][0] = c;
      if (d == 1)
        for (std::size_t v = 0; v < n; ++v)
          if (m[v] == 1) jac[l][v] = c;
    }

  // One solve gives Df^{-1} f and Df^{-1} applied to every higher coefficient.
  std::vector<Exponents> monomials;
  {
    std::map<Exponents, int> seen;
    for (const auto& cl : coeffs)
      for (const auto& [m, c] : cl)
        if (degree_of(m) >= 2 && seen.emplace(m, 0).second) monomials.push_back(m);
  }
  for (std::size_t l = 0; l < n; ++l) {
    rhs[l].resize(1 + monomials.size());
    for (std::size_t t = 0; t < monomials.size(); ++t) {
      auto it = coeffs[l].find(monomials[t]);
      if (it != coeffs[l].end()) rhs[l][1 + t] = it->second;
    }
  }
  if (!solve_exact(jac, rhs)) {
    out.singular = true;
    return out;
  }

  Rational beta_sq(0);
  for (std::size_t i = 0; i < n; ++i) beta_sq = std::max(beta_sq, rhs[i][0].norm2());
  out.beta = sgn(beta_sq) == 0 ? Rational(0) : root_upper(beta_sq, 2);

  // |A D^k f / k!| <= max_i sum_{|m| = k} |(A c_m)_i|.
  out.gamma = 0;
  for (int k = 2; k <= max_degree; ++k) {
    Rational bound(0);
    for (std::size_t i = 0; i < n; ++i) {
      Rational row(0);
      for (std::size_t t = 0; t < monomials.size(); ++t)
        if (degree_of(monomials[t]) == k && !rhs[i][1 + t].is_zero()) row += abs_upper(rhs[i][1 + t]);
      bound = std::max(bound, row);
    }
    if (sgn(bound) == 0) continue;
    const Rational gk = k == 2 ? bound : root_upper(bound, static_cast<unsigned>(k - 1));
    out.gamma = std::max(out.gamma, gk);
  }
  out.alpha = out.beta * out.gamma;
  out.certified = out.alpha <= alpha_threshold();
  out.real_certified = certify_real(s, out);
  return out;
}

bool certify_real(const PolySystem<Rational>& s, const Certificate& c) {
  if (!c.certified || c.point.size() != s.variable_count()) return false;
  Rational spread(0);
  for (const auto& z : c.point) spread = std::max(spread, abs_rational(2 * z.im));
  // Newton's iteration preserves real points of a real system.
  if (sgn(spread) == 0) return true;
  return c.alpha < Rational(3, 100) && 20 * c.gamma * spread < 1;
}

bool certainly_distinct(const Certificate& a, const Certificate& b) {
  if (!a.certified || !b.certified || a.point.size() != b.point.size()) return false;
  Rational sep_sq(0);
  for (std::size_t v = 0; v < a.point.size(); ++v) sep_sq = std::max(sep_sq, (a.point[v] - b.point[v]).norm2());
  const Rational radius = 2 * (a.beta + b.beta);
  return sep_sq > radius * radius;
}

std::vector<Certificate> certify_all(const PolySystem<Rational>& s, const std::vector<std::vector<ComplexRational>>& points) {
  std::vector<Certificate> out;
  for (const auto& p : points) out.push_back(alpha_test(s, p));
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j)
      if (i != j && certainly_distinct(out[i], out[j])) out[i].distinct_from.push_back(j);
  return out;
}

}  // namespace schubert
