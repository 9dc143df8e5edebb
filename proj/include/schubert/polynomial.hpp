#pragma once

// Dense-exponent multivariate polynomials over an exchangeable coefficient
// field, polynomial systems with named variable groups, determinants,
// evaluation and Jacobians.

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "schubert/errors.hpp"
#include "schubert/matrix.hpp"
#include "schubert/rational.hpp"

namespace schubert {

using Exponents = std::vector<std::uint8_t>;

template <class T>
class Polynomial {
 public:
  using Terms = std::map<Exponents, T>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  // Constant; lets Matrix<Polynomial<T>> fill with T(0) placeholders.
  Polynomial(int c) : nvars_(0) {  // NOLINT
    if (c != 0) terms_.emplace(Exponents{}, T(c));
  }

  static Polynomial constant(std::size_t nvars, const T& c) {
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }
  static Polynomial variable(std::size_t nvars, std::size_t index, const T& coeff = T(1)) {
    Exponents e(nvars, 0);
    e.at(index) = 1;
    Polynomial p(nvars);
    p.add_term(e, coeff);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Exponents& e, const T& c) {
    if (schubert::is_zero(c)) return;
    if (e.size() != nvars_) throw InputError("polynomial: exponent length does not match registry");
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (schubert::is_zero(it->second)) terms_.erase(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }
  T constant_term() const {
    for (const auto& [e, c] : terms_)
      if (total_degree(e) == 0) return c;
    return T(0);
  }

  int total_degree() const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }
  /// Max over terms of the sum of exponents of the given variables.
  int degree_in(std::span<const std::size_t> vars) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (auto v : vars) s += e[v];
      d = std::max(d, s);
    }
    return d;
  }

  Polynomial derivative(std::size_t var) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents f = e;
      const int k = f[var]--;
      out.add_term(f, c * T(k));
    }
    return out;
  }

  template <class U>
  U evaluate(std::span<const U> point) const {
    if (point.size() != nvars_) throw InputError("evaluate: point length does not match the number of variables");
    U total(0);
    for (const auto& [e, c] : terms_) {
      U term(c);
      for (std::size_t v = 0; v < nvars_; ++v)
        for (int k = 0; k < e[v]; ++k) term *= point[v];
      total += term;
    }
    return total;
  }

  /// Applies `f` to every coefficient.
  template <class U, class F>
  Polynomial<U> map_coefficients(F&& f) const {
    Polynomial<U> out(nvars_);
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    adopt(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    adopt(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& scale(const T& s) {
    if (schubert::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a.scale(T(-1)); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    const std::size_t nv = std::max(a.nvars_, b.nvars_);
    Polynomial out(nv);
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(nv, 0);
        for (std::size_t v = 0; v < ea.size(); ++v) e[v] = ea[v];
        for (std::size_t v = 0; v < eb.size(); ++v) e[v] = static_cast<std::uint8_t>(e[v] + eb[v]);
        out.add_term(e, ca * cb);
      }
    return out;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_ && (a.is_zero() || a.nvars_ == b.nvars_);
  }

  static int total_degree(const Exponents& e) {
    int s = 0;
    for (auto x : e) s += x;
    return s;
  }

 private:
  // Bare integer constants (nvars 0) widen to the other operand's registry.
  void adopt(const Polynomial& o) {
    if (nvars_ == o.nvars_ || o.nvars_ == 0) return;
    if (nvars_ != 0) throw InputError("polynomial: registry size mismatch");
    Terms widened;
    for (auto& [e, c] : terms_) {
      Exponents f(o.nvars_, 0);
      widened.emplace(std::move(f), c);
    }
    terms_ = std::move(widened);
    nvars_ = o.nvars_;
  }

  std::size_t nvars_;
  Terms terms_;
};

template <class T>
bool is_zero(const Polynomial<T>& p) {
  return p.is_zero();
}

struct Variable {
  std::string name;
  std::string group;
  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Equations over a shared variable registry with disjoint named groups.
template <class T>
struct PolySystem {
  std::vector<Variable> variables;
  std::vector<Polynomial<T>> equations;
  std::string kind;

  std::size_t variable_count() const { return variables.size(); }
  std::size_t equation_count() const { return equations.size(); }
  bool is_square() const { return variables.size() == equations.size(); }

  std::vector<std::size_t> group_indices(const std::string& group) const {
    std::vector<std::size_t> idx;
    for (std::size_t v = 0; v < variables.size(); ++v)
      if (variables[v].group == group) idx.push_back(v);
    return idx;
  }
  std::vector<std::string> groups() const {
    std::vector<std::string> out;
    for (const auto& v : variables)
      if (std::find(out.begin(), out.end(), v.group) == out.end()) out.push_back(v.group);
    return out;
  }

  /// Every equation has degree <= 1 in each group and involves no others.
  bool is_bilinear(const std::string& g1, const std::string& g2) const {
    const auto a = group_indices(g1);
    const auto b = group_indices(g2);
    for (const auto& eq : equations) {
      if (eq.degree_in(a) > 1 || eq.degree_in(b) > 1) return false;
      if (eq.total_degree() > eq.degree_in(a) + eq.degree_in(b) && eq.total_degree() > 0) {
        for (const auto& [e, c] : eq.terms()) {
          int inside = 0;
          for (auto v : a) inside += e[v];
          for (auto v : b) inside += e[v];
          if (inside != Polynomial<T>::total_degree(e)) return false;
        }
      }
    }
    return true;
  }

  /// Bézout number: product of total degrees.
  double bezout_number() const {
    double b = 1;
    for (const auto& eq : equations) b *= std::max(eq.total_degree(), 0);
    return b;
  }

  template <class U, class F>
  PolySystem<U> map_coefficients(F&& f) const {
    PolySystem<U> out;
    out.variables = variables;
    out.kind = kind;
    for (const auto& eq : equations) out.equations.push_back(eq.template map_coefficients<U>(f));
    return out;
  }
};

PolySystem<Complex> to_complex(const PolySystem<Rational>& s);

/// Largest matrix size accepted by det().
inline constexpr std::size_t kMaxDeterminantSize = 12;

/// Exact determinant: Bareiss on constant matrices, otherwise cofactor
/// expansion with memoization over row subsets (constant columns first).
template <class T>
Polynomial<T> det(const Matrix<Polynomial<T>>& m);

template <class T, class U>
std::vector<U> evaluate(const PolySystem<T>& s, std::span<const U> point) {
  if (point.size() != s.variable_count())
    throw InputError("evaluate: point has " + std::to_string(point.size()) + " coordinates, system has " +
                     std::to_string(s.variable_count()) + " variables");
  std::vector<U> out;
  out.reserve(s.equation_count());
  for (const auto& eq : s.equations) out.push_back(eq.evaluate(point));
  return out;
}

template <class T>
Matrix<Polynomial<T>> jacobian(const PolySystem<T>& s) {
  Matrix<Polynomial<T>> j(s.equation_count(), s.variable_count(), Polynomial<T>(s.variable_count()));
  for (std::size_t i = 0; i < s.equation_count(); ++i)
    for (std::size_t v = 0; v < s.variable_count(); ++v) j(i, v) = s.equations[i].derivative(v);
  return j;
}

extern template Polynomial<Rational> det(const Matrix<Polynomial<Rational>>&);
extern template Polynomial<Complex> det(const Matrix<Polynomial<Complex>>&);

}  // namespace schubert
