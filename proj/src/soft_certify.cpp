#include "schubert/soft_certify.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <map>

#include "schubert/certify.hpp"

namespace schubert {

namespace {

double binomial(int n, int k) {
  double b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

std::map<Exponents, Complex> taylor(const Polynomial<Complex>& f, std::span<const Complex> x) {
  std::map<Exponents, Complex> out;
  const std::size_t n = x.size();
  for (const auto& [e, c] : f.terms()) {
    std::map<Exponents, Complex> partial{{Exponents(n, 0), c}};
    for (std::size_t v = 0; v < n; ++v) {
      if (e[v] == 0) continue;
      std::map<Exponents, Complex> next;
      for (const auto& [m, a] : partial)
        for (int j = 0; j <= e[v]; ++j) {
          Exponents m2 = m;
          m2[v] = static_cast<std::uint8_t>(j);
          next[m2] += a * std::pow(x[v], e[v] - j) * binomial(e[v], j);
        }
      partial = std::move(next);
    }
    for (const auto& [m, a] : partial) out[m] += a;
  }
  return out;
}

int degree_of(const Exponents& e) {
  int d = 0;
  for (auto k : e) d += k;
  return d;
}

}  // namespace

SoftCertificate soft_alpha_test(const PolySystem<Complex>& s, std::span<const Complex> x) {
  if (!s.is_square() || x.size() != s.variable_count()) throw InputError("soft_alpha_test: shape mismatch");
  const auto n = static_cast<Eigen::Index>(x.size());
  SoftCertificate out;
  std::vector<std::map<Exponents, Complex>> coeffs;
  for (const auto& eq : s.equations) coeffs.push_back(taylor(eq, x));
  Eigen::MatrixXcd jac = Eigen::MatrixXcd::Zero(n, n);
  Eigen::VectorXcd f = Eigen::VectorXcd::Zero(n);
  std::map<Exponents, Eigen::VectorXcd> higher;
  for (Eigen::Index l = 0; l < n; ++l)
    for (const auto& [m, c] : coeffs[static_cast<std::size_t>(l)]) {
      const int d = degree_of(m);
      if (d == 0) f[l] = c;
      if (d == 1)
        for (Eigen::Index v = 0; v < n; ++v)
          if (m[static_cast<std::size_t>(v)] == 1) jac(l, v) = c;
      if (d >= 2) {
        auto [it, fresh] = higher.try_emplace(m, Eigen::VectorXcd::Zero(n));
        it->second[l] = c;
      }
    }
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(jac);
  if (!lu.isInvertible()) {
    out.singular = true;
    return out;
  }
  out.beta = lu.solve(f).cwiseAbs().maxCoeff();
  std::map<int, Eigen::VectorXd> bounds;
  for (const auto& [m, col] : higher) {
    const int k = degree_of(m);
    auto [it, fresh] = bounds.try_emplace(k, Eigen::VectorXd::Zero(n));
    it->second += lu.solve(col).cwiseAbs();
  }
  for (const auto& [k, b] : bounds) out.gamma = std::max(out.gamma, std::pow(b.maxCoeff(), 1.0 / (k - 1)));
  out.alpha = out.beta * out.gamma;
  out.certified = out.alpha <= alpha_threshold().get_d();
  double scale = 0;
  for (const auto& z : x) scale = std::max(scale, std::abs(z));
  out.precision_warning = out.beta < 16 * std::numeric_limits<double>::epsilon() * (1 + scale);
  return out;
}

}  // namespace schubert
