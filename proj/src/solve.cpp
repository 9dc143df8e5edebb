#include "schubert/solve.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "schubert/random.hpp"

namespace schubert {

std::string to_string(PathStatus s) {
  switch (s) {
    case PathStatus::Converged: return "converged";
    case PathStatus::Diverged: return "diverged";
    case PathStatus::PathFailure: return "path-failure";
  }
  return "?";
}

namespace {

using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

// Flat term lists for fast evaluation of a system and its Jacobian.
class Compiled {
 public:
  explicit Compiled(const PolySystem<Complex>& s) : n_(s.variable_count()) {
    for (const auto& eq : s.equations) {
      std::vector<Term> terms;
      for (const auto& [e, c] : eq.terms()) terms.push_back({c, e});
      eqs_.push_back(std::move(terms));
      degrees_.push_back(std::max(eq.total_degree(), 0));
    }
  }

  std::size_t size() const { return n_; }
  const std::vector<int>& degrees() const { return degrees_; }

  void evaluate(const Vec& x, Vec& f, Mat& j) const {
    f.setZero(static_cast<Eigen::Index>(eqs_.size()));
    j.setZero(static_cast<Eigen::Index>(eqs_.size()), static_cast<Eigen::Index>(n_));
    for (std::size_t i = 0; i < eqs_.size(); ++i)
      for (const auto& t : eqs_[i]) {
        Complex value = t.coeff;
        for (std::size_t v = 0; v < n_; ++v)
          for (int k = 0; k < t.exps[v]; ++k) value *= x[static_cast<Eigen::Index>(v)];
        f[static_cast<Eigen::Index>(i)] += value;
        for (std::size_t v = 0; v < n_; ++v) {
          if (t.exps[v] == 0) continue;
          Complex d = t.coeff * static_cast<double>(t.exps[v]);
          for (std::size_t u = 0; u < n_; ++u) {
            const int p = t.exps[u] - (u == v ? 1 : 0);
            for (int k = 0; k < p; ++k) d *= x[static_cast<Eigen::Index>(u)];
          }
          j(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(v)) += d;
        }
      }
  }

 private:
  struct Term {
    Complex coeff;
    Exponents exps;
  };
  std::size_t n_;
  std::vector<std::vector<Term>> eqs_;
  std::vector<int> degrees_;
};

double inf_norm(const Vec& x) { return x.size() ? x.cwiseAbs().maxCoeff() : 0.0; }

Vec to_vec(std::span<const Complex> x) {
  Vec v(static_cast<Eigen::Index>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) v[static_cast<Eigen::Index>(i)] = x[i];
  return v;
}

std::vector<Complex> from_vec(const Vec& v) { return {v.data(), v.data() + v.size()}; }

TrackedSolution newton_compiled(const Compiled& c, Vec x, int max_iter, double tol) {
  TrackedSolution out;
  Vec f;
  Mat j;
  for (int it = 0; it < max_iter; ++it) {
    c.evaluate(x, f, j);
    Eigen::PartialPivLU<Mat> lu(j);
    if (!std::isfinite(std::abs(lu.determinant())) || std::abs(lu.determinant()) == 0.0) break;
    const Vec step = lu.solve(f);
    x -= step;
    out.newton_iterations = it + 1;
    if (!x.allFinite()) break;
    if (inf_norm(step) <= tol * (1.0 + inf_norm(x))) {
      out.status = PathStatus::Converged;
      break;
    }
  }
  c.evaluate(x, f, j);
  out.residual_norm = inf_norm(f);
  out.point = from_vec(x);
  return out;
}

struct Homotopy {
  const Compiled& target;
  std::vector<int> degrees;
  Complex gamma;

  // H(x, t) = (1 - t) f(x) + t gamma g(x); returns H, H_x and H_t.
  void evaluate(const Vec& x, double t, Vec& h, Mat& hx, Vec& ht) const {
    Vec f;
    Mat jf;
    target.evaluate(x, f, jf);
    const auto n = x.size();
    Vec g(n);
    Mat jg = Mat::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const int d = degrees[static_cast<std::size_t>(i)];
      g[i] = std::pow(x[i], d) - 1.0;
      jg(i, i) = static_cast<double>(d) * std::pow(x[i], d - 1);
    }
    h = (1.0 - t) * f + t * gamma * g;
    hx = (1.0 - t) * jf + t * gamma * jg;
    ht = gamma * g - f;
  }
};

constexpr double kDivergence = 1e8;

TrackedSolution track(const Homotopy& hom, Vec x) {
  double t = 1.0;
  double h = 0.02;
  int streak = 0;
  Vec hv, ht;
  Mat hx;
  TrackedSolution out;
  out.status = PathStatus::PathFailure;
  while (t > 1e-7) {
    double step = std::min({h, 0.5 * t, 0.05});
    hom.evaluate(x, t, hv, hx, ht);
    Eigen::PartialPivLU<Mat> lu(hx);
    const Vec dx = lu.solve(ht);  // dx/dt = -H_x^{-1} H_t, and t decreases
    Vec y = x + step * dx;
    const double t1 = t - step;
    bool ok = y.allFinite();
    for (int k = 0; ok && k < 3; ++k) {
      hom.evaluate(y, t1, hv, hx, ht);
      Eigen::PartialPivLU<Mat> lu1(hx);
      const Vec corr = lu1.solve(hv);
      y -= corr;
      ok = y.allFinite();
      if (ok && inf_norm(corr) <= 1e-9 * (1.0 + inf_norm(y))) break;
      if (k == 2) ok = ok && inf_norm(corr) <= 1e-6 * (1.0 + inf_norm(y));
    }
    if (!ok) {
      h *= 0.5;
      streak = 0;
      if (h < 1e-14) return out;
      continue;
    }
    x = y;
    t = t1;
    if (inf_norm(x) > kDivergence) {
      out.status = PathStatus::Diverged;
      out.point = from_vec(x);
      return out;
    }
    if (++streak >= 3) {
      h = std::min(2.0 * h, 0.1);
      streak = 0;
    }
  }
  auto end = newton_compiled(hom.target, x, 50, 1e-13);
  // A path that ends far from the root Newton lands on was heading elsewhere.
  const bool jumped = end.status == PathStatus::Converged &&
                      inf_norm(to_vec(end.point) - x) > 1e-2 * (1.0 + max_norm(end.point));
  if (jumped) {
    end.status = inf_norm(x) > 1e4 ? PathStatus::Diverged : PathStatus::PathFailure;
    return end;
  }
  if (end.status != PathStatus::Converged || max_norm(end.point) > kDivergence) {
    end.status = max_norm(end.point) > 1e4 || !std::isfinite(max_norm(end.point)) ? PathStatus::Diverged
                                                                                   : PathStatus::PathFailure;
  }
  return end;
}

}  // namespace

double max_norm(std::span<const Complex> x) {
  double m = 0;
  for (const auto& z : x) m = std::max(m, std::abs(z));
  return m;
}

TrackedSolution newton(const PolySystem<Complex>& s, std::vector<Complex> x0, int max_iter, double tol) {
  if (!s.is_square()) throw InputError("newton needs a square system");
  if (x0.size() != s.variable_count()) throw InputError("newton: start point has the wrong length");
  return newton_compiled(Compiled(s), to_vec(x0), max_iter, tol);
}

SolveResult solve_total_degree(const PolySystem<Complex>& s, const SolveOptions& opts) {
  if (!s.is_square())
    throw InputError("solve needs a square system (" + std::to_string(s.equation_count()) + " equations, " +
                     std::to_string(s.variable_count()) + " variables)");
  SolveResult out;
  out.bezout = s.bezout_number();
  if (s.variable_count() > kMaxSolveVariables)
    throw CapacityError("solve: " + std::to_string(s.variable_count()) + " variables exceed the limit of " +
                        std::to_string(kMaxSolveVariables));
  if (out.bezout > kMaxBezout)
    throw CapacityError("solve: Bezout number " + std::to_string(static_cast<long long>(out.bezout)) +
                        " exceeds the limit of " + std::to_string(static_cast<long long>(kMaxBezout)));
  const Compiled compiled(s);
  for (int d : compiled.degrees())
    if (d < 1) throw InputError("solve: constant equation in the system");

  Rng rng(opts.seed);
  const double theta = 2 * std::numbers::pi * rng.uniform01();
  const Homotopy hom{compiled, compiled.degrees(), std::polar(1.0, theta)};

  const std::size_t n = s.variable_count();
  const std::size_t paths = static_cast<std::size_t>(out.bezout);
  out.paths.resize(paths);
  auto start_point = [&](std::size_t index) {
    Vec x(static_cast<Eigen::Index>(n));
    for (std::size_t v = 0; v < n; ++v) {
      const int d = compiled.degrees()[v];
      const auto r = index % static_cast<std::size_t>(d);
      index /= static_cast<std::size_t>(d);
      x[static_cast<Eigen::Index>(v)] = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(r) / d);
    }
    return x;
  };
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t p = next++; p < paths; p = next++) {
      out.paths[p] = track(hom, start_point(p));
      out.paths[p].path_id = p;
    }
  };
  const int jobs = std::max(1, std::min<int>(opts.jobs, static_cast<int>(paths)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  for (const auto& p : out.paths) {
    if (p.status == PathStatus::Diverged) ++out.diverged;
    if (p.status == PathStatus::PathFailure) ++out.failed;
    if (p.status != PathStatus::Converged) continue;
    bool fresh = true;
    for (const auto& q : out.solutions) {
      double d = 0;
      for (std::size_t v = 0; v < n; ++v) d = std::max(d, std::abs(p.point[v] - q.point[v]));
      if (d <= opts.cluster_tol * (1.0 + max_norm(p.point))) fresh = false;
    }
    if (fresh) out.solutions.push_back(p);
  }
  std::sort(out.solutions.begin(), out.solutions.end(), [](const auto& a, const auto& b) {
    for (std::size_t v = 0; v < a.point.size(); ++v) {
      if (std::abs(a.point[v].real() - b.point[v].real()) > 1e-6) return a.point[v].real() < b.point[v].real();
      if (std::abs(a.point[v].imag() - b.point[v].imag()) > 1e-6) return a.point[v].imag() < b.point[v].imag();
    }
    return false;
  });
  return out;
}

std::vector<ComplexRational> rationalize(std::span<const Complex> x) {
  std::vector<ComplexRational> out;
  for (const auto& z : x) out.emplace_back(Rational(z.real()), Rational(z.imag()));
  return out;
}

std::vector<Complex> to_complex(std::span<const ComplexRational> x) {
  std::vector<Complex> out;
  for (const auto& z : x) out.emplace_back(z.re.get_d(), z.im.get_d());
  return out;
}

}  // namespace schubert
