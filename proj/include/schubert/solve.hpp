#pragma once

// Numerical solving of small square systems: Newton's method and a
// total-degree homotopy with the gamma trick.

#include <cstdint>
#include <span>
#include <vector>

#include "schubert/polynomial.hpp"

namespace schubert {

enum class PathStatus { Converged, Diverged, PathFailure };
std::string to_string(PathStatus s);

struct TrackedSolution {
  std::vector<Complex> point;
  double residual_norm = 0;
  int newton_iterations = 0;
  std::size_t path_id = 0;
  PathStatus status = PathStatus::PathFailure;
};

/// Newton iteration; converged once a step is below tol * (1 + |x|).
TrackedSolution newton(const PolySystem<Complex>& s, std::vector<Complex> x0, int max_iter = 50, double tol = 1e-12);

inline constexpr std::size_t kMaxSolveVariables = 10;
inline constexpr double kMaxBezout = 20000;

struct SolveOptions {
  std::uint64_t seed = 1;
  int jobs = 1;
  /// Endpoints closer than this (relative) are merged.
  double cluster_tol = 1e-8;
};

struct SolveResult {
  /// Distinct finite endpoints, sorted.
  std::vector<TrackedSolution> solutions;
  /// Every path in start-solution order.
  std::vector<TrackedSolution> paths;
  double bezout = 0;
  std::size_t diverged = 0;
  std::size_t failed = 0;
};

/// Tracks H = (1-t) f + t gamma g, g_i = x_i^{d_i} - 1, from t = 1 to 0.
/// Throws CapacityError above kMaxSolveVariables or kMaxBezout.
SolveResult solve_total_degree(const PolySystem<Complex>& s, const SolveOptions& opts = {});

/// Exact rational image of a floating point vector.
std::vector<ComplexRational> rationalize(std::span<const Complex> x);
std::vector<Complex> to_complex(std::span<const ComplexRational> x);

double max_norm(std::span<const Complex> x);

}  // namespace schubert
