#pragma once

#include <cstdint>
#include <random>

#include "schubert/rational.hpp"

namespace schubert {

/// Platform-stable random draws (std distributions are implementation
/// defined, the raw mt19937_64 stream is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  /// Uniform double in [0, 1).
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// p/q with p in [-20, 20], q in [1, 10].
  Rational small_rational() {
    Rational q(static_cast<long>(uniform_int(-20, 20)), static_cast<unsigned long>(uniform_int(1, 10)));
    q.canonicalize();
    return q;
  }
  Rational nonzero_rational() {
    Rational q;
    do {
      q = small_rational();
    } while (sgn(q) == 0);
    return q;
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace schubert
