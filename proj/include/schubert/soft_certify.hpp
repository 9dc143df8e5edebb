#pragma once

// Floating point mirror of alpha_test, for quick screening. Not a proof.

#include <span>
#include <vector>

#include "schubert/polynomial.hpp"

namespace schubert {

struct SoftCertificate {
  double alpha = 0;
  double beta = 0;
  double gamma = 0;
  bool certified = false;
  bool singular = false;
  /// beta is within a few ulps of |x|: the test says little at this precision.
  bool precision_warning = false;
};

SoftCertificate soft_alpha_test(const PolySystem<Complex>& s, std::span<const Complex> x);

}  // namespace schubert
