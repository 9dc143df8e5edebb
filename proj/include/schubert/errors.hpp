#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

/// Malformed or out-of-range input.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A size guard was exceeded (determinant size, path count, census n).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flags or sampled points are not in general position; callers resample.
class GenericityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A linear system that must be consistent is not (e.g. a point outside the
/// Schubert variety admits no lift).
class InconsistentSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace schubert
