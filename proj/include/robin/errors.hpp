#pragma once

#include <stdexcept>
#include <string>

namespace robin {

/// Iterative method or quadrature failed to reach its tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input geometry cannot be processed (self-intersecting, not star-shaped, ...).
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation called outside its supported range (e.g. n != 3 for the closed-form oracle).
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace robin
