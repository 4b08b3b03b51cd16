#pragma once

#include <stdexcept>
#include <string>

namespace fcalc {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Mixing values from algebras of different kind or dimension.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// Inverting a zero paravector or dividing by a vanishing plane element.
class SingularityError : public Error {
public:
  using Error::Error;
};

/// Kernel argument on (or too close to) the excluded sphere, or a pole hit.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Resolvent requested at (or too close to) a point of the F-spectrum.
class SpectralPointError : public Error {
public:
  SpectralPointError(const std::string& msg, double center, double radius)
      : Error(msg), center(center), radius(radius) {}
  double center;
  double radius;
};

/// Contour construction or admissibility failure (separation, enclosure).
class ContourError : public Error {
public:
  using Error::Error;
};

/// Malformed input file or function spec.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Operator tuple rejected (non-commuting components).
class ValidationError : public Error {
public:
  using Error::Error;
};

}  // namespace fcalc
