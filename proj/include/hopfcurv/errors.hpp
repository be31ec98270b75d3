#pragma once

#include <stdexcept>
#include <string>

namespace hopfcurv {

/// Base class for every failure raised by the numerical geometry pipeline.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Horizontalized chart partials do not span a 3-space (coordinate
/// singularity or a partial tangent to the fiber).
class RankDeficient : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// Finite-difference shape operator is too far from symmetric.
class AsymmetryExceeded : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// The structure vector is (numerically) principal, so no non-Hopf basis exists.
class HopfPoint : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class NoRoot : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hopfcurv
