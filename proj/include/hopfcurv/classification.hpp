#pragma once

#include <array>
#include <string>

#include "hopfcurv/shape.hpp"

namespace hopfcurv {

inline constexpr double kHopfTolerance = 1e-6;

/// Shape operator written in the basis e1 = xi, e2 = (A xi - alpha xi)/beta,
/// e3 = P e2. Equality in the basic inequality at the point corresponds to
/// a13 = a23 = 0 and a11 + a22 = a33.
struct EqualityBasisReport {
  double blockResidual = 0.0;  ///< max(|a13|, |a23|)
  double traceResidual = 0.0;  ///< |a11 + a22 - a33|
  double a11 = 0, a12 = 0, a22 = 0, a23 = 0, a33 = 0;
  Mat3 basis = Mat3::Identity();  ///< columns e1, e2, e3 in frame components
  double orthonormality = 0.0;    ///< max |B^T B - I|
  double pe1e2 = 0.0;             ///< <P e1, e2>
};

/// Throws HopfPoint when hopfDefect <= tol.
EqualityBasisReport equality_basis(const ShapeData& s, double tol = kHopfTolerance);

/// Residual of the pointwise ruled form A xi = alpha xi + beta U, A U = beta xi,
/// A W = 0. With `minimal` set, |alpha| and |tr A| are folded in as well.
/// Throws HopfPoint when hopfDefect <= tol.
double ruled_check(const ShapeData& s, bool minimal, double tol = kHopfTolerance);

struct HopfRadii {
  double rSphere = 0.0;
  double rTube = 0.0;
  double rTubeClosedForm = 0.0;
  std::string sphereModel;
  std::string tubeModel;
};

/// Radii at which the Hopf models satisfy a11 + a22 = a33.
/// Geodesic sphere: principal curvatures (2 cot 2r, cot r, cot r).
/// Tube over the complex quadric: (2 cot 2r, cot(r - pi/4), cot(r + pi/4)),
/// the latter two being the holomorphic principal curvatures.
HopfRadii hopf_equality_radii();

/// 2 cot 2r + cot(r - pi/4) - cot(r + pi/4); its root is the tube radius.
double tube_equality_function(double r);

/// arctan((1 + sqrt 5 - sqrt(2 + 2 sqrt 5)) / 2).
double tube_radius_closed_form();

}  // namespace hopfcurv
