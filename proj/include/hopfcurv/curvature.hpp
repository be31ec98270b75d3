#pragma once

#include "hopfcurv/shape.hpp"

namespace hopfcurv {

/// R(X,Y)Z from the Gauss equation of a real hypersurface in CP^2(4),
/// all vectors in the orthonormal frame of `s`.
Vec3 riemann_gauss(const ShapeData& s, const Vec3& X, const Vec3& Y, const Vec3& Z);

/// <R(X,Y)Z, W>.
inline double riemann_gauss(const ShapeData& s, const Vec3& X, const Vec3& Y, const Vec3& Z, const Vec3& W) {
  return riemann_gauss(s, X, Y, Z).dot(W);
}

/// Ricci tensor by direct contraction S(X,Y) = sum_i <R(e_i,X)Y, e_i>.
Mat3 ricci_contracted(const ShapeData& s);

/// Ricci tensor in closed form 2I + 3 P^T P + tr(A) A - A^2.
Mat3 ricci_closed_form(const ShapeData& s);

/// Direct contraction, after asserting it agrees with the closed form to 1e-12
/// (relative to the size of the entries). Throws std::logic_error otherwise.
Mat3 ricci(const ShapeData& s);

/// Startup self-test of the closed form against the contraction on seeded
/// random inputs; returns the worst discrepancy seen.
double verify_ricci_closed_form(int samples, unsigned seed);

struct PlaneMinimum {
  double value = 0.0;
  Vec3 normal = Vec3::UnitZ();  ///< unit normal of the minimizing plane
};

struct MinSectionalOptions {
  int polar_steps = 64;
  int azimuth_steps = 128;
  double tolerance = 1e-8;
};

/// Sectional curvature of the plane with the given unit normal.
double sectional_curvature(const ShapeData& s, const Vec3& plane_normal);

/// Minimum sectional curvature: sphere grid over plane normals, then
/// Newton-direction golden-section line searches in tangent coordinates.
PlaneMinimum min_sectional(const ShapeData& s, const MinSectionalOptions& opts = {});

struct CurvatureReport {
  Vec3 ricciEigenvalues = Vec3::Zero();  ///< ascending
  double maxRicci = 0.0;
  double scalarCurvature = 0.0;
  double meanCurvSq = 0.0;
  double deficit = 0.0;
  double minSectional = 0.0;
  double delta2 = 0.0;
};

/// (9/4)|H|^2 + 5 - maxRic, the slack in the basic inequality.
double deficit(const ShapeData& s);

/// Full report. `with_sectional = false` skips the plane search and leaves
/// minSectional and delta2 at NaN.
CurvatureReport curvature_report(const ShapeData& s, bool with_sectional = true,
                                 const MinSectionalOptions& opts = {});

}  // namespace hopfcurv
