#pragma once

#include <array>

#include "hopfcurv/shape.hpp"

namespace hopfcurv {

/// Rank-4 tensor with all indices in chart coordinates.
using Tensor4 = std::array<std::array<std::array<std::array<double, 3>, 3>, 3>, 3>;

/// Induced metric of the base hypersurface in chart coordinates:
/// g_ab = <horizontalize(d_a z), horizontalize(d_b z)>.
Mat3 induced_metric(const SurfaceChart& chart, const Params& q);

/// R_abcd = <R(d_c, d_d) d_b, d_a> from finite differences of the induced
/// metric alone (Christoffel symbols, then their derivatives).
Tensor4 intrinsic_riemann(const SurfaceChart& chart, const Params& q, double step = 1e-3);

/// The Gauss-equation tensor of `s` expressed in the same coordinates, using
/// the frame coefficients to map coordinate vectors to frame vectors.
Tensor4 gauss_riemann_coordinates(const ShapeData& s, const MovingFrame& frame);

double max_abs_difference(const Tensor4& a, const Tensor4& b);

/// Sectional curvature of span{X, Y} (coordinate vectors) from a coordinate tensor.
double coordinate_sectional(const Tensor4& R, const Mat3& g, const Vec3& X, const Vec3& Y);

}  // namespace hopfcurv
