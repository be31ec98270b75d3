#pragma once

#include <array>

#include "hopfcurv/chart.hpp"

namespace hopfcurv {

/// Horizontal orthonormal frame of a lifted hypersurface at one parameter point.
struct MovingFrame {
  AmbientVector p;         ///< base point on the unit sphere
  AmbientVector vertical;  ///< i·p, the fiber direction
  std::array<AmbientVector, 3> E;
  AmbientVector normal;
  /// E[i] = sum_a coeffs(a, i) * horizontalize(partial_a). Upper triangular.
  Mat3 coeffs;
  /// Smallest Gram-Schmidt remainder norm, a conditioning indicator.
  double min_remainder = 0.0;
};

/// Gram-Schmidt remainder norm below which a point counts as rank deficient.
inline constexpr double kRankThreshold = 1e-8;

/// Horizontalizes and orthonormalizes the chart partials and finds the unit
/// normal. With NormalSign::Auto the largest-magnitude real component of the
/// normal is made positive; `align_with`, when given, overrides that rule and
/// picks the sign with nonnegative inner product against it.
MovingFrame build_frame(const SurfaceChart& chart, const Params& q,
                        const AmbientVector* align_with = nullptr);

/// Unit vector real-orthogonal to the five given orthonormal vectors.
AmbientVector orthogonal_complement(const std::array<AmbientVector, 5>& basis);

}  // namespace hopfcurv
