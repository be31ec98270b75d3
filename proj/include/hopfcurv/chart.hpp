#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hopfcurv/ambient.hpp"

namespace hopfcurv {

using Params = Eigen::Vector3d;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// A parametrization of a ψ = 0 section of the lift of a hypersurface to the
/// unit 5-sphere, with exact first partials.
///
/// This is also the extension point for new surface families: fill in the
/// callbacks and any chart-consuming routine will accept it.
struct SurfaceChart {
  std::string name;
  std::array<std::string, 3> parameter_names{"u", "v", "theta"};
  std::function<AmbientVector(const Params&)> evaluate;
  std::function<std::array<AmbientVector, 3>(const Params&)> partials;
  /// Default sampling box, chosen away from coordinate singularities.
  std::array<Interval, 3> domain;
  std::function<bool(const Params&)> is_singular;
};

/// Minimal ruled hypersurface: (cos u cos v, cos u sin v, sin u e^{iθ}).
SurfaceChart ruled_chart();

/// Lift of the geodesic sphere of radius r about [1:0:0]:
/// (cos r e^{iφ}, sin r cos s, sin r sin s e^{it}).
SurfaceChart sphere_chart(double radius);

/// Ruled chart plus epsilon times a seeded trigonometric displacement,
/// renormalized to the unit sphere. epsilon = 0 reproduces ruled_chart().
SurfaceChart perturbed_ruled_chart(double epsilon, std::uint64_t seed);

/// Evenly spaced grid of n points per axis over the chart's domain box.
std::vector<Params> grid_points(const SurfaceChart& chart, int n);

}  // namespace hopfcurv
