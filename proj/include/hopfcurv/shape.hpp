#pragma once

#include "hopfcurv/frame.hpp"

namespace hopfcurv {

/// Frame-coordinate package of extrinsic data at one point.
///
/// All matrices act on column vectors of frame components, so `P * X` is the
/// tangential part of J applied to X.
struct ShapeData {
  Mat3 A = Mat3::Zero();  ///< shape operator, symmetric
  Mat3 P = Mat3::Zero();  ///< tangential part of the complex structure, skew
  Vec3 xi = Vec3::Zero(); ///< structure vector -JN
  double alpha = 0.0;           ///< <A xi, xi>
  double hopfDefect = 0.0;      ///< beta = |A xi - alpha xi|
  double meanCurvature = 0.0;   ///< tr(A) / 3
  double asymmetry = 0.0;       ///< max |A_ij - A_ji| before symmetrization
};

/// Fills alpha, hopfDefect and meanCurvature from A and xi.
ShapeData make_shape_data(const Mat3& A, const Mat3& P, const Vec3& xi);

/// The same point seen with the opposite unit normal: A -> -A, xi -> -xi.
ShapeData flip_normal(const ShapeData& s);

struct ShapeOptions {
  double step = 1e-5;
  double asymmetry_bound = 1e-6;
  bool flip_normal = false;  ///< use the opposite of the rule-selected normal
};

struct PointGeometry {
  MovingFrame frame;
  ShapeData shape;
};

/// Shape operator by central differences of the unit normal field.
///
/// Chart partials need not be horizontal. Differentiating along a chart
/// partial picks up a vertical part c·(i p), and along the fiber the lifted
/// normal rotates as d/dψ (e^{iψ} N) = i N, so that contribution is removed
/// before projecting onto the frame.
PointGeometry analyze_point(const SurfaceChart& chart, const Params& q, const ShapeOptions& opts = {});

inline ShapeData shape_operator(const SurfaceChart& chart, const Params& q, const ShapeOptions& opts = {}) {
  return analyze_point(chart, q, opts).shape;
}

}  // namespace hopfcurv
