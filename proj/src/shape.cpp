#include "hopfcurv/shape.hpp"

#include <sstream>

#include "hopfcurv/errors.hpp"

namespace hopfcurv {

ShapeData make_shape_data(const Mat3& A, const Mat3& P, const Vec3& xi) {
  ShapeData s;
  s.A = A;
  s.P = P;
  s.xi = xi;
  const Vec3 Axi = A * xi;
  s.alpha = xi.dot(Axi);
  s.hopfDefect = (Axi - s.alpha * xi).norm();
  s.meanCurvature = A.trace() / 3.0;
  return s;
}

ShapeData flip_normal(const ShapeData& s) {
  ShapeData out = make_shape_data(-s.A, s.P, -s.xi);
  out.asymmetry = s.asymmetry;
  return out;
}

PointGeometry analyze_point(const SurfaceChart& chart, const Params& q, const ShapeOptions& opts) {
  PointGeometry g;
  g.frame = build_frame(chart, q);
  MovingFrame& f = g.frame;
  if (opts.flip_normal) f.normal = -f.normal;

  const auto partials = chart.partials(q);
  const AmbientVector iN = times_i(f.normal);

  // M(a, j) = <-D_{h_a} N, E_j>, h_a the horizontal part of partial a.
  Mat3 M;
  for (int a = 0; a < 3; ++a) {
    Params qp = q, qm = q;
    qp(a) += opts.step;
    qm(a) -= opts.step;
    const AmbientVector np = build_frame(chart, qp, &f.normal).normal;
    const AmbientVector nm = build_frame(chart, qm, &f.normal).normal;
    const double vertical = real_inner(partials[a], f.vertical);
    const AmbientVector dN = (np - nm) / (2.0 * opts.step) - vertical * iN;
    for (int j = 0; j < 3; ++j) M(a, j) = -real_inner(dN, f.E[j]);
  }
  Mat3 A = f.coeffs.transpose() * M;

  const double asym = (A - A.transpose()).cwiseAbs().maxCoeff();
  if (asym > opts.asymmetry_bound) {
    std::ostringstream msg;
    msg << "shape operator asymmetry " << asym << " exceeds " << opts.asymmetry_bound << " at ("
        << q.transpose() << ")";
    throw AsymmetryExceeded(msg.str());
  }
  A = (0.5 * (A + A.transpose())).eval();

  Mat3 P;
  Vec3 xi;
  for (int i = 0; i < 3; ++i) {
    const AmbientVector iE = times_i(f.E[i]);
    for (int j = 0; j < 3; ++j) P(j, i) = real_inner(iE, f.E[j]);
    xi(i) = -real_inner(iN, f.E[i]);
  }
  g.shape = make_shape_data(A, P, xi);
  g.shape.asymmetry = asym;
  return g;
}

}  // namespace hopfcurv
