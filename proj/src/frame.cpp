#include "hopfcurv/frame.hpp"

#include <cmath>
#include <sstream>

#include "hopfcurv/errors.hpp"

namespace hopfcurv {

AmbientVector orthogonal_complement(const std::array<AmbientVector, 5>& basis) {
  using Vec6 = Eigen::Matrix<double, 6, 1>;
  std::array<Vec6, 5> b;
  for (std::size_t k = 0; k < 5; ++k) b[k] = to_real(basis[k]);

  // Project every coordinate axis off the span and keep the longest remainder.
  Vec6 best = Vec6::Zero();
  for (int axis = 0; axis < 6; ++axis) {
    Vec6 r = Vec6::Unit(axis);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& v : b) r -= v.dot(r) * v;
    }
    if (r.norm() > best.norm()) best = r;
  }
  best.normalize();
  for (const auto& v : b) best -= v.dot(best) * v;
  return from_real(Vec6(best.normalized()));
}

MovingFrame build_frame(const SurfaceChart& chart, const Params& q, const AmbientVector* align_with) {
  MovingFrame frame;
  frame.p = chart.evaluate(q);
  frame.vertical = times_i(frame.p);
  const auto partials = chart.partials(q);

  std::array<AmbientVector, 3> h;
  for (int a = 0; a < 3; ++a) h[a] = horizontalize(partials[a], frame.p);

  // Modified Gram-Schmidt; track how each E_i is built from the h_a.
  frame.coeffs = Mat3::Zero();
  frame.min_remainder = INFINITY;
  for (int i = 0; i < 3; ++i) {
    AmbientVector w = h[i];
    Vec3 c = Vec3::Unit(i);
    for (int j = 0; j < i; ++j) {
      const double r = real_inner(frame.E[j], w);
      w -= r * frame.E[j];
      c -= r * frame.coeffs.col(j);
    }
    const double norm = w.norm();
    frame.min_remainder = std::min(frame.min_remainder, norm);
    if (norm < kRankThreshold) {
      std::ostringstream msg;
      msg << "horizontal partials are rank deficient at (" << q.transpose() << "), remainder " << norm;
      throw RankDeficient(msg.str());
    }
    frame.E[i] = w / norm;
    frame.coeffs.col(i) = c / norm;
  }

  AmbientVector n = orthogonal_complement({frame.p, frame.vertical, frame.E[0], frame.E[1], frame.E[2]});
  if (align_with != nullptr) {
    if (real_inner(n, *align_with) < 0) n = -n;
  } else {
    const auto r = to_real(n);
    Eigen::Index k = 0;
    r.cwiseAbs().maxCoeff(&k);
    if (r(k) < 0) n = -n;
  }
  frame.normal = n;
  return frame;
}

}  // namespace hopfcurv
