#include "hopfcurv/sym3.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hopfcurv {

namespace {

// Near a double root acos amplifies roundoff to about sqrt(eps) * p, so any
// gap this small relative to the spread is handed to Jacobi.
constexpr double kCloseRoots = 1e-5;

Vec3 sorted(Vec3 v) {
  std::sort(v.data(), v.data() + 3);
  return v;
}

}  // namespace

Vec3 jacobi_eigenvalues(Mat3 m) {
  for (int sweep = 0; sweep < 50; ++sweep) {
    const double off = m(0, 1) * m(0, 1) + m(0, 2) * m(0, 2) + m(1, 2) * m(1, 2);
    if (off <= 1e-30 * std::max(1.0, m.squaredNorm())) break;
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        if (m(p, q) == 0.0) continue;
        const double theta = (m(q, q) - m(p, p)) / (2.0 * m(p, q));
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        Mat3 rot = Mat3::Identity();
        rot(p, p) = c;
        rot(q, q) = c;
        rot(p, q) = s;
        rot(q, p) = -s;
        m = rot.transpose() * m * rot;
        m(p, q) = m(q, p) = 0.0;
      }
    }
  }
  return sorted(m.diagonal());
}

Vec3 symmetric_eigenvalues(const Mat3& m) {
  const double mean = m.trace() / 3.0;
  const Mat3 shifted = m - mean * Mat3::Identity();
  const double p2 = shifted.squaredNorm() / 6.0;
  if (p2 == 0.0) return Vec3::Constant(mean);
  const double p = std::sqrt(p2);
  const double r = std::clamp(shifted.determinant() / (2.0 * p2 * p), -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  const double third = 2.0 * std::numbers::pi / 3.0;
  Vec3 ev(mean + 2.0 * p * std::cos(phi + 2.0 * third), mean + 2.0 * p * std::cos(phi + third),
          mean + 2.0 * p * std::cos(phi));
  ev = sorted(ev);
  if (std::min(ev(1) - ev(0), ev(2) - ev(1)) < kCloseRoots * p) return jacobi_eigenvalues(m);
  return ev;
}

}  // namespace hopfcurv
