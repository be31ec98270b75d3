#include "hopfcurv/classification.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hopfcurv/errors.hpp"

namespace hopfcurv {

namespace {

void require_non_hopf(const ShapeData& s, double tol) {
  if (s.hopfDefect <= tol) {
    std::ostringstream msg;
    msg << "structure vector is principal (beta = " << s.hopfDefect << " <= " << tol << ")";
    throw HopfPoint(msg.str());
  }
}

Vec3 hopf_direction(const ShapeData& s) { return (s.A * s.xi - s.alpha * s.xi) / s.hopfDefect; }

double cot(double x) { return 1.0 / std::tan(x); }

}  // namespace

EqualityBasisReport equality_basis(const ShapeData& s, double tol) {
  require_non_hopf(s, tol);
  EqualityBasisReport r;
  const Vec3 e1 = s.xi;
  const Vec3 e2 = hopf_direction(s);
  const Vec3 e3 = s.P * e2;
  r.basis << e1, e2, e3;
  const Mat3 a = r.basis.transpose() * s.A * r.basis;
  r.a11 = a(0, 0);
  r.a12 = a(0, 1);
  r.a22 = a(1, 1);
  r.a23 = a(1, 2);
  r.a33 = a(2, 2);
  r.blockResidual = std::max(std::abs(a(0, 2)), std::abs(a(1, 2)));
  r.traceResidual = std::abs(a(0, 0) + a(1, 1) - a(2, 2));
  r.orthonormality = (r.basis.transpose() * r.basis - Mat3::Identity()).cwiseAbs().maxCoeff();
  r.pe1e2 = (s.P * e1).dot(e2);
  return r;
}

double ruled_check(const ShapeData& s, bool minimal, double tol) {
  require_non_hopf(s, tol);
  const Vec3 U = hopf_direction(s);
  const Vec3 W = s.P * U;  // unit and orthogonal to both xi and U
  double residual = std::max((s.A * U - s.hopfDefect * s.xi).norm(), (s.A * W).norm());
  if (minimal) residual = std::max({residual, std::abs(s.alpha), std::abs(s.A.trace())});
  return residual;
}

double tube_equality_function(double r) {
  const double q = std::numbers::pi / 4;
  return 2.0 * cot(2.0 * r) + cot(r - q) - cot(r + q);
}

double tube_radius_closed_form() {
  const double s5 = std::sqrt(5.0);
  return std::atan((1.0 + s5 - std::sqrt(2.0 + 2.0 * s5)) / 2.0);
}

HopfRadii hopf_equality_radii() {
  HopfRadii out;
  // Sphere: cot r cancels on both sides, leaving 2 cot 2r = 0.
  out.rSphere = std::numbers::pi / 4;
  out.sphereModel = "geodesic sphere, principal curvatures (2cot2r, cot r, cot r); a11+a22=a33 gives 2cot2r=0";
  out.tubeModel =
      "tube over complex quadric, principal curvatures (2cot2r, cot(r-pi/4), cot(r+pi/4)); "
      "bisection of 2cot2r+cot(r-pi/4)-cot(r+pi/4) on (0.01, pi/4-0.01)";

  double lo = 0.01, hi = std::numbers::pi / 4 - 0.01;
  double flo = tube_equality_function(lo);
  const double fhi = tube_equality_function(hi);
  if (!(flo * fhi < 0.0)) throw NoRoot("tube equality function does not change sign on the bracket");
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = tube_equality_function(mid);
    if (fm == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  out.rTube = 0.5 * (lo + hi);
  out.rTubeClosedForm = tube_radius_closed_form();
  return out;
}

}  // namespace hopfcurv
