#include "hopfcurv/curvature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "hopfcurv/sym3.hpp"

namespace hopfcurv {

Vec3 riemann_gauss(const ShapeData& s, const Vec3& X, const Vec3& Y, const Vec3& Z) {
  const Vec3 PX = s.P * X, PY = s.P * Y, PZ = s.P * Z;
  const Vec3 AX = s.A * X, AY = s.A * Y;
  return Y.dot(Z) * X - X.dot(Z) * Y + PY.dot(Z) * PX - PX.dot(Z) * PY - 2.0 * PX.dot(Y) * PZ +
         AY.dot(Z) * AX - AX.dot(Z) * AY;
}

Mat3 ricci_contracted(const ShapeData& s) {
  Mat3 ric = Mat3::Zero();
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      double sum = 0.0;
      for (int i = 0; i < 3; ++i) {
        const Vec3 e = Vec3::Unit(i);
        sum += riemann_gauss(s, e, Vec3::Unit(a), Vec3::Unit(b), e);
      }
      ric(a, b) = sum;
    }
  }
  return ric;
}

Mat3 ricci_closed_form(const ShapeData& s) {
  return 2.0 * Mat3::Identity() + 3.0 * s.P.transpose() * s.P + s.A.trace() * s.A - s.A * s.A;
}

Mat3 ricci(const ShapeData& s) {
  const Mat3 direct = ricci_contracted(s);
  const Mat3 closed = ricci_closed_form(s);
  const double scale = std::max(1.0, direct.cwiseAbs().maxCoeff());
  if ((direct - closed).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::logic_error("closed-form Ricci disagrees with the contracted Gauss equation");
  }
  return direct;
}

double verify_ricci_closed_form(int samples, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> normal;
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    Mat3 A;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) A(i, j) = normal(rng);
    A = (0.5 * (A + A.transpose())).eval();
    const Vec3 xi = Vec3(normal(rng), normal(rng), normal(rng)).normalized();
    // P rotates the plane orthogonal to xi by a right angle: P X = xi x X.
    Mat3 P;
    P << 0, -xi(2), xi(1), xi(2), 0, -xi(0), -xi(1), xi(0), 0;
    const ShapeData s = make_shape_data(A, P, xi);
    const Mat3 diff = ricci_contracted(s) - ricci_closed_form(s);
    worst = std::max(worst, diff.cwiseAbs().maxCoeff());
  }
  return worst;
}

double sectional_curvature(const ShapeData& s, const Vec3& plane_normal) {
  const Vec3 n = plane_normal.normalized();
  // Any vector not parallel to n seeds an orthonormal basis of the plane.
  const Vec3 seed = std::abs(n(0)) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  const Vec3 X = (seed - seed.dot(n) * n).normalized();
  const Vec3 Y = n.cross(X);
  return riemann_gauss(s, X, Y, Y, X);
}

namespace {

Vec3 spherical(double polar, double azimuth) {
  return Vec3(std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth), std::cos(polar));
}

template <typename F>
double golden_section(F&& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c), fd = f(d);
  while (hi - lo > tol) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

PlaneMinimum min_sectional(const ShapeData& s, const MinSectionalOptions& opts) {
  const double pi = std::numbers::pi;
  // Planes are unoriented, so normals on the upper hemisphere suffice.
  const double dpolar = (pi / 2) / opts.polar_steps;
  const double dazim = 2.0 * pi / opts.azimuth_steps;
  double best = std::numeric_limits<double>::infinity();
  double best_polar = 0.0, best_azim = 0.0;
  for (int i = 0; i <= opts.polar_steps; ++i) {
    const double polar = i * dpolar;
    for (int j = 0; j < opts.azimuth_steps; ++j) {
      const double azim = j * dazim;
      const double k = sectional_curvature(s, spherical(polar, azim));
      if (k < best) {
        best = k;
        best_polar = polar;
        best_azim = azim;
      }
      if (i == 0) break;  // pole: azimuth is irrelevant
    }
  }

  // Polish in tangent coordinates around the current normal. The search
  // direction is Newton's (from a finite-difference Hessian) when that is a
  // descent direction, else steepest descent; a golden-section line search
  // sets the step. Fixed-axis sweeps stall when the two smallest curvature
  // directions nearly coincide and the minimum sits in a long valley.
  Vec3 n = spherical(best_polar, best_azim);
  double value = best;
  const double h = 1e-4;
  for (int iter = 0; iter < 50; ++iter) {
    const Vec3 seed = std::abs(n(0)) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
    const Vec3 a = (seed - seed.dot(n) * n).normalized();
    const Vec3 b = n.cross(a);
    auto at = [&](double x, double y) { return sectional_curvature(s, (n + x * a + y * b).normalized()); };

    const double f0 = at(0, 0);
    const double fxp = at(h, 0), fxm = at(-h, 0), fyp = at(0, h), fym = at(0, -h);
    const Eigen::Vector2d grad((fxp - fxm) / (2 * h), (fyp - fym) / (2 * h));
    Eigen::Matrix2d hess;
    hess(0, 0) = (fxp - 2 * f0 + fxm) / (h * h);
    hess(1, 1) = (fyp - 2 * f0 + fym) / (h * h);
    hess(0, 1) = hess(1, 0) = (at(h, h) - at(h, -h) - at(-h, h) + at(-h, -h)) / (4 * h * h);
    if (grad.norm() < 1e-12) break;

    Eigen::Vector2d dir = -grad;
    double reach = dpolar;  // steepest descent: search about one grid cell
    if (hess.determinant() > 0 && hess.trace() > 0) {
      const Eigen::Vector2d newton = -hess.ldlt().solve(grad);
      if (newton.dot(grad) < 0) {
        dir = newton;
        reach = 2 * newton.norm();  // the Newton point sits at the middle
      }
    }
    const Eigen::Vector2d unit = dir.normalized();
    const double t = golden_section([&](double x) { return at(x * unit(0), x * unit(1)); }, 0.0, reach,
                                    opts.tolerance);
    const Vec3 next = (n + t * unit(0) * a + t * unit(1) * b).normalized();
    const double next_value = sectional_curvature(s, next);
    if (!(next_value < value)) break;
    const double step = (next - n).norm();
    n = next;
    value = next_value;
    if (step < opts.tolerance) break;
  }

  PlaneMinimum out;
  out.normal = n;
  out.value = value;
  return out;
}

double deficit(const ShapeData& s) {
  const Vec3 ev = symmetric_eigenvalues(ricci(s));
  return 2.25 * s.meanCurvature * s.meanCurvature + 5.0 - ev(2);
}

CurvatureReport curvature_report(const ShapeData& s, bool with_sectional, const MinSectionalOptions& opts) {
  CurvatureReport r;
  const Mat3 ric = ricci(s);
  r.ricciEigenvalues = symmetric_eigenvalues(ric);
  r.maxRicci = r.ricciEigenvalues(2);
  r.scalarCurvature = r.ricciEigenvalues.sum();
  r.meanCurvSq = s.meanCurvature * s.meanCurvature;
  r.deficit = 2.25 * r.meanCurvSq + 5.0 - r.maxRicci;
  if (with_sectional) {
    r.minSectional = min_sectional(s, opts).value;
    r.delta2 = 0.5 * r.scalarCurvature - r.minSectional;
  } else {
    r.minSectional = r.delta2 = std::numeric_limits<double>::quiet_NaN();
  }
  return r;
}

}  // namespace hopfcurv
