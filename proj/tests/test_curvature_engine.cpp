#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <random>

#include "hopfcurv/curvature.hpp"
#include "hopfcurv/intrinsic.hpp"
#include "hopfcurv/sym3.hpp"

using namespace hopfcurv;
using std::numbers::pi;

namespace {

std::mt19937 rng(777u);

Vec3 random_vec() {
  std::normal_distribution<double> n;
  return Vec3(n(rng), n(rng), n(rng));
}

Mat3 random_symmetric() {
  std::normal_distribution<double> n;
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) m(i, j) = m(j, i) = n(rng);
  return m;
}

// A random admissible structure: xi a unit vector, P the rotation by a
// right angle in the plane orthogonal to xi (P v = xi x v).
ShapeData random_shape() {
  const Vec3 xi = random_vec().normalized();
  Mat3 P;
  P << 0, -xi(2), xi(1), xi(2), 0, -xi(0), -xi(1), xi(0), 0;
  return make_shape_data(random_symmetric(), P, xi);
}

// Geodesic sphere of radius r in its adapted frame (xi = e1, P e2 = e3).
ShapeData sphere_shape(double r) {
  Mat3 A = Vec3(2 / std::tan(2 * r), 1 / std::tan(r), 1 / std::tan(r)).asDiagonal();
  Mat3 P = Mat3::Zero();
  P(2, 1) = 1;
  P(1, 2) = -1;
  return make_shape_data(A, P, Vec3::UnitX());
}

// Independent transcription of the Gauss equation, written entrywise.
double gauss_oracle(const ShapeData& s, const Vec3& X, const Vec3& Y, const Vec3& Z, const Vec3& W) {
  const Mat3& A = s.A;
  const Mat3& P = s.P;
  return Y.dot(Z) * X.dot(W) - X.dot(Z) * Y.dot(W) + (P * Y).dot(Z) * (P * X).dot(W) -
         (P * X).dot(Z) * (P * Y).dot(W) - 2 * (P * X).dot(Y) * (P * Z).dot(W) +
         (A * Y).dot(Z) * (A * X).dot(W) - (A * X).dot(Z) * (A * Y).dot(W);
}

double ricci_oracle(const ShapeData& s, const Vec3& v) {
  double sum = 0;
  for (int i = 0; i < 3; ++i) {
    const Vec3 e = Vec3::Unit(i);
    sum += gauss_oracle(s, e, v, v, e);
  }
  return sum;
}

}  // namespace

TEST_CASE("Gauss equation on the sphere model at the equality radius") {
  const ShapeData s = sphere_shape(pi / 4);
  const Vec3 e1 = Vec3::UnitX(), e2 = Vec3::UnitY(), e3 = Vec3::UnitZ();
  // 1 (ambient) + 1 + 2 (structure) + 1 (A) by hand.
  CHECK(riemann_gauss(s, e2, e3, e3, e2) == doctest::Approx(5).epsilon(1e-14));
  CHECK(riemann_gauss(s, e1, e2, e2, e1) == doctest::Approx(1).epsilon(1e-14));
  CHECK(riemann_gauss(s, e1, e3, e3, e1) == doctest::Approx(1).epsilon(1e-14));
}

TEST_CASE("Gauss tensor symmetries and agreement with an entrywise oracle") {
  for (int k = 0; k < 200; ++k) {
    const ShapeData s = random_shape();
    const Vec3 X = random_vec(), Y = random_vec(), Z = random_vec(), W = random_vec();
    const double r = riemann_gauss(s, X, Y, Z, W);
    CHECK(std::abs(r - gauss_oracle(s, X, Y, Z, W)) < 1e-12);
    CHECK(std::abs(r + riemann_gauss(s, Y, X, Z, W)) < 1e-12);
    CHECK(std::abs(r + riemann_gauss(s, X, Y, W, Z)) < 1e-12);
    CHECK(std::abs(r - riemann_gauss(s, Z, W, X, Y)) < 1e-11);
    const double bianchi = r + riemann_gauss(s, Y, Z, X, W) + riemann_gauss(s, Z, X, Y, W);
    CHECK(std::abs(bianchi) < 1e-11);
  }
}

TEST_CASE("Ricci tensor examples") {
  const ShapeData flat = make_shape_data(Mat3::Zero(), Mat3::Zero(), Vec3::UnitX());
  CHECK((ricci_contracted(flat) - 2 * Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-15);

  const Vec3 ev = symmetric_eigenvalues(ricci(sphere_shape(pi / 4)));
  CHECK((ev - Vec3(2, 6, 6)).cwiseAbs().maxCoeff() < 1e-12);

  // maxRic of the pi/6 sphere by brute force over unit directions.
  const ShapeData s6 = sphere_shape(pi / 6);
  double best = -INFINITY;
  const int n = 400;
  for (int i = 0; i <= n; ++i) {
    const double t = pi * i / n;
    for (int j = 0; j < n; ++j) {
      const double p = 2 * pi * j / n;
      best = std::max(best, ricci_oracle(s6, Vec3(std::sin(t) * std::cos(p), std::sin(t) * std::sin(p), std::cos(t))));
    }
  }
  CHECK(best == doctest::Approx(10).epsilon(1e-9));
  CHECK(curvature_report(s6, false).maxRicci == doctest::Approx(10).epsilon(1e-12));
}

TEST_CASE("Ricci closed form equals the contraction on random inputs") {
  for (int k = 0; k < 1000; ++k) {
    const ShapeData s = random_shape();
    const Mat3 c = ricci_contracted(s), f = ricci_closed_form(s);
    CHECK((c - f).cwiseAbs().maxCoeff() < 1e-12 * std::max(1.0, c.cwiseAbs().maxCoeff()));
    for (int t = 0; t < 3; ++t) {
      const Vec3 v = random_vec();
      CHECK(std::abs(v.dot(c * v) - ricci_oracle(s, v)) < 1e-10 * std::max(1.0, c.norm()) * v.squaredNorm());
    }
  }
  CHECK(verify_ricci_closed_form(200, 5) < 1e-12);
}

TEST_CASE("ricci rejects inputs where its two computations disagree") {
  ShapeData s = random_shape();
  CHECK_NOTHROW(ricci(s));
  s.P = random_symmetric();  // the closed form relies on P being skew
  CHECK_THROWS_AS(ricci(s), std::logic_error);
}

TEST_CASE("deficit on the sphere models") {
  CHECK(deficit(sphere_shape(pi / 6)) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(std::abs(deficit(sphere_shape(pi / 4))) < 1e-14);
  for (int k = 0; k < 100; ++k) CHECK(deficit(random_shape()) >= -1e-9);
}

TEST_CASE("minimum sectional curvature and delta(2)") {
  const ShapeData flat = make_shape_data(Mat3::Zero(), Mat3::Zero(), Vec3::UnitX());
  const PlaneMinimum m = min_sectional(flat);
  CHECK(m.value == doctest::Approx(1).epsilon(1e-12));
  const CurvatureReport r = curvature_report(flat);
  CHECK(r.delta2 == doctest::Approx(2).epsilon(1e-12));

  for (int k = 0; k < 20; ++k) {
    const ShapeData s = random_shape();
    const PlaneMinimum pm = min_sectional(s);
    CHECK(std::abs(pm.normal.norm() - 1) < 1e-12);
    CHECK(std::abs(sectional_curvature(s, pm.normal) - pm.value) < 1e-12);
    // no plane among many random ones beats the reported minimum
    for (int t = 0; t < 200; ++t) CHECK(sectional_curvature(s, random_vec().normalized()) >= pm.value - 1e-8);
  }

  for (double r : {pi / 4, pi / 6}) {
    const CurvatureReport c = curvature_report(sphere_shape(r));
    CHECK(std::abs(c.delta2 - c.maxRicci) < 1e-8);
  }
}

TEST_CASE("plane search converges where two Ricci eigenvalues nearly coincide") {
  // In dimension 3 the plane orthogonal to a unit v has curvature
  // scal/2 - Ric(v, v), so delta(2) = maxRic exactly; a stalled search shows
  // up directly as a gap.
  const ShapeData hard = shape_operator(perturbed_ruled_chart(0.05, 1), Params(0.3, 0.1, 3.1));
  const CurvatureReport r = curvature_report(hard);
  REQUIRE(r.ricciEigenvalues(2) - r.ricciEigenvalues(1) < 0.05);
  CHECK(std::abs(r.delta2 - r.maxRicci) < 1e-10);

  for (int k = 0; k < 200; ++k) {
    const CurvatureReport c = curvature_report(random_shape());
    CHECK(std::abs(c.delta2 - c.maxRicci) < 1e-9 * std::max(1.0, std::abs(c.maxRicci)));
  }
}

TEST_CASE("symmetric eigenvalues agree with Eigen's self-adjoint solver") {
  for (int k = 0; k < 500; ++k) {
    Mat3 m = random_symmetric();
    if (k % 3 == 1) {
      // force a repeated eigenvalue
      Eigen::SelfAdjointEigenSolver<Mat3> es(m);
      Vec3 d = es.eigenvalues();
      d(1) = d(2);
      m = es.eigenvectors() * d.asDiagonal() * es.eigenvectors().transpose();
    } else if (k % 3 == 2) {
      m = m(0, 0) * Mat3::Identity();
    }
    const Vec3 oracle = Eigen::SelfAdjointEigenSolver<Mat3>(m, Eigen::EigenvaluesOnly).eigenvalues();
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    CHECK((symmetric_eigenvalues(m) - oracle).cwiseAbs().maxCoeff() < 1e-12 * scale);
    CHECK((jacobi_eigenvalues(m) - oracle).cwiseAbs().maxCoeff() < 1e-12 * scale);
  }
}

TEST_CASE("intrinsic curvature of the induced metric matches the Gauss tensor") {
  const SurfaceChart c = ruled_chart();
  const Params q(0.6, 1.0, 2.0);
  const PointGeometry pg = analyze_point(c, q, {});
  const Tensor4 intr = intrinsic_riemann(c, q, 1e-3);
  const Tensor4 gauss = gauss_riemann_coordinates(pg.shape, pg.frame);
  CHECK(max_abs_difference(intr, gauss) < 1e-4);

  const Mat3 g = induced_metric(c, q);
  CHECK((g - g.transpose()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(Eigen::SelfAdjointEigenSolver<Mat3>(g).eigenvalues().minCoeff() > 0);

  // On the pi/4 sphere the plane orthogonal to xi has curvature 5.
  const SurfaceChart s = sphere_chart(pi / 4);
  const Params qs(0.5, 0.8, 1.3);
  const PointGeometry ps = analyze_point(s, qs, {});
  const Tensor4 rs = intrinsic_riemann(s, qs, 1e-3);
  const Mat3 B = ps.frame.coeffs;  // columns: frame vectors in coordinates
  CHECK(std::abs(coordinate_sectional(rs, induced_metric(s, qs), B.col(1), B.col(2)) - 5.0) < 1e-4);
  CHECK(std::abs(coordinate_sectional(rs, induced_metric(s, qs), B.col(0), B.col(1)) - 1.0) < 1e-4);
}

TEST_CASE("curvature quantities do not depend on the choice of unit normal") {
  for (const auto& c : {ruled_chart(), perturbed_ruled_chart(0.05, 2)}) {
    const Params q(0.7, 2.5, 4.0);
    const ShapeData a = shape_operator(c, q);
    const ShapeData b = flip_normal(a);
    const CurvatureReport ra = curvature_report(a), rb = curvature_report(b);
    CHECK(std::abs(ra.maxRicci - rb.maxRicci) < 1e-12);
    CHECK(std::abs(ra.meanCurvSq - rb.meanCurvSq) < 1e-12);
    CHECK(std::abs(ra.deficit - rb.deficit) < 1e-12);
    CHECK(std::abs(ra.minSectional - rb.minSectional) < 1e-12);
  }
}
