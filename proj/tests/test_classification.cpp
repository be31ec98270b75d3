#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hopfcurv/errors.hpp"
#include "hopfcurv/scan.hpp"

using namespace hopfcurv;
using std::numbers::pi;

namespace {

Params random_in_box(const SurfaceChart& c, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Params q;
  for (int a = 0; a < 3; ++a) q(a) = c.domain[a].lo + (c.domain[a].hi - c.domain[a].lo) * u(rng);
  return q;
}

}  // namespace

TEST_CASE("equality basis on the ruled chart") {
  PointOptions opts;
  for (const auto& r : evaluate_grid(ruled_chart(), 6, opts, 2)) {
    REQUIRE(r.ok());
    const EqualityBasisReport l = equality_basis(r.shape);
    CHECK(l.blockResidual < 1e-6);
    CHECK(l.traceResidual < 1e-6);
    CHECK(std::abs(l.a11) < 1e-6);
    CHECK(std::abs(l.a22) < 1e-6);
    CHECK(std::abs(l.a33) < 1e-6);
    CHECK(std::abs(l.a12 - r.shape.hopfDefect) < 1e-6);
    CHECK(l.orthonormality < 1e-10);
    CHECK(std::abs(l.pe1e2) < 1e-10);
    // the basis is built from xi, A xi and P, exactly as documented
    CHECK((l.basis.col(0) - r.shape.xi).norm() < 1e-12);
    CHECK((l.basis.col(2) - r.shape.P * l.basis.col(1)).norm() < 1e-12);
    CHECK(std::abs(r.curvature.deficit) < 1e-6);
  }
}

TEST_CASE("equality basis refuses Hopf points") {
  for (double rad : {pi / 4, pi / 6}) {
    const ShapeData s = shape_operator(sphere_chart(rad), Params(1.0, 0.7, 2.0));
    CHECK_THROWS_AS(equality_basis(s), HopfPoint);
    CHECK_THROWS_AS(ruled_check(s, false), HopfPoint);
  }
}

TEST_CASE("perturbation breaks equality together with the inequality") {
  const SurfaceChart c = perturbed_ruled_chart(0.05, 1);
  std::mt19937 rng(99u);
  int strict_points = 0;
  for (int k = 0; k < 100; ++k) {
    const Params q = random_in_box(c, rng);
    const ShapeData s = shape_operator(c, q);
    const double def = deficit(s);
    CHECK(def >= -1e-6);
    if (s.hopfDefect <= kHopfTolerance) continue;
    const EqualityBasisReport l = equality_basis(s);
    if (def > 1e-3) {
      ++strict_points;
      CHECK(l.traceResidual > 1e-6);
    }
  }
  CHECK(strict_points > 50);

  // A generic point: strict inequality there, and the trace condition fails.
  const ShapeData s = shape_operator(c, Params(0.7, 2.0, 3.0));
  REQUIRE(deficit(s) > 1e-3);
  CHECK(equality_basis(s).traceResidual > 1e-3);
}

TEST_CASE("ruled form check") {
  PointOptions opts;
  for (const auto& r : evaluate_grid(ruled_chart(), 6, opts, 2)) CHECK(ruled_check(r.shape, true) < 1e-6);

  const ShapeData s = shape_operator(perturbed_ruled_chart(0.05, 1), Params(0.7, 2.0, 3.0));
  const double residual = ruled_check(s, false);
  CHECK(residual > 1e-3);
  // Oracle: |A W| for the unit W orthogonal to xi and U, built here directly.
  const Vec3 U = (s.A * s.xi - s.alpha * s.xi) / s.hopfDefect;
  const Vec3 W = s.xi.cross(U).normalized();
  CHECK(residual >= (s.A * W).norm() - 1e-12);
  CHECK((s.A * W).norm() > 1e-3);
}

TEST_CASE("classification residuals ignore the normal orientation") {
  for (const auto& c : {ruled_chart(), perturbed_ruled_chart(0.05, 4)}) {
    const ShapeData a = shape_operator(c, Params(0.9, 1.5, 2.5));
    const ShapeData b = flip_normal(a);
    const EqualityBasisReport la = equality_basis(a), lb = equality_basis(b);
    CHECK(std::abs(la.blockResidual - lb.blockResidual) < 1e-12);
    CHECK(std::abs(la.traceResidual - lb.traceResidual) < 1e-12);
    CHECK(std::abs(ruled_check(a, true) - ruled_check(b, true)) < 1e-12);
    CHECK(std::abs(ruled_check(a, false) - ruled_check(b, false)) < 1e-12);
  }
}

TEST_CASE("Hopf equality radii") {
  const HopfRadii r = hopf_equality_radii();
  CHECK(r.rSphere == doctest::Approx(pi / 4).epsilon(1e-15));
  CHECK(std::abs(r.rTube - 0.33311971) < 1e-7);
  const double closed = std::atan((1 + std::sqrt(5.0) - std::sqrt(2 + 2 * std::sqrt(5.0))) / 2);
  CHECK(std::abs(r.rTube - closed) < 1e-12);
  CHECK(std::abs(r.rTubeClosedForm - closed) < 1e-15);
  CHECK_FALSE(r.sphereModel.empty());
  CHECK_FALSE(r.tubeModel.empty());
  CHECK(std::abs(tube_equality_function(r.rTube)) < 1e-9);
}

TEST_CASE("the tube equality function has a single root in its bracket") {
  const double lo = 0.01, hi = pi / 4 - 0.01;
  const int n = 10000;
  int changes = 0;
  double prev = tube_equality_function(lo);
  for (int i = 1; i <= n; ++i) {
    const double f = tube_equality_function(lo + (hi - lo) * i / n);
    if ((f > 0) != (prev > 0)) ++changes;
    prev = f;
  }
  CHECK(changes == 1);
}
