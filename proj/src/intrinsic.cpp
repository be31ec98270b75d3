#include "hopfcurv/intrinsic.hpp"

#include "hopfcurv/curvature.hpp"

#include <cmath>

namespace hopfcurv {

namespace {

using Christoffel = std::array<Mat3, 3>;  // gamma[a](b, c) = Γ^a_bc

Mat3 metric_derivative(const SurfaceChart& chart, const Params& q, int c, double h) {
  Params qp = q, qm = q;
  qp(c) += h;
  qm(c) -= h;
  return (induced_metric(chart, qp) - induced_metric(chart, qm)) / (2.0 * h);
}

Christoffel christoffel(const SurfaceChart& chart, const Params& q, double h) {
  const Mat3 ginv = induced_metric(chart, q).inverse();
  std::array<Mat3, 3> dg;  // dg[c](a, b) = ∂_c g_ab
  for (int c = 0; c < 3; ++c) dg[c] = metric_derivative(chart, q, c, h);
  Christoffel gamma;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        double sum = 0.0;
        for (int d = 0; d < 3; ++d) sum += ginv(a, d) * (dg[b](d, c) + dg[c](d, b) - dg[d](b, c));
        gamma[a](b, c) = 0.5 * sum;
      }
    }
  }
  return gamma;
}

}  // namespace

Mat3 induced_metric(const SurfaceChart& chart, const Params& q) {
  const AmbientVector p = chart.evaluate(q);
  const auto partials = chart.partials(q);
  std::array<AmbientVector, 3> h;
  for (int a = 0; a < 3; ++a) h[a] = horizontalize(partials[a], p);
  Mat3 g;
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b) g(a, b) = g(b, a) = real_inner(h[a], h[b]);
  return g;
}

Tensor4 intrinsic_riemann(const SurfaceChart& chart, const Params& q, double step) {
  const Mat3 g = induced_metric(chart, q);
  const Christoffel gamma = christoffel(chart, q, step);
  std::array<Christoffel, 3> dgamma;  // dgamma[c][a](b, d) = ∂_c Γ^a_bd
  for (int c = 0; c < 3; ++c) {
    Params qp = q, qm = q;
    qp(c) += step;
    qm(c) -= step;
    const Christoffel gp = christoffel(chart, qp, step);
    const Christoffel gm = christoffel(chart, qm, step);
    for (int a = 0; a < 3; ++a) dgamma[c][a] = (gp[a] - gm[a]) / (2.0 * step);
  }

  // R^a_bcd = ∂_c Γ^a_db - ∂_d Γ^a_cb + Γ^a_ce Γ^e_db - Γ^a_de Γ^e_cb
  Tensor4 up{};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          double r = dgamma[c][a](d, b) - dgamma[d][a](c, b);
          for (int e = 0; e < 3; ++e) r += gamma[a](c, e) * gamma[e](d, b) - gamma[a](d, e) * gamma[e](c, b);
          up[a][b][c][d] = r;
        }

  Tensor4 down{};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          double r = 0.0;
          for (int e = 0; e < 3; ++e) r += g(a, e) * up[e][b][c][d];
          down[a][b][c][d] = r;
        }
  return down;
}

Tensor4 gauss_riemann_coordinates(const ShapeData& s, const MovingFrame& frame) {
  // h_a = sum_i B(i, a) E_i with B the inverse of the frame coefficients.
  const Mat3 B = frame.coeffs.inverse();
  Tensor4 out{};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          out[a][b][c][d] = riemann_gauss(s, B.col(c), B.col(d), B.col(b), B.col(a));
  return out;
}

double max_abs_difference(const Tensor4& a, const Tensor4& b) {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) worst = std::max(worst, std::abs(a[i][j][k][l] - b[i][j][k][l]));
  return worst;
}

double coordinate_sectional(const Tensor4& R, const Mat3& g, const Vec3& X, const Vec3& Y) {
  double num = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) num += R[a][b][c][d] * X(a) * Y(b) * X(c) * Y(d);
  // <R(X,Y)Y,X> = R_abcd X^a Y^b X^c Y^d with R_abcd = <R(d_c,d_d)d_b,d_a>
  const double xx = X.dot(g * X), yy = Y.dot(g * Y), xy = X.dot(g * Y);
  return num / (xx * yy - xy * xy);
}

}  // namespace hopfcurv
