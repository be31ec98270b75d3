#pragma once

#include <complex>

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <Eigen/LU>

namespace hopfcurv {

/// A vector of complex 3-space; points and tangents of the unit 5-sphere.
template <typename Scalar>
using AmbientVectorT = Eigen::Matrix<std::complex<Scalar>, 3, 1>;
using AmbientVector = AmbientVectorT<double>;

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Real inner product: the real part of the Hermitian product.
template <typename DerivedA, typename DerivedB>
typename DerivedA::RealScalar real_inner(const Eigen::MatrixBase<DerivedA>& a,
                                         const Eigen::MatrixBase<DerivedB>& b) {
  return a.dot(b).real();  // Eigen's dot conjugates the left operand
}

template <typename Derived>
AmbientVectorT<typename Derived::RealScalar> times_i(const Eigen::MatrixBase<Derived>& v) {
  using Real = typename Derived::RealScalar;
  return v * std::complex<Real>(0, 1);
}

/// Projection onto the horizontal space at p: removes the components along
/// the fiber direction i·p and along p itself.
template <typename DerivedW, typename DerivedP>
AmbientVectorT<typename DerivedW::RealScalar> horizontalize(const Eigen::MatrixBase<DerivedW>& w,
                                                            const Eigen::MatrixBase<DerivedP>& p) {
  const auto ip = times_i(p);
  return w - real_inner(w, ip) * ip - real_inner(w, p) * p.eval();
}

/// Six real coordinates (Re c1, Im c1, Re c2, ...).
template <typename Scalar>
Eigen::Matrix<Scalar, 6, 1> to_real(const AmbientVectorT<Scalar>& v) {
  Eigen::Matrix<Scalar, 6, 1> out;
  for (int k = 0; k < 3; ++k) {
    out(2 * k) = v(k).real();
    out(2 * k + 1) = v(k).imag();
  }
  return out;
}

template <typename Derived>
AmbientVectorT<typename Derived::Scalar> from_real(const Eigen::MatrixBase<Derived>& r) {
  using Scalar = typename Derived::Scalar;
  AmbientVectorT<Scalar> out;
  for (int k = 0; k < 3; ++k) out(k) = std::complex<Scalar>(r(2 * k), r(2 * k + 1));
  return out;
}

}  // namespace hopfcurv
