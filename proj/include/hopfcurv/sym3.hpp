#pragma once

#include "hopfcurv/ambient.hpp"

namespace hopfcurv {

/// Eigenvalues of a symmetric 3x3 matrix, ascending.
///
/// Closed-form trigonometric solution of the characteristic cubic. When two
/// roots come out closer than 1e-5 of their spread the cubic is
/// ill-conditioned, so the result is recomputed with cyclic Jacobi rotations.
Vec3 symmetric_eigenvalues(const Mat3& m);

/// Cyclic Jacobi sweeps until the off-diagonal mass is below roundoff.
/// Exposed for testing; prefer symmetric_eigenvalues.
Vec3 jacobi_eigenvalues(Mat3 m);

}  // namespace hopfcurv
