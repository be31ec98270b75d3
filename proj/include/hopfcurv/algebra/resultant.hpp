#pragma once

#include <vector>

#include "hopfcurv/algebra/mpoly.hpp"

namespace hopfcurv::algebra {

using PolyMatrix = std::vector<std::vector<MPoly>>;

/// Fraction-free (Bareiss) determinant over the polynomial ring; every
/// intermediate division is exact. Row swaps are used for zero pivots.
MPoly bareiss_determinant(PolyMatrix m);

/// Sylvester matrix in `v`: deg_v(q) shifted rows of p's coefficients
/// (leading first) above deg_v(p) shifted rows of q's.
/// Throws std::invalid_argument if either degree in v is not positive.
PolyMatrix sylvester_matrix(const MPoly& p, const MPoly& q, Var v);

/// Res_v(p, q) = det of the Sylvester matrix with p's rows first.
MPoly sylvester_resultant(const MPoly& p, const MPoly& q, Var v);

}  // namespace hopfcurv::algebra
