#include "hopfcurv/algebra/resultant.hpp"

#include <stdexcept>
#include <utility>

namespace hopfcurv::algebra {

MPoly bareiss_determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return MPoly(1);
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");

  int sign = 1;
  MPoly previous(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return MPoly();
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const MPoly numer = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = exact_quotient(numer, previous);
        if (!q) throw std::logic_error("Bareiss step left a remainder");
        m[i][j] = std::move(*q);
      }
      m[i][k] = MPoly();
    }
    previous = m[k][k];
  }
  MPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

PolyMatrix sylvester_matrix(const MPoly& p, const MPoly& q, Var v) {
  const int dp = p.degree(v), dq = q.degree(v);
  if (dp <= 0 || dq <= 0) throw std::invalid_argument("Sylvester matrix needs positive degrees in " + var_name(v));
  const auto cp = p.coefficients_in(v);
  const auto cq = q.coefficients_in(v);
  const std::size_t n = static_cast<std::size_t>(dp + dq);
  PolyMatrix m(n, std::vector<MPoly>(n));
  for (int r = 0; r < dq; ++r)
    for (int k = 0; k <= dp; ++k) m[r][r + k] = cp[dp - k];
  for (int r = 0; r < dp; ++r)
    for (int k = 0; k <= dq; ++k) m[dq + r][r + k] = cq[dq - k];
  return m;
}

MPoly sylvester_resultant(const MPoly& p, const MPoly& q, Var v) {
  return bareiss_determinant(sylvester_matrix(p, q, v));
}

}  // namespace hopfcurv::algebra
