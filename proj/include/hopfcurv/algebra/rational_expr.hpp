#pragma once

#include "hopfcurv/algebra/mpoly.hpp"

namespace hopfcurv::algebra {

/// Quotient of polynomials. The denominator is kept monic under grlex, and
/// cheap cancellations (common monomials, exact division of the numerator by
/// the denominator) are applied on construction. No general gcd is taken.
class RationalExpr {
 public:
  RationalExpr() : den_(1) {}
  RationalExpr(MPoly num);  // NOLINT(google-explicit-constructor)
  RationalExpr(int c) : RationalExpr(MPoly(c)) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error if den is the zero polynomial.
  RationalExpr(MPoly num, MPoly den);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator-(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b);
  friend RationalExpr operator/(const RationalExpr& a, const RationalExpr& b);
  RationalExpr operator-() const;
  RationalExpr pow(unsigned n) const;

  RationalExpr derivative(Var v) const;
  RationalExpr substitute(Var v, const RationalExpr& value) const;
  RationalExpr evaluate(Var v, const Rational& value) const;

  /// Cancels `factor` from numerator and denominator as often as it divides both.
  RationalExpr cancel(const MPoly& factor) const;

  /// Cross-multiplied equality test.
  friend bool equivalent(const RationalExpr& a, const RationalExpr& b);

  std::string to_string() const;

 private:
  void normalize();
  MPoly num_;
  MPoly den_;
};

/// p(v -> n/d) written as numerator / d^power, with power = deg_v(p).
struct ClearedSubstitution {
  MPoly numerator;
  MPoly denominator;  ///< the substituted denominator d raised to `power`
  unsigned power = 0;
};

/// Substitutes a quotient into a polynomial and clears denominators.
/// Throws std::domain_error if value's denominator is zero.
ClearedSubstitution substitute_cleared(const MPoly& p, Var v, const RationalExpr& value);

}  // namespace hopfcurv::algebra
