#pragma once

#include <optional>
#include <vector>

#include "hopfcurv/algebra/mpoly.hpp"

namespace hopfcurv::algebra {

/// Dense univariate polynomial over the rationals; coeffs[k] multiplies x^k.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  /// Requires p to involve at most the variable v.
  static UPoly from_mpoly(const MPoly& p, Var v);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  UPoly derivative() const;
  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct UDivision {
  UPoly quotient;
  UPoly remainder;
};

UDivision divide(const UPoly& a, const UPoly& b);
/// Monic gcd.
UPoly gcd(UPoly a, UPoly b);
UPoly square_free_part(const UPoly& p);

/// Signed remainder sequence p, p', -rem(p, p'), ... of the square-free part.
std::vector<UPoly> sturm_sequence(const UPoly& p);

/// Distinct real roots in the open interval (lo, hi); nullopt is infinite.
/// Throws std::invalid_argument for the zero polynomial.
int sturm_count(const UPoly& p, const std::optional<Rational>& lo, const std::optional<Rational>& hi);

}  // namespace hopfcurv::algebra
