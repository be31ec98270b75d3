#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hopfcurv::algebra {

using Rational = mpq_class;
using Integer = mpz_class;

/// Variable slots, in lexicographic priority order.
enum class Var : int { beta = 0, gamma = 1, mu = 2, kappa1 = 3, kappa3 = 4 };
inline constexpr int kNumVars = 5;

std::string var_name(Var v);

using Exponents = std::array<std::uint16_t, kNumVars>;

int total_degree(const Exponents& e);

/// Graded lexicographic order, greatest first.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse polynomial in beta, gamma, mu, kappa1, kappa3 over the rationals.
/// Zero coefficients are never stored, so equality is structural.
class MPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  MPoly() = default;
  MPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MPoly(long c) : MPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MPoly(int c) : MPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)

  static MPoly variable(Var v);
  static MPoly monomial(const Exponents& e, const Rational& c);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the constant term (0 if absent).
  Rational constant_term() const;
  std::size_t size() const { return terms_.size(); }

  int total_degree() const;
  int degree(Var v) const;
  /// Leading term under grlex. Precondition: nonzero.
  const std::pair<const Exponents, Rational>& leading_term() const { return *terms_.begin(); }

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  friend MPoly operator*(MPoly a, long c) { return a *= Rational(c); }
  friend MPoly operator*(long c, MPoly a) { return a *= Rational(c); }
  MPoly operator-() const;
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  MPoly pow(unsigned n) const;
  MPoly derivative(Var v) const;
  /// Replace v by a rational value.
  MPoly evaluate(Var v, const Rational& value) const;
  /// Replace v by a polynomial.
  MPoly substitute(Var v, const MPoly& value) const;
  /// Full evaluation; every variable that occurs must be supplied.
  Rational evaluate(const std::array<Rational, kNumVars>& point) const;

  /// coefficients_in(v)[k] is the coefficient of v^k (a polynomial free of v).
  std::vector<MPoly> coefficients_in(Var v) const;
  static MPoly from_coefficients(Var v, const std::vector<MPoly>& coeffs);

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  TermMap terms_;
};

struct Division {
  MPoly quotient;
  MPoly remainder;
};

/// Multivariate division by a single divisor under grlex. When the divisor
/// divides p exactly, the remainder is zero and the quotient is exact.
Division divide(const MPoly& p, const MPoly& divisor);

/// p / divisor if the division is exact.
std::optional<MPoly> exact_quotient(const MPoly& p, const MPoly& divisor);

}  // namespace hopfcurv::algebra
