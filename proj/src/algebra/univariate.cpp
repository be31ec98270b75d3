#include "hopfcurv/algebra/univariate.hpp"

#include <stdexcept>

namespace hopfcurv::algebra {

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UPoly UPoly::from_mpoly(const MPoly& p, Var v) {
  const auto parts = p.coefficients_in(v);
  std::vector<Rational> coeffs;
  coeffs.reserve(parts.size());
  for (const auto& c : parts) {
    if (!c.is_constant()) throw std::invalid_argument("polynomial is not univariate in " + var_name(v));
    coeffs.push_back(c.constant_term());
  }
  return UPoly(std::move(coeffs));
}

Rational UPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * static_cast<long>(k));
  return UPoly(std::move(d));
}

UDivision divide(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  std::vector<Rational> quot(std::max(a.degree() - db + 1, 0));
  for (int k = a.degree(); k >= db; --k) {
    const Rational c = rem[k] / b.leading();
    quot[k - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= c * b.coeffs()[j];
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divide(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  std::vector<Rational> c = a.coeffs();
  const Rational lead = c.back();
  for (auto& x : c) x /= lead;
  return UPoly(std::move(c));
}

UPoly square_free_part(const UPoly& p) {
  if (p.degree() <= 0) return p;
  return divide(p, gcd(p, p.derivative())).quotient;
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq{square_free_part(p)};
  seq.push_back(seq[0].derivative());
  while (!seq.back().is_zero()) {
    const UPoly r = divide(seq[seq.size() - 2], seq.back()).remainder;
    std::vector<Rational> neg = r.coeffs();
    for (auto& x : neg) x = -x;
    seq.emplace_back(std::move(neg));
  }
  seq.pop_back();
  return seq;
}

namespace {

int sign(const Rational& x) { return sgn(x); }

// Sign of p at -inf or +inf.
int sign_at_infinity(const UPoly& p, bool positive) {
  const int s = sign(p.leading());
  return (positive || p.degree() % 2 == 0) ? s : -s;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int variations(const std::vector<UPoly>& seq, const std::optional<Rational>& x, bool positive_infinity) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& q : seq) signs.push_back(x ? sign(q(*x)) : sign_at_infinity(q, positive_infinity));
  return sign_changes(signs);
}

}  // namespace

int sturm_count(const UPoly& p, const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  if (p.is_zero()) throw std::invalid_argument("Sturm count of the zero polynomial");
  if (lo && hi && *lo >= *hi) return 0;
  const auto seq = sturm_sequence(p);
  // Zeros in the sign list are skipped, so V(a) - V(b) counts roots in (a, b].
  int count = variations(seq, lo, false) - variations(seq, hi, true);
  if (hi && seq[0](*hi) == 0) --count;
  return count;
}

}  // namespace hopfcurv::algebra
