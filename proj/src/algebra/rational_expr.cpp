#include "hopfcurv/algebra/rational_expr.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfcurv::algebra {

namespace {

// Largest monomial dividing every term of p (p nonzero).
Exponents monomial_content(const MPoly& p) {
  Exponents m;
  m.fill(UINT16_MAX);
  for (const auto& [e, c] : p.terms())
    for (int k = 0; k < kNumVars; ++k) m[k] = std::min(m[k], e[k]);
  return m;
}

}  // namespace

RationalExpr::RationalExpr(MPoly num) : num_(std::move(num)), den_(1) {}

RationalExpr::RationalExpr(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational expression with zero denominator");
  normalize();
}

void RationalExpr::normalize() {
  if (num_.is_zero()) {
    den_ = MPoly(1);
    return;
  }
  const Exponents mn = monomial_content(num_), md = monomial_content(den_);
  Exponents common;
  bool any = false;
  for (int k = 0; k < kNumVars; ++k) {
    common[k] = std::min(mn[k], md[k]);
    any = any || common[k] > 0;
  }
  if (any) {
    const MPoly m = MPoly::monomial(common, 1);
    num_ = *exact_quotient(num_, m);
    den_ = *exact_quotient(den_, m);
  }
  if (!den_.is_constant()) {
    if (auto q = exact_quotient(num_, den_)) {
      num_ = std::move(*q);
      den_ = MPoly(1);
    }
  }
  const Rational lead = den_.leading_term().second;
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

RationalExpr operator+(const RationalExpr& a, const RationalExpr& b) {
  if (a.den_ == b.den_) return RationalExpr(a.num_ + b.num_, a.den_);
  return RationalExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalExpr operator-(const RationalExpr& a, const RationalExpr& b) { return a + (-b); }

RationalExpr operator*(const RationalExpr& a, const RationalExpr& b) {
  return RationalExpr(a.num_ * b.num_, a.den_ * b.den_);
}

RationalExpr operator/(const RationalExpr& a, const RationalExpr& b) {
  if (b.num_.is_zero()) throw std::domain_error("division by the zero rational expression");
  return RationalExpr(a.num_ * b.den_, a.den_ * b.num_);
}

RationalExpr RationalExpr::operator-() const {
  RationalExpr out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalExpr RationalExpr::pow(unsigned n) const { return RationalExpr(num_.pow(n), den_.pow(n)); }

RationalExpr RationalExpr::derivative(Var v) const {
  return RationalExpr(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

RationalExpr RationalExpr::substitute(Var v, const RationalExpr& value) const {
  const ClearedSubstitution n = substitute_cleared(num_, v, value);
  const ClearedSubstitution d = substitute_cleared(den_, v, value);
  // n.num / q^a divided by d.num / q^b, q = value.den()
  MPoly top = n.numerator, bottom = d.numerator;
  if (n.power < d.power) top *= value.den().pow(d.power - n.power);
  if (d.power < n.power) bottom *= value.den().pow(n.power - d.power);
  return RationalExpr(std::move(top), std::move(bottom));
}

RationalExpr RationalExpr::evaluate(Var v, const Rational& value) const {
  return RationalExpr(num_.evaluate(v, value), den_.evaluate(v, value));
}

RationalExpr RationalExpr::cancel(const MPoly& factor) const {
  RationalExpr out = *this;
  if (factor.is_constant()) return out;
  while (true) {
    auto qn = exact_quotient(out.num_, factor);
    if (!qn) break;
    auto qd = exact_quotient(out.den_, factor);
    if (!qd) break;
    out.num_ = std::move(*qn);
    out.den_ = std::move(*qd);
  }
  out.normalize();
  return out;
}

bool equivalent(const RationalExpr& a, const RationalExpr& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

std::string RationalExpr::to_string() const {
  if (den_ == MPoly(1)) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

ClearedSubstitution substitute_cleared(const MPoly& p, Var v, const RationalExpr& value) {
  if (value.den().is_zero()) throw std::domain_error("substitution with zero denominator");
  const auto coeffs = p.coefficients_in(v);
  ClearedSubstitution out;
  out.power = static_cast<unsigned>(coeffs.size() - 1);
  // sum_k c_k n^k d^(power-k), built Horner-style.
  MPoly acc;
  MPoly dpow(1);
  std::vector<MPoly> npow{MPoly(1)};
  for (unsigned k = 1; k <= out.power; ++k) npow.push_back(npow.back() * value.num());
  for (unsigned k = out.power + 1; k-- > 0;) {
    acc += coeffs[k] * npow[k] * dpow;
    dpow *= value.den();
  }
  out.numerator = std::move(acc);
  out.denominator = value.den().pow(out.power);
  return out;
}

}  // namespace hopfcurv::algebra
