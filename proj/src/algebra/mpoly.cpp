#include "hopfcurv/algebra/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hopfcurv::algebra {

std::string var_name(Var v) {
  switch (v) {
    case Var::beta: return "beta";
    case Var::gamma: return "gamma";
    case Var::mu: return "mu";
    case Var::kappa1: return "kappa1";
    case Var::kappa3: return "kappa3";
  }
  return "?";
}

int total_degree(const Exponents& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const int da = algebra::total_degree(a), db = algebra::total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

MPoly::MPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

MPoly MPoly::variable(Var v) {
  Exponents e{};
  e[static_cast<int>(v)] = 1;
  return monomial(e, 1);
}

MPoly MPoly::monomial(const Exponents& e, const Rational& c) {
  MPoly p;
  p.add_term(e, c);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && algebra::total_degree(terms_.begin()->first) == 0);
}

Rational MPoly::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int MPoly::total_degree() const {
  return terms_.empty() ? -1 : algebra::total_degree(terms_.begin()->first);
}

int MPoly::degree(Var v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[static_cast<int>(v)]));
  return d;
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  Rational prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (int k = 0; k < kNumVars; ++k) e[k] = static_cast<std::uint16_t>(ea[k] + eb[k]);
      prod = ca * cb;
      out.add_term(e, prod);
    }
  }
  return out;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [e, coeff] : terms_) coeff *= c;
  }
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MPoly MPoly::pow(unsigned n) const {
  MPoly result(1), base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

MPoly MPoly::derivative(Var v) const {
  const int k = static_cast<int>(v);
  MPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exponents d = e;
    d[k] -= 1;
    out.add_term(d, c * e[k]);
  }
  return out;
}

MPoly MPoly::evaluate(Var v, const Rational& value) const {
  const int k = static_cast<int>(v);
  MPoly out;
  for (const auto& [e, c] : terms_) {
    Exponents d = e;
    d[k] = 0;
    Rational factor;
    mpz_pow_ui(factor.get_num_mpz_t(), value.get_num_mpz_t(), e[k]);
    mpz_pow_ui(factor.get_den_mpz_t(), value.get_den_mpz_t(), e[k]);
    out.add_term(d, c * factor);
  }
  return out;
}

MPoly MPoly::substitute(Var v, const MPoly& value) const {
  const auto coeffs = coefficients_in(v);
  // Horner in the substituted variable.
  MPoly out;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) out = out * value + *it;
  return out;
}

Rational MPoly::evaluate(const std::array<Rational, kNumVars>& point) const {
  MPoly p = *this;
  for (int k = 0; k < kNumVars; ++k) p = p.evaluate(static_cast<Var>(k), point[k]);
  return p.constant_term();
}

std::vector<MPoly> MPoly::coefficients_in(Var v) const {
  const int k = static_cast<int>(v);
  std::vector<MPoly> out(static_cast<std::size_t>(std::max(degree(v), 0)) + 1);
  for (const auto& [e, c] : terms_) {
    Exponents d = e;
    d[k] = 0;
    out[e[k]].add_term(d, c);
  }
  return out;
}

MPoly MPoly::from_coefficients(Var v, const std::vector<MPoly>& coeffs) {
  const int k = static_cast<int>(v);
  MPoly out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (const auto& [e, c] : coeffs[i].terms_) {
      if (e[k] != 0) throw std::invalid_argument("coefficient depends on the collected variable");
      Exponents d = e;
      d[k] = static_cast<std::uint16_t>(i);
      out.add_term(d, c);
    }
  }
  return out;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    bool wrote = false;
    if (!unit || algebra::total_degree(e) == 0) {
      out << mag.get_str();
      wrote = true;
    }
    for (int k = 0; k < kNumVars; ++k) {
      if (e[k] == 0) continue;
      if (wrote) out << "*";
      out << var_name(static_cast<Var>(k));
      if (e[k] > 1) out << "^" << e[k];
      wrote = true;
    }
  }
  return out.str();
}

Division divide(const MPoly& p, const MPoly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  const auto& [lead_e, lead_c] = divisor.leading_term();
  Division out;
  MPoly rest = p;
  while (!rest.is_zero()) {
    const auto [e, c] = rest.leading_term();
    bool divisible = true;
    Exponents q;
    for (int k = 0; k < kNumVars; ++k) {
      if (e[k] < lead_e[k]) {
        divisible = false;
        break;
      }
      q[k] = static_cast<std::uint16_t>(e[k] - lead_e[k]);
    }
    if (divisible) {
      const MPoly t = MPoly::monomial(q, c / lead_c);
      out.quotient += t;
      rest -= t * divisor;
    } else {
      const MPoly t = MPoly::monomial(e, c);
      out.remainder += t;
      rest -= t;
    }
  }
  return out;
}

std::optional<MPoly> exact_quotient(const MPoly& p, const MPoly& divisor) {
  Division d = divide(p, divisor);
  if (!d.remainder.is_zero()) return std::nullopt;
  return std::move(d.quotient);
}

}  // namespace hopfcurv::algebra
