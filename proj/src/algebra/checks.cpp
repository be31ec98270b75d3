#include "hopfcurv/algebra/checks.hpp"

#include <cmath>
#include <stdexcept>

#include "hopfcurv/algebra/resultant.hpp"
#include "hopfcurv/algebra/transcribed.hpp"
#include "hopfcurv/algebra/univariate.hpp"

namespace hopfcurv::algebra {

const std::string* SymbolicOutcome::find(std::string_view key) const {
  for (const auto& [k, v] : details)
    if (k == key) return &v;
  return nullptr;
}

namespace {

const MPoly kBeta = MPoly::variable(Var::beta);
const MPoly kGamma = MPoly::variable(Var::gamma);
const MPoly kMu = MPoly::variable(Var::mu);

double max_abs_coefficient(const MPoly& p) {
  double worst = 0.0;
  for (const auto& [e, c] : p.terms()) worst = std::max(worst, std::abs(c.get_d()));
  return worst;
}

// Records a residual that must vanish identically.
void expect_zero(SymbolicOutcome& out, const std::string& label, const RationalExpr& residual) {
  if (residual.is_zero()) {
    out.add(label, "exact zero");
  } else {
    out.pass = false;
    out.add(label, "nonzero: " + residual.num().to_string());
    out.max_abs_coefficient = std::max(out.max_abs_coefficient, max_abs_coefficient(residual.num()));
  }
}

void expect(SymbolicOutcome& out, const std::string& label, bool ok, const std::string& value) {
  if (!ok) out.pass = false;
  out.add(label, (ok ? "ok: " : "FAILED: ") + value);
}

// Strips factors of `factor` from p; returns how many were removed.
int peel(MPoly& p, const MPoly& factor) {
  int count = 0;
  while (!p.is_constant()) {
    auto q = exact_quotient(p, factor);
    if (!q) break;
    p = std::move(*q);
    ++count;
  }
  return count;
}

std::string describe(const Cofactor& cf) {
  return "c=" + cf.c.get_str() + " beta^" + std::to_string(cf.beta_power) + " D^" + std::to_string(cf.d_power);
}

// e3(expr) for an expression in beta, gamma (mu constant) by the chain rule.
RationalExpr e3_of(const RationalExpr& expr, const RationalExpr& e3_beta, const RationalExpr& e3_gamma) {
  return expr.derivative(Var::beta) * e3_beta + expr.derivative(Var::gamma) * e3_gamma;
}

RationalExpr substitute_kappas(const RationalExpr& expr, const KappaInputs& k) {
  return expr.substitute(Var::kappa1, k.kappa1).substitute(Var::kappa3, k.kappa3);
}

}  // namespace

Cofactor match_cofactor(const RationalExpr& value, const MPoly& target) {
  Cofactor cf;
  auto q = exact_quotient(value.num(), target);
  if (!q) return cf;
  const MPoly D = kappa_denominator();
  MPoly num = std::move(*q);
  MPoly den = value.den();
  cf.d_power = peel(num, D) - peel(den, D);
  cf.beta_power = peel(num, kBeta) - peel(den, kBeta);
  if (!num.is_constant() || !den.is_constant() || num.is_zero()) return cf;
  cf.c = num.constant_term() / den.constant_term();
  cf.found = true;
  return cf;
}

KappaInputs KappaInputs::transcribed() { return {parse_display("kappa1"), parse_display("kappa3")}; }

SymbolicOutcome check_kappa(const KappaInputs& in) {
  SymbolicOutcome out{"check_kappa", true, {}, 0.0};
  const RationalExpr codazzi = parse_display("codazzi_e2_xi_lhs") - parse_display("codazzi_e2_xi_rhs");
  expect_zero(out, "codazzi_e2_xi", substitute_kappas(codazzi, in));
  expect_zero(out, "kappa_relation", substitute_kappas(parse_display("kappa_relation"), in));
  return out;
}

SymbolicOutcome check_f_emergence() {
  SymbolicOutcome out{"check_f_emergence", true, {}, 0.0};
  const KappaInputs k = KappaInputs::transcribed();
  const RationalExpr e3_beta = parse_display("e3_beta");
  const RationalExpr e3_gamma = parse_display("e3_gamma");
  const MPoly D = kappa_denominator();

  // Upstream consistency: the reduced e3 forms follow from the Codazzi forms.
  expect_zero(out, "e3_beta_from_codazzi", substitute_kappas(parse_display("e3_beta_codazzi"), k) - e3_beta);
  expect_zero(out, "e3_gamma_from_codazzi_xi", substitute_kappas(parse_display("e3_gamma_codazzi_xi"), k) - e3_gamma);
  expect_zero(out, "e3_gamma_from_codazzi_e2e3",
              substitute_kappas(parse_display("e3_gamma_codazzi_e2e3"), k) - e3_gamma);

  // The cleared Gauss relation is D^2 times e3(kappa1) + rest, coefficient by coefficient.
  const RationalExpr D2 = RationalExpr(D.pow(2));
  const RationalExpr coeff_beta = parse_display("g1_coeff_e3_beta");
  const RationalExpr coeff_gamma = parse_display("g1_coeff_e3_gamma");
  const RationalExpr rest = parse_display("g1_rest");
  expect_zero(out, "g1_coeff_e3_beta_from_kappa1", D2 * k.kappa1.derivative(Var::beta) - coeff_beta);
  expect_zero(out, "g1_coeff_e3_gamma_from_kappa1", D2 * k.kappa1.derivative(Var::gamma) - coeff_gamma);
  expect_zero(out, "g1_rest_from_gauss", D2 * substitute_kappas(parse_display("gauss_e2e3_rest"), k) - rest);

  const RationalExpr g1 = coeff_beta * e3_beta + coeff_gamma * e3_gamma + rest;
  const MPoly f = parse_display_poly("f");
  const MPoly target = (kMu - kGamma) * f;
  out.add("cleared_numerator_terms", std::to_string(g1.num().size()));
  out.add("cleared_denominator", g1.den().to_string());
  const Cofactor cf = match_cofactor(g1, target);
  expect(out, "proportional_to_(mu-gamma)*f", cf.found, cf.found ? describe(cf) : "no exact cofactor");
  if (cf.found) {
    out.add("c", cf.c.get_str());
    out.add("k", std::to_string(cf.d_power));
  }
  expect(out, "vanishes_at_mu=gamma", g1.num().substitute(Var::mu, kGamma).is_zero(), "numerator(mu := gamma)");
  return out;
}

SymbolicOutcome check_f2(const MPoly& g19) {
  SymbolicOutcome out{"check_f2", true, {}, 0.0};
  const RationalExpr e3_beta = parse_display("e3_beta");
  const RationalExpr e3_gamma = parse_display("e3_gamma");
  const MPoly f = parse_display_poly("f");
  const RationalExpr df = e3_of(RationalExpr(f), e3_beta, e3_gamma);
  out.add("cleared_numerator_terms", std::to_string(df.num().size()));
  out.add("cleared_denominator", df.den().to_string());
  out.add("symbol_b_read_as", "beta");

  const Cofactor cf = match_cofactor(df, g19);
  if (cf.found) {
    expect(out, "proportional_to_g19", true, describe(cf));
    out.add("c", cf.c.get_str());
    out.add("beta_power", std::to_string(cf.beta_power));
    out.add("k", std::to_string(cf.d_power));
    const Cofactor cleared = match_cofactor(RationalExpr(df.num()), g19);
    if (cleared.found) out.add("cleared_numerator_over_g19", describe(cleared));
    return out;
  }

  // Strip the expected monomial/D factors, rescale to g19's leading
  // coefficient and report what is left.
  MPoly stripped = df.num();
  peel(stripped, kappa_denominator());
  peel(stripped, kBeta);
  const Rational scale = g19.leading_term().second / stripped.leading_term().second;
  const MPoly diff = stripped * scale - g19;
  expect(out, "proportional_to_g19", false, "no exact cofactor");
  out.add("difference_terms", std::to_string(diff.size()));
  out.add("difference", diff.to_string());
  out.max_abs_coefficient = max_abs_coefficient(diff);
  return out;
}

SymbolicOutcome check_f2() { return check_f2(parse_display_poly("g19")); }

SymbolicOutcome check_resultant(const MPoly& g19) {
  SymbolicOutcome out{"check_resultant", true, {}, 0.0};
  const MPoly f = parse_display_poly("f");
  const MPoly res = sylvester_resultant(f, g19, Var::gamma);
  const MPoly expected = parse_display_poly("resultant");
  out.add("convention", "Sylvester determinant, f rows first");
  out.add("resultant", res.to_string());
  if (res == expected) {
    out.add("sign", "+");
  } else if (res == -expected) {
    out.add("sign", "-");
  } else {
    out.pass = false;
    const MPoly diff = res - expected;
    out.add("difference", diff.to_string());
    out.max_abs_coefficient = max_abs_coefficient(diff);
  }
  return out;
}

SymbolicOutcome check_resultant() { return check_resultant(parse_display_poly("g19")); }

SymbolicOutcome check_mu1() {
  SymbolicOutcome out{"check_mu1", true, {}, 0.0};
  const MPoly f1 = parse_display_poly("f").evaluate(Var::mu, 1);
  const MPoly g1 = parse_display_poly("g19").evaluate(Var::mu, 1);
  const MPoly red_f = parse_display_poly("mu1_f");
  const MPoly red_g = parse_display_poly("mu1_g19");
  const MPoly extra = parse_poly("(gamma - 1)^2 + beta^2");

  const auto qf = exact_quotient(f1, red_f);
  expect(out, "f_mu1_factorization", qf && *qf == extra,
         qf ? "f|mu=1 = mu1_f * (" + qf->to_string() + ")" : "mu1_f does not divide f|mu=1");
  const auto qg = exact_quotient(g1, red_g);
  expect(out, "g19_mu1_divisible", qg.has_value(),
         qg ? "g19|mu=1 = mu1_g19 * (" + qg->to_string() + ")" : "mu1_g19 does not divide g19|mu=1");
  if (qg) out.add("g19_mu1_quotient", qg->to_string());

  const std::array<Rational, kNumVars> point{0, 1, 1, 0, 0};
  expect(out, "point_(0,1)_on_mu1_f", red_f.evaluate(point) == 0, red_f.evaluate(point).get_str());
  expect(out, "point_(0,1)_on_mu1_g19", red_g.evaluate(point) == 0, red_g.evaluate(point).get_str());

  // 8 beta^4 + q1(gamma) beta^2 + (gamma-1)^2 q2(gamma) with q1, q2 positive definite.
  const auto discriminant = [](const UPoly& q) -> Rational {
    const auto& c = q.coeffs();
    return c[1] * c[1] - 4 * c[2] * c[0];
  };
  const auto coeffs = red_g.coefficients_in(Var::beta);
  const bool shape_ok = coeffs.size() == 5 && coeffs[4] == MPoly(8) && coeffs[3].is_zero() && coeffs[1].is_zero();
  expect(out, "mu1_g19_shape", shape_ok, "8 beta^4 + q1 beta^2 + q0");
  if (shape_ok) {
    const UPoly q1 = UPoly::from_mpoly(coeffs[2], Var::gamma);
    const auto q2 = exact_quotient(coeffs[0], parse_poly("(gamma - 1)^2"));
    expect(out, "q0_has_(gamma-1)^2", q2.has_value(), q2 ? q2->to_string() : "not divisible");
    const Rational d1 = discriminant(q1);
    expect(out, "disc_q1", q1.degree() == 2 && d1 < 0 && q1.leading() > 0, d1.get_str());
    if (q2) {
      const UPoly q2u = UPoly::from_mpoly(*q2, Var::gamma);
      const Rational d2 = discriminant(q2u);
      expect(out, "disc_q2", q2u.degree() == 2 && d2 < 0 && q2u.leading() > 0, d2.get_str());
    }
  }
  out.add("unique_real_solution", "(beta, gamma) = (0, 1)");
  return out;
}

SymbolicOutcome check_mu0() {
  SymbolicOutcome out{"check_mu0", true, {}, 0.0};
  const MPoly f0 = parse_display_poly("f").evaluate(Var::mu, 0);
  const MPoly expected = parse_display_poly("mu0_f");
  expect_zero(out, "f_mu0_minus_display", RationalExpr(f0 - expected));
  const MPoly quadratic = parse_poly("gamma^2 + beta^2 + 1");
  for (const Rational& b : {Rational(0), Rational(1, 2), Rational(1), Rational(-3), Rational(7, 3)}) {
    const int nq = sturm_count(UPoly::from_mpoly(quadratic.evaluate(Var::beta, b), Var::gamma), {}, {});
    const int nf = sturm_count(UPoly::from_mpoly(f0.evaluate(Var::beta, b), Var::gamma), {}, {});
    expect(out, "real_roots_at_beta=" + b.get_str(), nq == 0 && nf == 1,
           "quadratic " + std::to_string(nq) + ", f " + std::to_string(nf));
  }
  return out;
}

const std::vector<std::string>& symbolic_check_names() {
  static const std::vector<std::string> names = {"check_kappa",     "check_f_emergence", "check_f2",
                                                 "check_resultant", "check_mu1",         "check_mu0"};
  return names;
}

SymbolicOutcome run_symbolic(const std::string& name) {
  if (name == "check_kappa") return check_kappa();
  if (name == "check_f_emergence") return check_f_emergence();
  if (name == "check_f2") return check_f2();
  if (name == "check_resultant") return check_resultant();
  if (name == "check_mu1") return check_mu1();
  if (name == "check_mu0") return check_mu0();
  throw std::invalid_argument("unknown symbolic check: " + name);
}

}  // namespace hopfcurv::algebra
