#include "hopfcurv/algebra/transcribed.hpp"

#include <stdexcept>
#include <string>

namespace hopfcurv::algebra {

// Displays are copied term for term; only LaTeX markup was replaced by
// explicit '*' and '^'. Where a display is an equation "lhs = rhs" it is
// stored as lhs - rhs, and a "_lhs"/"_rhs" split is kept when the two sides
// are used separately.
const std::vector<Display>& displays() {
  static const std::vector<Display> table = {
      {"codazzi_e2_xi_lhs", "beta*kappa1 + (mu - gamma)*kappa3",
       "Codazzi, X = e2, Y = xi, e3 coefficient (left side)", ""},
      {"codazzi_e2_xi_rhs", "beta^2 + gamma^2 - 1", "Codazzi, X = e2, Y = xi, e3 coefficient (right side)", ""},
      {"e3_beta_codazzi", "mu^2 - 2*mu*gamma - kappa3*(mu - gamma) + beta^2 + 1", "e3(beta) from Codazzi, X = e3, Y = xi",
       ""},
      {"e3_gamma_codazzi_xi", "2*beta*mu + beta*gamma - beta*k3", "e3(gamma) from Codazzi, X = e3, Y = xi", "k3"},
      {"e3_gamma_codazzi_e2e3", "-mu*kappa1 + kappa1*gamma + beta*gamma + 2*beta*mu",
       "e3(gamma) from Codazzi, X = e2, Y = e3", ""},
      {"kappa_relation", "(mu - gamma)*kappa1 - beta*kappa3", "difference of the two e3(gamma) forms, = 0", ""},
      {"kappa1", "beta*(beta^2 + gamma^2 - 1)/((mu - gamma)^2 + beta^2)", "closed form of kappa1", ""},
      {"kappa3", "(mu - gamma)*(beta^2 + gamma^2 - 1)/((mu - gamma)^2 + beta^2)", "closed form of kappa3", ""},
      {"gauss_e2e3_rest", "-2*mu*gamma - kappa1^2 - (gamma + mu)*kappa3 - 4",
       "Gauss, X = e2, Y = Z = e3: e3(kappa1) + this = 0", ""},
      {"e3_beta", "(mu - 2*gamma)*mu + beta^2 + 1 - (mu - gamma)^2*(beta^2 + gamma^2 - 1)/((mu - gamma)^2 + beta^2)",
       "e3(beta) after eliminating kappa3", ""},
      {"e3_gamma", "beta*(gamma + 2*mu) + (gamma - mu)*beta*(beta^2 + gamma^2 - 1)/((mu - gamma)^2 + beta^2)",
       "e3(gamma) after eliminating kappa1, kappa3", ""},
      {"g1_coeff_e3_beta", "(3*beta^2 + gamma^2 - 1)*((mu - gamma)^2 + beta^2) - 2*beta^2*(beta^2 + gamma^2 - 1)",
       "Gauss relation cleared by D^2: coefficient of e3(beta)", ""},
      {"g1_coeff_e3_gamma", "2*beta*gamma*((mu - gamma)^2 + beta^2) + 2*(mu - gamma)*beta*(beta^2 + gamma^2 - 1)",
       "Gauss relation cleared by D^2: coefficient of e3(gamma)", ""},
      {"g1_rest",
       "-2*mu*gamma*{(mu - gamma)^2 + beta^2}^2 - beta^2*(beta^2 + gamma^2 - 1)^2"
       " + (gamma^2 - mu^2)*(beta^2 + gamma^2 - 1)*{(mu - gamma)^2 + beta^2} - 4*{(mu - gamma)^2 + beta^2}^2",
       "Gauss relation cleared by D^2: remaining terms", ""},
      {"f",
       "2*mu*gamma^4 - (4*mu^2 - 1)*gamma^3 + (3*mu^2 + 4*beta^2 - 6)*mu*gamma^2"
       " - {mu^4 + (4*beta^2 - 7)*mu^2 - beta^2 - 1}*gamma + (beta^2 - 2)*mu^3 + (2*beta^4 - 2*beta^2 - 1)*mu",
       "f(beta, gamma)", ""},
      {"g19",
       "8*mu*gamma^6 - (24*mu^2 - 4)*gamma^5 + (30*mu^2 + 24*beta^2 - 15)*mu*gamma^4"
       " - {20*mu^4 + (48*beta^2 + 3)*mu^2 - 8*b^2 - 3}*gamma^3"
       " + {7*mu^5 + (36*beta^2 + 45)*mu^3 + (24*beta^4 - 10*beta^2 - 2)*mu}*gamma^2"
       " - {mu^6 + (12*beta^2 + 44)*mu^4 + (24*beta^4 + 19*beta^2 + 2)*mu^2 - 4*beta^4 - 3*beta^2 + 1}*gamma"
       " + (beta^2 + 13)*mu^5 + (6*beta^4 + 19*beta^2 + 1)*mu^3 + (8*beta^6 + 5*beta^4 - 2*beta^2 + 1)*mu",
       "e3-derivative of f = 0, degree 6 in gamma", "b"},
      {"resultant", "202500*(mu^2 - 1)^4*beta^4*mu^6*{4*mu^2*beta^2 + (mu^2 - 1)^2}^2",
       "resultant of f and g19 with respect to gamma", ""},
      {"mu1_f", "2*beta^2 + 2*gamma^2 + gamma - 3", "f at mu = 1, reduced", ""},
      {"mu1_g19", "8*beta^4 + (16*gamma^2 - 4*gamma + 3)*beta^2 + (gamma - 1)^2*(8*gamma^2 + 12*gamma + 15)",
       "g19 at mu = 1, reduced", ""},
      {"mu0_f", "gamma*(beta^2 + gamma^2 + 1)", "f at mu = 0", ""},
  };
  return table;
}

const Display& display(std::string_view name) {
  for (const auto& d : displays())
    if (d.name == name) return d;
  throw std::out_of_range("no transcribed display named " + std::string(name));
}

const Aliases& aliases() {
  static const Aliases table = {{"b", Var::beta}, {"k3", Var::kappa3}};
  return table;
}

RationalExpr parse_display(std::string_view name) { return parse_expr(display(name).text, aliases()); }

MPoly parse_display_poly(std::string_view name) { return parse_poly(display(name).text, aliases()); }

MPoly kappa_denominator() { return parse_poly("(mu - gamma)^2 + beta^2"); }

}  // namespace hopfcurv::algebra
