#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hopfcurv/algebra/checks.hpp"
#include "hopfcurv/algebra/parse.hpp"
#include "hopfcurv/algebra/resultant.hpp"
#include "hopfcurv/algebra/transcribed.hpp"
#include "hopfcurv/algebra/univariate.hpp"
#include "oracles.hpp"

using namespace hopfcurv::algebra;

namespace {

const MPoly b = MPoly::variable(Var::beta);
const MPoly g = MPoly::variable(Var::gamma);
const MPoly m = MPoly::variable(Var::mu);

std::mt19937 rng(4242u);

MPoly random_poly(int terms = 4, int max_exp = 2) {
  std::uniform_int_distribution<int> coef(-5, 5), ex(0, max_exp);
  MPoly p;
  for (int t = 0; t < terms; ++t) {
    Exponents e{};
    for (int v = 0; v < 3; ++v) e[v] = static_cast<std::uint16_t>(ex(rng));
    p += MPoly::monomial(e, coef(rng));
  }
  return p;
}

MPoly parse(std::string_view s) { return parse_poly(s); }

}  // namespace

TEST_CASE("polynomial arithmetic examples") {
  CHECK(parse("gamma^3").derivative(Var::gamma) == 3 * g * g);
  CHECK((b + g) * (b - g) == b * b - g * g);
  CHECK((b + g).pow(2) == b * b + 2 * b * g + g * g);
  CHECK(MPoly(0).is_zero());
  CHECK((b - b).is_zero());
  CHECK((b * g).evaluate(Var::beta, Rational(1, 2)) == Rational(1, 2) * g);
  CHECK(parse("beta^2 - 1").substitute(Var::beta, g + 1) == g * g + 2 * g);
  CHECK(parse("beta*gamma^2*mu").degree(Var::gamma) == 2);
  CHECK(parse("beta*gamma^2*mu").total_degree() == 4);
}

TEST_CASE("grlex order puts higher degree first") {
  const MPoly p = parse("beta + gamma^2 + 1");
  CHECK(p.leading_term().first == Exponents{0, 2, 0, 0, 0});
  CHECK(parse("gamma^2 + beta*gamma").leading_term().first == Exponents{1, 1, 0, 0, 0});
}

TEST_CASE("ring axioms on random polynomials") {
  for (int k = 0; k < 100; ++k) {
    const MPoly p = random_poly(), q = random_poly(), r = random_poly();
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK((p - p).is_zero());
    CHECK((p * q).derivative(Var::gamma) == p.derivative(Var::gamma) * q + p * q.derivative(Var::gamma));
    if (!q.is_zero()) {
      CHECK(exact_quotient(p * q, q) == p);
      const Division d = divide(p, q);
      CHECK(d.quotient * q + d.remainder == p);
    }
  }
}

TEST_CASE("rational expressions and cleared substitution") {
  // gamma -> 1/mu in mu*gamma - 1
  const ClearedSubstitution s = substitute_cleared(m * g - 1, Var::gamma, RationalExpr(1, m));
  CHECK(s.numerator.is_zero());
  CHECK(s.power == 1);

  const RationalExpr half(MPoly(1), MPoly(2));
  CHECK(equivalent(half + half, RationalExpr(1)));
  const RationalExpr x(b, g);
  CHECK(equivalent(x * RationalExpr(g, b), RationalExpr(1)));
  CHECK(equivalent((x / x), RationalExpr(1)));
  CHECK(equivalent(x.derivative(Var::gamma), RationalExpr(-b, g * g)));
  CHECK(equivalent(x.substitute(Var::beta, RationalExpr(g * g)), RationalExpr(g)));
  CHECK(RationalExpr(2 * b, 4 * g).den().leading_term().second == 1);

  CHECK_THROWS_AS(RationalExpr(b, MPoly(0)), std::domain_error);
  CHECK_THROWS_AS(substitute_cleared(b, Var::beta, RationalExpr(MPoly(1), g - g + 0 * b)), std::domain_error);
  CHECK_THROWS_AS(x / RationalExpr(0), std::domain_error);
}

TEST_CASE("parser") {
  CHECK(parse("2*beta^2 - {gamma + 1}*(gamma - 1)") == 2 * b * b - g * g + 1);
  CHECK(parse("-3") == MPoly(-3));
  CHECK(parse("-(beta)^2") == -(b * b));
  CHECK(parse_poly("b*k3", aliases()) == b * MPoly::variable(Var::kappa3));
  CHECK(equivalent(parse_expr("beta/(gamma*2)"), RationalExpr(b, 2 * g)));
  CHECK_THROWS_AS(parse("beta +"), ParseError);
  CHECK_THROWS_AS(parse("b"), ParseError);  // aliases only when asked
  CHECK_THROWS_AS(parse("(beta"), ParseError);
  CHECK_THROWS_AS(parse("beta^gamma"), ParseError);
  CHECK_THROWS_AS(parse("beta/gamma"), ParseError);  // not a polynomial
  CHECK_THROWS(parse_expr("1/(beta - beta)"));
}

TEST_CASE("every transcribed display parses") {
  std::set<std::string_view> names;
  for (const Display& d : displays()) {
    CAPTURE(d.name);
    CHECK(names.insert(d.name).second);
    CHECK_NOTHROW(parse_display(d.name));
    CHECK_FALSE(d.role.empty());
  }
  CHECK_THROWS_AS(display("no-such-display"), std::out_of_range);
  CHECK(kappa_denominator() == (m - g).pow(2) + b * b);
}

TEST_CASE("resultant examples") {
  const MPoly x = g;
  CHECK(sylvester_resultant(x - b, x - m, Var::gamma) == b - m);
  CHECK(sylvester_resultant(x * x - 1, x - 1, Var::gamma).is_zero());
  CHECK_THROWS_AS(sylvester_resultant(b, x, Var::gamma), std::invalid_argument);
  CHECK(sylvester_matrix(x * x - 1, x - 1, Var::gamma).size() == 3);
}

TEST_CASE("resultant antisymmetry on random polynomials") {
  for (int k = 0; k < 30; ++k) {
    const MPoly p = random_poly(4, 3) + g, q = random_poly(3, 2) + g * g * g;
    const int dp = p.degree(Var::gamma), dq = q.degree(Var::gamma);
    if (dp == 0 || dq == 0) continue;
    const MPoly pq = sylvester_resultant(p, q, Var::gamma), qp = sylvester_resultant(q, p, Var::gamma);
    CHECK(pq == ((dp * dq) % 2 == 0 ? qp : -qp));
  }
}

TEST_CASE("Bareiss determinant equals cofactor expansion") {
  for (int k = 0; k < 20; ++k) {
    PolyMatrix a(4, std::vector<MPoly>(4));
    for (auto& row : a)
      for (auto& e : row) e = (k % 4 == 0 && rng() % 3 == 0) ? MPoly(0) : random_poly(2, 1);
    CHECK(bareiss_determinant(a) == oracle::cofactor_determinant(a));
  }
  // zero leading pivot forces a row swap
  PolyMatrix swap = {{0, b, 1}, {g, 0, 2}, {1, 1, m}};
  CHECK(bareiss_determinant(swap) == oracle::cofactor_determinant(swap));
}

TEST_CASE("Sturm counts") {
  CHECK(sturm_count(UPoly({-2, 0, 1}), Rational(0), Rational(2)) == 1);
  CHECK(sturm_count(UPoly({15, 12, 8}), std::nullopt, std::nullopt) == 0);
  CHECK(sturm_count(UPoly({0, 1, 0, 1}), std::nullopt, std::nullopt) == 1);
  CHECK(sturm_count(UPoly({1, -2, 1}), std::nullopt, std::nullopt) == 1);  // double root counted once
  CHECK(sturm_count(UPoly({-1, 0, 1}), Rational(-1), Rational(1)) == 0);   // open interval
  CHECK_THROWS_AS(sturm_count(UPoly(), std::nullopt, std::nullopt), std::invalid_argument);

  std::uniform_int_distribution<int> shift(-20, 20);
  for (int k = 0; k < 100; ++k) {
    const std::set<int> roots = oracle::random_roots(rng);
    const UPoly p = oracle::from_roots(roots);
    const Rational lo(shift(rng) * 2 + 1, 2), hi = lo + 10;
    CHECK(sturm_count(p, lo, hi) == oracle::roots_inside(roots, lo, hi));
    CHECK(sturm_count(p, std::nullopt, std::nullopt) == static_cast<int>(roots.size()));
  }
}

TEST_CASE("the full identity suite passes exactly") {
  for (const std::string& name : symbolic_check_names()) {
    CAPTURE(name);
    const SymbolicOutcome o = run_symbolic(name);
    CHECK(o.pass);
    CHECK(o.max_abs_coefficient == 0.0);
  }
  CHECK_THROWS_AS(run_symbolic("nonexistent"), std::invalid_argument);
}

TEST_CASE("cofactors of the elimination are frozen") {
  const SymbolicOutcome e = check_f_emergence();
  REQUIRE(e.find("c"));
  CHECK(*e.find("c") == "2");
  CHECK(*e.find("k") == "0");

  const SymbolicOutcome f2 = check_f2();
  CHECK(*f2.find("c") == "1");
  CHECK(*f2.find("beta_power") == "1");
  CHECK(*f2.find("k") == "-1");

  const SymbolicOutcome r = check_resultant();
  CHECK(*r.find("sign") == "+");
  CHECK(sylvester_resultant(parse_display_poly("f"), parse_display_poly("g19"), Var::gamma) ==
        parse_display_poly("resultant"));

  const SymbolicOutcome m1 = check_mu1();
  CHECK(*m1.find("disc_q1") == "ok: -176");
  CHECK(*m1.find("disc_q2") == "ok: -336");
}

TEST_CASE("f at mu = 0 and its real roots") {
  CHECK(parse_display_poly("f").evaluate(Var::mu, 0) == parse_display_poly("mu0_f"));
  for (const Rational& beta : {Rational(0), Rational(3, 7), Rational(-5)}) {
    const UPoly f0 = UPoly::from_mpoly(parse_display_poly("mu0_f").evaluate(Var::beta, beta), Var::gamma);
    CHECK(sturm_count(f0, std::nullopt, std::nullopt) == 1);
  }
}

TEST_CASE("mutations are detected") {
  KappaInputs bad = KappaInputs::transcribed();
  bad.kappa1 = -bad.kappa1;
  CHECK_FALSE(check_kappa(bad).pass);
  CHECK(check_kappa(bad).max_abs_coefficient > 0);

  // change one coefficient of g19
  const MPoly g19 = parse_display_poly("g19");
  const MPoly mutated = g19 + MPoly::monomial(Exponents{0, 6, 1, 0, 0}, 1);
  const SymbolicOutcome f2 = check_f2(mutated);
  CHECK_FALSE(f2.pass);
  REQUIRE(f2.find("difference_terms"));
  CHECK(*f2.find("difference_terms") == "1");
  CHECK_FALSE(check_resultant(mutated).pass);
}

TEST_CASE("the cleared Gauss relation vanishes when mu = gamma") {
  const RationalExpr e3b = parse_display("e3_beta"), e3g = parse_display("e3_gamma");
  const RationalExpr g1 = RationalExpr(parse_display_poly("g1_coeff_e3_beta")) * e3b +
                          RationalExpr(parse_display_poly("g1_coeff_e3_gamma")) * e3g +
                          RationalExpr(parse_display_poly("g1_rest"));
  CHECK(g1.num().substitute(Var::mu, g).is_zero());
}
