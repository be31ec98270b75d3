#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hopfcurv/algebra/rational_expr.hpp"

namespace hopfcurv::algebra {

/// Result of one exact identity check. `pass` means every residual is the
/// zero polynomial (or the stated exact relation holds), never "small".
struct SymbolicOutcome {
  std::string name;
  bool pass = false;
  std::vector<std::pair<std::string, std::string>> details;
  /// Largest absolute coefficient among failing residuals, 0 on pass.
  double max_abs_coefficient = 0.0;

  void add(std::string key, std::string value) { details.emplace_back(std::move(key), std::move(value)); }
  const std::string* find(std::string_view key) const;
};

/// value = c * beta^j * D^k * target with D = (mu-gamma)^2 + beta^2.
struct Cofactor {
  bool found = false;
  Rational c;
  int beta_power = 0;
  int d_power = 0;
};

/// Writes `value / target` as c * beta^j * D^k if it has that form.
Cofactor match_cofactor(const RationalExpr& value, const MPoly& target);

struct KappaInputs {
  RationalExpr kappa1;
  RationalExpr kappa3;
  static KappaInputs transcribed();
};

/// The kappa closed forms solve both linear Codazzi relations exactly.
SymbolicOutcome check_kappa(const KappaInputs& in = KappaInputs::transcribed());

/// Substituting the reduced e3(beta), e3(gamma) into the cleared Gauss
/// relation leaves (mu - gamma) f. Also confirms that the reduced forms and the
/// cleared relation follow from the upstream Codazzi/Gauss displays.
SymbolicOutcome check_f_emergence();

/// The e3-derivative of f, via the chain rule and the reduced e3 forms, is
/// proportional to the transcribed degree-6 polynomial. On mismatch the
/// term-by-term difference is reported.
SymbolicOutcome check_f2(const MPoly& g19);
SymbolicOutcome check_f2();

/// Res_gamma(f, g19) against the displayed factored resultant, up to sign.
SymbolicOutcome check_resultant(const MPoly& g19);
SymbolicOutcome check_resultant();

/// mu = 1 endgame: factorizations, the point (0, 1), and positivity certificates.
SymbolicOutcome check_mu1();

/// mu = 0 endgame: f = gamma (beta^2 + gamma^2 + 1).
SymbolicOutcome check_mu0();

/// Names accepted by run_symbolic, in suite order.
const std::vector<std::string>& symbolic_check_names();

/// Runs one named check; throws std::invalid_argument for an unknown name.
SymbolicOutcome run_symbolic(const std::string& name);

}  // namespace hopfcurv::algebra
