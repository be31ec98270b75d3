#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hopfcurv/algebra/rational_expr.hpp"

namespace hopfcurv::algebra {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Extra spellings accepted for variables, e.g. {"b", Var::beta}.
using Aliases = std::map<std::string, Var, std::less<>>;

/// Parses +, -, *, /, ^ (nonnegative integer exponents), parentheses or braces,
/// integer literals and the variable names beta, gamma, mu, kappa1, kappa3.
RationalExpr parse_expr(std::string_view text, const Aliases& aliases = {});

/// Like parse_expr but requires a polynomial result.
MPoly parse_poly(std::string_view text, const Aliases& aliases = {});

}  // namespace hopfcurv::algebra
