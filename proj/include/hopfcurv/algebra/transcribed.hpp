#pragma once

#include <string_view>
#include <vector>

#include "hopfcurv/algebra/parse.hpp"

namespace hopfcurv::algebra {

/// One displayed formula of the elimination, kept as text so that it can be
/// audited against the source by eye. The parser turns it into a polynomial
/// or rational expression on demand.
struct Display {
  std::string_view name;
  std::string_view text;
  std::string_view role;
  /// Nonstandard symbols that appear verbatim in the text (see aliases()).
  std::string_view aliases_used;
};

/// The full transcription, in derivation order.
const std::vector<Display>& displays();

/// Lookup by name; throws std::out_of_range.
const Display& display(std::string_view name);

/// "b" is read as beta and "k3" as kappa3; both occur verbatim in the source.
const Aliases& aliases();

RationalExpr parse_display(std::string_view name);
MPoly parse_display_poly(std::string_view name);

/// D = (mu - gamma)^2 + beta^2, the denominator of the kappa closed forms.
MPoly kappa_denominator();

}  // namespace hopfcurv::algebra
