#pragma once

// Input language for curve parametrizations:
//
//   document   := generators ( ";" generators )*
//   generators := expr ( "," expr )*
//   expr       := [ "+" | "-" ] term ( ( "+" | "-" ) term )*
//   term       := [ coeff "*" ] "t" [ "^" uint ] | coeff
//   coeff      := int | int "/" nonzero-int
//
// Whitespace (including newlines) is insignificant.

#include <string_view>
#include <vector>

#include "qhcurve/series.hpp"

namespace qhcurve {

inline constexpr int kDefaultMaxPrecision = 4096;

/// One ring's generators; each is an exact polynomial known to O(t^precision).
/// Throws SyntaxError (kinds SyntaxError, ZeroGenerator, ConstantTermInGenerator,
/// ZeroDenominator) with the position of the offending token or expression.
std::vector<TruncatedSeries> parse_generators(std::string_view text, int precision = kDefaultMaxPrecision);

/// A ';'-separated batch of rings.
std::vector<std::vector<TruncatedSeries>> parse_document(std::string_view text, int precision = kDefaultMaxPrecision);

/// A single expression with no generator restrictions: constants and zero are allowed.
TruncatedSeries parse_polynomial(std::string_view text, int precision = kDefaultMaxPrecision);

}  // namespace qhcurve
