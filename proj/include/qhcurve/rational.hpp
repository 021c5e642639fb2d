#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qhcurve {

using Rational = mpq_class;

/// "p" for integers, "p/q" otherwise (canonical form).
std::string to_string(const Rational& q);

/// Inverse of to_string; throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace qhcurve
