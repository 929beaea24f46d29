#pragma once

#include <string>

#include "occtail/rational.hpp"

namespace occtail {

/// Exact decimal rendering of a rational to `sig_digits` significant digits,
/// computed in integer arithmetic (no floating point anywhere on the path).
/// Rounds half away from zero. Positional notation while the exponent is in
/// [-4, sig_digits), scientific ("d.dd...e-07") outside. render_decimal(0) is "0".
std::string render_decimal(const ExactRational& value, int sig_digits = 15);

/// log10 of a positive rational via decimal digit counts plus a leading-digit
/// quotient, so values whose numerator or denominator overflow any float
/// still render. Accurate to ~1e-12 absolute; printed with 6 decimals.
/// Returns "-inf" for zero. Throws InputError for negative values.
std::string render_log10(const ExactRational& value);

} // namespace occtail
