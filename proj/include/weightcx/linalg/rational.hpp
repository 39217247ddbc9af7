#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace weightcx::linalg {

/// Exact rational number. GMP keeps every result of arithmetic in lowest
/// terms with a positive denominator, so zero is always 0/1.
using Rat = mpq_class;

/// Parses "p" or "p/q" (optional leading '-'). Throws std::invalid_argument
/// on malformed text or a zero denominator.
Rat parse_rat(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rat& value);

} // namespace weightcx::linalg
