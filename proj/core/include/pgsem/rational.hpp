#pragma once

// Exact scalars. Every model value in pgsem is an mpq_class; nothing is
// evaluated in floating point.

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pgsem {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses "5/8", "-3", "0.125" or "1.5e-2" into an exact rational.
/// Decimals are converted exactly (0.1 is 1/10, not the nearest double).
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form ("3" when the denominator is 1).
std::string to_string(const Rational& q);

/// Rounded decimal rendering, for display only.
std::string to_decimal(const Rational& q, int digits = 6);

std::string to_string(std::span<const Rational> v);

inline bool in_unit_interval(const Rational& q) { return q >= 0 && q <= 1; }

bool all_in_unit_interval(std::span<const Rational> v);

inline bool is_zero_or_one(const Rational& q) { return q == 0 || q == 1; }

}  // namespace pgsem
