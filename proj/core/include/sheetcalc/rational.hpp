#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace sheetcalc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical "p/q" text, always with an explicit denominator ("3/1", "-1/2").
std::string to_fraction_string(const Rational& q);

/// Shortest text: integers print without a denominator.
std::string to_short_string(const Rational& q);

/// Accepts "p", "p/q", with optional sign and surrounding blanks. Throws
/// std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Least common multiple of all denominators (1 for an empty range).
Integer common_denominator(const std::vector<Rational>& values);

}  // namespace sheetcalc
