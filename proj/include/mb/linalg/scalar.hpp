#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mb {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& value);
/// Integers print without a denominator, everything else as "p/q".
std::string to_string(const Rational& value);

inline bool is_integral(const Rational& value) { return value.get_den() == 1; }

}  // namespace mb
