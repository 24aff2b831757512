#pragma once

// Exact rational scalars backed by GMP, plus the string conventions used in
// every report: "p/q" (or "p" for integers).

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ordercheck {

using Rational = mpq_class;

/// Parses "p/q", "p", or a finite decimal such as "-1.25". Throws InputError.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& value);

/// Exact conversion: every finite double is a dyadic rational.
Rational from_double(double value);

double to_double(const Rational& value);

inline Rational positive_part(const Rational& value) {
  return sgn(value) > 0 ? value : Rational(0);
}

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace ordercheck
