#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace swing {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p", "p/q" with optional sign and surrounding blanks.
// Decimal points are rejected; exact parameters never round-trip through floats.
Rational parse_rational(std::string_view text);

// Canonical "p/q" text; integers print without the denominator.
std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

// Largest integer <= value.
Integer floor_of(const Rational& value);

// Non-negative integer square root when exact.
bool exact_sqrt(const Integer& n, Integer& root);
bool exact_sqrt(const Rational& value, Rational& root);

// Splits n = outer^2 * core with core square-free (sign kept in core). Throws NotRepresentable when the
// cofactor left after trial division is too large to certify square-freeness.
struct SquareFreeSplit {
  Integer outer;
  Integer core;
};
SquareFreeSplit square_free_split(const Integer& n);

}  // namespace swing
