#ifndef LITTLEWOOD_RATIONAL_HPP
#define LITTLEWOOD_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace littlewood {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision rational, kept in lowest terms by GMP after every
/// arithmetic operation. Values built from raw numerator/denominator pairs
/// must go through make_rational().
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "a", "a/b", or a plain decimal such as "-0.125" into an exact
/// rational. Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

/// Decimal rendering with the given number of significant digits.
std::string to_decimal(const Rational& x, int significant_digits = 12);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);

/// Rational power with a nonnegative exponent.
Rational pow(const Rational& base, unsigned long exponent);

}  // namespace littlewood

#endif
