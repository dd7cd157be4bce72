#ifndef SUPPBOUND_RATIONAL_HPP
#define SUPPBOUND_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace suppbound {

/// Arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;

/// Parses "n" or "n/d" (optional sign, no whitespace inside). Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "n" when the denominator is 1, otherwise "n/d".
std::string to_string(const Rational& r);

/// Always "n/d", including "0/1" and "3/1".
std::string to_fraction_string(const Rational& r);

/// Exact comparison of sqrt(a) + sqrt(b) against c for a, b, c >= 0.
/// Returns -1, 0 or 1.
int compare_sqrt_sum(const Rational& a, const Rational& b, const Rational& c);

}  // namespace suppbound

#endif  // SUPPBOUND_RATIONAL_HPP
