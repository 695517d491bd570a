#ifndef TAUTHEIGHT_RATIONAL_HPP
#define TAUTHEIGHT_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace tautheight {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when a fraction string does not have the form "p" or "p/q" with q > 0.
class FractionParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "p" or "p/q" (optional leading '-', decimal digits only) into a
/// canonical rational.
Rational parse_fraction(std::string_view text);

/// Lowest terms, "p/q" with q > 0, or "p" when q == 1.
std::string format_fraction(const Rational& value);

Rational make_rational(long numerator, long denominator = 1);

Integer factorial(unsigned n);

}  // namespace tautheight

#endif  // TAUTHEIGHT_RATIONAL_HPP
