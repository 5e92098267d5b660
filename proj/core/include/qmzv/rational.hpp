#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qmzv {

/// Exact rational number; always stored canonically (positive denominator, reduced).
using Rational = mpq_class;
/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Raised when an operation's precondition does not hold (bad index, bad parameter, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws DomainError on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical decimal form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n, and for n < 0.
Integer binomial(long n, long k);

/// (-1)^e
inline int sign_power(long e) { return (e % 2 == 0) ? 1 : -1; }

/// value^e; a negative e needs value != 0.
Rational power(const Rational& value, long e);

}  // namespace qmzv
