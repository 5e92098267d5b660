#include "qmzv/rational.hpp"

#include <cctype>

namespace qmzv {
namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw DomainError("malformed rational '" + std::string(text) + "'");
  }
  Integer n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  Integer d(std::string(den.front() == '+' ? den.substr(1) : den), 10);
  if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_string(const Integer& value) { return value.get_str(10); }

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Rational power(const Rational& value, long e) {
  if (e < 0) {
    if (value == 0) throw DomainError("zero to a negative power");
    return power(1 / value, -e);
  }
  Rational out(1);
  Rational base(value);
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

}  // namespace qmzv
