#pragma once

#include <json.hpp>

#include <span>
#include <string>
#include <vector>

#include "qmzv/rational.hpp"

namespace qmzv {

/// Truncated power series c_0 + c_1 q + ... + c_D q^D with exact rational coefficients.
///
/// The truncation order D is part of the value. Binary operations require equal orders and
/// throw DomainError otherwise; use truncated() to compare series of different precision.
class QSeries {
 public:
  explicit QSeries(int order);

  static QSeries constant(const Rational& c, int order);
  /// c * q^exponent (zero if exponent > order).
  static QSeries monomial(int exponent, const Rational& c, int order);
  /// Series from explicit coefficients; order is coeffs.size() - 1.
  static QSeries from_coeffs(std::vector<Rational> coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int m) const { return coeffs_[static_cast<std::size_t>(m)]; }
  Rational& operator[](int m) { return coeffs_[static_cast<std::size_t>(m)]; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// Smallest exponent with a nonzero coefficient, or order()+1 for the zero series.
  int valuation() const;

  QSeries truncated(int order) const;
  /// Multiplies by q^s (s >= 0), dropping what falls past the order.
  QSeries shifted(int s) const;
  QSeries pow(unsigned e) const;

  QSeries& operator+=(const QSeries& rhs);
  QSeries& operator-=(const QSeries& rhs);
  QSeries& operator*=(const QSeries& rhs);
  QSeries& operator*=(const Rational& c);

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
  friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }
  friend QSeries operator-(QSeries a);

  friend bool operator==(const QSeries& a, const QSeries& b) = default;

 private:
  void require_same_order(const QSeries& rhs, const char* op) const;

  std::vector<Rational> coeffs_;
};

/// 1 / (1 - q^n)^k truncated at `order`; n >= 1, k >= 0.
QSeries inv_one_minus_qn(int n, int k, int order);

/// q^shift / (1 - q^n)^k truncated at `order`.
QSeries q_fraction(int shift, int n, int k, int order);

/// 1 - q^n, the q-integer bracket used throughout the recurrences. n >= 0.
QSeries bracket(int n, int order);

/// Multiplicative inverse of a series with nonzero constant term.
QSeries invert_unit(const QSeries& a);

/// Human-readable form such as "q + 2q^2 - (1/2)q^3"; "0" for the zero series.
std::string to_text(const QSeries& s);

/// {"order": D, "coeffs": ["p/q", ...]}
nlohmann::ordered_json to_json(const QSeries& s);
QSeries series_from_json(const nlohmann::json& j);

}  // namespace qmzv
