#include "qmzv/series.hpp"

#include <sstream>

namespace qmzv {

QSeries::QSeries(int order) {
  if (order < 0) throw DomainError("series order must be non-negative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

QSeries QSeries::constant(const Rational& c, int order) {
  QSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

QSeries QSeries::monomial(int exponent, const Rational& c, int order) {
  QSeries s(order);
  if (exponent < 0) throw DomainError("negative exponent in monomial");
  if (exponent <= order) s.coeffs_[static_cast<std::size_t>(exponent)] = c;
  return s;
}

QSeries QSeries::from_coeffs(std::vector<Rational> coeffs) {
  if (coeffs.empty()) throw DomainError("a series needs at least one coefficient");
  QSeries s(0);
  s.coeffs_ = std::move(coeffs);
  for (auto& c : s.coeffs_) c.canonicalize();
  return s;
}

bool QSeries::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

int QSeries::valuation() const {
  for (int m = 0; m <= order(); ++m) {
    if (sgn(coeffs_[static_cast<std::size_t>(m)]) != 0) return m;
  }
  return order() + 1;
}

QSeries QSeries::truncated(int new_order) const {
  if (new_order > order()) throw DomainError("cannot extend a truncated series");
  QSeries s(new_order);
  std::copy_n(coeffs_.begin(), new_order + 1, s.coeffs_.begin());
  return s;
}

QSeries QSeries::shifted(int s) const {
  if (s < 0) throw DomainError("negative shift");
  QSeries out(order());
  for (int m = 0; m + s <= order(); ++m) out[m + s] = (*this)[m];
  return out;
}

QSeries QSeries::pow(unsigned e) const {
  QSeries out = constant(1, order());
  QSeries base = *this;
  while (e > 0) {
    if (e & 1U) out *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return out;
}

void QSeries::require_same_order(const QSeries& rhs, const char* op) const {
  if (order() != rhs.order()) {
    std::ostringstream msg;
    msg << "series order mismatch in " << op << ": " << order() << " vs " << rhs.order();
    throw DomainError(msg.str());
  }
}

QSeries& QSeries::operator+=(const QSeries& rhs) {
  require_same_order(rhs, "+");
  for (std::size_t m = 0; m < coeffs_.size(); ++m) coeffs_[m] += rhs.coeffs_[m];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs) {
  require_same_order(rhs, "-");
  for (std::size_t m = 0; m < coeffs_.size(); ++m) coeffs_[m] -= rhs.coeffs_[m];
  return *this;
}

QSeries& QSeries::operator*=(const QSeries& rhs) {
  *this = *this * rhs;
  return *this;
}

QSeries& QSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  a.require_same_order(b, "*");
  const int d = a.order();
  QSeries out(d);
  Rational tmp;
  // Most kernels are sparse (supported on multiples of n), so skip zero rows.
  for (int i = 0; i <= d; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; i + j <= d; ++j) {
      if (sgn(b[j]) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
      out[i + j] += tmp;
    }
  }
  return out;
}

QSeries operator-(QSeries a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

QSeries inv_one_minus_qn(int n, int k, int order) {
  if (n <= 0) throw DomainError("1/(1-q^n)^k needs n >= 1");
  if (k < 0) throw DomainError("1/(1-q^n)^k needs k >= 0");
  QSeries s(order);
  if (k == 0) {
    s[0] = 1;
    return s;
  }
  // Negative binomial: coefficient of q^{nt} is C(t+k-1, k-1).
  for (int t = 0; static_cast<long>(n) * t <= order; ++t) {
    s[n * t] = Rational(binomial(t + k - 1, k - 1));
  }
  return s;
}

QSeries q_fraction(int shift, int n, int k, int order) {
  if (shift < 0) throw DomainError("negative q-shift");
  if (shift > order) return QSeries(order);
  return inv_one_minus_qn(n, k, order).shifted(shift);
}

QSeries bracket(int n, int order) {
  if (n < 0) throw DomainError("bracket [n] needs n >= 0");
  QSeries s = QSeries::constant(1, order);
  if (n <= order) s[n] -= 1;
  return s;
}

QSeries invert_unit(const QSeries& a) {
  if (sgn(a[0]) == 0) throw DomainError("series with zero constant term is not invertible");
  const int d = a.order();
  QSeries b(d);
  const Rational inv0 = 1 / a[0];
  b[0] = inv0;
  for (int m = 1; m <= d; ++m) {
    Rational acc = 0;
    for (int j = 1; j <= m; ++j) {
      if (sgn(a[j]) != 0) acc += a[j] * b[m - j];
    }
    b[m] = -acc * inv0;
  }
  return b;
}

namespace {

std::string coefficient_prefix(const Rational& c, bool bare_one) {
  const Rational mag = abs(c);
  if (mag == 1) return bare_one ? "1" : "";
  if (mag.get_den() == 1) return mag.get_str();
  return "(" + mag.get_str() + ")";
}

}  // namespace

std::string to_text(const QSeries& s) {
  std::ostringstream out;
  bool first = true;
  for (int m = 0; m <= s.order(); ++m) {
    const Rational& c = s[m];
    if (sgn(c) == 0) continue;
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    out << coefficient_prefix(c, m == 0);
    if (m == 1) out << 'q';
    if (m > 1) out << "q^" << m;
  }
  return first ? "0" : out.str();
}

nlohmann::ordered_json to_json(const QSeries& s) {
  nlohmann::ordered_json j;
  j["order"] = s.order();
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_string(c));
  j["coeffs"] = std::move(coeffs);
  return j;
}

QSeries series_from_json(const nlohmann::json& j) {
  const int order = j.at("order").get<int>();
  const auto& arr = j.at("coeffs");
  if (!arr.is_array() || static_cast<int>(arr.size()) != order + 1) {
    throw DomainError("series JSON: coeffs length must equal order+1");
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(arr.size());
  for (const auto& c : arr) coeffs.push_back(parse_rational(c.get<std::string>()));
  return QSeries::from_coeffs(std::move(coeffs));
}

}  // namespace qmzv
