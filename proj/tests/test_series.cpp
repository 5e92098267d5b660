#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qmzv/rational.hpp"
#include "qmzv/series.hpp"

using namespace qmzv;

TEST(Rational, ParseAndPrintCanonical) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-2")), "-2");
  EXPECT_EQ(to_string(parse_rational("0/7")), "0");
  EXPECT_EQ(to_string(parse_rational("-5/10")), "-1/2");
  EXPECT_THROW(power(Rational(0), -1), DomainError);
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("abc"), DomainError);
  EXPECT_THROW(parse_rational(""), DomainError);
}

TEST(Rational, BinomialAndPower) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(power(Rational(2, 3), 3), Rational(8, 27));
  EXPECT_EQ(power(Rational(2), -2), Rational(1, 4));
  EXPECT_EQ(sign_power(3), -1);
  EXPECT_EQ(sign_power(-2), 1);
}

TEST(QSeries, GeometricExpansionMatchesOracle) {
  for (int shift = 0; shift <= 3; ++shift)
    for (int n = 1; n <= 4; ++n)
      for (int k = 0; k <= 4; ++k)
        EXPECT_EQ(q_fraction(shift, n, k, 15), oracle::to_qseries(oracle::geom(shift, n, k, 15)))
            << shift << " " << n << " " << k;
}

TEST(QSeries, BracketTimesInverseIsOne) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(bracket(n, 12) * inv_one_minus_qn(n, 1, 12), QSeries::constant(1, 12));
    EXPECT_EQ(bracket(n, 12).pow(3) * inv_one_minus_qn(n, 3, 12), QSeries::constant(1, 12));
  }
}

TEST(QSeries, InvertUnit) {
  const QSeries a = QSeries::from_coeffs({Rational(2), Rational(-1), Rational(0), Rational(1, 3), Rational(5)});
  EXPECT_EQ(a * invert_unit(a), QSeries::constant(1, 4));
  EXPECT_THROW(invert_unit(QSeries::monomial(1, 1, 4)), DomainError);
}

TEST(QSeries, OrderMismatchThrows) {
  EXPECT_THROW(QSeries(3) + QSeries(4), DomainError);
  EXPECT_THROW(QSeries(3) * QSeries(4), DomainError);
}

TEST(QSeries, ShiftTruncateValuation) {
  const QSeries s = bracket(2, 6);
  EXPECT_EQ(s.shifted(5), QSeries::from_coeffs({0, 0, 0, 0, 0, 1, 0}));
  EXPECT_EQ(s.truncated(1), QSeries::from_coeffs({1, 0}));
  EXPECT_EQ(QSeries::monomial(3, 2, 6).valuation(), 3);
  EXPECT_EQ(QSeries(4).valuation(), 5);  // order + 1 for zero
  EXPECT_TRUE(QSeries(4).is_zero());
  EXPECT_TRUE(QSeries::monomial(9, 1, 4).is_zero());
}

TEST(QSeries, TextRendering) {
  EXPECT_EQ(to_text(q_fraction(1, 1, 2, 5)), "q + 2q^2 + 3q^3 + 4q^4 + 5q^5");
  EXPECT_EQ(to_text(QSeries(3)), "0");
  EXPECT_EQ(to_text(QSeries::from_coeffs({Rational(-1), Rational(1, 2), 0, Rational(-3)})), "-1 + (1/2)q - 3q^3");
}

TEST(QSeries, JsonRoundTrip) {
  const QSeries s = QSeries::from_coeffs({Rational(1, 2), Rational(-3), 0, 7});
  EXPECT_EQ(series_from_json(nlohmann::json::parse(to_json(s).dump())), s);
}

TEST(QSeries, DivisorSums) {
  // sum_n q^n/(1-q^n) = sum sigma_0(n) q^n; sum_n q^n/(1-q^n)^2 = sum sigma_1(n) q^n.
  const int D = 20;
  QSeries s0(D);
  QSeries s1(D);
  for (int n = 1; n <= D; ++n) {
    s0 += q_fraction(n, n, 1, D);
    s1 += q_fraction(n, n, 2, D);
  }
  for (int m = 1; m <= D; ++m) {
    EXPECT_EQ(s0[m], oracle::divisor_sigma(m, 0));
    EXPECT_EQ(s1[m], oracle::divisor_sigma(m, 1));
  }
}
