#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qmzv/constructor.hpp"
#include "qmzv/models.hpp"

using namespace qmzv;

namespace {

/// All raw entry vectors of length 1..max_len with entries in [lo, hi].
std::vector<std::vector<int>> raw_indices(int max_len, int lo, int hi) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void()> rec = [&] {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int v = lo; v <= hi; ++v) {
      cur.push_back(v);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

}  // namespace

TEST(Models, DaggerFiniteMatchesLattice) {
  for (const auto& raw : raw_indices(3, 0, 3)) {
    if (raw.back() == 0) continue;
    for (int M = 0; M <= 1; ++M)
      for (int N = M + 1; N <= 5; ++N)
        EXPECT_EQ(zeta_dagger_finite(BarIndex(raw), {M, N, 12}), oracle::to_qseries(oracle::dagger_finite(raw, M, N, 12)))
            << to_text(BarIndex(raw)) << " M=" << M << " N=" << N;
  }
}

TEST(Models, DaggerRejectsTrailingBar) {
  EXPECT_THROW(zeta_dagger_finite(BarIndex({2, 0}), {0, 3, 5}), DomainError);
  EXPECT_THROW(zeta_dagger_infinite(BarIndex({0}), 5), DomainError);
}

TEST(Models, SpecExampleBarOne) {
  // q/(1-q)^2 at N = 2: only n = 1 contributes.
  EXPECT_EQ(to_text(zeta_dagger_finite(BarIndex({0, 1}), {0, 2, 5})), "q + 2q^2 + 3q^3 + 4q^4 + 5q^5");
}

TEST(Models, BZFiniteMatchesLattice) {
  for (const auto& k : raw_indices(3, 1, 3))
    for (int N = 1; N <= 5; ++N)
      EXPECT_EQ(zeta_bz_finite(k, {0, N, 12}), oracle::to_qseries(oracle::bz_finite(k, 0, N, 12)));
}

TEST(Models, DiamondFiniteMatchesLattice) {
  for (const auto& k : raw_indices(3, 1, 3)) {
    if (k.back() == 1) continue;
    for (int N = 1; N <= 5; ++N) {
      EXPECT_EQ(zeta_diamond_finite(DiamondVariant::BZ, k, {0, N, 12}),
                oracle::to_qseries(oracle::diamond_finite(true, k, 0, N, 12)));
      EXPECT_EQ(zeta_diamond_finite(DiamondVariant::Dagger, k, {1, N + 1, 12}),
                oracle::to_qseries(oracle::diamond_finite(false, k, 1, N + 1, 12)));
    }
  }
  EXPECT_THROW(zeta_diamond_finite(DiamondVariant::BZ, {2, 1}, {0, 3, 5}), DomainError);
}

TEST(Models, XiDispatch) {
  const PairIndex c({2, 1, 1, 2});
  const FiniteEvalParams p{0, 5, 10};
  EXPECT_EQ(xi(0, c, p), oracle::to_qseries(oracle::dagger_finite({0, 1, 2}, 0, 5, 10)));
  EXPECT_EQ(xi(1, c, p), oracle::to_qseries(oracle::diamond_finite(false, {1, 2, 3}, 0, 5, 10)));
}

TEST(Models, InfiniteMatchLattice) {
  const int D = 12;
  for (const auto& raw : raw_indices(3, 0, 3)) {
    if (raw.back() == 0) continue;
    EXPECT_EQ(zeta_dagger_infinite(BarIndex(raw), D), oracle::to_qseries(oracle::dagger_infinite(raw, D)));
  }
  for (const auto& k : raw_indices(3, 1, 3)) {
    if (k.back() < 2) continue;
    EXPECT_EQ(zeta_bz_infinite(k, D), oracle::to_qseries(oracle::bz_infinite(k, D)));
  }
  for (const auto& k : raw_indices(3, 0, 3)) {
    if (k.back() == 0) continue;
    EXPECT_EQ(zeta_sz_infinite(k, D), oracle::to_qseries(oracle::sz_infinite(k, D)));
  }
  EXPECT_THROW(zeta_bz_infinite({2, 1}, D), DomainError);
  EXPECT_THROW(zeta_sz_infinite({1, 0}, D), DomainError);
}

TEST(Models, DepthOneDivisorSums) {
  const int D = 18;
  const QSeries d1 = zeta_dagger_infinite(BarIndex({1}), D);
  const QSeries b2 = zeta_bz_infinite({2}, D);
  for (int m = 1; m <= D; ++m) {
    EXPECT_EQ(d1[m], oracle::divisor_sigma(m, 0));
    EXPECT_EQ(b2[m], oracle::divisor_sigma(m, 1));
  }
}

TEST(Models, PolyModel) {
  // Q(t) = t gives the dagger model, Q(t) = t^2 with k = 3 the BZ model; Q(0) != 0 diverges.
  const int D = 10;
  EXPECT_EQ(zeta_q_poly({{2, 1}, {{0, 1}, {0, 1}}}, D), zeta_dagger_infinite(BarIndex({2, 1}), D));
  EXPECT_EQ(zeta_q_poly({{3}, {{0, 0, 1}}}, D), zeta_bz_infinite({3}, D));
  EXPECT_THROW(zeta_q_poly({{2}, {{1}}}, D), DomainError);
}

TEST(Models, ZMapLinear) {
  AlgebraElement u(Word("yx"), 2);
  u.add_term(Word("yy"), -1);
  const FiniteEvalParams p{0, 4, 9};
  const QSeries expected = Rational(2) * oracle::to_qseries(oracle::dagger_finite({2}, 0, 4, 9)) -
                           oracle::to_qseries(oracle::dagger_finite({1, 1}, 0, 4, 9));
  EXPECT_EQ(z_map(ZModel::DaggerFinite, u, p), expected);
  EXPECT_EQ(z_map(ZModel::DaggerFinite, AlgebraElement::one(), p), QSeries::constant(1, 9));
  EXPECT_THROW(z_map(ZModel::BZInfinite, u, p), DomainError);
}

TEST(Classical, HarmonicSums) {
  for (const auto& k : raw_indices(3, 1, 3))
    for (int N = 1; N <= 7; ++N) {
      EXPECT_EQ(classical_zeta(k, N), oracle::classical_zeta(k, N));
      if (k.back() != 1) {
        EXPECT_EQ(classical_diamond(k, N), oracle::classical_diamond(k, N));
      }
    }
  EXPECT_EQ(classical_diamond({1, 2}, 3), Rational(9, 8));
  EXPECT_EQ(classical_zeta({3}, 3), Rational(9, 8));
  EXPECT_EQ(classical_zeta({1}, 5), Rational(25, 12));
}

TEST(Classical, BinomSumDepthOne) {
  // l = 1 collapses to zeta_N(k).
  for (int k = 1; k <= 3; ++k)
    for (int N = 1; N <= 6; ++N) EXPECT_EQ(classical_binom(PairIndex({1, k}), N), oracle::classical_zeta({k}, N));
  // (l, k) = (2, 1): sum_{0<a<=b<N} 1/((N-a) b)
  for (int N = 1; N <= 6; ++N) {
    Rational acc = 0;
    for (int a = 1; a < N; ++a)
      for (int b = a; b < N; ++b) acc += Rational(1, (N - a) * b);
    EXPECT_EQ(classical_binom(PairIndex({2, 1}), N), acc);
  }
}

TEST(RationalPoint, MatchesLatticeAtRationalQ) {
  for (const auto& raw : raw_indices(2, 0, 3)) {
    if (raw.back() == 0) continue;
    for (const Rational& q : {Rational(2), Rational(1, 3), Rational(-3, 2)})
      for (int N = 1; N <= 5; ++N) EXPECT_EQ(eval_at_rational_q(FiniteModel::Dagger, BarIndex(raw), N, q), oracle::dagger_at(raw, N, q));
  }
  EXPECT_THROW(eval_at_rational_q(FiniteModel::Dagger, BarIndex({1}), 3, Rational(1)), DomainError);
  EXPECT_THROW(eval_at_rational_q(FiniteModel::BZ, BarIndex({0, 1}), 3, Rational(2)), DomainError);
}

TEST(RationalPoint, NormalizedAtOneIsClassical) {
  for (const auto& k : raw_indices(3, 1, 3))
    for (int N = 1; N <= 5; ++N)
      EXPECT_EQ(eval_normalized_at(FiniteModel::BZ, BarIndex::plain(k), N, Rational(1)), oracle::classical_zeta(k, N));
}

TEST(RationalPoint, BridgeOnSmallWords) {
  for (const char* w : {"y", "yx", "yy", "yxy", "yyx"})
    for (const Rational& q : {Rational(2), Rational(1, 2), Rational(-5, 3)})
      EXPECT_TRUE(verify_bridge(Word(w), 4, q).pass) << w;
}

TEST(Models, ParseModelName) {
  EXPECT_EQ(parse_model_name("diamond-bz"), ModelName::DiamondBZ);
  EXPECT_EQ(parse_model_name("classical"), ModelName::Classical);
  EXPECT_THROW(parse_model_name("zz"), DomainError);
}
