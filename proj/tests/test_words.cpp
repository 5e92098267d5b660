#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qmzv/words.hpp"

using namespace qmzv;

TEST(Word, IndexRoundTrip) {
  const Index k{3, 1, 2};
  const Word w = word_from_index(k);
  EXPECT_EQ(w.letters(), "yxxyyx");
  EXPECT_EQ(index_from_word(w), k);
  EXPECT_EQ(index_from_word(Word{}), Index{});
  EXPECT_THROW(index_from_word(Word("xy")), DomainError);
  EXPECT_THROW(Word("xz"), DomainError);
}

TEST(Word, TextRendering) {
  EXPECT_EQ(to_text(Word("yxxy")), "y x^2 y");
  EXPECT_EQ(to_text(Word{}), "1");
  EXPECT_EQ(to_text(Word::x(3) * Word::y()), "x^3 y");
}

TEST(BarIndex, PairsRoundTrip) {
  const BarIndex b({0, 0, 3, 2, 0, 1});
  ASSERT_TRUE(b.admissible());
  const PairIndex c = bar_to_pairs(b);
  EXPECT_EQ(c.flat(), (std::vector<int>{3, 3, 1, 2, 2, 1}));
  EXPECT_EQ(pairs_to_bar(c), b);
  EXPECT_EQ(to_text(b), "b,b,3,2,b,1");
  EXPECT_FALSE(BarIndex({2, 0}).admissible());
  EXPECT_THROW(bar_to_pairs(BarIndex({2, 0})), DomainError);
}

TEST(PairIndex, Validation) {
  EXPECT_THROW(PairIndex({1, 2, 3}), DomainError);
  EXPECT_THROW(PairIndex({1, 0}), DomainError);
  EXPECT_EQ(PairIndex::from_lk({2, 1}, {3, 4}).flat(), (std::vector<int>{2, 3, 1, 4}));
}

TEST(PairIndex, DiamondIndexAndWeight) {
  const PairIndex c({2, 1, 1, 3});
  EXPECT_EQ(pairs_to_diamond_index(c), (Index{1, 2, 4}));
  EXPECT_EQ(weight(c), 2 + 3);
  EXPECT_EQ(weight(pairs_to_bar(c)), 5);
  EXPECT_EQ(weight(Word("yxxy")), 4);
}

TEST(Algebra, ArithmeticCancels) {
  AlgebraElement u(Word("yx"), 2);
  u.add_term(Word("y"), -1);
  AlgebraElement v(Word("yx"), -2);
  EXPECT_EQ((u + v), AlgebraElement(Word("y"), -1));
  EXPECT_TRUE((u - u).is_zero());
  EXPECT_EQ(u.coeff(Word("yx")), 2);
  EXPECT_EQ(u.coeff(Word("x")), 0);
}

TEST(Algebra, ConcatenationProduct) {
  const AlgebraElement a = AlgebraElement(Word("y")) + AlgebraElement(Word("x"), -1);
  const AlgebraElement b = AlgebraElement(Word("x"), 3);
  AlgebraElement expected(Word("yx"), 3);
  expected.add_term(Word("xx"), -3);
  EXPECT_EQ(a * b, expected);
  EXPECT_EQ(times_x(AlgebraElement(Word("y")), 2), AlgebraElement(Word("yxx")));
  EXPECT_EQ(times_yx(AlgebraElement::one(), 1), AlgebraElement(Word("yx")));
}

TEST(Algebra, ThetaSignsByLength) {
  AlgebraElement u(Word("yx"), 1);
  u.add_term(Word("y"), 4);
  AlgebraElement expected(Word("yx"), 1);
  expected.add_term(Word("y"), -4);
  EXPECT_EQ(theta(u), expected);
  EXPECT_EQ(theta(theta(u)), u);
}

TEST(Algebra, Subspaces) {
  EXPECT_TRUE(in_subspace(Word{}, Subspace::H1));
  EXPECT_TRUE(in_subspace(Word("yxy"), Subspace::H1));
  EXPECT_FALSE(in_subspace(Word("xy"), Subspace::H1));
  EXPECT_TRUE(in_subspace(Word("yxyx"), Subspace::H0));
  EXPECT_FALSE(in_subspace(Word("yxy"), Subspace::H0));
  EXPECT_TRUE(in_subspace(Word("yxxyx"), Subspace::Hgeq2));
  EXPECT_FALSE(in_subspace(Word("yyx"), Subspace::Hgeq2));
  EXPECT_TRUE(in_subspace(Word{}, Subspace::Hgeq2));
}

TEST(Algebra, GradedPartsAndText) {
  AlgebraElement u(Word("yxx"), -3);
  u.add_term(Word("yy"), 1);
  u.add_term(Word{}, 2);
  EXPECT_EQ(top_degree(u), 3);
  EXPECT_EQ(graded_part(u, 2), AlgebraElement(Word("yy")));
  EXPECT_EQ(top_degree(AlgebraElement{}), -1);
  EXPECT_EQ(to_text(AlgebraElement{}), "0");
  EXPECT_EQ(to_text(AlgebraElement(Word("yxx"))), "y x^2");
}

TEST(Algebra, JsonRoundTrip) {
  AlgebraElement u(Word("yxx"), -3);
  u.add_term(Word("y"), 12);
  EXPECT_EQ(element_from_json(nlohmann::json::parse(to_json(u).dump())), u);
}
