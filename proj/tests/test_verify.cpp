#include <gtest/gtest.h>

#include "qmzv/constructor.hpp"
#include "qmzv/report.hpp"
#include "qmzv/verify.hpp"

using namespace qmzv;

TEST(Report, CompareSeriesWitness) {
  const QSeries a = QSeries::from_coeffs({1, 2, 3});
  const QSeries b = QSeries::from_coeffs({1, 2, Rational(7, 2)});
  const Report r = compare_series("demo", nlohmann::ordered_json::object(), a, b);
  ASSERT_FALSE(r.pass);
  EXPECT_EQ(r.witness->exponent, 2);
  EXPECT_EQ(r.witness->lhs, "3");
  EXPECT_EQ(r.witness->rhs, "7/2");
  EXPECT_TRUE(compare_series("demo", {}, a, a).pass);
}

TEST(Report, JsonShape) {
  EXPECT_EQ(reports_to_json({}).dump(), "[]");
  const Report pass = make_pass("x", nlohmann::ordered_json{{"N", 3}});
  const auto j = reports_to_json({pass});
  ASSERT_EQ(j.size(), 1U);
  EXPECT_EQ(j[0]["status"], "pass");
  const Report fail = make_fail("y", {}, Witness{4, {}, "1", "-1"});
  const auto jf = to_json(fail);
  EXPECT_EQ(jf["status"], "fail");
  EXPECT_EQ(jf["witness"]["exponent"], 4);
  EXPECT_EQ(report_from_json(nlohmann::json::parse(jf.dump())), fail);
  EXPECT_EQ(report_from_json(nlohmann::json::parse(to_json(pass).dump())), pass);
}

TEST(Report, CombineKeepsFirstFailure) {
  const Report r = combine("all", {}, {make_pass("a", {}), make_fail("b", {}, Witness{1, {}, "2", "3"}),
                                       make_fail("c", {}, Witness{0, {}, "5", "6"})});
  ASSERT_FALSE(r.pass);
  EXPECT_EQ(r.witness->exponent, 1);
}

TEST(Rank, ExactOverRationals) {
  EXPECT_EQ(exact_rank({{1, 2}, {2, 4}}), 1);
  EXPECT_EQ(exact_rank({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}), 2);
  EXPECT_EQ(exact_rank({{0, 0}, {0, 0}}), 0);
  EXPECT_EQ(exact_rank({}), 0);
  EXPECT_EQ(exact_rank({{2, 0, 0}, {0, 0, 3}, {1, 1, 1}}), 3);
}

TEST(Rank, BasisWordCounts) {
  EXPECT_EQ(h1_basis_words(0).size(), 1U);
  EXPECT_EQ(h1_basis_words(4).size(), 16U);
}

TEST(Independence, SmallWeightFullRank) {
  const Report r = independence_check(ZModel::DaggerFinite, 3, {1, 2, 3, 4, 5}, 15);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.details["rank"], 8);
}

TEST(Verify, MainFiniteAndFaults) {
  const PairIndex c({2, 1, 1, 2});
  EXPECT_TRUE(verify_main_finite(0, c, 5, 15).pass);
  EXPECT_TRUE(verify_main_finite(1, c, 5, 15).pass);
  EXPECT_TRUE(verify_main_finite_bz(c, 4, 12, {Rational(2), Rational(1, 2)}).pass);
  EXPECT_TRUE(verify_main_infinite(c, 12).pass);
  const Report bad = verify_main_finite(0, c, 5, 15, SignFault::term1_sign);
  ASSERT_FALSE(bad.pass);
  EXPECT_GE(bad.witness->exponent, 0);
}

TEST(Verify, Remarks) {
  EXPECT_TRUE(verify_remarks(RemarkKind::dual_flat, {2, 1}, {1, 2}, 5, 12).pass);
  EXPECT_TRUE(verify_remarks(RemarkKind::dual_diamond, {1, 2}, {2, 1}, 5, 12).pass);
  EXPECT_TRUE(verify_remarks(RemarkKind::qmsw, {}, {2, 1}, 5, 12).pass);
  EXPECT_THROW(parse_remark_kind("dual"), DomainError);
}

TEST(Verify, ClassicalAndLimits) {
  EXPECT_TRUE(verify_classical(PairIndex({1, 2}), 6).pass);
  EXPECT_TRUE(check_classical_limit(FiniteModel::Dagger, BarIndex({0, 2}), 4, Rational(1, 3)).pass);
  EXPECT_TRUE(check_classical_limit(FiniteModel::DiamondBZ, BarIndex({1, 2}), 4, Rational(2)).pass);
}

TEST(Verify, StructuralChecks) {
  const PairIndex c({1, 2, 2, 1});
  EXPECT_TRUE(check_membership(c).pass);
  EXPECT_TRUE(check_symmetry(c).pass);
  EXPECT_TRUE(check_theta_involution(c).pass);
  EXPECT_TRUE(check_stabilization(StabilizedModel::Dagger, BarIndex({0, 2}), 6, 10).pass);
  EXPECT_TRUE(check_stabilization(StabilizedModel::DiamondBZ, BarIndex({1, 2}), 6, 10).pass);
  EXPECT_TRUE(check_diamond_collapse({2, 3}, 5, 10).pass);
  EXPECT_TRUE(check_forward_difference(Word("yxy"), 2, 5, 10).pass);
  EXPECT_TRUE(check_integrality(ZModel::BZFinite, Word("yxx"), 5, 10).pass);
  for (int m = 1; m <= 3; ++m) {
    EXPECT_TRUE(check_telescoping(3, m, 12).pass);
    EXPECT_TRUE(check_binomial_expansion(1, 3, m, 12).pass);
  }
}

TEST(Suite, ConfigParsing) {
  const SuiteConfig cfg = parse_suite_config("# comment\nmax_weight = 3\norder=9\nq_samples = 2, -1/3\n");
  EXPECT_EQ(cfg.max_weight, 3);
  EXPECT_EQ(cfg.order, 9);
  EXPECT_EQ(cfg.max_N, SuiteConfig{}.max_N);
  EXPECT_EQ(cfg.rational_q_samples, (std::vector<Rational>{Rational(2), Rational(-1, 3)}));
  EXPECT_THROW(parse_suite_config("bogus = 1"), DomainError);
  EXPECT_THROW(parse_suite_config("order = x"), DomainError);
  EXPECT_THROW(parse_suite_config("q_samples = 1"), DomainError);
}

TEST(Suite, FilterAndDeterminism) {
  SuiteConfig cfg;
  cfg.max_weight = 3;
  cfg.max_N = 4;
  cfg.order = 8;
  cfg.parallelism = 4;
  const SuiteResult a = run_suite(cfg, "main_finite");
  ASSERT_GT(a.reports.size(), 0U);
  EXPECT_TRUE(a.all_pass());
  for (const auto& r : a.reports) EXPECT_EQ(r.identity, "main_finite");
  cfg.parallelism = 1;
  const SuiteResult b = run_suite(cfg, "main_finite");
  EXPECT_EQ(reports_to_json(a.reports), reports_to_json(b.reports));
  EXPECT_THROW(run_suite(cfg, "nope"), DomainError);
}

TEST(Suite, IdentityListCoversSubcommands) {
  const auto ids = suite_identities();
  for (const char* name : {"main_finite", "recurrence", "transform", "qmsw", "independence", "bridge"})
    EXPECT_NE(std::find(ids.begin(), ids.end(), name), ids.end()) << name;
}
