#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qmzv/report.hpp"
#include "qmzv/series.hpp"
#include "qmzv/words.hpp"
#include "qmzv_cli/dispatch.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "qmzv");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = qmzv::cli::dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, WordExample) {
  const Outcome r = run({"word", "--eps", "D", "--c", "2,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "y x^2\n");
}

TEST(Cli, WordJsonRoundTrips) {
  const Outcome r = run({"word", "--eps", "0", "--c", "1,2,2,1", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto u = qmzv::element_from_json(j["element"]);
  EXPECT_EQ(qmzv::to_text(u), j["text"]);
}

TEST(Cli, EvalExample) {
  const Outcome r = run({"eval", "--model", "dagger", "--index", "b,1", "--N", "2", "--order", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "q + 2q^2 + 3q^3 + 4q^4 + 5q^5\n");
}

TEST(Cli, EvalJsonSeries) {
  const Outcome r = run({"eval", "--model", "bz", "--index", "2", "--order", "6", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto s = qmzv::series_from_json(j["value"]);
  EXPECT_EQ(s[6], qmzv::Rational(12));  // sigma_1(6)
}

TEST(Cli, EvalRationalAndClassical) {
  EXPECT_EQ(run({"eval", "--model", "classical", "--kind", "diamond", "--index", "1,2", "--N", "3"}).out, "9/8\n");
  EXPECT_EQ(run({"eval", "--model", "dagger", "--index", "1", "--N", "3", "--q", "2"}).out, "-10/3\n");
  EXPECT_EQ(run({"eval", "--model", "sz", "--index", "0,1", "--order", "4"}).out, "q^2 + 2q^3 + 4q^4\n");
  EXPECT_EQ(run({"eval", "--model", "poly", "--index", "2", "--poly", "0,1", "--order", "3"}).out, "q + 3q^2 + 4q^3\n");
  EXPECT_EQ(run({"eval", "--model", "xi", "--c", "2,1", "--eps", "0", "--N", "2", "--order", "5"}).out,
            "q + 2q^2 + 3q^3 + 4q^4 + 5q^5\n");
}

TEST(Cli, Transform) {
  const Outcome r = run({"transform", "--direction", "sz-from-dagger", "--k", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "-1 dagger(1)\n1 dagger(2)\n");
  const Outcome j = run({"transform", "--direction", "dagger-from-sz", "--l", "2", "--k", "1", "--json"});
  ASSERT_EQ(j.code, 0);
  EXPECT_EQ(nlohmann::json::parse(j.out)["terms"].size(), 2U);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run({"verify", "--identity", "recurrence", "--eps", "1", "--M", "0", "--N", "3", "--r", "1", "--maxdeg", "1",
                 "--order", "8"})
                .code,
            0);
  EXPECT_EQ(run({"verify", "main_finite", "--c", "1,2", "--N", "4", "--order", "10"}).code, 0);
  const Outcome j = run({"verify", "classical", "--c", "1,1", "--N", "5", "--json"});
  ASSERT_EQ(j.code, 0);
  const auto arr = nlohmann::json::parse(j.out);
  ASSERT_EQ(arr.size(), 1U);
  EXPECT_EQ(arr[0]["status"], "pass");
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"eval", "--model", "dagger", "--bogus"}).code, 2);
  EXPECT_EQ(run({"eval", "--model", "dagger", "--index", "1,x", "--N", "2"}).code, 2);
  EXPECT_EQ(run({"word", "--eps", "Q", "--c", "1,1"}).code, 2);
  EXPECT_EQ(run({"verify", "--identity", "nope"}).code, 2);
  EXPECT_EQ(run({"eval", "--model", "dagger", "--index", "1", "--q", "1/0", "--N", "2"}).code, 2);
}

TEST(Cli, DomainErrorsExitOne) {
  const Outcome r = run({"eval", "--model", "dagger", "--index", "2,b", "--N", "3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("admissible"), std::string::npos);
  EXPECT_EQ(run({"eval", "--model", "bz", "--index", "1"}).code, 1);
  EXPECT_EQ(run({"word", "--eps", "0", "--c", "1,2,3"}).code, 1);
  EXPECT_EQ(run({"suite", "--config", "/nonexistent/qmzv.conf"}).code, 1);
}

TEST(Cli, HelpExitsZero) {
  const Outcome r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("suite"), std::string::npos);
}

TEST(Cli, SuiteFromConfigFile) {
  const auto path = std::filesystem::temp_directory_path() / "qmzv_cli_test.conf";
  {
    std::ofstream f(path);
    f << "max_weight = 3\nmax_N = 3\norder = 6\nmaxdeg = 1\nparallelism = 2\n";
  }
  const Outcome r = run({"suite", "--config", path.string(), "--filter", "symmetry"});
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["summary"]["failed"], 0);
  EXPECT_GT(j["summary"]["passed"].get<int>(), 0);
  EXPECT_EQ(j["config"]["max_weight"], 3);
}

TEST(Cli, SuiteDefault) {
  const Outcome r = run({"suite", "--config", "default"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["summary"]["failed"], 0);
}

TEST(Cli, InjectedFaultExitsThree) {
  const Outcome r = run({"verify", "main_finite", "--c", "1,2,1,1", "--N", "4", "--order", "10", "--fault", "term1_sign", "--json"});
  EXPECT_EQ(r.code, 3);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j[0]["status"], "fail");
  EXPECT_GE(j[0]["witness"]["exponent"].get<int>(), 0);
  EXPECT_EQ(run({"verify", "main_finite", "--c", "1,1", "--fault", "sideways"}).code, 2);
}
