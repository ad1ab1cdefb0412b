#include <gtest/gtest.h>

#include "hahn/verify.hpp"
#include "test_util.hpp"

using namespace hahn;

class SuiteTest : public ::testing::TestWithParam<std::string> {};

TEST_P(SuiteTest, PassesForFixedSeed) {
  const SuiteReport r = run_suite(GetParam(), 11);
  EXPECT_GT(r.cases, 0u);
  EXPECT_TRUE(r.ok()) << format_report_text(r);
}

INSTANTIATE_TEST_SUITE_P(AllSuites, SuiteTest, ::testing::ValuesIn(suite_names()),
                         [](const auto& info) {
                           std::string name = info.param;
                           for (char& c : name) {
                             if (c == '-') c = '_';
                           }
                           return name;
                         });

TEST(Verify, ReportsAreDeterministic) {
  for (const char* name : {"series", "schilling", "rayner-kappa-finite"}) {
    EXPECT_EQ(format_report_kv(run_suite(name, 5)), format_report_kv(run_suite(name, 5))) << name;
  }
}

TEST(Verify, KappaFixtureDocumentsItsCounterexample) {
  const SuiteReport r = run_suite("rayner-kappa-finite", 3);
  ASSERT_TRUE(r.ok());
  std::map<std::string, std::string> notes(r.notes.begin(), r.notes.end());
  EXPECT_EQ(notes["expected"], "R3 fail");
  EXPECT_EQ(notes["R3"], "fail");
  EXPECT_NE(notes["witness"].find("is not a member"), std::string::npos);
}

TEST(Verify, ReportFormats) {
  const SuiteReport r = run_suite("coeffs", 2);
  const std::string kv = format_report_kv(r);
  EXPECT_EQ(kv.rfind("suite=coeffs\nseed=2\ncases=200\npassed=200\nfailed=0\nstatus=pass\n", 0), 0u) << kv;
  EXPECT_EQ(format_report_text(r).rfind("suite coeffs (seed 2): 200/200 cases passed -> PASS", 0), 0u);
}

TEST(Verify, UnknownSuite) {
  EXPECT_HAHN_ERROR(run_suite("no-such-suite", 1), UnknownSuite);
}
