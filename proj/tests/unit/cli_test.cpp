#include <sstream>

#include <gtest/gtest.h>

#include "advkit/cli/dispatch.hpp"
#include "advkit/errors.hpp"
#include "advkit/report.hpp"

namespace advkit::cli {
namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Outcome r;
  r.code = dispatch(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return std::string(ADVKIT_TEST_DATA) + "/" + name; }

TEST(Cli, AdvOnOr2) {
  Outcome r = run({"adv", "--fn", data("or2.fn")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("value=1.414"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("certified_lower="), std::string::npos);
}

TEST(Cli, AdvOnXorAsJson) {
  Outcome r = run({"adv", "--fn", data("xor2.fn"), "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"value\""), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("2"), std::string::npos);
}

TEST(Cli, SplitFactor) {
  EXPECT_NE(run({"recur", "split-factor", "--target", "2/3"}).out.find("m=7"), std::string::npos);
  EXPECT_NE(run({"recur", "split-factor", "--target", "0.67"}).out.find("m=6"), std::string::npos);
  EXPECT_EQ(run({"recur", "split-factor", "--target", "0.5"}).code, static_cast<int>(ExitCode::kCounterexample));
}

TEST(Cli, MasterCase) {
  Outcome r = run({"recur", "master", "--a", "2", "--b", "2", "--c", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("case=2"), std::string::npos) << r.out;
}

TEST(Cli, StringDecisions) {
  EXPECT_NE(run({"strings", "regular", "--string", "120021"}).out.find("result=1"), std::string::npos);
  EXPECT_NE(run({"strings", "regular", "--string", "2012"}).out.find("result=0"), std::string::npos);
  EXPECT_NE(run({"strings", "rotation", "--string", "aba", "--i", "2"}).out.find("result=1"), std::string::npos);
  EXPECT_NE(run({"strings", "suffix", "--string", "aba", "--i", "0"}).out.find("result=0"), std::string::npos);
  EXPECT_NE(run({"strings", "kcs", "--x", data("x_ab.txt"), "--y", data("y_ba.txt"), "--k", "2"}).out.find("result=0"),
            std::string::npos);
  EXPECT_NE(run({"strings", "kcs", "--x", "ab", "--y", "ab", "--k", "2"}).out.find("result=1"), std::string::npos);
}

TEST(Cli, Signature) {
  Outcome r = run({"strings", "signature", "--x", "ab", "--y", "bc", "--m", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("00/10"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"frobnicate"}).code, static_cast<int>(ExitCode::kUsageError));
  EXPECT_EQ(run({"adv", "--fn", data("missing.fn")}).code, static_cast<int>(ExitCode::kUsageError));
  EXPECT_EQ(run({"strings", "kcs", "--x", "nope/x.txt", "--y", "ab", "--k", "1"}).code,
            static_cast<int>(ExitCode::kUsageError));
  EXPECT_EQ(run({"report", "--criteria", "11"}).code, static_cast<int>(ExitCode::kUsageError));
  EXPECT_EQ(run({"recur", "master", "--a", "2", "--b", "1", "--c", "1"}).code, static_cast<int>(ExitCode::kUsageError));
}

TEST(Cli, GlobalOptionsAfterSubcommand) {
  Outcome r = run({"randsearch", "run", "--n", "50", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, run({"--seed", "7", "randsearch", "run", "--n", "50"}).out);
}

TEST(Report, ByteIdenticalAcrossRuns) {
  Outcome a = run({"report", "--criteria", "5,7,10"});
  Outcome b = run({"report", "--criteria", "5,7,10"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("criterion,name,anchor"), std::string::npos);
}

TEST(Report, UnknownCriterionThrows) { EXPECT_THROW(run_criterion(0, {}), Error); }

TEST(Report, StatusNames) {
  EXPECT_EQ(std::string(status_name(CriterionStatus::pass)), "pass");
  EXPECT_EQ(std::string(status_name(CriterionStatus::budget)), "budget");
  EXPECT_NE(std::string(status_name(CriterionStatus::fail)), status_name(CriterionStatus::error));
}

}  // namespace
}  // namespace advkit::cli
