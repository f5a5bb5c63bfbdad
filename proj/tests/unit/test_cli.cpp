#include <gtest/gtest.h>

#include <sstream>

#include "hyperforge/cli.hpp"

namespace hyperforge {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(HYPERFORGE_FIXTURE_DIR) + "/" + name + ".json"; }

TEST(Cli, ValidatePasses) {
  const CliRun r = run({"validate", fixture("sl2")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("result: pass"), std::string::npos);
  EXPECT_EQ(run({"validate", fixture("skew2")}).code, kExitFail);
}

TEST(Cli, VerifyZ2T83) {
  const CliRun r = run({"verify", fixture("z2"), "--theorems", "T83"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("T83 holds"), std::string::npos);
}

TEST(Cli, ClassifyTot2) {
  const CliRun r = run({"classify", fixture("tot2")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("1111111"), std::string::npos);
}

TEST(Cli, CongruencesSl2) {
  const CliRun r = run({"congruences", fixture("sl2"), "--semilattice"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("N(1): {1}"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", fixture("z2"), "--theorems", "T99"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", fixture("missing")}).code, kExitUsage);
  EXPECT_EQ(run({"ideals", fixture("z2"), "--kind", "sideways"}).code, kExitUsage);
  EXPECT_EQ(run({"enumerate", "--n", "2", "--require", "sorted"}).code, kExitUsage);
  EXPECT_EQ(run({"classify", fixture("z2"), "--flavor", "ordered", "--format", "xml"}).code, kExitUsage);
}

TEST(Cli, BudgetExit) {
  EXPECT_EQ(run({"verify", fixture("vee3"), "--budget", "5"}).code, kExitBudget);
  EXPECT_EQ(run({"enumerate", "--n", "3", "--budget", "100"}).code, kExitBudget);
}

TEST(Cli, OutputStableAcrossThreads) {
  const std::vector<std::string> base = {"verify", fixture("vee3"), "--theorems", "all", "--format", "records"};
  auto one = base;
  one.insert(one.end(), {"--threads", "1"});
  auto four = base;
  four.insert(four.end(), {"--threads", "4"});
  const CliRun a = run(one);
  const CliRun b = run(four);
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  const CliRun c1 = run({"enumerate", "--n", "2", "--require", "assoc", "--census", "t83", "--threads", "1"});
  const CliRun c3 = run({"enumerate", "--n", "2", "--require", "assoc", "--census", "t83", "--threads", "3"});
  EXPECT_EQ(c1.code, kExitOk);
  EXPECT_EQ(c1.out, c3.out);
}

TEST(Cli, OrderedNSearchCanonical) {
  // A finding is reported like a failed check.
  const CliRun r = run({"search-p85", "--n", "2"});
  EXPECT_EQ(r.code, kExitFail);
  EXPECT_NE(r.out.find("examined: 41"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("findings: 1"), std::string::npos);
}

}  // namespace
}  // namespace hyperforge
