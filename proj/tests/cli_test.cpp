#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.hpp"

namespace biorder::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(BIORDER_FIXTURE_DIR) + "/" + name; }

TEST(Cli, PosetPolyText) {
  const Result r = call({"poset-poly", "--input", fixture("chain2_celeste_top.json"), "--mode", "strict"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "1/2*x^2 - 1/2*y^2 - 1/2*x + 1/2*y\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, PosetPolyJson) {
  const Result r = call({"poset-poly", "--input", fixture("chain2_celeste_top.json"), "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("terms").size(), 4U);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"list-extensions", "--input", fixture("pentagon.json"), "--format", "json"};
  EXPECT_EQ(call(args).out, call(args).out);
  const std::vector<std::string> check{"check", "--kind", "all", "--input", fixture("k3.json"), "--format", "json"};
  EXPECT_EQ(call(check).out, call(check).out);
}

TEST(Cli, Counts) {
  EXPECT_EQ(call({"poset-count", "--input", fixture("chain2_celeste_top.json"), "--x", "3", "--y", "1"}).out, "3\n");
  EXPECT_EQ(call({"poset-count", "--input", fixture("pentagon.json"), "--x", "4", "--y", "1"}).out, "2\n");
  EXPECT_EQ(call({"poset-count", "--input", fixture("pentagon.json"), "--mode", "weak", "--x", "4", "--y", "2"}).out,
            "88\n");
  EXPECT_EQ(call({"graph-count", "--input", fixture("k3.json"), "--x", "2", "--y", "1"}).out, "4\n");
  EXPECT_EQ(call({"graph-count", "--input", fixture("k3.json"), "--x", "3", "--y", "3"}).out, "6\n");
}

TEST(Cli, GraphPoly) {
  EXPECT_EQ(call({"graph-poly", "--input", fixture("k3.json")}).out, "x^3 - 3*x*y + 2*y\n");
  EXPECT_EQ(call({"graph-poly", "--input", fixture("k2.json")}).out, "x^2 - y\n");
  EXPECT_EQ(call({"graph-poly", "--input", fixture("edgeless3.json")}).out, "x^3\n");
}

TEST(Cli, Listings) {
  const Result ext = call({"list-extensions", "--input", fixture("pentagon.json")});
  EXPECT_EQ(ext.out,
            "0 1 2 3 4 | word 1 2 3 4 5 | celeste_pos 3\n"
            "0 1 3 2 4 | word 1 2 4 3 5 | celeste_pos 4\n"
            "0 3 1 2 4 | word 1 4 2 3 5 | celeste_pos 4\n");
  const Result fl = call({"list-flats", "--input", fixture("k3.json")});
  EXPECT_EQ(std::count(fl.out.begin(), fl.out.end(), '\n'), 5);
  const Result orient = call({"list-orientations", "--input", fixture("k3.json")});
  EXPECT_EQ(std::count(orient.out.begin(), orient.out.end(), '\n'), 6);
}

TEST(Cli, CheckPasses) {
  const Result k3 = call({"check", "--kind", "all", "--input", fixture("k3.json")});
  EXPECT_EQ(k3.code, kOk) << k3.out << k3.err;
  EXPECT_EQ(k3.out.find("FAIL"), std::string::npos);
  const Result chain = call({"check", "--input", fixture("chain2_celeste_top.json")});
  EXPECT_EQ(chain.code, kOk) << chain.out;
  const Result j = call({"check", "--kind", "poset-reciprocity", "--input", fixture("pentagon.json"), "--format", "json"});
  ASSERT_EQ(j.code, kOk);
  EXPECT_TRUE(nlohmann::json::parse(j.out).at("passed").get<bool>());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, kUsageError);
  EXPECT_EQ(call({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(call({"poset-poly"}).code, kUsageError);
  EXPECT_EQ(call({"poset-poly", "--input", fixture("k3.json"), "--mode", "lax"}).code, kUsageError);
  EXPECT_EQ(call({"poset-count", "--input", fixture("pentagon.json"), "--x", "-1", "--y", "0"}).code, kUsageError);
}

TEST(Cli, InputErrors) {
  const Result missing = call({"poset-poly", "--input", fixture("no_such_file.json")});
  EXPECT_EQ(missing.code, kUsageError);
  EXPECT_NE(missing.err.find("cannot read"), std::string::npos);
  EXPECT_EQ(call({"poset-poly", "--input", fixture("truncated.json")}).code, kUsageError);
  EXPECT_EQ(call({"poset-poly", "--input", fixture("cyclic_invalid.json")}).code, kUsageError);
  EXPECT_EQ(call({"check", "--kind", "graph-reciprocity", "--input", fixture("pentagon.json")}).code, kUsageError);
}

TEST(Cli, BudgetExceededIsReported) {
  const Result r =
      call({"poset-count", "--input", fixture("pentagon.json"), "--x", "50", "--y", "1", "--budget", "1000"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_FALSE(r.err.empty());
}

}  // namespace
}  // namespace biorder::cli
