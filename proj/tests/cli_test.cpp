#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"
#include "pythag/cli.hpp"

namespace pythag {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, Count) {
  EXPECT_EQ(run({"count", "65"}).out, "2\n");
  EXPECT_EQ(run({"count", "12"}).out, "0\n");
  EXPECT_EQ(run({"count", "3125"}).out, "1\n");
  EXPECT_EQ(run({"count", "1"}).out, "0\n");
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"count", "0"}).code, 2);
  EXPECT_EQ(run({"count", "abc"}).code, 2);
  EXPECT_EQ(run({"count", "-5"}).code, 2);
  EXPECT_EQ(run({"count"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  Result r = run({"triples", "1.5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, Triples) {
  Result r = run({"triples", "289"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "161 240 289\n");
  r = run({"triples", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "");
  r = run({"triples", "65", "--verify"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "16 63 65\n33 56 65\n");
}

TEST(Cli, TriplesVerifyOnPseudorandomSample) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> dist(1, 2000);
  for (int k = 0; k < 500; ++k) {
    std::string c = std::to_string(dist(rng));
    ASSERT_EQ(run({"triples", c, "--verify"}).code, 0) << c;
  }
}

TEST(Cli, LimitCapsRows) {
  Result r = run({"triples", "5525", "--limit", "2", "--verify"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2);
  std::string full = run({"triples", "5525"}).out;
  EXPECT_EQ(std::count(full.begin(), full.end(), '\n'), 4);
}

TEST(Cli, Zeta) {
  EXPECT_EQ(run({"zeta", "17"}).out, "-15/17 8/17\n");
  EXPECT_EQ(run({"zeta", "5", "--seed", "77"}).out, "-3/5 4/5\n");
  Result r = run({"zeta", "7"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("P3"), std::string::npos);
  r = run({"zeta", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("P2"), std::string::npos);
  EXPECT_EQ(run({"zeta", "9"}).code, 2);
}

TEST(Cli, Pow) {
  Result r = run({"pow", "5", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "point -7/25 -24/25\ntriple 7 24 25\n");
  EXPECT_EQ(run({"pow", "5", "0"}).out, "point 1 0\ntriple none (unit)\n");
  EXPECT_EQ(run({"pow", "17", "2"}).out, "point 161/289 -240/289\ntriple 161 240 289\n");
}

TEST(Cli, Table) {
  Result r = run({"table", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "1\t3/5 + 4/5*i\t(3, 4, 5)\n"
            "2\t-7/25 + 24/25*i\t(7, 24, 25)\n"
            "3\t-117/125 + 44/125*i\t(44, 117, 125)\n"
            "4\t-527/625 - 336/625*i\t(336, 527, 625)\n");
}

TEST(Cli, FactorPoint) {
  EXPECT_EQ(run({"factor-point", "1", "0"}).out, "unit i^0\n");
  EXPECT_EQ(run({"factor-point", "3/5", "4/5"}).out, "unit i^2\n5 -1\n");
  EXPECT_EQ(run({"factor-point", "-3/5", "4/5"}).out, "unit i^0\n5 1\n");
  EXPECT_EQ(run({"factor-point", "1/2", "1/2"}).code, 2);
}

TEST(Cli, Projections) {
  EXPECT_EQ(run({"project", "3/5", "4/5"}).out, "3\n");
  EXPECT_EQ(run({"project", "0", "1"}).code, 2);
  EXPECT_EQ(run({"project", "1", "1"}).code, 2);
  EXPECT_EQ(run({"unproject", "3"}).out, "3/5 4/5\n");
  EXPECT_EQ(run({"unproject", "0"}).out, "0 -1\n");
  EXPECT_EQ(run({"unproject", "-1/2"}).out, "-4/5 -3/5\n");
}

TEST(Cli, Oracle) { EXPECT_EQ(run({"oracle", "625"}).out, "336 527 625\n"); }

TEST(Cli, JsonIsWellFormedAndUsesDecimalStrings) {
  using nlohmann::json;
  json doc = json::parse(run({"triples", "65", "--json"}).out);
  EXPECT_EQ(doc["command"], "triples");
  EXPECT_EQ(doc["input"]["c"], "65");
  ASSERT_EQ(doc["result"].size(), 2U);
  EXPECT_EQ(doc["result"][0]["a"], "16");
  EXPECT_TRUE(doc["result"][0]["a"].is_string());

  doc = json::parse(run({"--json", "count", "65"}).out);
  EXPECT_EQ(doc["result"], "2");

  doc = json::parse(run({"zeta", "17", "--json"}).out);
  EXPECT_EQ(doc["result"]["s"], "-15/17");
  EXPECT_EQ(doc["result"]["t"], "8/17");

  doc = json::parse(run({"factor-point", "3/5", "4/5", "--json"}).out);
  EXPECT_EQ(doc["result"]["unit_exp"], "2");
  EXPECT_EQ(doc["result"]["terms"][0]["p"], "5");
  EXPECT_EQ(doc["result"]["terms"][0]["e"], "-1");

  doc = json::parse(run({"table", "2", "--json"}).out);
  EXPECT_EQ(doc["result"][1]["triple"]["c"], "25");

  doc = json::parse(run({"pow", "5", "40", "--json"}).out);
  EXPECT_EQ(doc["result"]["triple"]["c"], pow(Int(5), 40).str());

  for (const auto& args : std::vector<std::vector<std::string>>{
           {"project", "3/5", "4/5", "--json"}, {"unproject", "3", "--json"}, {"oracle", "65", "--json"}}) {
    std::string text = run(args).out;
    json parsed = json::parse(text);
    EXPECT_EQ(json::parse(parsed.dump()), parsed);
  }
}

TEST(Cli, Selftest) {
  Result r = run({"selftest"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

}  // namespace
}  // namespace pythag
