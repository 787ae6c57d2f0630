#include <gtest/gtest.h>

#include "g2/cli/commands.hpp"

using g2::json;
using g2::cli::CommandResult;

namespace {

CommandResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "g2");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return g2::cli::run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST(Cli, PairAtZero) {
  auto r = run({"deg3", "pair", "--j", "0"});
  EXPECT_EQ(r.exit_code, 0);
  ASSERT_EQ(r.payload["roots"].size(), 1u);
  EXPECT_EQ(r.payload["roots"][0]["value"], json("-1213857792/28561"));
  EXPECT_EQ(r.payload["roots"][0]["multiplicity"], 3);
  EXPECT_FALSE(r.provenance.empty());
}

TEST(Cli, LegendreJ) {
  auto r = run({"j", "--model", "legendre", "--t", "-1"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.payload["j"], json("1728"));
  auto n = run({"j", "--model", "legendre", "--t", R"({"min_poly":["1","-1","1"],"coeffs":["0","1"]})"});
  EXPECT_EQ(n.payload["j"], json("0"));
}

TEST(Cli, BranchPointsAndWeierstrass) {
  auto r = run({"j", "--model", "branch-points", "--points", R"(["0","1","-1","inf"])"});
  EXPECT_EQ(r.payload["j"], json("1728"));
  auto w = run({"j", "--model", "weierstrass", "--a", "-668644200", "--b", "6788828143125"});
  EXPECT_EQ(w.payload["j"], json("-1213857792/28561"));
}

TEST(Cli, RamificationFlags) {
  auto r = run({"ramification", "--degree", "8"});
  EXPECT_EQ(r.exit_code, 0);
  std::vector<std::string> flagged;
  for (const auto& p : r.payload["profiles"])
    if (p.contains("flags")) flagged.push_back(p["case"]);
  EXPECT_EQ(flagged, (std::vector<std::string>{"II.5", "II.6", "III.1"}));
  for (const auto& p : r.payload["profiles"]) {
    EXPECT_TRUE(p.contains("rh_ok"));
    EXPECT_TRUE(p.contains("lemma2_ok"));
  }
}

TEST(Cli, VerifyCover) {
  auto ok = run({"verify-cover", "--map", R"({"num":"16*x^3-24*x^2+9*x"})", "--branch-points",
                 R"(["0","1","inf","7"])", "--case", "III.ii"});
  EXPECT_EQ(ok.exit_code, 0);
  EXPECT_EQ(ok.payload["matching_cases"], json({"III.ii"}));
  auto bad = run({"verify-cover", "--map", R"({"num":"16*x^3-24*x^2+9*x"})", "--branch-points",
                  R"(["0","1","inf","7"])", "--case", "I"});
  EXPECT_EQ(bad.exit_code, 1);
}

TEST(Cli, FamiliesPass) {
  EXPECT_EQ(run({"deg3", "generic", "--a", "4", "--c", "1"}).exit_code, 0);
  auto g = run({"deg3", "generic", "--a", "4", "--c", "1"});
  EXPECT_EQ(g.payload["j1"], g.payload["oracle_j1"]);
  EXPECT_EQ(run({"deg3", "degenerate", "--w1", "2"}).exit_code, 0);
  EXPECT_EQ(run({"deg3", "table1"}).exit_code, 0);
  auto d5 = run({"deg5", "--u", "1/7", "--v-branch", "1"});
  EXPECT_EQ(d5.exit_code, 0);
  EXPECT_EQ(d5.payload["membership"], true);
  auto d7 = run({"deg7", "--d", "2"});
  EXPECT_EQ(d7.exit_code, 0);
  EXPECT_EQ(d7.payload["J10_nonzero"], true);
  EXPECT_EQ(d7.payload["constraint_residual"], json("0"));
  EXPECT_TRUE(d7.payload["t"].is_object());
}

TEST(Cli, Invariants) {
  auto r = run({"invariants", "--curve", R"(["0","-1","0","0","0","1"])"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.payload["J10"], json("-256"));
  EXPECT_EQ(run({"invariants", "--curve", R"("x^5-x")"}).payload, r.payload);
  auto sing = run({"invariants", "--curve", R"("x^6-x^4")"});
  EXPECT_EQ(sing.exit_code, 1);
  EXPECT_EQ(sing.payload["error"]["kind"], "degenerate");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).exit_code, 2);
  EXPECT_EQ(run({"nonsense"}).exit_code, 2);
  EXPECT_EQ(run({"ramification"}).exit_code, 2);
  EXPECT_EQ(run({"invariants", "--curve", "[1,"}).exit_code, 2);
  EXPECT_EQ(run({"j", "--model", "legendre", "--t", "x"}).exit_code, 2);
  EXPECT_EQ(run({"j", "--output", "xml", "--model", "legendre", "--t", "2"}).exit_code, 2);
  auto dom = run({"j", "--model", "legendre", "--t", "1"});
  EXPECT_EQ(dom.exit_code, 1);
  EXPECT_EQ(dom.status, "error");
  EXPECT_EQ(dom.payload["error"]["kind"], "degenerate");
  EXPECT_EQ(run({"ramification", "--degree", "2"}).exit_code, 1);
  EXPECT_EQ(run({"deg7", "--d", "2", "--t-branch", "3"}).exit_code, 2);
}

TEST(Cli, OutputsAreDeterministicAndReparse) {
  auto a = run({"deg3", "degenerate", "--w1", "3/2"});
  auto b = run({"deg3", "degenerate", "--w1", "3/2"});
  std::string text = g2::cli::render(a);
  EXPECT_EQ(text, g2::cli::render(b));
  json j = json::parse(text);
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(json::parse(j.dump()), j);
  // every number field value in the payload decodes back to itself
  for (const auto& p : j["payload"]["points"]) {
    auto w2 = g2::decode<g2::NumberField>(p["w2"]);
    EXPECT_EQ(g2::encode(w2), p["w2"]);
  }
}

TEST(Cli, PrettyOutput) {
  auto r = run({"j", "--model", "legendre", "--t", "-1", "--output", "pretty"});
  std::string text = g2::cli::render(r);
  EXPECT_NE(text.find("status: ok"), std::string::npos);
  EXPECT_NE(text.find("j: 1728"), std::string::npos);
}
