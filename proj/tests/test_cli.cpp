#include <gtest/gtest.h>

#include "cli_harness.hpp"

using harness::run_cli;
using harness::schema_mismatch;
namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = harness::scratch_dir(::testing::UnitTest::GetInstance()->current_test_info()->name());
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    harness::write_file(p, text);
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, SolveIntervalOnP5Model) {
  const auto in = file("p5.txt", "# P5 model\n5\n1 4\n3 8\n5 12\n9 14\n13 16\n");
  const auto r = run_cli({"solve", "--algo", "interval", "--format", "intervals", "--input", in});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = r.doc();
  EXPECT_EQ(schema_mismatch(doc, "solve"), "");
  EXPECT_EQ(doc["size"], 2);
  EXPECT_EQ(doc["verified"], true);
  EXPECT_EQ(doc["extra"]["components"], 1);
}

TEST_F(CliTest, SolveExactAndApproxOnC4) {
  const auto in = file("c4.txt", "4 4\n0 1\n1 2\n2 3\n0 3\n");
  const auto exact = run_cli({"solve", "--algo", "exact", "--input", in});
  ASSERT_EQ(exact.code, 0) << exact.err;
  EXPECT_EQ(exact.doc()["size"], 2);
  EXPECT_EQ(exact.doc()["set"], nlohmann::json({0, 1}));
  const auto dom = run_cli({"solve", "--algo", "exact", "--kind", "dom", "--input", in});
  EXPECT_EQ(dom.doc()["size"], 2);
  const auto approx = run_cli({"solve", "--algo", "approx", "--input", in});
  ASSERT_EQ(approx.code, 0);
  EXPECT_EQ(schema_mismatch(approx.doc(), "solve"), "");
  EXPECT_TRUE(approx.doc()["extra"].contains("ratioBound"));
}

TEST_F(CliTest, GenCycleThenSolve) {
  const auto g = run_cli({"gen", "--family", "cycle", "--size", "4", "--output", path("c4.txt")});
  ASSERT_EQ(g.code, 0) << g.err;
  EXPECT_EQ(schema_mismatch(g.doc(), "gen"), "");
  const auto s = run_cli({"solve", "--algo", "exact", "--input", path("c4.txt")});
  EXPECT_EQ(s.doc()["size"], 2);
}

TEST_F(CliTest, GenWithoutOutputPrintsInstance) {
  const auto g = run_cli({"gen", "--family", "path", "--size", "3"});
  ASSERT_EQ(g.code, 0);
  EXPECT_EQ(g.out, "3 2\n0 1\n1 2\n");
}

TEST_F(CliTest, GenSplitWritesPartition) {
  const auto g = run_cli({"gen", "--family", "split", "--clique", "2", "--ind", "2", "--density",
                          "0.5", "--seed", "3", "--output", path("s.txt")});
  ASSERT_EQ(g.code, 0) << g.err;
  EXPECT_EQ(schema_mismatch(g.doc(), "gen"), "");
  EXPECT_EQ(harness::read_file(path("s.txt.partition")), "0 1\n2 3\n");
}

TEST_F(CliTest, VerifyReportsViolations) {
  const auto in = file("c4.txt", "4 4\n0 1\n1 2\n2 3\n0 3\n");
  const auto r = run_cli({"verify", "--input", in, "--ids", "0", "--kind", "semitotal"});
  EXPECT_EQ(r.code, 2);
  const auto doc = r.doc();
  EXPECT_EQ(schema_mismatch(doc, "verify"), "");
  EXPECT_EQ(doc["valid"], false);
  EXPECT_EQ(doc["violations"][0]["vertex"], 0);
  EXPECT_EQ(doc["violations"][0]["reason"], "NO_PARTNER_WITHIN_2");

  const auto set = file("set.txt", "0 1\n");
  const auto ok = run_cli({"verify", "--input", in, "--set", set, "--kind", "semitotal"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.doc()["valid"], true);
}

TEST_F(CliTest, ReduceBipartiteOnC4) {
  const auto in = file("c4.txt", "4 4\n0 1\n1 2\n2 3\n0 3\n");
  const auto r = run_cli({"reduce", "--kind", "bipartite", "--input", in, "--output", path("h.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = r.doc();
  EXPECT_EQ(schema_mismatch(doc, "reduce"), "");
  EXPECT_EQ(doc["hN"], 24);
  const auto roles = nlohmann::json::parse(harness::read_file(path("h.txt.roles.json")));
  EXPECT_EQ(schema_mismatch(roles, "roles"), "");
  EXPECT_EQ(roles["roles"].size(), 24u);
  EXPECT_EQ(roles["roles"][4]["role"], "x_0");
}

TEST_F(CliTest, ReduceSplitEmitsHostPartition) {
  const auto in = file("k2.txt", "2 1\n0 1\n");
  const auto part = file("k2.partition", "0\n1\n");
  const auto r = run_cli({"reduce", "--kind", "split", "--input", in, "--partition", part,
                          "--output", path("h.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc()["hN"], 9);
  const auto roles = nlohmann::json::parse(harness::read_file(path("h.txt.roles.json")));
  EXPECT_EQ(schema_mismatch(roles, "roles"), "");
  EXPECT_TRUE(roles.contains("partition"));
}

TEST_F(CliTest, CheckReductionSplit) {
  const auto r = run_cli({"check-reduction", "--kind", "split", "--clique", "1", "--ind", "1"});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(schema_mismatch(r.doc(), "check-reduction"), "");
  EXPECT_EQ(r.doc()["holds"], true);
}

TEST_F(CliTest, CheckReductionFamilyAndCap) {
  const auto ok = run_cli({"check-reduction", "--kind", "gp4", "--family", "path", "--size", "3"});
  EXPECT_EQ(ok.code, 0);
  const auto cap = run_cli({"check-reduction", "--kind", "bipartite", "--family", "path", "--size", "5"});
  EXPECT_EQ(cap.code, 4);
  EXPECT_EQ(schema_mismatch(cap.doc(), "error"), "");
  EXPECT_EQ(cap.doc()["error"]["code"], "SIZE_CAP_EXCEEDED");
}

TEST_F(CliTest, Bench) {
  const auto r = run_cli({"bench", "--algo", "interval", "--sizes", "20,40", "--seed", "1", "--reps", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = r.doc();
  EXPECT_EQ(schema_mismatch(doc, "bench"), "");
  EXPECT_EQ(doc["rows"].size(), 2u);
  EXPECT_EQ(doc["ratios"].size(), 1u);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run_cli({"solve", "--bogus"}).code, 1);
  EXPECT_EQ(run_cli({}).code, 1);
  EXPECT_EQ(run_cli({"solve", "--input", path("missing.txt")}).code, 1);
  const auto bad = file("bad.txt", "3 1\n0 0\n");
  EXPECT_EQ(run_cli({"solve", "--input", bad}).code, 1);
  const auto lonely = file("lonely.txt", "3 1\n0 1\n");
  const auto inf = run_cli({"solve", "--algo", "exact", "--input", lonely});
  EXPECT_EQ(inf.code, 3);
  EXPECT_EQ(inf.doc()["error"]["code"], "INFEASIBLE");
  const auto single = file("single.txt", "1\n0 1\n");
  EXPECT_EQ(run_cli({"solve", "--algo", "interval", "--format", "intervals", "--input", single}).code, 3);
  const auto big = run_cli({"gen", "--family", "path", "--size", "70", "--output", path("p70.txt")});
  ASSERT_EQ(big.code, 0);
  EXPECT_EQ(run_cli({"solve", "--algo", "exact", "--input", path("p70.txt")}).code, 4);
}

TEST_F(CliTest, HelpExitsZero) {
  const auto r = run_cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("solve"), std::string::npos);
}
