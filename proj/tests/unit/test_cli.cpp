#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bench.hpp"
#include "cli.hpp"
#include "script.hpp"

namespace dyncon::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("dyncon_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int call(const std::vector<std::string>& args) {
    out_.str("");
    err_.str("");
    return run(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

const char* kK4 = "1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";

TEST_F(CliTest, PathBridgeScript) {
  const auto g = file("g.el", "1 2\n2 3\n");
  const auto s = file("s.ops", "QUERY 1 3\nDELETE 1 2\nQUERY 1 3\n");
  for (const char* algo : {"et", "tree"}) {
    ASSERT_EQ(call({"decremental", "--algo", algo, "--check", g, s}), kOk) << err_.str();
    EXPECT_EQ(out_.str(), "true\nfalse\n") << algo;
  }
}

TEST_F(CliTest, WitnessOnK4) {
  const auto g = file("k4.el", kK4);
  ASSERT_EQ(call({"witness-e", "--check", g, "1", "2", "1-2", "1-3"}), kOk) << err_.str();
  EXPECT_EQ(out_.str(), "not-a-cut\n");
  ASSERT_EQ(call({"witness-e", g, "1", "2", "1-2", "1-3", "1-4"}), kOk);
  EXPECT_EQ(out_.str(), "cut\n");
}

TEST_F(CliTest, ExitCodes) {
  const auto g = file("g.el", "1 2\n2 3\n");
  EXPECT_EQ(call({}), kUsage);
  EXPECT_EQ(call({"frobnicate"}), kUsage);
  EXPECT_EQ(call({"--help"}), kOk);
  EXPECT_EQ(call({"decremental", "--algo", "nope", g, g}), kUsage);
  EXPECT_EQ(call({"decremental", g, path("missing.ops")}), kInputError);
  const auto bad = file("bad.el", "1 1\n");
  EXPECT_EQ(call({"decremental", bad, file("a.ops", "QUERY 1 2\n")}), kInputError);
  EXPECT_NE(err_.str().find("line 1"), std::string::npos);
  EXPECT_EQ(call({"decremental", g, file("b.ops", "FLY 1 2\n")}), kInputError);
  EXPECT_EQ(call({"decremental", g, file("c.ops", "DELETE 1 3\n")}), kScriptViolation);
  EXPECT_EQ(call({"decremental", g, file("d.ops", "DELETE 1 2\nDELETE 1 2\n")}), kScriptViolation);
  EXPECT_EQ(call({"decremental", "--algo", "et", g, file("e.ops", "DELV 2\n")}), kScriptViolation);
  EXPECT_EQ(call({"decremental", "--algo", "layout", g, file("f.ops", "DELV 2\nQUERY 2 1\n")}),
            kScriptViolation);
}

TEST_F(CliTest, VertexDeletionScript) {
  const auto g = file("g.el", "1 2\n2 3\n3 4\n4 1\n");
  const auto s = file("s.ops", "DELV 2\nQUERY 1 3\nDELV 4\nQUERY 1 3\nQUERYALL\n");
  for (const char* backend : {"dfs", "uf"}) {
    ASSERT_EQ(call({"decremental", "--algo", "layout", "--backend", backend, "--check", g, s}), kOk);
    EXPECT_EQ(out_.str(), "true\nfalse\nfalse\n");
  }
  const auto l = file("l.layout", "layout 4\n1 3 2 4\n");
  ASSERT_EQ(call({"layout-decremental", "--lazy-holes", "--check", g, l, s}), kOk) << err_.str();
  EXPECT_EQ(out_.str(), "true\nfalse\nfalse\n");
}

TEST_F(CliTest, OracleCheck) {
  const auto g = file("g.el", kK4);
  const auto s = file("s.ops", "DELETE 1 2\nQUERY 1 2\nDELETE 1 3\nDELETE 1 4\nQUERY 1 2\nQUERYALL\n");
  ASSERT_EQ(call({"oracle-check", g, s}), kOk) << err_.str();
  EXPECT_NE(out_.str().find("et/dfs ok"), std::string::npos);
  EXPECT_NE(out_.str().find("tree/uf ok"), std::string::npos);
}

TEST_F(CliTest, LayoutAndLabels) {
  const auto g = file("g.el", "1 2\n2 3\n4 5\n");
  ASSERT_EQ(call({"layout", "greedy", g}), kOk);
  const auto l = file("l.layout", out_.str());
  ASSERT_EQ(call({"layout", "info", g, l}), kOk);
  EXPECT_NE(out_.str().find("cutwidth 1"), std::string::npos) << out_.str();
  ASSERT_EQ(call({"labels", "mark", "--all-holes", g, l, "--out", path("g.lab")}), kOk) << err_.str();
  ASSERT_EQ(call({"labels", "decode", path("g.lab"), "1", "3", "2"}), kOk) << err_.str();
  EXPECT_EQ(out_.str(), "cut\n");
  ASSERT_EQ(call({"labels", "decode", path("g.lab"), "1", "3"}), kOk);
  EXPECT_EQ(out_.str(), "not-a-cut\n");
  ASSERT_EQ(call({"labels", "decode", path("g.lab"), "1", "4"}), kOk);
  EXPECT_EQ(out_.str(), "cut\n");
  EXPECT_EQ(call({"labels", "decode", file("junk.lab", "nope"), "1", "2"}), kInputError);
}

TEST_F(CliTest, CertificateIsAnEdgeList) {
  const auto g = file("k4.el", kK4);
  ASSERT_EQ(call({"certificate", "--k", "1", g}), kOk);
  const Graph c = parse_edge_list(out_.str());
  EXPECT_EQ(c.n(), 4u);
  EXPECT_EQ(c.m(), 3u);
}

TEST_F(CliTest, TreeWitness) {
  const auto t = file("t.el", "1 2\n2 3\n2 4\n");
  ASSERT_EQ(call({"tree-witness", "--check", "--vertices", "2", "--", t, "1", "3"}), kOk) << err_.str();
  EXPECT_EQ(out_.str(), "cut\n");
  ASSERT_EQ(call({"tree-witness", "--check", "--edges", "2-4", "--", t, "1", "3"}), kOk) << err_.str();
  EXPECT_EQ(out_.str(), "not-a-cut\n");
  EXPECT_EQ(call({"tree-witness", file("c.el", "1 2\n2 3\n1 3\n"), "1", "3"}), kInputError);
}

TEST_F(CliTest, BenchIsDeterministic) {
  for (const char* algo : {"et", "tree", "layout"}) {
    ASSERT_EQ(call({"bench", "--algo", algo, "--n", "200", "--k", "20", "--seed", "7", "--trials", "3",
                    "--mask-timing"}),
              kOk)
        << err_.str();
    const std::string first = out_.str();
    ASSERT_EQ(call({"bench", "--algo", algo, "--n", "200", "--k", "20", "--seed", "7", "--trials", "3",
                    "--mask-timing", "--jobs", "3"}),
              kOk);
    EXPECT_EQ(out_.str(), first);
    EXPECT_EQ(first.substr(0, first.find('\n')), "algo,n,m,k_index,op,nanos,h_size");
    EXPECT_EQ(std::count(first.begin(), first.end(), '\n'), 1 + 3 * 2 * 20);
  }
}

TEST(Script, Parse) {
  const auto cmds = parse_script("# c\nDELETE 1 2\nQUERY 2 3 # tail\nQUERYALL\nWITNESS-E 1 4 2 1-2 3-4\n"
                                 "WITNESS-E 1 4 1 2 3\nWITNESS-V 1 4 2 2 3\nDELV 5\n");
  ASSERT_EQ(cmds.size(), 7u);
  EXPECT_EQ(cmds[0].kind, Command::Kind::Delete);
  EXPECT_EQ(cmds[1].line, 3u);
  EXPECT_EQ(cmds[3].edges, (std::vector<Edge>{{1, 2}, {3, 4}}));
  EXPECT_EQ(cmds[4].edges, (std::vector<Edge>{{2, 3}}));
  EXPECT_EQ(cmds[5].vertices, (std::vector<VertexId>{2, 3}));
  EXPECT_EQ(cmds[6].kind, Command::Kind::DeleteVertex);
  EXPECT_THROW(parse_script("QUERY 1\n"), ParseError);
  EXPECT_THROW(parse_script("WITNESS-V 1 2 3 4\n"), ParseError);
  EXPECT_THROW(parse_script("DELETE 1 2 3\n"), ParseError);
}

TEST(Bench, DrawsArePortable) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 1000; ++i) {
    const double x = unit_draw(rng);
    ASSERT_GE(x, 0.0);
    ASSERT_LT(x, 1.0);
    ASSERT_LT(below(rng, 7), 7u);
  }
  EXPECT_THROW(below(rng, 0), std::invalid_argument);
  const Graph g = random_connected_graph(50, 0.1, rng);
  EXPECT_TRUE(is_connected(g));
}

}  // namespace
}  // namespace dyncon::cli
