#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "diamaug/edge_list.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = diamaug::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(DIAMAUG_DATA_DIR) + "/" + name; }

}  // namespace

TEST(CliMetricsTest, CycleAndPath) {
  Outcome c5 = run({"metrics", data("c5.txt"), "--json"});
  ASSERT_EQ(c5.code, 0) << c5.err;
  json j = json::parse(c5.out);
  EXPECT_EQ(j["input"]["diameter"], 2);
  EXPECT_EQ(j["input"]["girth"], 5);
  for (const auto& entry : j["cycle_weights"]) EXPECT_EQ(entry["w"], 5);

  Outcome p4 = run({"metrics", data("p4.txt"), "--json"});
  j = json::parse(p4.out);
  EXPECT_EQ(j["input"]["diameter"], 3);
  EXPECT_EQ(j["input"]["girth"], "inf");
}

TEST(CliMetricsTest, MalformedInputExitsTwo) {
  Outcome bad = run({"metrics", data("malformed.txt")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 4"), std::string::npos);
  EXPECT_EQ(run({"metrics", data("missing.txt")}).code, 2);
}

TEST(CliSolveTest, Examples) {
  Outcome c5 = run({"solve", data("c5.txt"), "--problem", "mda", "--d", "3", "--k", "1", "--json"});
  ASSERT_EQ(c5.code, 0) << c5.err;
  json j = json::parse(c5.out);
  EXPECT_EQ(j["verdict"], "yes");
  EXPECT_EQ(j["deleted"].size(), 1u);

  Outcome k4 = run({"solve", data("k4.txt"), "--problem", "meda", "--d", "3", "--json"});
  ASSERT_EQ(k4.code, 0) << k4.err;
  EXPECT_EQ(json::parse(k4.out)["min_size"], 3);

  Outcome pet = run({"solve", data("petersen.txt"), "--problem", "eda", "--d", "3"});
  EXPECT_EQ(pet.code, 1);
  EXPECT_NE(pet.out.find("verdict: no"), std::string::npos);

  Outcome infeasible = run({"solve", data("c5.txt"), "--problem", "meda", "--d", "3", "--k", "4"});
  EXPECT_EQ(infeasible.code, 1);
  EXPECT_NE(infeasible.out.find("infeasible"), std::string::npos);
}

TEST(CliSolveTest, MdiAndOracle) {
  Outcome mdi = run({"solve", data("k4.txt"), "--problem", "mdi", "--d", "3", "--k", "3", "--x", "0",
                 "--y", "1", "--json"});
  ASSERT_EQ(mdi.code, 0) << mdi.err;
  json j = json::parse(mdi.out);
  EXPECT_EQ(j["min_size"], 3);
  EXPECT_EQ(j["achieved_distance"], 3);

  Outcome oracle = run({"solve", data("k4.txt"), "--problem", "meda", "--d", "3", "--k", "3",
                    "--oracle", "--json"});
  ASSERT_EQ(oracle.code, 0) << oracle.err;
  j = json::parse(oracle.out);
  EXPECT_EQ(j["method"], "oracle");
  EXPECT_EQ(j["min_size"], 3);

  Outcome capped = run({"solve", data("k4.txt"), "--problem", "meda", "--d", "3", "--k", "2",
                    "--oracle"});
  EXPECT_EQ(capped.code, 1);
}

TEST(CliSolveTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"solve", data("c5.txt"), "--problem", "mdi", "--d", "3", "--k", "1"}).code, 2);
  EXPECT_EQ(run({"solve", data("c5.txt"), "--problem", "bogus", "--d", "3"}).code, 2);
  EXPECT_EQ(run({"solve", data("c5.txt"), "--d", "3"}).code, 2);
  EXPECT_EQ(run({"solve", data("c5.txt"), "--problem", "mdi", "--d", "3", "--x", "0"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliSolveTest, OracleBudgetFromEnvironment) {
  ::setenv("DIAM_ORACLE_MAX_EDGES", "3", 1);
  Outcome refused = run({"solve", data("k4.txt"), "--problem", "meda", "--d", "3", "--oracle"});
  ::setenv("DIAM_ORACLE_MAX_EDGES", "many", 1);
  Outcome garbage = run({"solve", data("k4.txt"), "--problem", "meda", "--d", "3", "--oracle"});
  ::unsetenv("DIAM_ORACLE_MAX_EDGES");
  EXPECT_EQ(refused.code, 2);
  EXPECT_NE(refused.err.find("budget"), std::string::npos);
  EXPECT_EQ(garbage.code, 2);
}

TEST(CliSolveTest, JsonIsByteIdentical) {
  std::vector<std::string> args{"solve", data("petersen.txt"), "--problem", "mda", "--d", "3",
                                "--k", "5", "--json"};
  Outcome first = run(args), second = run(args);
  EXPECT_EQ(first.out, second.out);
  std::vector<std::string> oracle{"solve", data("k4.txt"), "--problem", "meda", "--d", "3",
                                  "--oracle", "--workers", "3", "--json"};
  EXPECT_EQ(run(oracle).out, run(oracle).out);
}

TEST(CliVerifyTest, Examples) {
  Outcome valid = run({"verify", data("c5.txt"), "--problem", "mda", "--d", "3", "--k", "1",
                   "--deleted", "0-1"});
  EXPECT_EQ(valid.code, 0);
  Outcome empty = run({"verify", data("p4.txt"), "--problem", "meda", "--d", "3", "--deleted", ""});
  EXPECT_EQ(empty.code, 0);
  Outcome cut = run({"verify", data("c5.txt"), "--problem", "mda", "--d", "3", "--deleted",
                 "0-1,2-3", "--json"});
  EXPECT_EQ(cut.code, 1);
  json j = json::parse(cut.out);
  EXPECT_EQ(j["reason"], "disconnected");
  EXPECT_EQ(j["achieved_diameter"], "inf");
  Outcome range = run({"verify", data("c5.txt"), "--problem", "mda", "--d", "3", "--deleted", "0-9"});
  EXPECT_EQ(range.code, 2);
}

TEST(CliReduceTest, WritesEdgeListAndSidecar) {
  const fs::path dir = fs::temp_directory_path() / "diamaug_cli_test";
  fs::create_directories(dir);
  const std::string prefix = (dir / "k2").string();
  Outcome r = run({"reduce", "--gamma", data("k2.txt"), "--c", "1", "--target", "diam3", "--out",
               prefix});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("diameter: 3"), std::string::npos);
  EXPECT_NE(r.out.find("k: 3"), std::string::npos);
  diamaug::Graph g = diamaug::read_edge_list_file(prefix + ".txt");
  EXPECT_EQ(g.num_vertices(), 20);
  std::ifstream side(prefix + ".json");
  json j = json::parse(side);
  EXPECT_EQ(j["n"], 20);
  EXPECT_EQ(j["m"], g.num_edges());
  EXPECT_EQ(j["k"], 3);
  EXPECT_EQ(j["target_d"], 5);
  EXPECT_EQ(j["roles"].size(), 20u);
  EXPECT_TRUE(j.contains("source"));
  fs::remove_all(dir);
}

TEST(CliReduceTest, TargetsAndComposition) {
  Outcome d4 = run({"reduce", "--gamma", data("k2.txt"), "--c", "1", "--target", "diam4", "--json"});
  ASSERT_EQ(d4.code, 0) << d4.err;
  EXPECT_EQ(json::parse(d4.out)["diameter"], 4);

  Outcome composed = run({"reduce", "--gamma", data("k2.txt"), "--c", "1", "--extend-d", "6",
                      "--extend-k", "2", "--json"});
  ASSERT_EQ(composed.code, 0) << composed.err;
  json j = json::parse(composed.out);
  EXPECT_EQ(j["diameter"], 6);
  EXPECT_EQ(j["target_d"], 8);
  EXPECT_NE(j["source"].get<std::string>().find("route k=2"), std::string::npos);

  EXPECT_EQ(run({"reduce", "--gamma", data("k2.txt"), "--c", "1", "--extend-d", "5",
                 "--extend-k", "5"})
                .code,
            2);
  EXPECT_EQ(run({"reduce", "--gamma", data("k2.txt"), "--c", "1", "--target", "diam9"}).code, 2);

  Outcome check = run({"reduce", "--gamma", data("k3.txt"), "--c", "1", "--check"});
  EXPECT_EQ(check.code, 0) << check.err;
  EXPECT_NE(check.out.find("agree: yes"), std::string::npos);
}

TEST(CliTableTest, Grid) {
  Outcome t = run({"table"});
  ASSERT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("2     P     ?"), std::string::npos);
  EXPECT_NE(t.out.find("3     ?     NP-c"), std::string::npos);
  Outcome j = run({"table", "--json", "--max-k", "8"});
  json rows = json::parse(j.out)["rows"];
  EXPECT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows[1][0], "P");
  EXPECT_EQ(rows[2][1], "NP-c");
  EXPECT_EQ(rows[2][0], "?");
  EXPECT_EQ(rows[7][7], "?");
}
