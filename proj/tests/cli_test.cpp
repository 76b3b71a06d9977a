#include "dicolor/cli.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "dicolor/digraph.hpp"
#include "dicolor/families.hpp"

namespace dicolor {
namespace {

using Json = nlohmann::json;

struct CliResult {
  int status;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

CliResult invoke(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::run(args, in, out, err);
  return {status, out.str(), err.str()};
}

const std::string kThreeCycle = "3 3\n0 1\n1 2\n2 0\n";

TEST(Cli, GenDnFive) {
  const CliResult r = invoke({"gen", "--family", "dn", "--n", "5"});
  ASSERT_EQ(r.status, 0) << r.err;
  const Digraph d = parse_edge_list(r.out);
  EXPECT_EQ(d.arc_count(), 10);
  EXPECT_EQ(d, d_tournament(5));
}

TEST(Cli, GenFamiliesAndFormats) {
  EXPECT_EQ(parse_edge_list(invoke({"gen", "--family", "sn", "--n", "6"}).out), s_tournament(6));
  EXPECT_EQ(parse_edge_list(invoke({"gen", "--family", "cycle", "--n", "4"}).out), directed_cycle(4));
  EXPECT_EQ(parse_edge_list(invoke({"gen", "--family", "transitive", "--n", "4"}).out), transitive_tournament(4));
  const Json j = invoke({"gen", "--family", "transitive", "--n", "3", "--format", "json"}).json();
  EXPECT_EQ(j["arcs"], Json::parse("[[0,1],[0,2],[1,2]]"));
  EXPECT_EQ(j["seed"], 0);
  EXPECT_EQ(j["command"], "gen");
  EXPECT_TRUE(j.contains("version"));
  EXPECT_NE(invoke({"gen", "--family", "cycle", "--n", "3", "--format", "dot"}).out.find("2 -> 0"), std::string::npos);
}

TEST(Cli, GenIsSeedDeterministic) {
  const auto a = invoke({"gen", "--family", "random-digraph", "--n", "8", "--p", "0.3", "--seed", "7"});
  const auto b = invoke({"gen", "--family", "random-digraph", "--n", "8", "--p", "0.3", "--seed", "7"});
  const auto c = invoke({"gen", "--family", "random-digraph", "--n", "8", "--p", "0.3", "--seed", "8"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  Rng rng(7);
  EXPECT_EQ(parse_edge_list(a.out), random_digraph(8, 0.3, rng));
  const Digraph t = parse_edge_list(invoke({"gen", "--family", "random-tournament", "--n", "7"}).out);
  EXPECT_TRUE(t.is_tournament());
}

TEST(Cli, GenKnn) {
  const CliResult ok = invoke({"gen", "--family", "knn", "--n", "3", "--t", "3", "--format", "json"});
  ASSERT_EQ(ok.status, 0) << ok.err;
  EXPECT_EQ(ok.json()["m"], 9);
  const CliResult multi = invoke({"gen", "--family", "knn", "--n", "3", "--t", "3", "--k", "3"});
  ASSERT_EQ(multi.status, 0);
  EXPECT_EQ(parse_edge_list(multi.out).arc_count(), 27);
  const CliResult none = invoke({"gen", "--family", "knn", "--n", "4", "--t", "2", "--attempts", "50", "--format", "json"});
  EXPECT_EQ(none.status, 1);
  EXPECT_EQ(none.json()["found"], false);
}

TEST(Cli, BoundsOnThreeCycle) {
  const CliResult r = invoke({"bounds"}, kThreeCycle);
  ASSERT_EQ(r.status, 0) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["caro_wei_directed"].get<double>(), 2.0);
  EXPECT_EQ(j["alpha"], 2);
  EXPECT_NE(r.out.find("\"caro_wei_directed\": 2.0"), std::string::npos);
  bool saw_triangle = false;
  for (const auto& b : j["bounds"]) {
    if (b["id"] == "tournament_triangles") {
      saw_triangle = true;
      EXPECT_EQ(b["value"].get<double>(), 2.0);
    }
  }
  EXPECT_TRUE(saw_triangle);
}

TEST(Cli, AlphaChiColorPoly) {
  const std::string d5 = to_edge_list(d_tournament(5));
  EXPECT_EQ(invoke({"alpha"}, d5).json()["alpha"], 4);
  EXPECT_EQ(invoke({"chi"}, d5).json()["chi"], 2);
  const Json p = invoke({"poly"}, kThreeCycle).json();
  EXPECT_EQ(p["n"], 3);
  EXPECT_EQ(p["coeffs"], Json::parse(R"(["0","-1","0","1"])"));
  EXPECT_EQ(invoke({"poly", "--format", "text"}, kThreeCycle).out, "x^3 - x\n");

  const Json greedy = invoke({"color", "--method", "greedy-girth"}, to_edge_list(directed_cycle(5))).json();
  EXPECT_EQ(greedy["proper"], true);
  EXPECT_LE(greedy["colors_used"].get<int>(), greedy["bound"].get<int>());
  const Json part = invoke({"color", "--method", "partition"}, kThreeCycle).json();
  EXPECT_EQ(part["colors_used"], 2);
  const Json dfs = invoke({"color", "--method", "dfs-mod-k", "--k", "2"}, to_edge_list(directed_cycle(4))).json();
  EXPECT_EQ(dfs["colors"], Json::parse("[0,1,0,1]"));
}

TEST(Cli, ColoringViolationsExitOne) {
  const CliResult dfs = invoke({"color", "--method", "dfs-mod-k", "--k", "2"}, kThreeCycle);
  EXPECT_EQ(dfs.status, 1);
  EXPECT_EQ(dfs.json()["witness"].size(), 3U);
  const CliResult part = invoke({"color", "--method", "partition"}, "3 6\n0 1\n1 0\n1 2\n2 1\n0 2\n2 0\n");
  EXPECT_EQ(part.status, 1);
  EXPECT_EQ(part.json()["part"], Json::parse("[0,1,2]"));
  EXPECT_EQ(invoke({"color", "--method", "dfs-mod-k"}, kThreeCycle).status, 2);
}

TEST(Cli, VerifySuites) {
  const CliResult sn = invoke({"verify", "--suite", "sn", "--max-n", "10"});
  EXPECT_EQ(sn.status, 0) << sn.out;
  EXPECT_EQ(sn.json()["ok"], true);
  const CliResult all = invoke({"verify", "--all"});
  EXPECT_EQ(all.status, 0) << all.out;
  EXPECT_EQ(all.json()["suites"].size(), 6U);
  const CliResult text = invoke({"verify", "--suite", "allcycle", "--max-n", "5", "--format", "text"});
  EXPECT_NE(text.out.find("allcycle  max_n 5"), std::string::npos);
}

TEST(Cli, ReportsAreByteDeterministic) {
  const std::vector<std::string> args = {"verify", "--suite", "caro-wei", "--suite", "coeff", "--seed", "3"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
  EXPECT_EQ(invoke({"bounds"}, kThreeCycle).out, invoke({"bounds"}, kThreeCycle).out);
}

TEST(Cli, UsageParseAndCapacityErrors) {
  EXPECT_EQ(invoke({}).status, 2);
  EXPECT_EQ(invoke({"frobnicate"}).status, 2);
  EXPECT_EQ(invoke({"gen", "--family", "petersen", "--n", "5"}).status, 2);
  EXPECT_EQ(invoke({"gen", "--family", "cycle"}).status, 2);
  EXPECT_EQ(invoke({"verify"}).status, 2);
  EXPECT_EQ(invoke({"verify", "--suite", "nope"}).status, 2);
  EXPECT_EQ(invoke({"verify", "--suite", "sn", "--all"}).status, 2);
  EXPECT_EQ(invoke({"bounds", "--format", "dot"}, kThreeCycle).status, 2);

  const CliResult parse = invoke({"poly"}, "3 2\n0 1\n1 1\n");
  EXPECT_EQ(parse.status, 2);
  EXPECT_NE(parse.err.find("line 3"), std::string::npos) << parse.err;

  const CliResult cap = invoke({"poly"}, to_edge_list(directed_cycle(15)));
  EXPECT_EQ(cap.status, 2);
  EXPECT_NE(cap.err.find("limit 14"), std::string::npos) << cap.err;
  EXPECT_EQ(invoke({"poly", "--dp-limit", "16"}, to_edge_list(directed_cycle(15))).status, 0);
  EXPECT_EQ(invoke({"verify", "--suite", "dn-max", "--max-n", "7"}).status, 2);
  EXPECT_EQ(invoke({"alpha", "/nonexistent/file"}).status, 2);
  EXPECT_EQ(invoke({"--version"}).status, 0);
  EXPECT_EQ(invoke({"--help"}).status, 0);
}

TEST(Cli, ReadsInputFile) {
  const std::string path = ::testing::TempDir() + "dicolor_cli_input.txt";
  {
    std::ofstream f(path);
    f << kThreeCycle;
  }
  EXPECT_EQ(invoke({"alpha", path}).json()["alpha"], 2);
  std::remove(path.c_str());
}

}  // namespace
}  // namespace dicolor
