#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "tridecomp/tridecomp.hpp"

using namespace tridecomp;
using Json = nlohmann::ordered_json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(TRIDECOMP_SAMPLE_DIR) + "/" + name; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("tridecomp_cli_" + name);
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto p = temp_path(name);
  std::ofstream(p) << text;
  return p;
}

std::size_t count_lines(const std::string& s) {
  std::size_t k = 0;
  for (char c : s) k += c == '\n';
  return k;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(CliDecompose, CompleteGraphExact) {
  const auto r = run_cli({"decompose", "--input", sample("k5.txt"), "--exact"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["schema_version"], 1);
  EXPECT_EQ(doc["summary"]["mode"], "exact");
  EXPECT_EQ(doc["summary"]["edge_sum_status"], "pass");
  ASSERT_EQ(doc["triangles"].size(), 10u);
  for (const auto& t : doc["triangles"]) EXPECT_EQ(t["weight"], "1/3");
  for (const auto& e : doc["edge_sums"]) EXPECT_EQ(e["sum"], "1/1");
  EXPECT_TRUE(contains(r.err, "min weight: 1/3"));
}

TEST(CliDecompose, JoinConstructionExitsNegative) {
  const auto r = run_cli({"decompose", "--input", sample("join_k1.txt")});
  EXPECT_EQ(r.code, cli::kExitNegative);
  const Json doc = Json::parse(r.out);
  EXPECT_LT(doc["summary"]["min_weight"].get<double>(), 0.0);
  EXPECT_GT(doc["summary"]["negative_triangles"].get<int>(), 0);
  EXPECT_EQ(doc["summary"]["edge_sum_status"], "pass");
  EXPECT_EQ(doc["summary"]["min_witness"].size(), 3u);
}

TEST(CliDecompose, DenseRandomGraphPasses) {
  const auto r = run_cli({"decompose", "--input", sample("gnp_n60_d083.txt")});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["summary"]["n"], 60);
  EXPECT_GE(doc["summary"]["min_degree"].get<int>(), 50);
  EXPECT_GE(doc["summary"]["min_weight"].get<double>(), -1e-12);
}

TEST(CliDecompose, UndefinedDelegationExitsThree) {
  const auto p = write_temp("k3_pendant.txt", "0 1\n1 2\n0 2\n2 3\n");
  const auto r = run_cli({"decompose", "--input", p.string()});
  EXPECT_EQ(r.code, cli::kExitUndefined);
  EXPECT_TRUE(contains(r.err, "(0,1,2)"));
}

TEST(CliDecompose, UncoverableEdgeExitsThree) {
  const auto p = write_temp("c4.txt", "0 1\n1 2\n2 3\n0 3\n");
  const auto r = run_cli({"decompose", "--input", p.string(), "--exact"});
  EXPECT_EQ(r.code, cli::kExitUndefined);
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["summary"]["edge_sum_status"], "uncoverable_edge");
  EXPECT_EQ(doc["summary"]["uncovered_edges"].size(), 4u);
}

TEST(CliDecompose, CsvToFile) {
  const auto out = temp_path("k7.csv");
  const auto r = run_cli({"decompose", "-i", sample("k7.txt"), "--exact", "--format", "csv", "-o", out.string()});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "min weight: 1/5"));
  const std::string csv = slurp(out);
  EXPECT_EQ(csv.rfind("# schema_version=1\n", 0), 0u);
  EXPECT_TRUE(contains(csv, "\na,b,c,weight\n0,1,2,1/5\n"));
  EXPECT_TRUE(contains(csv, "\n\nu,v,sum\n0,1,1/1\n"));
  // 13 comment lines, table header, 35 triangles, blank separator, table header, 21 edges.
  EXPECT_EQ(count_lines(csv), 13u + 1u + 35u + 1u + 1u + 21u);
}

TEST(CliDecompose, OutputIsReproducible) {
  for (const char* mode : {"--exact", "--tol"}) {
    std::vector<std::string> base{"decompose", "-i", sample("random_n9_seed3.txt")};
    if (std::string(mode) == "--exact") base.push_back(mode);
    else base.insert(base.end(), {mode, "1e-9"});
    auto one = base, four = base;
    one.insert(one.end(), {"--threads", "1", "-o", temp_path("rep1.json").string()});
    four.insert(four.end(), {"--threads", "4", "-o", temp_path("rep4.json").string()});
    ASSERT_EQ(run_cli(one).code, 0);
    ASSERT_EQ(run_cli(four).code, 0);
    EXPECT_EQ(slurp(temp_path("rep1.json")), slurp(temp_path("rep4.json")));
  }
}

TEST(CliDecompose, Errors) {
  EXPECT_EQ(run_cli({"decompose", "--input", "/nonexistent/graph.txt"}).code, cli::kExitError);
  EXPECT_EQ(run_cli({"decompose"}).code, cli::kExitError);
  EXPECT_EQ(run_cli({"decompose", "-i", sample("k5.txt"), "--format", "xml"}).code, cli::kExitError);
  EXPECT_EQ(run_cli({"decompose", "-i", sample("k5.txt"), "--tol", "-1"}).code, cli::kExitError);
  const auto bad = write_temp("bad.txt", "0 1\n1 x\n");
  const auto r = run_cli({"decompose", "-i", bad.string()});
  EXPECT_EQ(r.code, cli::kExitError);
  EXPECT_TRUE(contains(r.err, "line 2"));
  const auto loop = write_temp("loop.txt", "0 1\n3 3\n");
  EXPECT_EQ(run_cli({"decompose", "-i", loop.string()}).code, cli::kExitError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kExitError);
  EXPECT_EQ(run_cli({"--help"}).code, cli::kExitOk);
}

TEST(CliVerify, CompleteGraphExact) {
  const auto r = run_cli({"verify", "--input", sample("k7.txt"), "--exact"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.out << r.err;
  EXPECT_TRUE(contains(r.out, "oracle == fast (35 triangles)"));
  EXPECT_TRUE(contains(r.out, "verify: ok"));
}

TEST(CliVerify, RandomGraphOracle) {
  const auto r = run_cli({"verify", "--input", sample("random_n9_seed3.txt")});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_TRUE(contains(r.out, "oracle == fast"));
}

TEST(CliVerify, JoinConstructionReportsWitness) {
  const auto r = run_cli({"verify", "--input", sample("join_k1.txt")});
  EXPECT_EQ(r.code, cli::kExitNegative);
  EXPECT_TRUE(contains(r.out, "min weight: -"));
  EXPECT_TRUE(contains(r.out, " at ("));
  EXPECT_TRUE(contains(r.out, "oracle cross-check skipped"));
  EXPECT_TRUE(contains(r.out, "verify: failed"));
}

TEST(CliVerify, BridgeAuditNeedsThreeQuarterDegree) {
  // C4 blow-up with clique parts: delta = 14 of 20, so 4(n - delta) > n and no audit.
  const auto r = run_cli({"verify", "--input", sample("c4_blowup_t5.txt")});
  EXPECT_FALSE(contains(r.out, "bridge audit"));
  const auto k7 = run_cli({"verify", "--input", sample("k7.txt")});
  EXPECT_TRUE(contains(k7.out, "bridge audit at d=1/7: 2520 points, 0 violations"));
  EXPECT_TRUE(contains(k7.out, "0 above 1"));
}

TEST(CliGen, Complete) {
  const auto r = run_cli({"gen", "complete", "--n", "6"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("n 6\n", 0), 0u);
  EXPECT_EQ(count_lines(r.out), 1u + 15u);
  EXPECT_EQ(load_edge_list(r.out).edge_count(), 15u);
}

TEST(CliGen, JoinConstruction) {
  const auto r = run_cli({"gen", "join", "--k", "1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("n 36\n", 0), 0u);
  EXPECT_EQ(count_lines(r.out), 1u + 468u);
  const Graph g = load_edge_list(r.out);
  EXPECT_EQ(g.min_degree(), 26u);
  EXPECT_EQ(run_cli({"gen", "join", "--k", "1", "--seed", "0"}).out, r.out);
  const auto shuffled = run_cli({"gen", "join", "--k", "1", "--seed", "5"});
  EXPECT_NE(shuffled.out, r.out);
  EXPECT_EQ(count_lines(shuffled.out), 469u);
}

TEST(CliGen, Blowup) {
  const auto r = run_cli({"gen", "blowup", "--base", "c4", "--part", "5", "--mode", "clique"});
  ASSERT_EQ(r.code, 0);
  const Graph g = load_edge_list(r.out);
  EXPECT_EQ(g.order(), 20u);
  EXPECT_EQ(g.min_degree(), 14u);
  EXPECT_EQ(r.out, slurp(sample("c4_blowup_t5.txt")));
  const auto k = run_cli({"gen", "blowup", "--base", "k4", "--part", "3", "--mode", "independent"});
  EXPECT_EQ(load_edge_list(k.out).min_degree(), 9u);
  const auto file = run_cli({"gen", "blowup", "--base", sample("k5.txt"), "--part", "2", "--mode", "clique"});
  EXPECT_EQ(load_edge_list(file.out).order(), 10u);
}

TEST(CliGen, GnpIsSeeded) {
  const auto a = run_cli({"gen", "gnp", "--n", "40", "--p", "0.95", "--delta-min", "34", "--seed", "7"});
  const auto b = run_cli({"gen", "gnp", "--n", "40", "--p", "0.95", "--delta-min", "34", "--seed", "7"});
  const auto c = run_cli({"gen", "gnp", "--n", "40", "--p", "0.95", "--delta-min", "34", "--seed", "8"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  EXPECT_GE(load_edge_list(a.out).min_degree(), 34u);
  const auto file = temp_path("gnp.txt");
  ASSERT_EQ(run_cli({"gen", "gnp", "--n", "40", "--p", "0.95", "--delta-min", "34", "--seed", "7", "-o", file.string()})
                .code,
            0);
  EXPECT_EQ(slurp(file), a.out);
}

TEST(CliGen, Errors) {
  EXPECT_EQ(run_cli({"gen", "gnp", "--n", "10", "--p", "1.5"}).code, cli::kExitError);
  EXPECT_EQ(run_cli({"gen", "gnp", "--n", "30", "--p", "0.1", "--delta-min", "29", "--seed", "1"}).code,
            cli::kExitError);
  EXPECT_EQ(run_cli({"gen", "blowup", "--base", "q9", "--part", "2", "--mode", "clique"}).code, cli::kExitError);
  EXPECT_EQ(run_cli({"gen", "blowup", "--base", "c4", "--part", "2", "--mode", "both"}).code, cli::kExitError);
  EXPECT_EQ(run_cli({"gen", "wheel"}).code, cli::kExitError);
}

TEST(CliProgram, Threshold) {
  const auto r = run_cli({"program", "threshold"});
  ASSERT_EQ(r.code, 0);
  const double d = std::stod(r.out);
  EXPECT_NEAR(d, 0.172673164646, 1e-12);
  EXPECT_EQ(r.out.rfind("0.172673164646011\n", 0), 0u);
  EXPECT_TRUE(contains(r.out, "1 - d* = 0.827326835353989"));
  EXPECT_TRUE(contains(r.out, "exact 1/2 - 1/14*sqrt(21)"));
}

TEST(CliProgram, Certify) {
  const auto below = run_cli({"program", "certify", "--d", "0.1726731646460"});
  EXPECT_EQ(below.code, 0);
  EXPECT_EQ(below.out.rfind("certified_le_1\n", 0), 0u);
  const auto above = run_cli({"program", "certify", "--d", "0.18"});
  EXPECT_EQ(above.code, cli::kExitNegative);
  EXPECT_EQ(above.out.rfind("exceeds_1\n", 0), 0u);
  EXPECT_TRUE(contains(above.out, "value 1.08105468750000"));
  const auto at = run_cli({"program", "certify", "--d", "dstar", "--exact"});
  EXPECT_EQ(at.code, 0);
  EXPECT_TRUE(contains(at.out, "\nvalue 1\nexact 1/1\n"));
  const auto js = Json::parse(run_cli({"program", "certify", "--d", "0.17", "--json"}).out);
  EXPECT_EQ(js["verdict"], "certified_le_1");
  EXPECT_NEAR(js["value"].get<double>(), 0.9717631, 1e-6);
  EXPECT_EQ(run_cli({"program", "certify", "--d", "0.3"}).code, cli::kExitError);
  EXPECT_EQ(run_cli({"program", "certify", "--d", "-1"}).code, cli::kExitError);
}

TEST(CliProgram, ClampTest) {
  const auto r = run_cli({"program", "clamp-test", "--level", "4", "--trials", "100000", "--seed", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("pass", 0), 0u);
  const auto ex = run_cli({"program", "clamp-test", "--level", "7", "--trials", "200", "--exact", "--json"});
  EXPECT_EQ(ex.code, 0);
  EXPECT_EQ(Json::parse(ex.out)["passed"], true);
  EXPECT_EQ(run_cli({"program", "clamp-test", "--level", "12"}).code, cli::kExitError);
}

TEST(CliProgram, Search) {
  const auto r = run_cli({"program", "search", "--level", "9", "--d", "dstar", "--grid", "2000"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "best_point a=0, b=0"));
  const auto j = Json::parse(run_cli({"program", "search", "--level", "10", "--d", "0.18", "--json"}).out);
  EXPECT_NEAR(j["best_value"].get<double>(), 1.0821975423224512, 1e-12);
  EXPECT_EQ(run_cli({"program", "search", "--level", "8"}).code, cli::kExitError);
}

TEST(CliProgram, Eval) {
  const auto exact = run_cli({"program", "eval", "--level", "10", "--d", "dstar", "--exact", "--point", "b=0"});
  EXPECT_EQ(exact.code, 0);
  EXPECT_TRUE(contains(exact.out, "exact 1/1"));
  const auto e = run_cli({"program", "eval", "--fn", "E", "--args", "0", "--d", "0.17"});
  EXPECT_EQ(e.code, 0);
  EXPECT_NEAR(std::stod(e.out.substr(e.out.find(' '))), -0.584656, 1e-9);
  const auto off = run_cli({"program", "eval", "--level", "9", "--d", "0.17", "--point", "a=0.5,b=0"});
  EXPECT_EQ(off.code, cli::kExitError);
  EXPECT_TRUE(contains(off.err, "a <= d"));
  EXPECT_EQ(run_cli({"program", "eval", "--level", "9", "--point", "a=0"}).code, cli::kExitError);
  EXPECT_EQ(run_cli({"program", "eval", "--level", "2", "--point", "x=1"}).code, cli::kExitError);
  EXPECT_EQ(run_cli({"program", "eval", "--fn", "H1", "--args", "0.1"}).code, cli::kExitError);
}
