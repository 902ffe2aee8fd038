#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cobweb/export.hpp"
#include "cobweb/incidence_algebra.hpp"

namespace {

using nlohmann::json;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string("env -u COBWEB_ORACLE_MAX '") + COBWEB_CLI_PATH + "' " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("cobweb_test_" + std::to_string(::getpid()) + "_" + name);
}

TEST(Cli, FibonomialAllMethods) {
  const auto r = run("fibonomial 4 2 --method all");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out), std::vector<std::string>(5, "6"));
}

TEST(Cli, FibonomialExamples) {
  EXPECT_EQ(run("fibonomial 5 0").out, "1\n");
  EXPECT_EQ(run("fibonomial 5 3 --method gv").out, "15\n");
  EXPECT_EQ(run("fibonomial 5 3 --method chains").out, "15\n");
  EXPECT_EQ(run("fibonomial 40 20 --method recB").out, cobweb::fibonomial_def(40, 20).get_str() + "\n");
}

TEST(Cli, FibonomialJson) {
  const auto r = run("--format json fibonomial 6 3 --method all");
  ASSERT_EQ(r.code, 0);
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_EQ(doc["values"]["gv"], "60");
  EXPECT_EQ(doc["agree"], true);
}

TEST(Cli, FibFormatAfterSubcommand) {
  const auto r = run("fib 100 --format json");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["fib"], "354224848179261915075");
}

TEST(Cli, ZetaDenseFirstRowAllOnes) {
  const auto r = run("zeta --levels 5 --source order --format dense");
  ASSERT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 13u);
  EXPECT_EQ(ls[0], "1 1 1 1 1 1 1 1 1 1 1 1 1");
}

TEST(Cli, ZetaSourcesByteIdentical) {
  for (int L = 0; L <= 10; ++L) {
    const auto a = run("zeta --levels " + std::to_string(L) + " --source order");
    const auto b = run("zeta --levels " + std::to_string(L) + " --source explicit");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out) << L;
  }
}

TEST(Cli, ZetaJsonRoundTrips) {
  const auto r = run("zeta --levels 6 --format json");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(cobweb::matrix_from_json(r.out), cobweb::zeta_from_order(6).dense());
  const auto m = run("mobius --levels 6 --format json");
  EXPECT_EQ(cobweb::matrix_from_json(m.out), cobweb::mobius(cobweb::zeta_from_order(6)).dense());
}

TEST(Cli, ZetaCsvAndGolden) {
  EXPECT_EQ(run("zeta --levels 1 --format csv").out, "1,1\n0,1\n");
  std::ifstream f(std::string(COBWEB_TEST_DATA_DIR) + "/zeta_levels5.txt");
  std::stringstream golden;
  golden << f.rdbuf();
  EXPECT_EQ(run("zeta --levels 5 --source explicit").out, golden.str());
}

TEST(Cli, ChainsAndCopies) {
  const auto c = run("--format json chains 3 5 --brute");
  ASSERT_EQ(c.code, 0);
  const auto doc = json::parse(c.out);
  EXPECT_EQ(doc["total"], "30");
  EXPECT_EQ(doc["brute_total"], "30");

  const auto k1 = run("--format json copies 1 5");
  ASSERT_EQ(k1.code, 0);
  const auto d = json::parse(k1.out);
  EXPECT_EQ(d["total"], "5");
  EXPECT_EQ(d["degenerate"], true);
}

TEST(Cli, Konvalina) {
  EXPECT_EQ(run("konvalina --weights 1,2,4 -k 2").out, "first: 14\nsecond: 35\n");
  const auto r = run("konvalina --family arithmetic --n 3 -k 2 --kind second --brute");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "second: 25\nsecond_brute: 25\n");
  EXPECT_EQ(run("konvalina --weights 2,1 -k 1").code, 2);
}

TEST(Cli, GvVerbose) {
  const auto r = run("gv 3 2 --verbose");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "R=[0,1] N=0\nR=[0,2] N=1\nR=[1,2] N=1\n2\n");
}

TEST(Cli, FenceAndBeck) {
  const auto r = run("--format json fence 10 --beck");
  ASSERT_EQ(r.code, 0);
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["ideals"], "144");
  EXPECT_EQ(doc["ideals_brute"], "144");
  EXPECT_TRUE(doc["beck_failures"].empty());
}

TEST(Cli, HasseDot) {
  const auto p = temp_path("h5.dot");
  ASSERT_EQ(run("hasse --levels 5 --out '" + p.string() + "'").code, 0);
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  const std::string dot = ss.str();
  std::filesystem::remove(p);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  std::size_t nodes = 0;
  std::size_t edges = 0;
  for (std::size_t at = dot.find("[label="); at != std::string::npos; at = dot.find("[label=", at + 1)) ++nodes;
  for (const auto& l : lines(dot)) edges += l.find(" -> ") != std::string::npos;
  EXPECT_EQ(nodes, 13u);
  EXPECT_EQ(edges, 1u + 1u + 2u + 6u + 15u);
}

TEST(Cli, HasseJsonCounts) {
  const auto zero = json::parse(run("hasse --levels 0 --format json").out);
  EXPECT_EQ(zero["vertices"], 1);
  EXPECT_TRUE(zero["edges"].empty());
  const auto three = json::parse(run("hasse --levels 3 --format json").out);
  EXPECT_EQ(three["edges"].size(), 4u);
}

TEST(Cli, CrosscheckDefault) {
  const auto r = run("crosscheck");
  EXPECT_EQ(r.code, 0);
  std::size_t pass = 0;
  for (const auto& l : lines(r.out)) pass += l.rfind("PASS  ", 0) == 0;
  EXPECT_GE(pass, 12u);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, CrosscheckSmallAndParallel) {
  EXPECT_EQ(run("crosscheck --max-n 4").code, 0);
  EXPECT_EQ(run("crosscheck --jobs 4").out, run("crosscheck --jobs 1").out);
}

TEST(Cli, CrosscheckFaultExitsOne) {
  const auto a = run("crosscheck --inject-fault fibonomial");
  EXPECT_EQ(a.code, 1);
  EXPECT_NE(a.out.find("FAIL"), std::string::npos);
  EXPECT_NE(a.out.find("PASS"), std::string::npos);
  EXPECT_EQ(run("crosscheck --inject-fault zeta").code, 1);
}

TEST(Cli, CrosscheckOutFile) {
  const auto p = temp_path("cc.json");
  ASSERT_EQ(run("crosscheck --format json --out '" + p.string() + "'").code, 0);
  std::ifstream f(p);
  const auto doc = json::parse(f);
  std::filesystem::remove(p);
  EXPECT_EQ(doc["passed"], true);
}

TEST(Cli, OracleEnvironment) {
  const std::string cli = std::string("'") + COBWEB_CLI_PATH + "'";
  EXPECT_EQ(std::system(("COBWEB_ORACLE_MAX=4 " + cli + " chains 0 5 --brute >/dev/null 2>&1").c_str()) >> 8, 2);
  EXPECT_EQ(std::system(("COBWEB_ORACLE_MAX=5 " + cli + " chains 0 5 --brute >/dev/null 2>&1").c_str()) >> 8, 0);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  EXPECT_EQ(run("fibonomial 3").code, 2);
  EXPECT_EQ(run("fibonomial 3 5").code, 2);
  EXPECT_EQ(run("fibonomial 4 2 --method nope").code, 2);
  EXPECT_EQ(run("fibonomial 20 3 --method gv").code, 2);
  EXPECT_EQ(run("zeta --levels 13").code, 2);
  EXPECT_EQ(run("hasse --levels 11").code, 2);
  EXPECT_EQ(run("--format yaml fib 3").code, 2);
  EXPECT_EQ(run("chains 2 9 --brute").code, 2);
  EXPECT_EQ(run("crosscheck --max-n 0").code, 2);
  EXPECT_EQ(run("crosscheck --max-n 5 --oracle-max-n 6").code, 2);
  EXPECT_EQ(run("fence 0").code, 2);
  EXPECT_EQ(run("copies 3 5 --pos 3").code, 2);
}

TEST(Cli, IoErrorExitsOne) {
  EXPECT_EQ(run("hasse --levels 3 --out /nonexistent-dir/x.dot").code, 1);
}

TEST(Cli, HelpExitsZero) {
  EXPECT_EQ(run("--help").code, 0);
  EXPECT_EQ(run("zeta --help").code, 0);
}

TEST(Cli, Deterministic) {
  for (const std::string args : {"crosscheck --jobs 3", "--format json zeta --levels 7", "hasse --levels 6",
                                 "gv 8 4 --verbose", "konvalina --search-fibonomial"}) {
    const auto a = run(args);
    const auto b = run(args);
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

}  // namespace
