#include <gtest/gtest.h>

#include <set>

#include "cobweb/crosscheck.hpp"

namespace cobweb {
namespace {

bool all_passed(const std::vector<CheckResult>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const auto& r) { return r.passed; });
}

TEST(Crosscheck, NamesAreUnique) {
  const auto names = crosscheck_names();
  EXPECT_GE(names.size(), 12u);
  EXPECT_EQ(std::set<std::string>(names.begin(), names.end()).size(), names.size());
}

TEST(Crosscheck, DefaultConfigPasses) {
  const auto rs = run_crosscheck(CrosscheckConfig{});
  ASSERT_EQ(rs.size(), crosscheck_names().size());
  for (const auto& r : rs) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
}

TEST(Crosscheck, SmallConfigPasses) {
  CrosscheckConfig cfg;
  cfg.max_n = 4;
  cfg.oracle_max_n = 4;
  EXPECT_TRUE(all_passed(run_crosscheck(cfg)));
}

TEST(Crosscheck, ParallelMatchesSerial) {
  CrosscheckConfig serial;
  CrosscheckConfig parallel;
  parallel.jobs = 4;
  EXPECT_EQ(format_table(run_crosscheck(serial)), format_table(run_crosscheck(parallel)));
}

TEST(Crosscheck, InjectedFaultsAreCaught) {
  for (auto fault : {Fault::FibonomialOffByOne, Fault::ZetaFlip}) {
    CrosscheckConfig cfg;
    cfg.fault = fault;
    cfg.jobs = 2;
    EXPECT_FALSE(all_passed(run_crosscheck(cfg)));
  }
}

TEST(Crosscheck, Validation) {
  CrosscheckConfig cfg;
  cfg.oracle_max_n = 11;
  EXPECT_THROW(validate(cfg), std::invalid_argument);
  cfg = {};
  cfg.jobs = 0;
  EXPECT_THROW(validate(cfg), std::invalid_argument);
  cfg = {};
  cfg.max_n = 0;
  EXPECT_THROW(validate(cfg), std::invalid_argument);
  EXPECT_NO_THROW(validate(CrosscheckConfig{}));
}

TEST(Crosscheck, TableFormat) {
  const std::vector<CheckResult> rs = {{"a.one", true, "ok"}, {"b.two", false, "bad"}};
  const auto t = format_table(rs);
  EXPECT_NE(t.find("PASS  a.one"), std::string::npos);
  EXPECT_NE(t.find("FAIL  b.two"), std::string::npos);
  EXPECT_NE(t.find("1/2 checks passed"), std::string::npos);
}

}  // namespace
}  // namespace cobweb
