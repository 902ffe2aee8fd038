#include <gtest/gtest.h>

#include <json.hpp>

#include "cobweb/chain_interpretation.hpp"
#include "cobweb/export.hpp"
#include "cobweb/incidence_algebra.hpp"

namespace cobweb {
namespace {

using nlohmann::json;

TEST(Dense, Format) {
  const auto m = zeta_from_order(1).dense();
  EXPECT_EQ(to_dense(m), "1 1\n0 1\n");
}

TEST(Csv, Format) {
  const auto mu = mobius(zeta_from_order(2)).dense();
  EXPECT_EQ(to_csv(mu), "1,-1,0\n0,1,-1\n0,0,1\n");
}

TEST(Json, MatrixSchema) {
  const auto doc = json::parse(to_json(zeta_from_order(2).dense()));
  EXPECT_EQ(doc["schema"], kSchemaVersion);
  EXPECT_EQ(doc["size"], 3);
  ASSERT_EQ(doc["rows"].size(), 3u);
  EXPECT_EQ(doc["rows"][0][2], "1");
  EXPECT_EQ(doc["rows"][2][0], "0");
}

TEST(Json, MatrixRoundTrip) {
  for (std::uint32_t L : {0u, 3u, 6u, 9u}) {
    const auto mu = mobius(zeta_from_order(L)).dense();
    EXPECT_EQ(matrix_from_json(to_json(mu)), mu) << L;
  }
  IntMatrix big(1, 2);
  big(0, 0) = fib(200);
  big(0, 1) = -fib(150);
  const auto text = to_json(big);
  EXPECT_NE(text.find(fib(200).get_str()), std::string::npos);
  EXPECT_EQ(matrix_from_json(text), big);
}

TEST(Json, MatrixRejectsMalformed) {
  EXPECT_THROW(matrix_from_json("not json"), std::invalid_argument);
  EXPECT_THROW(matrix_from_json(R"({"schema":2,"size":1,"rows":[["1"]]})"), std::invalid_argument);
  EXPECT_THROW(matrix_from_json(R"({"schema":1,"size":2,"rows":[["1"]]})"), std::invalid_argument);
  EXPECT_THROW(matrix_from_json(R"({"schema":1,"size":1,"rows":[["x"]]})"), std::invalid_argument);
}

TEST(Json, Truncation) {
  const auto doc = json::parse(to_json(truncate(3)));
  EXPECT_EQ(doc["schema"], kSchemaVersion);
  EXPECT_EQ(doc["max_level"], 3);
  EXPECT_EQ(doc["vertices"], 5);
  EXPECT_EQ(doc["edges"], json::parse("[[0,1],[1,2],[2,3],[2,4]]"));
}

TEST(Json, ChainReport) {
  const auto doc = json::parse(to_json(chain_count_report(3, 5)));
  EXPECT_EQ(doc["n"], 5);
  EXPECT_EQ(doc["k"], 3);
  EXPECT_EQ(doc["per_source"], "15");
  EXPECT_EQ(doc["total"], "30");
  EXPECT_EQ(doc["fibonomial"], "15");
}

}  // namespace
}  // namespace cobweb
