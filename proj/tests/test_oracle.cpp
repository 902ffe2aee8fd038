#include <gtest/gtest.h>

#include "cobweb/oracle.hpp"

namespace cobweb::oracle {
namespace {

TEST(Oracle, Triangles) {
  EXPECT_EQ(pascal(5)[5][2], 10);
  EXPECT_EQ(stirling1(4)[4][2], 11);
  EXPECT_EQ(stirling2(5)[5][3], 25);
  EXPECT_EQ(gaussian(4, 2)[4][2], 35);
  EXPECT_EQ(gaussian(3, 2)[3][2], 7);
  const auto c = stirling1(10);
  for (std::uint64_t n = 0; n <= 10; ++n) {
    Integer s = 0;
    for (const auto& x : c[n]) s += x;
    Integer fact = 1;
    for (std::uint64_t i = 2; i <= n; ++i) fact *= static_cast<unsigned long>(i);
    EXPECT_EQ(s, fact);
  }
}

TEST(Oracle, FibByAddition) {
  EXPECT_EQ(fib_by_addition(0), 0);
  EXPECT_EQ(fib_by_addition(10), 55);
}

TEST(Oracle, StrictChains) {
  EXPECT_EQ(strict_chains_dfs(3, 0, 3), 4);
  EXPECT_EQ(strict_chains_dfs(3, 3, 4), 0);
  EXPECT_EQ(strict_chains_dfs(3, 2, 2), 1);
  EXPECT_THROW(strict_chains_dfs(3, 0, 5), std::out_of_range);
}

TEST(Oracle, MobiusSmall) {
  const auto mu = mobius_by_recursion(2);
  EXPECT_EQ(mu(0, 0), 1);
  EXPECT_EQ(mu(0, 1), -1);
  EXPECT_EQ(mu(0, 2), 0);
}

TEST(Oracle, Leibniz) {
  IntMatrix m(2, 2);
  m(0, 0) = 3;
  m(0, 1) = 1;
  m(1, 0) = 4;
  m(1, 1) = 2;
  EXPECT_EQ(leibniz_determinant(m), 2);
  EXPECT_THROW(leibniz_determinant(IntMatrix(10, 10)), std::invalid_argument);
}

TEST(Oracle, CopiesByBitmask) {
  EXPECT_EQ(copies_by_bitmask(Vertex{.level = 2, .pos = 1}, 2), 6);
  EXPECT_EQ(copies_by_bitmask(kRoot, 5), 1);
}

}  // namespace
}  // namespace cobweb::oracle
