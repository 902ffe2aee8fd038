#include <gtest/gtest.h>

#include <regex>
#include <set>

#include "cobweb/cobweb_poset.hpp"
#include "cobweb/oracle.hpp"

namespace cobweb {
namespace {

Vertex V(std::uint64_t pos, std::uint32_t level) { return Vertex{.level = level, .pos = pos}; }

TEST(LevelSize, Examples) {
  EXPECT_EQ(level_size(0), 1u);
  EXPECT_EQ(level_size(1), 1u);
  EXPECT_EQ(level_size(5), 5u);
  EXPECT_EQ(level_size(8), 21u);
}

TEST(Vertex, Validity) {
  EXPECT_TRUE(is_valid(kRoot));
  EXPECT_FALSE(is_valid(V(2, 0)));
  EXPECT_FALSE(is_valid(V(0, 3)));
  EXPECT_TRUE(is_valid(V(2, 3)));
  EXPECT_FALSE(is_valid(V(3, 3)));
  EXPECT_THROW(require_valid(V(3, 3)), std::invalid_argument);
  EXPECT_EQ(to_string(V(2, 3)), "<2,3>");
}

TEST(LinearIndex, Examples) {
  EXPECT_EQ(to_linear(V(1, 3)), 3u);
  EXPECT_EQ(to_linear(kRoot), 0u);
  EXPECT_EQ(to_linear(V(3, 5)), 10u);
  EXPECT_EQ(from_linear(0), kRoot);
  EXPECT_EQ(from_linear(4), V(2, 3));
  EXPECT_EQ(from_linear(12), V(5, 5));
}

TEST(LinearIndex, RoundTripAndMonotone) {
  for (std::uint32_t L = 0; L <= 12; ++L) {
    std::uint32_t prev_level = 0;
    for (std::uint64_t i = 0; i < vertex_count(L); ++i) {
      const Vertex v = from_linear(i);
      EXPECT_EQ(to_linear(v), i);
      EXPECT_GE(v.level, prev_level);
      EXPECT_LE(v.level, L);
      prev_level = v.level;
    }
  }
}

TEST(LinearIndex, VertexCountIsFibonacci) {
  for (std::uint32_t L = 0; L <= 40; ++L) {
    std::uint64_t sum = 0;
    for (std::uint32_t s = 0; s <= L; ++s) sum += level_size(s);
    EXPECT_EQ(vertex_count(L), sum);
    EXPECT_EQ(Integer(static_cast<unsigned long>(vertex_count(L))), fib(L + 2));
  }
}

TEST(LinearIndex, RejectsOutOfRange) {
  EXPECT_THROW(to_linear(V(9, 4)), std::invalid_argument);
  EXPECT_THROW(to_linear(V(1, kMaxLevel + 1)), std::invalid_argument);
}

TEST(Order, Examples) {
  EXPECT_FALSE(leq(V(1, 3), V(2, 3)));
  EXPECT_TRUE(leq(V(1, 3), V(1, 3)));
  EXPECT_TRUE(leq(V(2, 3), V(3, 5)));
  EXPECT_TRUE(covers(V(1, 2), V(2, 3)));
  EXPECT_FALSE(covers(V(1, 2), V(1, 4)));
  EXPECT_TRUE(covers(kRoot, V(1, 1)));
  EXPECT_FALSE(covers(V(1, 3), V(1, 3)));
}

TEST(Order, PartialOrderExhaustive) {
  const auto n = vertex_count(7);
  std::vector<Vertex> vs;
  for (std::uint64_t i = 0; i < n; ++i) vs.push_back(from_linear(i));
  for (const auto& a : vs) {
    EXPECT_TRUE(leq(a, a));
    for (const auto& b : vs) {
      if (leq(a, b) && leq(b, a)) EXPECT_EQ(a, b);
      if (!leq(a, b)) continue;
      for (const auto& c : vs) {
        if (leq(b, c)) EXPECT_TRUE(leq(a, c));
      }
    }
  }
}

TEST(Truncation, Examples) {
  EXPECT_EQ(truncate(5).vertex_count(), 13u);
  const auto t0 = truncate(0);
  EXPECT_EQ(t0.vertex_count(), 1u);
  EXPECT_TRUE(t0.edges().empty());
  const auto t3 = truncate(3);
  EXPECT_EQ(t3.vertex_count(), 5u);
  using E = std::pair<std::uint64_t, std::uint64_t>;
  EXPECT_EQ(t3.edges(), (std::vector<E>{{0, 1}, {1, 2}, {2, 3}, {2, 4}}));
  EXPECT_EQ(t3.level_range(3), (std::pair<std::uint64_t, std::uint64_t>{3, 5}));
  EXPECT_EQ(t3.level(3), (std::vector<Vertex>{V(1, 3), V(2, 3)}));
  EXPECT_THROW(t3.level_range(4), std::out_of_range);
}

TEST(Truncation, EdgesAreCompleteBipartiteBetweenLevels) {
  for (std::uint32_t L = 0; L <= 10; ++L) {
    const auto t = truncate(L);
    std::uint64_t expected = 0;
    for (std::uint32_t s = 0; s < L; ++s) expected += level_size(s) * level_size(s + 1);
    EXPECT_EQ(t.edges().size(), expected);
    std::set<std::pair<std::uint64_t, std::uint64_t>> es(t.edges().begin(), t.edges().end());
    EXPECT_EQ(es.size(), t.edges().size());
    for (const auto& [a, b] : t.edges()) EXPECT_TRUE(covers(from_linear(a), from_linear(b)));
  }
}

TEST(Copies, CountExamples) {
  for (std::uint32_t m = 0; m <= 8; ++m) EXPECT_EQ(count_copies_rooted(kRoot, m), 1);
  EXPECT_EQ(count_copies_rooted(V(1, 2), 2), 6);
  EXPECT_EQ(count_copies_rooted(V(1, 3), 1), 3);
}

TEST(Copies, CountMatchesEnumerationAndBitmask) {
  for (std::uint32_t k = 0; k <= 6; ++k) {
    for (std::uint32_t m = 0; k + m <= 6; ++m) {
      const Vertex root = V(1, k);
      const Integer c = count_copies_rooted(root, m);
      EXPECT_EQ(c, oracle::copies_by_bitmask(root, m)) << k << "," << m;
      EXPECT_EQ(Integer(static_cast<unsigned long>(enumerate_copies(root, m).size())), c);
    }
  }
}

TEST(Copies, EnumerationIsWellFormedAndDistinct) {
  const auto copies = enumerate_copies(V(2, 3), 2);
  ASSERT_EQ(copies.size(), 15u);  // C(3,1) * C(5,1)
  std::set<std::vector<std::vector<std::uint64_t>>> seen;
  for (const auto& c : copies) {
    ASSERT_EQ(c.level_subsets.size(), 2u);
    for (std::uint32_t i = 1; i <= 2; ++i) {
      const auto& a = c.level_subsets[i - 1];
      EXPECT_EQ(a.size(), level_size(i));
      EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
      for (auto p : a) EXPECT_TRUE(is_valid(V(p, 3 + i)));
    }
    seen.insert(c.level_subsets);
  }
  EXPECT_EQ(seen.size(), copies.size());
}

TEST(Copies, EnumerationLimit) {
  EXPECT_THROW(enumerate_copies(V(1, 4), 3, 10), std::length_error);
}

TEST(Copies, ShiftedCopy) {
  const auto c = shifted_copy(V(2, 3), 2);
  EXPECT_EQ(c.level_subsets, (std::vector<std::vector<std::uint64_t>>{{2}, {2}}));
  const auto r = shifted_copy(V(1, 4), 3);
  EXPECT_EQ(r.level_subsets, (std::vector<std::vector<std::uint64_t>>{{1}, {1}, {1, 2}}));
}

TEST(Copies, ShiftedCopyStaysInsideLevels) {
  // F_{k+i} >= F_k + F_i - 1, so the translate never runs off a level.
  for (std::uint32_t k = 0; k <= 8; ++k) {
    for (std::uint64_t p = 1; p <= level_size(k); ++p) {
      for (std::uint32_t m = 0; m <= 8; ++m) {
        const auto c = shifted_copy(V(p, k), m);
        ASSERT_EQ(c.level_subsets.size(), m);
        for (std::uint32_t i = 1; i <= m; ++i) {
          EXPECT_EQ(c.level_subsets[i - 1].size(), level_size(i));
          EXPECT_LE(c.level_subsets[i - 1].back(), level_size(k + i));
        }
      }
    }
  }
}

TEST(Dot, NodeAndEdgeCounts) {
  const std::regex node(R"re(v\d+ \[label="\(\d+,\d+\)"\])re");
  const std::regex edge(R"(v\d+ -> v\d+;)");
  for (std::uint32_t L : {0u, 1u, 3u, 5u}) {
    const auto t = truncate(L);
    const std::string dot = to_dot(t);
    EXPECT_EQ(dot.rfind("digraph", 0), 0u);
    const auto count = [&](const std::regex& re) {
      return static_cast<std::size_t>(
          std::distance(std::sregex_iterator(dot.begin(), dot.end(), re), std::sregex_iterator()));
    };
    const std::size_t nodes = count(node);
    const std::size_t edges = count(edge);
    EXPECT_EQ(nodes, t.vertex_count()) << L;
    EXPECT_EQ(edges, t.edges().size()) << L;
    EXPECT_EQ(std::count(dot.begin(), dot.end(), '{'), std::count(dot.begin(), dot.end(), '}'));
  }
}

}  // namespace
}  // namespace cobweb
