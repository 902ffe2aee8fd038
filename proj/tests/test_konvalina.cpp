#include <gtest/gtest.h>

#include <random>

#include "cobweb/konvalina.hpp"
#include "cobweb/oracle.hpp"

namespace cobweb {
namespace {

WeightVector W(std::vector<std::uint64_t> v) { return WeightVector(std::move(v)); }

Integer pow_int(std::uint64_t q, std::uint64_t e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, e);
  return r;
}

TEST(WeightVector, Validation) {
  EXPECT_NO_THROW(W({1, 1, 2}));
  EXPECT_NO_THROW(W({}));
  EXPECT_THROW(W({0, 1}), std::invalid_argument);
  EXPECT_THROW(W({2, 1}), std::invalid_argument);
  EXPECT_EQ(WeightVector::parse("1,2,4").values(), (std::vector<std::uint64_t>{1, 2, 4}));
  EXPECT_EQ(WeightVector::parse(" 3 , 3 ").values(), (std::vector<std::uint64_t>{3, 3}));
  EXPECT_THROW(WeightVector::parse("1,,2"), std::invalid_argument);
  EXPECT_THROW(WeightVector::parse("1,x"), std::invalid_argument);
  EXPECT_THROW(WeightVector::parse("-1"), std::invalid_argument);
}

TEST(FirstKind, Examples) {
  EXPECT_EQ(c_first_kind(W({1, 1, 1, 1}), 2), 6);
  EXPECT_EQ(c_first_kind(W({1, 2, 4}), 2), 14);
  EXPECT_EQ(c_first_kind(W({1, 2, 4}), 0), 1);
  EXPECT_EQ(c_first_kind(W({}), 0), 1);
  EXPECT_THROW(c_first_kind(W({1, 2}), 3), std::invalid_argument);
}

TEST(SecondKind, Examples) {
  EXPECT_EQ(s_second_kind(W({1, 2, 4}), 2), 35);
  EXPECT_EQ(s_second_kind(W({1, 2, 3}), 2), 25);
  EXPECT_EQ(s_second_kind(W({1, 2, 3}), 0), 1);
  EXPECT_THROW(s_second_kind(W({}), 1), std::invalid_argument);
}

TEST(BruteSum, Examples) {
  EXPECT_EQ(brute_sum(W({1, 2, 3}), 2, KonvalinaKind::First), 11);
  EXPECT_EQ(brute_sum(W({5}), 1, KonvalinaKind::First), 5);
  EXPECT_EQ(brute_sum(W({5}), 1, KonvalinaKind::Second), 5);
  EXPECT_EQ(brute_sum(W({1, 1}), 2, KonvalinaKind::Second), 3);
  EXPECT_EQ(brute_sum(W({1, 2, 4}), 2, KonvalinaKind::Second), 35);
}

TEST(BruteSum, MatchesRecurrencesOnRandomVectors) {
  std::mt19937_64 rng(20050101);
  std::uniform_int_distribution<std::uint64_t> len(1, 8);
  std::uniform_int_distribution<std::uint64_t> entry(1, 5);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::uint64_t> v(len(rng));
    for (auto& x : v) x = entry(rng);
    std::sort(v.begin(), v.end());
    const WeightVector w(v);
    for (std::uint64_t k = 0; k <= 8; ++k) {
      if (k <= w.size()) {
        EXPECT_EQ(c_first_kind(w, k), brute_sum(w, k, KonvalinaKind::First));
      }
      EXPECT_EQ(s_second_kind(w, k), brute_sum(w, k, KonvalinaKind::Second));
    }
  }
}

TEST(Specialize, Shapes) {
  EXPECT_EQ(specialize(WeightFamily::Uniform, 3).values(), (std::vector<std::uint64_t>{1, 1, 1}));
  EXPECT_EQ(specialize(WeightFamily::Geometric, 4, 3).values(), (std::vector<std::uint64_t>{1, 3, 9, 27}));
  EXPECT_EQ(specialize(WeightFamily::Arithmetic, 4).values(), (std::vector<std::uint64_t>{1, 2, 3, 4}));
}

TEST(Specialize, Examples) {
  EXPECT_EQ(c_first_kind(specialize(WeightFamily::Uniform, 4), 2), 6);
  EXPECT_EQ(s_second_kind(specialize(WeightFamily::Geometric, 3, 2), 2), 35);
  EXPECT_EQ(s_second_kind(specialize(WeightFamily::Arithmetic, 3), 2), 25);
}

TEST(Specialize, UniformIsBinomial) {
  const auto p = oracle::pascal(20);
  for (std::uint64_t n = 1; n <= 10; ++n) {
    const auto w = specialize(WeightFamily::Uniform, n);
    for (std::uint64_t k = 0; k <= 10; ++k) {
      if (k <= n) EXPECT_EQ(c_first_kind(w, k), p[n][k]);
      EXPECT_EQ(s_second_kind(w, k), p[n + k - 1][k]);
    }
  }
}

TEST(Specialize, GeometricIsGaussian) {
  for (std::uint64_t q : {2u, 3u}) {
    const auto g = oracle::gaussian(12, q);
    for (std::uint64_t n = 1; n <= 6; ++n) {
      const auto w = specialize(WeightFamily::Geometric, n, q);
      for (std::uint64_t k = 0; k <= 6; ++k) {
        if (k <= n) {
          EXPECT_EQ(c_first_kind(w, k), pow_int(q, k * (k - 1) / 2) * g[n][k]);
          EXPECT_EQ(gaussian_binomial(n, k, q), g[n][k]);
        }
        EXPECT_EQ(s_second_kind(w, k), g[n + k - 1][k]);
      }
    }
  }
}

TEST(Specialize, ArithmeticIsStirling) {
  const auto s1 = oracle::stirling1(15);
  const auto s2 = oracle::stirling2(15);
  for (std::uint64_t n = 1; n <= 7; ++n) {
    const auto w = specialize(WeightFamily::Arithmetic, n);
    for (std::uint64_t k = 0; k <= 7; ++k) {
      if (k <= n) EXPECT_EQ(c_first_kind(w, k), s1[n + 1][n + 1 - k]);
      EXPECT_EQ(s_second_kind(w, k), s2[n + k][n]);
    }
  }
}

TEST(Gaussian, Examples) {
  EXPECT_EQ(gaussian_binomial(4, 2, 2), 35);
  EXPECT_EQ(gaussian_binomial(3, 2, 2), 7);
  for (std::uint64_t n = 0; n < 8; ++n) EXPECT_EQ(gaussian_binomial(n, 0, 3), 1);
  EXPECT_THROW(gaussian_binomial(2, 3, 2), std::invalid_argument);
  EXPECT_THROW(gaussian_binomial(4, 2, 1), std::invalid_argument);
}

TEST(FibonomialSearch, NoShortSequenceWorks) {
  for (auto kind : {KonvalinaKind::First, KonvalinaKind::Second}) {
    const auto r = search_fibonomial_weights(kind, 6, 8);
    EXPECT_LT(r.longest_prefix, r.max_length);
    EXPECT_EQ(r.witness.size(), r.longest_prefix);
  }
}

}  // namespace
}  // namespace cobweb
