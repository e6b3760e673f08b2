#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace wciscope;
using testutil::binom;
using testutil::brute_force_monomial_count;

TEST(Weights, ValidatesAndNormalizes) {
  EXPECT_THROW(Weights({1, 0, 2}), std::invalid_argument);
  EXPECT_THROW(Weights({-1}), std::invalid_argument);
  EXPECT_EQ(Weights({3, 1, 2}).values(), (std::vector<long long>{1, 2, 3}));
}

TEST(WeightedDegree, KnownValues) {
  EXPECT_EQ(weighted_degree(Monomial({2, 1, 0}), Weights({1, 2, 5})), 4);
  EXPECT_EQ(weighted_degree(Monomial({0, 0, 0}), Weights({1, 2, 5})), 0);
  EXPECT_EQ(weighted_degree(Monomial({0, 0, 2}), Weights({2, 3, 5})), 10);
}

TEST(WeightedDegree, LengthMismatchRejected) {
  EXPECT_THROW(weighted_degree(Monomial({1, 2}), Weights({1, 2, 3})), std::invalid_argument);
}

TEST(CountMonomials, KnownValues) {
  EXPECT_EQ(count_monomials(Weights({1, 1}), 2), 3);
  EXPECT_EQ(count_monomials(Weights({1, 2, 3}), 6), 7);
  EXPECT_EQ(count_monomials(Weights({1, 2, 3}), 6), brute_force_monomial_count({1, 2, 3}, 6));
  // s = binom(a+N-3, N-2) at N = 4, a = 3.
  EXPECT_EQ(count_monomials(Weights({1, 1, 1}), 2), 6);
  EXPECT_EQ(count_monomials(Weights({1, 1, 1}), 2), binom(4, 2));
}

TEST(CountMonomials, Degenerate) {
  EXPECT_EQ(count_monomials(Weights({2, 3}), 0), 1);
  EXPECT_EQ(count_monomials(Weights({2, 3}), 1), 0);
  EXPECT_EQ(count_monomials(Weights({2, 3}), -4), 0);
  EXPECT_EQ(count_monomials(Weights{}, 0), 1);
  EXPECT_EQ(count_monomials(Weights{}, 3), 0);
  EXPECT_EQ(enumerate_monomials(Weights{}, 0).size(), 1u);  // the empty monomial
  EXPECT_TRUE(enumerate_monomials(Weights{}, 2).empty());
}

TEST(EnumerateMonomials, KnownValues) {
  auto ms = enumerate_monomials(Weights({1, 1}), 1);
  ASSERT_EQ(ms.size(), 2u);
  EXPECT_EQ(ms[0].exponents(), (std::vector<unsigned>{1, 0}));
  EXPECT_EQ(ms[1].exponents(), (std::vector<unsigned>{0, 1}));

  ms = enumerate_monomials(Weights({2, 3}), 6);
  ASSERT_EQ(ms.size(), 2u);
  EXPECT_EQ(ms[0].exponents(), (std::vector<unsigned>{3, 0}));
  EXPECT_EQ(ms[1].exponents(), (std::vector<unsigned>{0, 2}));

  ms = enumerate_monomials(Weights({1, 2}), 0);
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(ms[0].exponents(), (std::vector<unsigned>{0, 0}));
}

TEST(EnumerateMonomials, AgreesWithCountAndBruteForce) {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + rng() % 4;
    std::vector<long long> w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(1 + static_cast<long long>(rng() % 5));
    long long d = static_cast<long long>(rng() % 13);
    Weights weights(w);
    auto ms = enumerate_monomials(weights, d);
    EXPECT_EQ(static_cast<long long>(ms.size()), count_monomials(weights, d));
    EXPECT_EQ(static_cast<long long>(ms.size()), brute_force_monomial_count(weights.values(), d));
    for (std::size_t i = 0; i < ms.size(); ++i) {
      EXPECT_EQ(weighted_degree(ms[i], weights), d);
      if (i > 0) {
        EXPECT_LT(ms[i], ms[i - 1]);  // strictly descending lex: sorted, duplicate-free
      }
    }
  }
}

TEST(Monomial, Product) {
  EXPECT_EQ(Monomial({1, 2}) * Monomial({3, 0}), Monomial({4, 2}));
  EXPECT_THROW(Monomial({1}) * Monomial({1, 2}), std::invalid_argument);
}
