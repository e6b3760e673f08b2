#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using namespace wciscope;

namespace {

WCIDescriptor desc(std::vector<long long> w, std::vector<long long> d) {
  return WCIDescriptor(WeightedProjectiveSpace{Weights(std::move(w))}, std::move(d));
}

}  // namespace

TEST(Index, KnownValues) {
  EXPECT_EQ(index(desc({1, 1, 1, 1, 1}, {4})), 1);
  for (long long N = 3; N <= 6; ++N) {
    for (long long a = 1; a <= 3; ++a) {
      std::vector<long long> w(static_cast<std::size_t>(N) - 1, 1);
      w.push_back(a);
      w.push_back(a);
      EXPECT_EQ(index(desc(w, {2 * a})), N - 1);
    }
  }
  EXPECT_EQ(index(desc({1, 1, 1}, {3})), 0);
}

TEST(Index, LinearConeExtensionInvariance) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 3 + rng() % 3;
    std::vector<long long> w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(1 + static_cast<long long>(rng() % 4));
    std::vector<long long> d{1 + static_cast<long long>(rng() % 9)};
    long long b = 1 + static_cast<long long>(rng() % 5);
    auto base = desc(w, d);
    w.push_back(b);
    d.push_back(b);
    EXPECT_EQ(index(desc(w, d)), index(base));
  }
}

TEST(Classify, QuarticThreefold) {
  auto r = classify(desc({1, 1, 1, 1, 1}, {4}));
  EXPECT_EQ(r.index, 1);
  EXPECT_EQ(r.kind, VarietyKind::Fano);
  EXPECT_EQ(r.canonical_sheaf_exponent, -1);
  EXPECT_TRUE(r.rationally_connected);
  EXPECT_EQ(r.not_uniruled, Knowledge::Unknown);
  EXPECT_EQ(r.dim, 3);
  EXPECT_FALSE(r.class_group_note.empty());
  EXPECT_FALSE(r.cy_stabilizer_note);
}

TEST(Classify, QuinticCalabiYau) {
  auto r = classify(desc({1, 1, 1, 1, 1}, {5}));
  EXPECT_EQ(r.kind, VarietyKind::CalabiYau);
  EXPECT_EQ(r.index, 0);
  EXPECT_EQ(r.not_uniruled, Knowledge::True);
  EXPECT_TRUE(r.cy_stabilizer_note);
}

TEST(Classify, GeneralTypeDivisibilityGap) {
  auto r = classify(desc({1, 1, 1, 2}, {6}));
  EXPECT_EQ(r.index, -1);
  EXPECT_EQ(r.kind, VarietyKind::GeneralType);
  EXPECT_EQ(r.not_uniruled, Knowledge::Unknown);  // 2 does not divide -1
  auto r2 = classify(desc({1, 1, 1, 2}, {7}));
  EXPECT_EQ(r2.index, -2);
  EXPECT_EQ(r2.not_uniruled, Knowledge::True);  // all weights divide -2
}

TEST(Classify, KindPartitionsBySign) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + rng() % 4;
    std::vector<long long> w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(1 + static_cast<long long>(rng() % 4));
    std::size_t k = 1 + rng() % 2;
    if (k >= n) k = 1;
    std::vector<long long> d;
    for (std::size_t j = 0; j < k; ++j) d.push_back(1 + static_cast<long long>(rng() % 12));
    auto X = desc(w, d);
    auto r = classify(X);
    long long i = index(X);
    EXPECT_EQ(r.kind == VarietyKind::Fano, i > 0);
    EXPECT_EQ(r.kind == VarietyKind::CalabiYau, i == 0);
    EXPECT_EQ(r.kind == VarietyKind::GeneralType, i < 0);
    EXPECT_EQ(r.rationally_connected, i > 0);
    EXPECT_EQ(r.cy_stabilizer_note, i == 0 && X.codim() == 1);
    EXPECT_EQ(r.class_group_note == "Cl≅Z by O_X(1)", X.dim() >= 3);
  }
}

TEST(IsLinearCone, KnownValues) {
  EXPECT_TRUE(is_linear_cone(desc({1, 1, 1, 2}, {2})));
  EXPECT_FALSE(is_linear_cone(desc({1, 1, 1, 1, 1}, {4})));
  EXPECT_TRUE(is_linear_cone(desc({1, 1, 2, 3}, {6, 2})));
}

TEST(Descriptor, Validation) {
  EXPECT_THROW(desc({1, 1}, {2, 2}), std::invalid_argument);  // k > N
  EXPECT_THROW(desc({1, 1, 1}, {}), std::invalid_argument);
  EXPECT_THROW(desc({1, 1, 1}, {0}), std::invalid_argument);
  EXPECT_EQ(desc({1, 1, 1}, {5, 2}).multidegree(), (std::vector<long long>{2, 5}));
}

TEST(GenericWellFormedness, KnownValues) {
  auto g = generic_wellformedness(desc({1, 1, 1, 1, 1}, {4}));
  EXPECT_EQ(g.status, GenericWellFormedness::Status::WellFormed);
  EXPECT_TRUE(g.checks.empty());

  g = generic_wellformedness(desc({1, 1, 1, 3, 3}, {6}));
  EXPECT_EQ(g.status, GenericWellFormedness::Status::WellFormed);
  ASSERT_EQ(g.checks.size(), 1u);
  EXPECT_EQ(g.checks[0].stratum.indices, (std::vector<std::size_t>{3, 4}));
  EXPECT_EQ(g.checks[0].cutting_degrees, 1);
  EXPECT_EQ(g.checks[0].estimated_dim, 0);

  g = generic_wellformedness(desc({1, 2, 2, 2}, {4}));
  EXPECT_EQ(g.status, GenericWellFormedness::Status::Fails);
  ASSERT_TRUE(g.failing.has_value());
  EXPECT_EQ(g.failing->indices, (std::vector<std::size_t>{1, 2, 3}));
  ASSERT_EQ(g.checks.size(), 1u);
  EXPECT_EQ(g.checks[0].cutting_degrees, 1);
  EXPECT_EQ(g.checks[0].estimated_dim, 1);  // dim X = 2: codim 1 < 2
}

TEST(GenericWellFormedness, StrictModeBoundary) {
  // Stratum {x3} of weight 2, no degree-3 monomial inside it: estimated dim 0
  // against dim X = 2 sits exactly at the codim-2 boundary.
  auto X = desc({1, 1, 1, 2}, {3});
  EXPECT_EQ(generic_wellformedness(X).status, GenericWellFormedness::Status::WellFormed);
  EXPECT_EQ(generic_wellformedness(X, true).status, GenericWellFormedness::Status::Indeterminate);
}

TEST(HilbertSeriesX, KnownValues) {
  EXPECT_EQ(hilbert_series(desc({1, 1, 1, 1}, {2}), 4), (std::vector<long long>{1, 4, 9, 16, 25}));
  EXPECT_EQ(hilbert_series(desc({1, 1, 1}, {3}), 4), (std::vector<long long>{1, 3, 6, 9, 12}));
  EXPECT_EQ(hilbert_series(desc({1, 1}, {1}), 4), (std::vector<long long>{1, 1, 1, 1, 1}));
}

TEST(HilbertSeriesX, HypersurfaceCoefficientIdentity) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + rng() % 3;
    std::vector<long long> w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(1 + static_cast<long long>(rng() % 3));
    long long d = 1 + static_cast<long long>(rng() % 8);
    auto X = desc(w, {d});
    auto series = hilbert_series(X, 12);
    for (long long m = 0; m <= 12; ++m) {
      EXPECT_EQ(series[static_cast<std::size_t>(m)],
                count_monomials(X.weights(), m) - count_monomials(X.weights(), m - d));
    }
    if (count_monomials(X.weights(), d) > 0) {
      for (long long c : series) EXPECT_GE(c, 0);
    }
  }
}

TEST(RestrictionReport, KnownValues) {
  auto r = restriction_surjectivity_report(desc({1, 1, 1, 1}, {2}), 2);
  EXPECT_FALSE(r.linear_cone_caveat);
  EXPECT_EQ(r.rows[0].dim_ambient, 1);
  EXPECT_EQ(r.rows[0].dim_x, 1);
  EXPECT_EQ(r.rows[0].kernel, 0);
  EXPECT_EQ(r.rows[2].dim_ambient, 10);
  EXPECT_EQ(r.rows[2].dim_x, 9);
  EXPECT_EQ(r.rows[2].kernel, 1);

  auto r2 = restriction_surjectivity_report(desc({1, 1, 1, 1, 1}, {4}), 4);
  EXPECT_EQ(r2.rows[4].dim_ambient, 70);
  EXPECT_EQ(r2.rows[4].dim_x, 69);
  EXPECT_EQ(r2.rows[4].kernel, 1);

  EXPECT_TRUE(restriction_surjectivity_report(desc({1, 1, 1, 2}, {2}), 2).linear_cone_caveat);
}

TEST(RestrictionReport, KernelMonotoneOnStandardHypersurfaces) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 2 + rng() % 4;
    long long d = 1 + static_cast<long long>(rng() % 9);
    auto r = restriction_surjectivity_report(desc(std::vector<long long>(n, 1), {d}), 15);
    for (std::size_t m = 1; m < r.rows.size(); ++m) {
      EXPECT_GE(r.rows[m].kernel, r.rows[m - 1].kernel);
      EXPECT_GE(r.rows[m].kernel, 0);
    }
  }
}
