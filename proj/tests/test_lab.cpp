#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace wciscope;
using testutil::binom;

TEST(TorusFamily, InvariantAndFano) {
  auto ex = build_example_5_1(4, 2, 0);
  EXPECT_TRUE(verify_torus_invariance(ex));
  EXPECT_EQ(ex.wci.descriptor().weights().values(), (std::vector<long long>{1, 1, 1, 2, 2}));
  EXPECT_EQ(ex.wci.descriptor().multidegree(), (std::vector<long long>{4}));
  auto cls = classify(ex.wci.descriptor());
  EXPECT_EQ(cls.index, 3);  // N - 1
  EXPECT_EQ(cls.kind, VarietyKind::Fano);
  EXPECT_FALSE(is_linear_cone(ex.wci.descriptor()));
}

TEST(TorusFamily, NotLinearConeAtAEqualsOne) {
  auto ex = build_example_5_1(4, 1, 0);
  EXPECT_FALSE(is_linear_cone(ex.wci.descriptor()));
  EXPECT_TRUE(verify_torus_invariance(ex));
}

TEST(TorusFamily, SeedSweep) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    for (long long N : {4, 5}) {
      for (long long a : {1, 2}) {
        auto ex = build_example_5_1(N, a, seed);
        EXPECT_TRUE(verify_torus_invariance(ex)) << "N=" << N << " a=" << a << " seed=" << seed;
        EXPECT_EQ(index(ex.wci.descriptor()), N - 1);
      }
    }
  }
}

TEST(AdditiveFamily, InvariantAndCounted) {
  auto ex = build_example_5_2(5, 2, 0, 1);
  EXPECT_TRUE(verify_additive_invariance(ex));
  EXPECT_EQ(ex.s, binom(2 + 5 - 3, 5 - 2));
  auto cls = classify(ex.wci.descriptor());
  EXPECT_EQ(cls.kind, VarietyKind::Fano);
  EXPECT_FALSE(is_linear_cone(ex.wci.descriptor()));
}

TEST(AdditiveFamily, DimensionFormula) {
  // s = binom(a+N-3, N-2); at N = 4, a = 3 this is binom(4,2) = 6.
  auto ex = build_example_5_2(4, 3, 0, 0);
  EXPECT_EQ(ex.s, 6);
  EXPECT_EQ(ex.s, count_monomials(Weights({1, 1, 1}), 2));
  for (long long N : {4, 5, 6}) {
    for (long long a : {1, 2, 3, 4}) {
      auto e = build_example_5_2(N, a, 1, 2);
      EXPECT_EQ(e.s, binom(a + N - 3, N - 2));
    }
  }
}

TEST(AdditiveFamily, NumericMemberIsUnipotent) {
  for (long long a : {2, 3}) {
    auto ex = build_example_5_2(5, a, 3, 4);
    auto phis = additive_member_phis(ex, Rational(7, 3));
    PolynomialMap sigma = make_unipotent_element(ex.wci.descriptor().ambient(), phis);
    EXPECT_EQ(pullback(sigma, ex.wci.equations()[0]), ex.wci.equations()[0]);
  }
}

TEST(AdditiveFamily, BoundaryCaseN4) {
  // At N = 4 the general polynomial F lives in the single variable x0.
  auto ex = build_example_5_2(4, 2, 0, 0);
  EXPECT_TRUE(verify_additive_invariance(ex));
  EXPECT_THROW(build_example_5_2(3, 2, 0, 0), std::invalid_argument);
}

TEST(TrivialAction, KnownValues) {
  auto ex = build_trivial_action_example(3, 2, 0, 0);
  EXPECT_EQ(ex.dim_g, 1);  // binom(N+m-3, N-1) = binom(2,2)
  EXPECT_EQ(pullback(ex.sigma, ex.f2), ex.f2);
  EXPECT_TRUE(verify_trivial_action(ex));
  EXPECT_EQ(pullback(ex.sigma, ex.f2m) - ex.f2m, ex.f2 * ex.cofactor_h);
}

TEST(TrivialAction, DimensionAndIndexSweep) {
  for (long long N : {3, 4, 5, 6}) {
    for (long long m : {2, 3}) {
      auto ex = build_trivial_action_example(N, m, 1, 2);
      EXPECT_EQ(ex.dim_g, binom(N + m - 3, N - 1));
      EXPECT_EQ(index(ex.wci.descriptor()), N - m - 2);
      auto cls = classify(ex.wci.descriptor());
      EXPECT_EQ(cls.kind == VarietyKind::Fano, N >= m + 3);
      EXPECT_TRUE(verify_trivial_action(ex)) << "N=" << N << " m=" << m;
    }
  }
}

TEST(NonQsExamples, ExpectedWitnessesVerifyOverQ) {
  auto examples = build_nonqs_examples();
  ASSERT_EQ(examples.size(), 2u);
  EXPECT_TRUE(is_singular_cone_point(examples[0].wci, examples[0].expected_witness));
  EXPECT_EQ(examples[0].expected_witness[1], Rational(1));  // (0,1,0,...,0)
  EXPECT_TRUE(is_singular_cone_point(examples[1].wci, examples[1].expected_witness));
  EXPECT_TRUE(examples[1].expected_witness[0].is_zero());
  EXPECT_TRUE(examples[1].expected_witness[1].is_zero());
}

TEST(NonQsExamples, WellFormednessCrossCheck) {
  auto examples = build_nonqs_examples();
  EXPECT_FALSE(is_well_formed(examples[0].wci.descriptor().ambient()));  // P(1,2,2,2)
  EXPECT_TRUE(is_well_formed(examples[1].wci.descriptor().ambient()));   // P(2,3,5,5,5)
  EXPECT_TRUE(is_well_formed(WeightedProjectiveSpace{Weights({2, 3, 5, 5})}));
}

TEST(NodalCurve, DSevenReport) {
  auto r = nodal_curve_surface_numbers(7);
  EXPECT_EQ(r.m, 15);
  EXPECT_EQ(r.ctilde_sq, -11);
  EXPECT_EQ(r.alpha, Rational(2, 11));
  EXPECT_EQ(r.li_dot_l, Rational(49, 11));
  EXPECT_EQ(r.k_coeff, Rational(1, 7));
  EXPECT_TRUE(r.ctilde_negative);
  EXPECT_TRUE(r.k_effective);
}

TEST(NodalCurve, ThresholdCases) {
  EXPECT_EQ(nodal_curve_surface_numbers(6).ctilde_sq, -4);
  EXPECT_TRUE(nodal_curve_surface_numbers(6).ctilde_negative);
  EXPECT_FALSE(nodal_curve_surface_numbers(6).k_effective);
  EXPECT_EQ(nodal_curve_surface_numbers(5).ctilde_sq, 1);
  EXPECT_FALSE(nodal_curve_surface_numbers(5).ctilde_negative);
  EXPECT_THROW(nodal_curve_surface_numbers(3), std::invalid_argument);
}

TEST(NodalCurve, PositivityAndExactIdentities) {
  for (long long d = 7; d <= 40; ++d) {
    auto r = nodal_curve_surface_numbers(d);
    EXPECT_GT(r.li_dot_l, Rational(0));
    // 2 = E_i . Ctilde = -alpha Ctilde^2.
    EXPECT_EQ(-r.alpha * Rational(r.ctilde_sq), Rational(2));
    EXPECT_EQ(r.k_coeff, Rational(1) - make_rational(6, d));
  }
}
