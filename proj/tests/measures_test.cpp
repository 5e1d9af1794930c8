#include "extropy/measures.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "extropy/errors.hpp"

namespace extropy {
namespace {

const auto kU01 = BoundedDistribution::uniform(0, 1);
const auto kPL2 = BoundedDistribution::power_law(2);

TEST(Extropy, Examples) {
  EXPECT_NEAR(extropy(kU01), -0.5, 1e-12);
  // -(1/2) int_0^1 (2x)^2 dx = -2/3
  EXPECT_NEAR(extropy(kPL2), -2.0 / 3.0, 1e-12);
  EXPECT_NEAR(extropy(BoundedDistribution::uniform(0, 2)), -0.25, 1e-12);
  EXPECT_THROW(extropy(BoundedDistribution::beta(0.5, 2)), DomainError);
}

TEST(Wcpj, Examples) {
  EXPECT_NEAR(wcpj(kU01, 1), -0.125, 1e-12);
  EXPECT_NEAR(wcpj(kPL2, 1), -1.0 / 12.0, 1e-12);
  // -1/2 int_0^1 x^2 x^4 dx
  EXPECT_NEAR(wcpj(kPL2, 2), -1.0 / 14.0, 1e-12);
  EXPECT_NEAR(wcpj(kU01, 0), -1.0 / 6.0, 1e-12);
  EXPECT_NEAR(cpj(kU01), -1.0 / 6.0, 1e-12);
}

TEST(ResidualMeasures, Examples) {
  EXPECT_NEAR(crj(kU01), -1.0 / 6.0, 1e-12);
  EXPECT_NEAR(wcrj(kU01), -1.0 / 24.0, 1e-12);
  EXPECT_NEAR(crj(kPL2), -4.0 / 15.0, 1e-12);
  EXPECT_NEAR(wcrj(kPL2), -1.0 / 12.0, 1e-12);
  // Survival is 1 on [0, 1): -(1/2)(1 + 1/3)
  EXPECT_NEAR(crj(BoundedDistribution::uniform(1, 2)), -2.0 / 3.0, 1e-12);
}

TEST(GFunctional, Examples) {
  EXPECT_NEAR(gf_functional(kU01, 0, 0), 0.5, 1e-12);
  EXPECT_NEAR(gf_functional(kU01, 0.5, 0), 0.375, 1e-12);
  EXPECT_EQ(gf_functional(kPL2, 1.0, 3), 0.0);
  EXPECT_THROW(gf_functional(kU01, 1.5, 0), DomainError);
  EXPECT_THROW(gf_functional(kU01, -0.1, 0), DomainError);
}

TEST(GFunctional, ExpectationRepresentation) {
  EXPECT_NEAR(wcpj_via_gf(kU01, 0), -1.0 / 6.0, 1e-8);
  EXPECT_NEAR(wcpj_via_gf(kU01, 1), -0.125, 1e-8);
  EXPECT_NEAR(wcpj_via_gf(kPL2, 1), -1.0 / 12.0, 1e-8);
  for (const auto& d : {BoundedDistribution::beta(1.5, 1.5), BoundedDistribution::uniform(1, 2.5)}) {
    for (unsigned m = 0; m <= 3; ++m) EXPECT_NEAR(wcpj_via_gf(d, m), wcpj(d, m), 1e-6) << d.spec();
  }
}

TEST(LinearTransform, SubstitutionPairingMatchesDirect) {
  const std::vector<double> base01 = {wcpj(kU01, 0), wcpj(kU01, 1)};
  EXPECT_NEAR(wcpj_linear_transform(base01, 1, 0, 1), base01[1], 1e-15);
  // Y = 2X is Uniform(0, 2); Y = X + 1 is Uniform(1, 2).
  EXPECT_NEAR(wcpj_linear_transform(base01, 2, 0, 1), -0.5, 1e-12);
  EXPECT_NEAR(wcpj_linear_transform(base01, 1, 1, 1), -7.0 / 24.0, 1e-12);
}

TEST(LinearTransform, ReversedIndexPairingFailsScaling) {
  const std::vector<double> base01 = {wcpj(kU01, 0), wcpj(kU01, 1)};
  const double reversed = wcpj_linear_transform(base01, 2, 0, 1, TransformPairing::kReversedIndex);
  EXPECT_NEAR(reversed, -1.0 / 3.0, 1e-12);
  EXPECT_GT(std::abs(reversed - wcpj(BoundedDistribution::uniform(0, 2), 1)), 0.1);
  // For a = 1 the two pairings coincide at m = 1.
  EXPECT_NEAR(wcpj_linear_transform(base01, 1, 1, 1, TransformPairing::kReversedIndex), -7.0 / 24.0, 1e-12);
}

TEST(LinearTransform, Preconditions) {
  const std::vector<double> base = {-1.0 / 6.0};
  EXPECT_THROW(wcpj_linear_transform(base, 1, 0, 1), DomainError);
  EXPECT_THROW(wcpj_linear_transform(base, 0, 0, 0), DomainError);
  EXPECT_THROW(wcpj_linear_transform(base, 1, -1, 0), DomainError);
}

TEST(OrderMax, Examples) {
  EXPECT_NEAR(wcpj_order_max(kU01, 2, 1), -1.0 / 12.0, 1e-12);
  EXPECT_NEAR(wcpj_order_max(kPL2, 2, 1), -1.0 / 20.0, 1e-12);
  EXPECT_NEAR(wcpj_order_max(kU01, 1, 1), -0.125, 1e-12);
  EXPECT_THROW(wcpj_order_max(kU01, 0, 1), DomainError);
}

TEST(OrderMax, QuantileFormAgrees) {
  for (unsigned n = 1; n <= 6; ++n) {
    for (unsigned m = 0; m <= 3; ++m) {
      EXPECT_NEAR(wcpj_order_max_quantile_form(kPL2, n, m), wcpj_order_max(kPL2, n, m), 1e-10);
      EXPECT_NEAR(wcpj_order_max_quantile_form(kU01, n, m), -1.0 / (2.0 * (2 * n + m + 1)), 1e-12);
    }
  }
}

TEST(OrderMax, ExcessOverParentIsNonNegative) {
  for (const auto& d : {kU01, kPL2, BoundedDistribution::beta(2, 3), BoundedDistribution::uniform(1, 4)}) {
    for (unsigned m = 0; m <= 2; ++m) {
      const double parent = wcpj(d, m);
      double prev = parent;
      for (unsigned n = 1; n <= 10; ++n) {
        const double v = wcpj_order_max(d, n, m);
        EXPECT_GE(v - parent, -1e-14);
        EXPECT_GE(v, prev - 1e-14);
        prev = v;
      }
    }
  }
}

TEST(PhiP, Examples) {
  EXPECT_NEAR(phi_p(kU01, 0.5, 1), -0.0078125, 1e-14);
  EXPECT_NEAR(phi_p(kU01, 0.5, 0), -0.125 / 6.0, 1e-14);
  EXPECT_NEAR(phi_p(kU01, 1.0 - 1e-12, 1), -0.125, 1e-10);
  EXPECT_THROW(phi_p(kU01, 0.0, 1), DomainError);
  EXPECT_THROW(phi_p(kU01, 1.0, 1), DomainError);
  EXPECT_THROW(phi_p(BoundedDistribution::uniform(0, 2), 0.5, 1), DomainError);
}

TEST(PhiP, PlateauBeyondSupport) {
  // Uniform(0, 0.5) at p = 0.8: ramp part -(1/2) * 0.5^3 / 3 / 0.25 ... plus the F = 1 plateau.
  const auto d = BoundedDistribution::uniform(0, 0.5);
  const double ramp = -0.5 * (0.5 * 0.5 * 0.5 / 3.0) / 0.25;
  const double plateau = -0.5 * (0.8 - 0.5);
  EXPECT_NEAR(phi_p(d, 0.8, 0), ramp + plateau, 1e-12);
  EXPECT_EQ(phi_p(BoundedDistribution::uniform(0.6, 0.9), 0.5, 1), 0.0);
}

TEST(PhiP, DistinctCdfsGiveDistinctValues) {
  EXPECT_GT(std::abs(phi_p(kPL2, 0.5, 1) - phi_p(kU01, 0.5, 1)), 1e-6);
  EXPECT_GT(std::abs(phi_p(kPL2, 0.5, 0) - phi_p(kU01, 0.5, 0)), 1e-6);
}

TEST(ExtropyUpperBound, UniformWorkedValues) {
  // E log X = -1 for U(0,1); J = -1/2.
  const auto t1 = extropy_bound_terms(kU01, 1);
  EXPECT_NEAR(t1.log_expectation, -3.0, 1e-8);
  EXPECT_NEAR(t1.bound, -0.5 * std::exp(-4.0), 1e-9);
  EXPECT_NEAR(extropy_upper_bound(kU01, 0), -0.5 * std::exp(-3.0), 1e-9);
  EXPECT_LE(wcpj(kU01, 1), t1.bound);
}

TEST(ExtropyUpperBound, HoldsOnSingularDensity) {
  const auto d = BoundedDistribution::beta(0.8, 1.2);
  for (unsigned m = 0; m <= 3; ++m) EXPECT_LE(wcpj(d, m), extropy_upper_bound(d, m));
}

TEST(SupportEndpointBounds, Examples) {
  EXPECT_NEAR(support_endpoint_bounds(kU01, 1).lower, -1.0 / 6.0, 1e-12);
  EXPECT_LE(support_endpoint_bounds(kU01, 1).lower, wcpj(kU01, 1));
  EXPECT_NEAR(support_endpoint_bounds(kU01, 0).lower, cpj(kU01), 1e-15);
  const auto u02 = BoundedDistribution::uniform(0, 2);
  EXPECT_NEAR(support_endpoint_bounds(u02, 1).lower, -2.0 / 3.0, 1e-12);
  EXPECT_LE(support_endpoint_bounds(u02, 1).lower, -0.5);
  EXPECT_THROW(support_endpoint_bounds(BoundedDistribution::uniform(1, 2), 1), DomainError);
}

TEST(SupportEndpointBounds, UpperBoundIsNonNegative) {
  // K = b^(m+1) - E X^(m+1) satisfies 0 < K <= b^(m+1), so log(K / b^(m+1)) - 1 < 0.
  for (const auto& d : {kU01, kPL2, BoundedDistribution::beta(2, 3)}) {
    for (unsigned m = 0; m <= 3; ++m) {
      const auto b = support_endpoint_bounds(d, m);
      EXPECT_GT(b.upper, 0.0);
      EXPECT_LE(wcpj(d, m), b.upper);
    }
  }
}

TEST(SupportEndpointBounds, ProofStepsGiveSharperUpperBound) {
  // The log-sum and log F <= F - 1 steps combine to
  //   wcpj <= -(K / (2(m+1))) (1 + log(K / b^(m+1))).
  for (const auto& d : {kU01, kPL2, BoundedDistribution::beta(2, 3), BoundedDistribution::beta(1.5, 1.5)}) {
    for (unsigned m = 0; m <= 3; ++m) {
      const double bm1 = std::pow(d.hi(), m + 1.0);
      const double K = bm1 - moment(d, m + 1);
      const double sharp = -K / (2.0 * (m + 1)) * (1.0 + std::log(K / bm1));
      EXPECT_LE(wcpj(d, m), sharp) << d.spec() << " m=" << m;
      EXPECT_LT(sharp, support_endpoint_bounds(d, m).upper);
    }
  }
}

TEST(ShiftedSupport, ShiftedSupportBound) {
  const auto u12 = BoundedDistribution::uniform(1, 2);
  EXPECT_NEAR(shifted_support_bound(u12, 1), -1.0 / 6.0, 1e-12);
  EXPECT_LE(wcpj(u12, 1), shifted_support_bound(u12, 1));
  EXPECT_NEAR(wcpj(u12, 1), -7.0 / 24.0, 1e-12);
  EXPECT_THROW(shifted_support_bound(kU01, 1), DomainError);
}

TEST(LinearCdfBound, LowerBoundFromFSquaredBelowF) {
  for (const auto& d : {kU01, kPL2, BoundedDistribution::beta(0.8, 1.2), BoundedDistribution::uniform(2, 3)}) {
    for (unsigned m = 0; m <= 3; ++m) EXPECT_GE(wcpj(d, m), linear_cdf_lower_bound(d, m));
  }
}

TEST(StochasticOrder, OwnSupportTruncationBreaksOrderForShifts) {
  // U(0,1) <=st U(0.5,1.5), yet each integrated only to its own sup B:
  const double v1 = wcpj(kU01, 1);
  const double v2 = wcpj(BoundedDistribution::uniform(0.5, 1.5), 1);
  EXPECT_NEAR(v2, -5.0 / 24.0, 1e-12);
  EXPECT_GT(v1, v2);
}

TEST(StochasticOrder, CommonHorizonRestoresOrder) {
  const auto x2 = BoundedDistribution::uniform(0.5, 1.5);
  for (unsigned m = 0; m <= 2; ++m) {
    EXPECT_LE(wcpj_to_horizon(kU01, m, 1.5), wcpj_to_horizon(x2, m, 1.5));
  }
  EXPECT_NEAR(wcpj_to_horizon(kU01, 1, 1.5), -0.125 - 0.5 * (1.125 - 0.5), 1e-12);
  EXPECT_THROW(wcpj_to_horizon(kU01, 1, 0.5), DomainError);
}

TEST(Degeneracy, CatalogValuesAreStrictlyNegative) {
  for (const auto& d : {kU01, kPL2, BoundedDistribution::beta(5, 5), BoundedDistribution::uniform(3, 3.001)}) {
    for (unsigned m = 0; m <= 3; ++m) EXPECT_LT(wcpj(d, m), 0.0) << d.spec();
  }
}

TEST(QuadratureMeasure, DispatchMatchesClosedForm) {
  const std::vector<MeasureKind> kinds = {measure::Extropy{}, measure::Crj{}, measure::Cpj{}, measure::Wcrj{},
                                          measure::Wcpj{3}, measure::OrderMaxWcpj{3, 2}, measure::PhiP{0.7, 2}};
  for (const auto& k : kinds) {
    EXPECT_NEAR(quadrature_measure(kPL2, k), closed_form_measure(kPL2, k), 1e-10) << to_string(k);
    EXPECT_NEAR(quadrature_measure(kU01, k), closed_form_measure(kU01, k), 1e-10) << to_string(k);
  }
}

}  // namespace
}  // namespace extropy
