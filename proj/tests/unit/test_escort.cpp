#include "igf/escort.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "igf/errors.hpp"
#include "support/generators.hpp"

namespace igf {
namespace {

TEST(EscortTransform, UniformIsFixedPoint) {
  const auto e = escort_transform(make_complete({0.5, 0.5}), 2.0);
  EXPECT_DOUBLE_EQ(e.normalized[0], 0.5);
  EXPECT_DOUBLE_EQ(e.normalized[1], 0.5);
  EXPECT_DOUBLE_EQ(e.mass, 0.5);
  EXPECT_EQ(e.beta, 2.0);
  EXPECT_EQ(e.normalized.kind(), DistributionKind::complete);
}

TEST(EscortTransform, HandComputedSquare) {
  const auto e = escort_transform(make_complete({0.8, 0.2}), 2.0);
  EXPECT_NEAR(e.normalized[0], 16.0 / 17.0, 1e-15);
  EXPECT_NEAR(e.normalized[1], 1.0 / 17.0, 1e-15);
  EXPECT_NEAR(e.mass, 0.68, 1e-15);
}

TEST(EscortTransform, IdentityAtBetaOne) {
  const auto e = escort_transform(make_complete({0.8, 0.2}), 1.0);
  EXPECT_NEAR(e.normalized[0], 0.8, 1e-15);
  EXPECT_NEAR(e.normalized[1], 0.2, 1e-15);
  EXPECT_NEAR(e.mass, 1.0, 1e-15);
}

TEST(EscortTransform, ZerosAndGeneralizedSources) {
  const auto e = escort_transform(make_generalized({0.0, 0.3, 0.1}), 0.5);
  EXPECT_EQ(e.normalized[0], 0.0);
  EXPECT_NEAR(e.normalized.total_mass(), 1.0, 1e-15);
  EXPECT_NEAR(e.mass, std::sqrt(0.3) + std::sqrt(0.1), 1e-15);
}

TEST(EscortTransform, ErrorPaths) {
  EXPECT_THROW(escort_transform(make_generalized({0.0, 0.0}), 2.0), ValidationError);
  try {
    escort_transform(make_generalized({0.0}), 1.0);
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.code(), ErrorCode::AllZeroProbabilities);
  }
  EXPECT_THROW(escort_transform(make_complete({1.0}), 0.0), ValidationError);
  EXPECT_THROW(escort_transform(make_complete({1.0}), -1.0), ValidationError);
  // 1e-200 squared underflows to zero.
  EXPECT_THROW(escort_transform(make_generalized({1e-200}), 2.0), DomainError);
}

TEST(GeneralizedIgf, Examples) {
  const auto d = make_complete({0.8, 0.2});
  const auto flat = constant_utility(2, 1.0);
  EXPECT_NEAR(generalized_igf(d, flat, 1.0, 2.0), 0.68, 1e-15);
  EXPECT_NEAR(generalized_igf(d, flat, 2.0, 2.0), 257.0 / 289.0, 1e-15);
  EXPECT_NEAR(generalized_igf(d, make_utility({0.3, 4.0}), 2.0, 1.0), 1.0, 1e-15);
  EXPECT_THROW(generalized_igf(d, constant_utility(3, 1.0), 2.0, 2.0), ValidationError);
  EXPECT_THROW(generalized_igf(d, flat, 2.0, 0.9), DomainError);
}

TEST(UnnormalizedPowerIgf, Examples) {
  const auto d = make_complete({0.8, 0.2});
  EXPECT_NEAR(unnormalized_power_igf(d, 1.0, 2.0, 2.0), 0.4112, 1e-15);
  EXPECT_NEAR(unnormalized_power_igf(d, 1.0, 1.0, 2.0), 0.68, 1e-15);
  EXPECT_EQ(unnormalized_power_igf(make_complete({1.0}), 2.3, 0.7, 1.9), 1.0);
  EXPECT_EQ(unnormalized_power_igf(make_generalized({0.0, 0.5}), 1.0, 2.0, 2.0), 0.0625);
  EXPECT_THROW(unnormalized_power_igf(make_generalized({0.0, 0.5}), 2.0, 1.0, 0.5,
                                      TDomain::extended),
               DomainError);
}

TEST(ScalingIdentity, Examples) {
  const auto a = verify_scaling_identity(make_complete({0.8, 0.2}), 1.0, 2.0, 2.0);
  EXPECT_NEAR(a.lhs, 0.4112, 1e-15);
  EXPECT_NEAR(a.rhs, 257.0 / 289.0 * 0.68 * 0.68, 1e-15);
  EXPECT_TRUE(a.pass);

  const auto b = verify_scaling_identity(make_complete({0.5, 0.5}), 3.0, 5.0, 1.0);
  EXPECT_NEAR(b.lhs, 2.0 * std::pow(0.5, 5.0), 1e-16);
  EXPECT_NEAR(b.rhs, b.lhs, 1e-16);
  EXPECT_TRUE(b.pass);
}

TEST(ScalingIdentity, FailsWhenEscortMassIsSubnormal) {
  // p^2 ~ 1e-320 is subnormal; the normalised route keeps only a few digits.
  const auto r = verify_scaling_identity(make_generalized({1e-160, 3e-160}), 3.0, 2.0, 0.5,
                                         TDomain::extended);
  EXPECT_FALSE(r.pass);
  EXPECT_GT(r.abs_diff, kScalingIdentityTolerance * std::fabs(r.lhs));
}

// Properties --------------------------------------------------------------

TEST(EscortProperty, CompletenessAndComposition) {
  std::mt19937_64 rng(201);
  for (int i = 0; i < 500; ++i) {
    const auto n = testing::random_size(rng, 1, 40);
    auto probs = testing::random_simplex(rng, n, 1e-4);
    const bool generalized = i % 2 == 1;
    if (generalized) {
      const double scale = testing::random_real(rng, 0.2, 1.0);
      for (auto& p : probs) p *= scale;
    }
    const auto d = make_distribution(probs, generalized ? DistributionKind::generalized
                                                         : DistributionKind::complete);
    const double a = testing::random_real(rng, 0.3, 3.0);
    const double b = testing::random_real(rng, 0.3, 3.0);
    const auto ea = escort_transform(d, a);
    EXPECT_NEAR(ea.normalized.total_mass(), 1.0, 1e-12);

    long double mass = 0.0L;
    for (double p : probs) mass += std::pow(static_cast<long double>(p), a);
    EXPECT_NEAR(ea.mass, static_cast<double>(mass), 1e-12);

    const auto twice = escort_transform(ea.normalized, b);
    const auto once = escort_transform(d, a * b);
    for (std::size_t k = 0; k < n; ++k) {
      EXPECT_NEAR(twice.normalized[k], once.normalized[k], 1e-12);
    }
    if (!generalized) {
      const auto identity = escort_transform(d, 1.0);
      for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(identity.normalized[k], d[k], 1e-15);
    }
  }
}

TEST(EscortProperty, BetaOneMatchesWeightedIgf) {
  std::mt19937_64 rng(202);
  for (int i = 0; i < 300; ++i) {
    const auto s = testing::random_scheme(rng, 1, 40, 0.1, 5.0);
    const double t = testing::random_real(rng, 1.0, 3.0);
    EXPECT_NEAR(generalized_igf(s.dist, s.util, 1.0, t), weighted_igf(s, t), 1e-13);
  }
}

TEST(EscortProperty, ScalingIdentityHolds) {
  std::mt19937_64 rng(203);
  for (int i = 0; i < 1000; ++i) {
    const auto n = testing::random_size(rng, 1, 16);
    auto probs = testing::random_simplex(rng, n, 1e-6);
    if (i % 3 == 0) {
      const double scale = testing::random_real(rng, 0.1, 1.0);
      for (auto& p : probs) p *= scale;
    }
    const auto d = make_generalized(probs);
    const double u = testing::random_real(rng, 0.3, 4.0);
    const double beta = testing::random_real(rng, 0.3, 5.0);
    const double t = testing::random_real(rng, 1.0, 3.0);
    const auto r = verify_scaling_identity(d, u, beta, t);
    EXPECT_TRUE(r.pass) << "lhs=" << r.lhs << " rhs=" << r.rhs;
  }
  // The eight-point example.
  const auto d8 = make_complete({0.05, 0.1, 0.15, 0.2, 0.1, 0.1, 0.25, 0.05});
  EXPECT_TRUE(verify_scaling_identity(d8, 0.7, 1.3, 2.5).pass);
}

}  // namespace
}  // namespace igf
