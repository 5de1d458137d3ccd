#include "igf/generating_functions.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "igf/errors.hpp"
#include "support/generators.hpp"

namespace igf {
namespace {

constexpr double kLn2 = std::numbers::ln2;

// Oracles: plain long-double loops written straight from the definitions.
long double oracle_weighted_igf(const UtilityInformationScheme& s, long double t) {
  long double sum = 0.0L;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const long double p = s.dist[i];
    if (p > 0) sum += std::pow(p, 1.0L - s.util[i] * (1.0L - t));
  }
  return sum;
}

long double oracle_derivative(const UtilityInformationScheme& s, long double t, unsigned r) {
  long double sum = 0.0L;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const long double p = s.dist[i];
    if (p > 0) {
      const long double w = s.util[i] * std::log(p);
      sum += std::pow(w, static_cast<long double>(r)) * std::pow(p, 1.0L - s.util[i] * (1.0L - t));
    }
  }
  return sum;
}

TEST(GolombIgf, Examples) {
  EXPECT_EQ(golomb_igf(make_complete({0.5, 0.5}), 1.0), 1.0);
  EXPECT_DOUBLE_EQ(golomb_igf(make_complete({0.5, 0.5}), 2.0), 0.5);
  EXPECT_EQ(golomb_igf(make_complete({1.0}), 7.0), 1.0);
}

TEST(GolombIgf, DomainRules) {
  const auto d = make_complete({0.0, 1.0});
  EXPECT_THROW(golomb_igf(d, 0.5), DomainError);
  EXPECT_EQ(golomb_igf(d, 0.5, TDomain::extended), 1.0);
  EXPECT_THROW(golomb_igf(d, 0.0, TDomain::extended), DomainError);
  EXPECT_THROW(golomb_igf(d, -1.0, TDomain::extended), DomainError);
  EXPECT_THROW(golomb_igf(d, NAN, TDomain::extended), DomainError);
  // Without zeros every real t is admissible in the extended domain.
  EXPECT_DOUBLE_EQ(golomb_igf(make_complete({0.5, 0.5}), -1.0, TDomain::extended), 4.0);
}

TEST(WeightedIgf, Examples) {
  const auto s = make_scheme({0.5, 0.5}, {1.0, 2.0});
  EXPECT_EQ(weighted_igf(s, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(weighted_igf(s, 2.0), 0.375);
  const auto flat = make_scheme({0.5, 0.5}, {1.0, 1.0});
  EXPECT_DOUBLE_EQ(weighted_igf(flat, 2.0), 0.5);
  EXPECT_DOUBLE_EQ(weighted_igf(flat, 2.0), golomb_igf(flat.dist, 2.0));
}

TEST(WeightedIgf, ZeroProbabilityConvention) {
  const auto s = make_scheme({0.0, 1.0}, {2.0, 1.0});
  EXPECT_EQ(weighted_igf(s, 3.0), 1.0);
  // Exponent 1 - 2 (1 - 0.6) = 0.2 > 0: defined.
  EXPECT_EQ(weighted_igf(s, 0.6, TDomain::extended), 1.0);
  // Exponent 1 - 2 (1 - 0.5) = 0: undefined.
  EXPECT_THROW(weighted_igf(s, 0.5, TDomain::extended), DomainError);
  EXPECT_THROW(weighted_igf(s, 0.9), DomainError);
}

TEST(HoodaBhakerIgf, Examples) {
  EXPECT_DOUBLE_EQ(hooda_bhaker_igf(make_scheme({0.5, 0.5}, {2.0, 4.0}), 2.0), 1.5);
  EXPECT_DOUBLE_EQ(hooda_bhaker_igf(make_scheme({0.5, 0.5}, {1.0, 1.0}), 2.0), 0.5);
  EXPECT_EQ(hooda_bhaker_igf(make_scheme({1.0}, {3.0}), 1.0), 3.0);
  EXPECT_THROW(hooda_bhaker_igf(make_scheme({0.5, 0.5}, {1.0, 1.0}), 0.5), DomainError);
}

TEST(HoodaBhakerIgf, DerivativeAtOneIsWeightedEntropy) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto s = testing::random_scheme(rng, 2, 20, 0.1, 5.0, 1e-3);
    const double fd = central_difference(
        [&](double t) { return hooda_bhaker_igf(s, t, TDomain::extended); }, 1.0, 1, 1e-5, true);
    EXPECT_NEAR(-fd, weighted_entropy(s), 1e-8 * std::max(1.0, weighted_entropy(s)));
  }
}

TEST(ShannonEntropy, Examples) {
  EXPECT_NEAR(shannon_entropy(make_complete({0.5, 0.5})), 0.693147180559945309, 1e-15);
  EXPECT_EQ(shannon_entropy(make_complete({1.0})), 0.0);
  EXPECT_NEAR(shannon_entropy(make_complete({0.5, 0.5}), LogBase::two), 1.0, 1e-15);
  EXPECT_EQ(shannon_entropy(make_complete({0.0, 1.0})), 0.0);
}

TEST(WeightedEntropy, Examples) {
  EXPECT_NEAR(weighted_entropy(make_scheme({0.5, 0.5}, {1.0, 2.0})), 1.03972077083991796, 1e-15);
  EXPECT_NEAR(weighted_entropy(make_scheme({0.5, 0.5}, {1.0, 1.0})), kLn2, 1e-15);
  EXPECT_EQ(weighted_entropy(make_scheme({1.0}, {5.0})), 0.0);
  EXPECT_NEAR(weighted_entropy(make_scheme({0.5, 0.5}, {1.0, 2.0}), LogBase::two), 1.5, 1e-15);
}

TEST(SelfInformationMoment, Examples) {
  const auto d = make_complete({0.5, 0.5});
  EXPECT_NEAR(self_information_moment(d, 1), kLn2, 1e-15);
  EXPECT_NEAR(self_information_moment(d, 2), 0.480453013918201425, 1e-15);
  EXPECT_EQ(self_information_moment(make_complete({1.0}), 3), 0.0);
  EXPECT_DOUBLE_EQ(self_information_moment(make_generalized({0.3, 0.2}), 0), 0.5);
}

TEST(WeightedSelfInformationMoment, Examples) {
  const auto s = make_scheme({0.5, 0.5}, {1.0, 2.0});
  EXPECT_NEAR(weighted_self_information_moment(s, 1), 1.03972077083991796, 1e-15);
  EXPECT_NEAR(weighted_self_information_moment(make_scheme({0.5, 0.5}, {1.0, 1.0}), 2),
              0.480453013918201425, 1e-15);
  EXPECT_NEAR(weighted_self_information_moment(s, 2), 1.20113253479550356, 1e-15);
  EXPECT_EQ(weighted_self_information_moment(s, 0), 1.0);
}

TEST(WeightedIgfDerivative, Examples) {
  const auto s = make_scheme({0.5, 0.5}, {1.0, 2.0});
  EXPECT_NEAR(weighted_igf_derivative(s, 1.0, 1), -1.03972077083991796, 1e-15);
  EXPECT_EQ(weighted_igf_derivative(make_scheme({1.0}, {2.0}), 3.7, 1), 0.0);
  EXPECT_NEAR(weighted_igf_derivative(s, 1.0, 2), 1.20113253479550356, 1e-15);
  EXPECT_THROW(weighted_igf_derivative(s, 1.0, 0), ValidationError);
  EXPECT_THROW(weighted_igf_derivative(s, 0.5, 1), DomainError);
}

TEST(WeightedIgfDerivative, MatchesLongDoubleOracle) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    const auto s = testing::random_scheme(rng, 2, 30, 0.5, 4.0);
    const double t = testing::random_real(rng, 1.0, 3.0);
    EXPECT_NEAR(weighted_igf(s, t), static_cast<double>(oracle_weighted_igf(s, t)), 1e-14);
    for (unsigned r = 1; r <= 4; ++r) {
      const double expect = static_cast<double>(oracle_derivative(s, t, r));
      EXPECT_NEAR(weighted_igf_derivative(s, t, r), expect, 1e-13 * std::max(1.0, std::fabs(expect)));
    }
  }
}

TEST(FiniteDifference, Examples) {
  const auto s = make_scheme({0.5, 0.5}, {1.0, 2.0});
  const double analytic = weighted_igf_derivative(s, 2.0, 1);
  const double fd = finite_difference_derivative(s, 2.0, 1, {.h = 1e-5});
  EXPECT_NEAR(fd, analytic, 1e-8 * std::fabs(analytic));

  EXPECT_NEAR(finite_difference_derivative(make_scheme({1.0}, {1.0}), 2.0, 1, {.h = 1e-4}), 0.0,
              1e-10);

  const auto flat = make_scheme({0.5, 0.5}, {1.0, 1.0});
  // Sum (ln p_i)^2 p_i^t at t = 2: 2 * (ln 2)^2 * 0.25.
  const double expect2 = 0.5 * kLn2 * kLn2;
  EXPECT_NEAR(finite_difference_derivative(flat, 2.0, 2, {.h = 1e-3}), expect2, 1e-5 * expect2);
}

TEST(FiniteDifference, StencilMustStayInDomain) {
  const auto s = make_scheme({0.5, 0.5}, {1.0, 2.0});
  EXPECT_THROW(finite_difference_derivative(s, 1.0, 1), DomainError);
  EXPECT_THROW(finite_difference_derivative(s, 1.0 + 1e-3, 3), DomainError);  // needs 1 + 2h
  EXPECT_NO_THROW(finite_difference_derivative(s, 1.0 + 2e-3, 3));
  EXPECT_NO_THROW(finite_difference_derivative(s, 1.0, 1, {.domain = TDomain::extended}));
  EXPECT_THROW(finite_difference_derivative(s, 2.0, 5), ValidationError);
  EXPECT_THROW(finite_difference_derivative(s, 2.0, 1, {.h = -1.0}), ValidationError);
}

TEST(CentralDifference, PolynomialsAreExactUpToRoundoff) {
  // Each O(h^2) stencil differentiates a cubic exactly for r <= 2, and a
  // quintic's 3rd/4th derivatives up to the h^2 term.
  auto cubic = [](double x) { return x * x * x; };
  EXPECT_NEAR(central_difference(cubic, 2.0, 1, 1e-3), 12.0, 1e-5);
  EXPECT_NEAR(central_difference(cubic, 2.0, 2, 1e-3), 12.0, 1e-5);
  EXPECT_NEAR(central_difference(cubic, 2.0, 3, 1e-2), 6.0, 1e-4);
  auto quartic = [](double x) { return x * x * x * x; };
  EXPECT_NEAR(central_difference(quartic, 1.5, 4, 1e-2), 24.0, 1e-3);
}

TEST(CentralDifference, RichardsonImprovesAccuracy) {
  auto f = [](double x) { return std::exp(2.0 * x); };
  const double exact = 2.0 * std::exp(2.0);
  const double plain = std::fabs(central_difference(f, 1.0, 1, 1e-2) - exact);
  const double extrap = std::fabs(central_difference(f, 1.0, 1, 1e-2, true) - exact);
  EXPECT_LT(extrap, plain * 1e-2);
}

// Property suites -----------------------------------------------------------

TEST(Property, Normalization) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 500; ++i) {
    const auto s = testing::random_scheme(rng, 1, 64, 0.1, 10.0);
    EXPECT_LE(std::fabs(weighted_igf(s, 1.0) - 1.0), 1e-12);
  }
  for (int i = 0; i < 200; ++i) {
    auto probs = testing::random_simplex(rng, testing::random_size(rng, 1, 40));
    const double scale = testing::random_real(rng, 0.1, 1.0);
    for (auto& p : probs) p *= scale;
    const auto s = make_scheme(probs, testing::random_uniform_vector(rng, probs.size(), 0.1, 10.0),
                               DistributionKind::generalized);
    EXPECT_NEAR(weighted_igf(s, 1.0), s.dist.total_mass(), 1e-12);
  }
}

TEST(Property, UnitUtilityReducesToGolomb) {
  std::mt19937_64 rng(102);
  for (int i = 0; i < 300; ++i) {
    const auto s = testing::with_unit_utility(testing::random_scheme(rng, 1, 64, 1.0, 1.0));
    for (double t : {1.0, 1.25, 2.0, 3.0, 7.5}) {
      EXPECT_LE(std::fabs(weighted_igf(s, t) - golomb_igf(s.dist, t)), 1e-12);
    }
    for (unsigned r = 0; r <= 5; ++r) {
      const double a = weighted_self_information_moment(s, r);
      EXPECT_NEAR(a, self_information_moment(s.dist, r), 1e-12 * std::max(1.0, a));
    }
    EXPECT_NEAR(weighted_entropy(s), shannon_entropy(s.dist), 1e-12);
  }
}

TEST(Property, DerivativeAndMomentLinks) {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 300; ++i) {
    const auto s = testing::random_scheme(rng, 1, 64, 0.1, 10.0);
    EXPECT_LE(std::fabs(-weighted_igf_derivative(s, 1.0, 1) - weighted_entropy(s)), 1e-12);
    for (unsigned r = 1; r <= 4; ++r) {
      const double sign = (r % 2 == 0) ? 1.0 : -1.0;
      EXPECT_LE(std::fabs(sign * weighted_igf_derivative(s, 1.0, r) -
                          weighted_self_information_moment(s, r)),
                1e-10);
    }
  }
}

TEST(Property, FiniteDifferenceOracleAgreement) {
  std::mt19937_64 rng(104);
  for (int i = 0; i < 200; ++i) {
    const auto s = testing::random_scheme(rng, 2, 16, 0.5, 4.0, 1e-3);
    const double t = testing::random_real(rng, 1.0 + 2e-3, 3.0);
    const double d1 = weighted_igf_derivative(s, t, 1);
    EXPECT_NEAR(finite_difference_derivative(s, t, 1), d1, 1e-6 * std::fabs(d1));
    for (unsigned r : {2u, 3u}) {
      const double dr = weighted_igf_derivative(s, t, r);
      EXPECT_NEAR(finite_difference_derivative(s, t, r), dr, 1e-4 * std::fabs(dr))
          << "r=" << r << " t=" << t;
    }
  }
}

TEST(Property, MonotoneConvexAndBounded) {
  std::mt19937_64 rng(105);
  for (int i = 0; i < 200; ++i) {
    const auto s = testing::random_scheme(rng, 1, 32, 0.1, 10.0);
    double previous = weighted_igf(s, 1.0);
    for (double t = 1.05; t <= 4.0; t += 0.05) {
      const double v = weighted_igf(s, t);
      EXPECT_LE(v, previous);
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0 + 1e-15);
      EXPECT_GE(weighted_igf_derivative(s, t, 2), 0.0);
      previous = v;
    }
  }
}

TEST(LogBase, Conversion) {
  EXPECT_DOUBLE_EQ(convert_log_base(kLn2, LogBase::two), 1.0);
  EXPECT_DOUBLE_EQ(convert_log_base(kLn2 * kLn2 * kLn2, LogBase::two, 3), 1.0);
  EXPECT_EQ(convert_log_base(5.0, LogBase::natural, 3), 5.0);
}

}  // namespace
}  // namespace igf
