#include "igf/escort.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "igf/errors.hpp"
#include "igf/summation.hpp"

namespace igf {
namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void require_beta(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw ValidationError(ErrorCode::InvalidParameter,
                          "escort exponent beta must be positive, got " + num(beta));
  }
}

}  // namespace

EscortPair escort_transform(const ProbabilityDistribution& dist, double beta) {
  require_beta(beta);
  const auto probs = dist.probs();
  if (std::none_of(probs.begin(), probs.end(), [](double p) { return p > 0.0; })) {
    throw ValidationError(ErrorCode::AllZeroProbabilities,
                          "escort transform needs at least one positive probability");
  }
  std::vector<double> powered(probs.size());
  CompensatedSum mass;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    powered[i] = probs[i] > 0.0 ? std::pow(probs[i], beta) : 0.0;
    mass += powered[i];
  }
  const double total = mass.value();
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw DomainError("sum of p_i^beta is not a positive finite number: " + num(total));
  }
  for (double& w : powered) w /= total;
  return {make_complete(std::move(powered)), total, beta};
}

double generalized_igf(const ProbabilityDistribution& dist,
                       const UtilityDistribution& util, double beta, double t,
                       TDomain domain) {
  auto escort = escort_transform(dist, beta);
  return weighted_igf(make_scheme(std::move(escort.normalized), util), t, domain);
}

double unnormalized_power_igf(const ProbabilityDistribution& dist, double u,
                              double beta, double t, TDomain domain) {
  require_beta(beta);
  if (!(u > 0.0) || !std::isfinite(u)) {
    throw ValidationError(ErrorCode::NonPositiveUtility, "utility must be positive, got " + num(u));
  }
  if (!std::isfinite(t)) throw DomainError("t must be finite, got " + num(t));
  if (domain == TDomain::standard && t < 1.0) {
    throw DomainError("t = " + num(t) + " is below 1 (enable the extended domain to allow it)");
  }
  const double exponent = beta * (1.0 - u * (1.0 - t));
  CompensatedSum sum;
  for (double p : dist.probs()) {
    if (p == 0.0) {
      if (exponent > 0.0) continue;
      throw DomainError("zero probability raised to non-positive exponent " + num(exponent));
    }
    sum += std::pow(p, exponent);
  }
  return sum.value();
}

ScalingIdentityReport verify_scaling_identity(const ProbabilityDistribution& dist,
                                              double u, double beta, double t,
                                              TDomain domain) {
  const double lhs = unnormalized_power_igf(dist, u, beta, t, domain);

  auto escort = escort_transform(dist, beta);
  const double mass = escort.mass;
  const double normalized_igf = weighted_igf(
      make_scheme(std::move(escort.normalized), constant_utility(dist.size(), u)), t, domain);
  const double rhs = normalized_igf * std::pow(mass, 1.0 - u * (1.0 - t));

  const double abs_diff = std::fabs(lhs - rhs);
  const bool pass = abs_diff <= kScalingIdentityTolerance * std::max(1.0, std::fabs(lhs));
  return {lhs, rhs, abs_diff, pass};
}

}  // namespace igf
