#pragma once

#include "igf/distributions.hpp"
#include "igf/generating_functions.hpp"

namespace igf {

/// Escort (power) distribution p_i^beta / sum_j p_j^beta together with the
/// normaliser sum_j p_j^beta of the source distribution.
struct EscortPair {
  ProbabilityDistribution normalized;  // always complete
  double mass;
  double beta;
};

/// Accepts complete and generalized sources. Zero entries stay zero.
/// Throws AllZeroProbabilities when no entry is positive, InvalidParameter
/// for beta <= 0 and DomainError when the mass underflows to zero.
EscortPair escort_transform(const ProbabilityDistribution& dist, double beta);

/// Weighted IGF of the escort distribution:
/// sum_i (p_i^beta / sum_j p_j^beta)^(1 - u_i (1 - t)).
double generalized_igf(const ProbabilityDistribution& dist,
                       const UtilityDistribution& util, double beta, double t,
                       TDomain domain = TDomain::standard);

/// Weighted IGF of the unnormalised powers under constant utility:
/// sum_i p_i^(beta (1 - u (1 - t))).
double unnormalized_power_igf(const ProbabilityDistribution& dist, double u,
                              double beta, double t,
                              TDomain domain = TDomain::standard);

struct ScalingIdentityReport {
  double lhs;
  double rhs;
  double abs_diff;
  bool pass;
};

/// Relative tolerance of the scaling identity check.
inline constexpr double kScalingIdentityTolerance = 1e-10;

/// Checks, for constant utility u, that
///   unnormalized_power_igf(P, u, beta, t)
///     == generalized_igf(P, u, beta, t) * (sum_i p_i^beta)^(1 - u (1 - t)),
/// evaluating the two sides along independent routes. Passes when
/// |lhs - rhs| <= 1e-10 * max(1, |lhs|).
ScalingIdentityReport verify_scaling_identity(const ProbabilityDistribution& dist,
                                              double u, double beta, double t,
                                              TDomain domain = TDomain::standard);

}  // namespace igf
