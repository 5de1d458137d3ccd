#pragma once

#include <functional>

#include "igf/distributions.hpp"

namespace igf {

enum class LogBase { natural, two };

/// Which arguments t the generating functions accept. `standard` is t >= 1.
/// `extended` admits any real t for which every term is defined, i.e. zero
/// probabilities must meet a strictly positive exponent.
enum class TDomain { standard, extended };

/// Rescales a natural-log quantity that is homogeneous of the given degree
/// in the logarithm (1 for entropies, r for r-th moments).
double convert_log_base(double natural_value, LogBase base, unsigned degree = 1);

/// Golomb's IGF: sum_i p_i^t.
double golomb_igf(const ProbabilityDistribution& dist, double t,
                  TDomain domain = TDomain::standard);

/// Weighted IGF: sum_i p_i^(1 - u_i (1 - t)). Equals the total mass at t = 1
/// and its negated t-derivative there is the weighted entropy.
double weighted_igf(const UtilityInformationScheme& scheme, double t,
                    TDomain domain = TDomain::standard);

/// Hooda-Bhaker weighted IGF: sum_i u_i p_i^t.
double hooda_bhaker_igf(const UtilityInformationScheme& scheme, double t,
                        TDomain domain = TDomain::standard);

/// -sum_i p_i log p_i, with 0 log 0 = 0.
double shannon_entropy(const ProbabilityDistribution& dist,
                       LogBase base = LogBase::natural);

/// -sum_i u_i p_i log p_i.
double weighted_entropy(const UtilityInformationScheme& scheme,
                        LogBase base = LogBase::natural);

/// sum_i p_i (-ln p_i)^r. This is the non-negative moment: the r-th
/// t-derivative of the Golomb IGF at t = 1 equals (-1)^r times this value.
double self_information_moment(const ProbabilityDistribution& dist, unsigned r);

/// sum_i p_i (-u_i ln p_i)^r, the r-th moment of the weighted
/// self-information. Related to the weighted IGF by
/// d^r/dt^r weighted_igf(t = 1) = (-1)^r * moment.
double weighted_self_information_moment(const UtilityInformationScheme& scheme,
                                        unsigned r);

/// Exact r-th t-derivative of the weighted IGF:
/// sum_i (u_i ln p_i)^r p_i^(1 - u_i (1 - t)). Requires r >= 1.
double weighted_igf_derivative(const UtilityInformationScheme& scheme, double t,
                               unsigned r, TDomain domain = TDomain::standard);

// Numerical differentiation -------------------------------------------------

/// Default step for the O(h^2) central stencils: 1e-5 for r = 1, 1e-3 above.
double default_step(unsigned r);

/// Half-width of the central stencil of order r, in units of h.
unsigned stencil_half_width(unsigned r);

/// O(h^2) central-difference estimate of the r-th derivative (1 <= r <= 4) of
/// an arbitrary function at t. With `richardson`, one extrapolation step
/// combines steps h and h/2 into an O(h^4) estimate.
double central_difference(const std::function<double(double)>& f, double t,
                          unsigned r, double h, bool richardson = false);

struct FiniteDifferenceOptions {
  double h = 0.0;  // 0 selects default_step(r)
  bool richardson = false;
  TDomain domain = TDomain::standard;
};

/// Finite-difference oracle for weighted_igf_derivative. Throws DomainError
/// when the stencil leaves the admissible t-domain.
double finite_difference_derivative(const UtilityInformationScheme& scheme,
                                    double t, unsigned r,
                                    const FiniteDifferenceOptions& options = {});

}  // namespace igf
