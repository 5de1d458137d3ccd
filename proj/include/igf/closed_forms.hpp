#pragma once

#include "igf/distributions.hpp"
#include "igf/generating_functions.hpp"

namespace igf {

/// Riemann zeta for real beta > 1.
///
/// Sums i^-beta for i < N (N = 1e6, or earlier once terms drop below 1e-20 of
/// the partial sum, never before i = 16) with compensated summation, then
/// adds the Euler-Maclaurin tail
///   N^(1-b)/(b-1) + N^-b/2 + b N^(-b-1)/12 - b(b+1)(b+2) N^(-b-3)/720.
/// The first omitted correction is below b^5 N^(-b-5)/30240, far under 1e-12
/// for every admissible beta, so the result is accurate to a few ulp of
/// double rounding. Results are memoised; the cache never alters values.
double zeta(double beta);

/// zeta'(beta) = -sum_i ln(i) i^-beta for beta > 1, by the same
/// truncation with the Euler-Maclaurin tail of g(x) = ln(x) x^-beta:
///   int_N^inf g + g(N)/2 - g'(N)/12 + g'''(N)/720.
/// Absolute accuracy well inside 1e-10. Always negative.
double zeta_derivative(double beta);

// Closed forms under constant utility u. Each IGF is 1 at t = 1 and each
// entropy is the negated t-derivative of the matching IGF at t = 1.

/// n^(u (1 - t)).
double uniform_igf(long long n, double u, double t,
                   TDomain domain = TDomain::standard);
/// u ln n.
double uniform_entropy(long long n, double u);

/// q^s / (1 - p^s) with q = 1 - p and s = 1 - u (1 - t); requires s > 0.
double geometric_igf(double p, double u, double t,
                     TDomain domain = TDomain::standard);
/// -u (p ln p + q ln q) / q.
double geometric_entropy(double p, double u);

/// zeta(beta s) / zeta(beta)^s with s = 1 - u (1 - t); requires beta s > 1.
double beta_power_igf(double beta, double u, double t,
                      TDomain domain = TDomain::standard);
/// u (ln zeta(beta) - beta zeta'(beta) / zeta(beta)).
double beta_power_entropy(double beta, double u);

/// Dispatch on a parametric family.
double closed_form_igf(const ParametricFamily& family, double u, double t,
                       TDomain domain = TDomain::standard);
double closed_form_entropy(const ParametricFamily& family, double u);

}  // namespace igf
