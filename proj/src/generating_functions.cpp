#include "igf/generating_functions.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
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

void check_t(double t, TDomain domain) {
  if (!std::isfinite(t)) {
    throw DomainError("t must be finite, got " + num(t));
  }
  if (domain == TDomain::standard && t < 1.0) {
    throw DomainError("t = " + num(t) + " is below 1 (enable the extended domain to allow it)");
  }
}

// p^e with the convention 0^e = 0 for e > 0.
double power_term(double p, double exponent) {
  if (p == 0.0) {
    if (exponent > 0.0) return 0.0;
    throw DomainError("zero probability raised to non-positive exponent " + num(exponent));
  }
  return std::pow(p, exponent);
}

// Exponent of the weighted IGF term: 1 - u (1 - t).
double weighted_exponent(double u, double t) { return 1.0 - u * (1.0 - t); }

double integer_power(double x, unsigned r) {
  double result = 1.0;
  for (unsigned k = 0; k < r; ++k) result *= x;
  return result;
}

}  // namespace

double convert_log_base(double natural_value, LogBase base, unsigned degree) {
  if (base == LogBase::natural) return natural_value;
  return natural_value / integer_power(std::numbers::ln2, degree);
}

double golomb_igf(const ProbabilityDistribution& dist, double t, TDomain domain) {
  check_t(t, domain);
  CompensatedSum sum;
  for (double p : dist.probs()) sum += power_term(p, t);
  return sum.value();
}

double weighted_igf(const UtilityInformationScheme& scheme, double t,
                    TDomain domain) {
  check_t(t, domain);
  const auto probs = scheme.dist.probs();
  const auto utils = scheme.util.utils();
  CompensatedSum sum;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    sum += power_term(probs[i], weighted_exponent(utils[i], t));
  }
  return sum.value();
}

double hooda_bhaker_igf(const UtilityInformationScheme& scheme, double t,
                        TDomain domain) {
  check_t(t, domain);
  const auto probs = scheme.dist.probs();
  const auto utils = scheme.util.utils();
  CompensatedSum sum;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    sum += utils[i] * power_term(probs[i], t);
  }
  return sum.value();
}

double shannon_entropy(const ProbabilityDistribution& dist, LogBase base) {
  CompensatedSum sum;
  for (double p : dist.probs()) {
    if (p > 0.0) sum += -p * std::log(p);
  }
  return convert_log_base(sum.value(), base);
}

double weighted_entropy(const UtilityInformationScheme& scheme, LogBase base) {
  const auto probs = scheme.dist.probs();
  const auto utils = scheme.util.utils();
  CompensatedSum sum;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] > 0.0) sum += -utils[i] * probs[i] * std::log(probs[i]);
  }
  return convert_log_base(sum.value(), base);
}

double self_information_moment(const ProbabilityDistribution& dist, unsigned r) {
  CompensatedSum sum;
  for (double p : dist.probs()) {
    if (p > 0.0) sum += p * integer_power(-std::log(p), r);
  }
  return sum.value();
}

double weighted_self_information_moment(const UtilityInformationScheme& scheme,
                                        unsigned r) {
  const auto probs = scheme.dist.probs();
  const auto utils = scheme.util.utils();
  CompensatedSum sum;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] > 0.0) {
      sum += probs[i] * integer_power(-utils[i] * std::log(probs[i]), r);
    }
  }
  return sum.value();
}

double weighted_igf_derivative(const UtilityInformationScheme& scheme, double t,
                               unsigned r, TDomain domain) {
  if (r == 0) {
    throw ValidationError(ErrorCode::InvalidParameter, "derivative order must be at least 1");
  }
  check_t(t, domain);
  const auto probs = scheme.dist.probs();
  const auto utils = scheme.util.utils();
  CompensatedSum sum;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double exponent = weighted_exponent(utils[i], t);
    // The p = 0 term vanishes exactly where the IGF term itself is defined.
    const double base = power_term(probs[i], exponent);
    if (probs[i] > 0.0) {
      sum += integer_power(utils[i] * std::log(probs[i]), r) * base;
    }
  }
  return sum.value();
}

double default_step(unsigned r) { return r <= 1 ? 1e-5 : 1e-3; }

unsigned stencil_half_width(unsigned r) { return (r + 1) / 2; }

double central_difference(const std::function<double(double)>& f, double t,
                          unsigned r, double h, bool richardson) {
  if (r < 1 || r > 4) {
    throw ValidationError(ErrorCode::InvalidParameter,
                          "finite differences support orders 1..4, got " + std::to_string(r));
  }
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw ValidationError(ErrorCode::InvalidParameter, "step must be positive, got " + num(h));
  }
  auto stencil = [&](double step) {
    switch (r) {
      case 1:
        return (f(t + step) - f(t - step)) / (2.0 * step);
      case 2:
        return (f(t + step) - 2.0 * f(t) + f(t - step)) / (step * step);
      case 3:
        return (f(t + 2.0 * step) - 2.0 * f(t + step) + 2.0 * f(t - step) -
                f(t - 2.0 * step)) /
               (2.0 * step * step * step);
      default:
        return (f(t + 2.0 * step) - 4.0 * f(t + step) + 6.0 * f(t) -
                4.0 * f(t - step) + f(t - 2.0 * step)) /
               (step * step * step * step);
    }
  };
  const double coarse = stencil(h);
  if (!richardson) return coarse;
  // Leading error is c h^2, so (4 D(h/2) - D(h)) / 3 cancels it.
  const double fine = stencil(h / 2.0);
  return (4.0 * fine - coarse) / 3.0;
}

double finite_difference_derivative(const UtilityInformationScheme& scheme,
                                    double t, unsigned r,
                                    const FiniteDifferenceOptions& options) {
  if (!std::isfinite(options.h) || options.h < 0.0) {
    throw ValidationError(ErrorCode::InvalidParameter,
                          "finite-difference step must be positive, got " + num(options.h));
  }
  const double h = options.h > 0.0 ? options.h : default_step(r);
  if (r >= 1 && r <= 4 && options.domain == TDomain::standard) {
    const double lowest = t - stencil_half_width(r) * h;
    if (lowest < 1.0) {
      throw DomainError("finite-difference stencil reaches t = " + num(lowest) +
                        " below 1; evaluate at t >= 1 + " +
                        std::to_string(stencil_half_width(r)) + "h or use the extended domain");
    }
  }
  return central_difference(
      [&](double x) { return weighted_igf(scheme, x, options.domain); }, t, r, h,
      options.richardson);
}

}  // namespace igf
