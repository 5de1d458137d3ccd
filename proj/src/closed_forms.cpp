#include "igf/closed_forms.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "igf/errors.hpp"
#include "igf/summation.hpp"

namespace igf {
namespace {

constexpr double kZetaTerms = 1e6;
constexpr double kMinTerms = 16.0;
constexpr double kNegligible = 1e-20;
constexpr std::size_t kCacheLimit = 4096;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void require_positive_utility(double u) {
  if (!(u > 0.0) || !std::isfinite(u)) {
    throw ValidationError(ErrorCode::InvalidParameter, "utility must be positive, got " + num(u));
  }
}

void require_zeta_argument(double beta) {
  if (std::isnan(beta) || !(beta > 1.0)) {
    throw ValidationError(ErrorCode::InvalidParameter,
                          "zeta(beta) diverges for beta <= 1, got " + num(beta));
  }
}

void check_t(double t, TDomain domain) {
  if (!std::isfinite(t)) throw DomainError("t must be finite, got " + num(t));
  if (domain == TDomain::standard && t < 1.0) {
    throw DomainError("t = " + num(t) + " is below 1 (enable the extended domain to allow it)");
  }
}

// Memo table keyed on the bit pattern of the argument.
class ZetaCache {
 public:
  template <typename Compute>
  double get(double beta, Compute compute) {
    const auto key = std::bit_cast<std::uint64_t>(beta);
    {
      std::shared_lock lock(mutex_);
      if (auto it = values_.find(key); it != values_.end()) return it->second;
    }
    const double value = compute(beta);
    std::unique_lock lock(mutex_);
    if (values_.size() >= kCacheLimit) values_.clear();
    values_.emplace(key, value);
    return value;
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, double> values_;
};

ZetaCache& zeta_cache() {
  static ZetaCache cache;
  return cache;
}

ZetaCache& zeta_derivative_cache() {
  static ZetaCache cache;
  return cache;
}

double compute_zeta(double s) {
  CompensatedSum sum;
  double n = 1.0;
  for (; n < kZetaTerms; n += 1.0) {
    const double term = std::pow(n, -s);
    if (n >= kMinTerms && term < kNegligible * sum.value()) break;
    sum += term;
  }
  // Euler-Maclaurin tail for sum_{i >= n} i^-s.
  const double n_s = std::pow(n, -s);
  sum += n * n_s / (s - 1.0);
  sum += 0.5 * n_s;
  sum += s * n_s / n / 12.0;
  sum += -s * (s + 1.0) * (s + 2.0) * n_s / (n * n * n) / 720.0;
  return sum.value();
}

double compute_zeta_derivative(double s) {
  // Accumulates sum_i ln(i) i^-s, negated at the end.
  CompensatedSum sum;
  double n = 2.0;
  for (; n < kZetaTerms; n += 1.0) {
    const double term = std::log(n) * std::pow(n, -s);
    if (n >= kMinTerms && term < kNegligible * sum.value()) break;
    sum += term;
  }
  const double ln_n = std::log(n);
  const double n_s = std::pow(n, -s);
  const double a = s - 1.0;
  // int_n^inf ln(x) x^-s dx
  sum += n * n_s * (ln_n / a + 1.0 / (a * a));
  // g(n) / 2
  sum += 0.5 * ln_n * n_s;
  // -g'(n) / 12 with g'(x) = x^(-s-1) (1 - s ln x)
  sum += -(n_s / n) * (1.0 - s * ln_n) / 12.0;
  // g'''(n) / 720 with
  // g'''(x) = x^(-s-3) ((s+2)(2s+1) + s(s+1) - s(s+1)(s+2) ln x)
  sum += (n_s / (n * n * n)) *
         ((s + 2.0) * (2.0 * s + 1.0) + s * (s + 1.0) - s * (s + 1.0) * (s + 2.0) * ln_n) /
         720.0;
  return -sum.value();
}

}  // namespace

double zeta(double beta) {
  require_zeta_argument(beta);
  if (std::isinf(beta)) return 1.0;
  return zeta_cache().get(beta, compute_zeta);
}

double zeta_derivative(double beta) {
  require_zeta_argument(beta);
  if (std::isinf(beta)) return -0.0;
  return zeta_derivative_cache().get(beta, compute_zeta_derivative);
}

double uniform_igf(long long n, double u, double t, TDomain domain) {
  validate(ParametricFamily{Uniform{n}});
  require_positive_utility(u);
  check_t(t, domain);
  return std::pow(static_cast<double>(n), u * (1.0 - t));
}

double uniform_entropy(long long n, double u) {
  validate(ParametricFamily{Uniform{n}});
  require_positive_utility(u);
  return u * std::log(static_cast<double>(n));
}

double geometric_igf(double p, double u, double t, TDomain domain) {
  validate(ParametricFamily{Geometric{p}});
  require_positive_utility(u);
  check_t(t, domain);
  const double s = 1.0 - u * (1.0 - t);
  if (!(s > 0.0)) {
    throw DomainError("geometric IGF diverges for exponent 1 - u(1 - t) = " + num(s) + " <= 0");
  }
  const double q = 1.0 - p;
  // 1 - p^s loses digits when p^s is close to 1, so go through expm1.
  return std::pow(q, s) / -std::expm1(s * std::log(p));
}

double geometric_entropy(double p, double u) {
  validate(ParametricFamily{Geometric{p}});
  require_positive_utility(u);
  const double q = 1.0 - p;
  return u * (-(p * std::log(p) + q * std::log1p(-p)) / q);
}

double beta_power_igf(double beta, double u, double t, TDomain domain) {
  validate(ParametricFamily{BetaPower{beta}});
  require_positive_utility(u);
  check_t(t, domain);
  const double s = 1.0 - u * (1.0 - t);
  if (!(beta * s > 1.0)) {
    throw DomainError("beta-power IGF diverges for beta * (1 - u(1 - t)) = " + num(beta * s) +
                      " <= 1");
  }
  // sum_i (i^-beta / zeta(beta))^s = zeta(beta s) / zeta(beta)^s
  return zeta(beta * s) / std::pow(zeta(beta), s);
}

double beta_power_entropy(double beta, double u) {
  validate(ParametricFamily{BetaPower{beta}});
  require_positive_utility(u);
  const double z = zeta(beta);
  return u * (std::log(z) - beta * zeta_derivative(beta) / z);
}

double closed_form_igf(const ParametricFamily& family, double u, double t,
                       TDomain domain) {
  if (const auto* f = std::get_if<Uniform>(&family)) return uniform_igf(f->n, u, t, domain);
  if (const auto* f = std::get_if<Geometric>(&family)) return geometric_igf(f->p, u, t, domain);
  return beta_power_igf(std::get<BetaPower>(family).beta, u, t, domain);
}

double closed_form_entropy(const ParametricFamily& family, double u) {
  if (const auto* f = std::get_if<Uniform>(&family)) return uniform_entropy(f->n, u);
  if (const auto* f = std::get_if<Geometric>(&family)) return geometric_entropy(f->p, u);
  return beta_power_entropy(std::get<BetaPower>(family).beta, u);
}

}  // namespace igf
