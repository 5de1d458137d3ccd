#include "igf/distributions.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <type_traits>

#include "igf/closed_forms.hpp"
#include "igf/errors.hpp"
#include "igf/summation.hpp"

namespace igf {
namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double checked_sum(std::span<const double> probs) {
  if (probs.empty()) {
    throw ValidationError(ErrorCode::EmptyInput, "probability vector is empty");
  }
  CompensatedSum sum;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double p = probs[i];
    if (!std::isfinite(p)) {
      throw ValidationError(ErrorCode::InvalidParameter,
                            "probability " + std::to_string(i) + " is not finite");
    }
    if (p < 0.0) {
      throw ValidationError(ErrorCode::NegativeProbability,
                            "probability " + std::to_string(i) + " is negative: " + num(p));
    }
    if (p > 1.0) {
      throw ValidationError(ErrorCode::ProbabilityAboveOne,
                            "probability " + std::to_string(i) + " exceeds 1: " + num(p));
    }
    sum += p;
  }
  return sum.value();
}

void check_sum(double sum, DistributionKind kind) {
  if (kind == DistributionKind::complete) {
    if (std::fabs(sum - 1.0) > kSumTolerance) {
      throw ValidationError(ErrorCode::SumNotOne,
                            "probabilities sum to " + num(sum) + ", expected 1");
    }
  } else if (sum > 1.0 + kSumTolerance) {
    throw ValidationError(ErrorCode::SumExceedsOne,
                          "probabilities sum to " + num(sum) + ", which exceeds 1");
  }
}

void check_utilities(std::span<const double> utils) {
  if (utils.empty()) {
    throw ValidationError(ErrorCode::EmptyInput, "utility vector is empty");
  }
  for (std::size_t i = 0; i < utils.size(); ++i) {
    if (!std::isfinite(utils[i])) {
      throw ValidationError(ErrorCode::InvalidParameter,
                            "utility " + std::to_string(i) + " is not finite");
    }
    if (!(utils[i] > 0.0)) {
      throw ValidationError(ErrorCode::NonPositiveUtility,
                            "utility " + std::to_string(i) + " is not positive: " + num(utils[i]));
    }
  }
}

}  // namespace

double ProbabilityDistribution::total_mass() const {
  CompensatedSum sum;
  for (double p : probs_) sum += p;
  return sum.value();
}

ProbabilityDistribution make_distribution(std::vector<double> probs,
                                          DistributionKind kind) {
  check_sum(checked_sum(probs), kind);
  return ProbabilityDistribution(std::move(probs), kind);
}

ProbabilityDistribution make_complete(std::vector<double> probs) {
  return make_distribution(std::move(probs), DistributionKind::complete);
}

ProbabilityDistribution make_generalized(std::vector<double> probs) {
  return make_distribution(std::move(probs), DistributionKind::generalized);
}

void validate(const ProbabilityDistribution& dist) {
  check_sum(checked_sum(dist.probs()), dist.kind());
}

std::optional<double> UtilityDistribution::constant_value() const {
  for (double u : utils_) {
    if (u != utils_.front()) return std::nullopt;
  }
  return utils_.front();
}

UtilityDistribution make_utility(std::vector<double> utils) {
  check_utilities(utils);
  return UtilityDistribution(std::move(utils));
}

UtilityDistribution constant_utility(std::size_t n, double u) {
  return make_utility(std::vector<double>(n, u));
}

UtilityInformationScheme make_scheme(ProbabilityDistribution dist,
                                     UtilityDistribution util,
                                     std::vector<std::string> labels) {
  if (dist.size() != util.size()) {
    throw ValidationError(ErrorCode::LengthMismatch,
                          std::to_string(dist.size()) + " probabilities but " +
                              std::to_string(util.size()) + " utilities");
  }
  if (!labels.empty() && labels.size() != dist.size()) {
    throw ValidationError(ErrorCode::LengthMismatch,
                          std::to_string(dist.size()) + " probabilities but " +
                              std::to_string(labels.size()) + " labels");
  }
  return {std::move(dist), std::move(util), std::move(labels)};
}

UtilityInformationScheme make_scheme(std::vector<double> probs,
                                     std::vector<double> utils,
                                     DistributionKind kind,
                                     std::vector<std::string> labels) {
  if (probs.size() != utils.size()) {
    throw ValidationError(ErrorCode::LengthMismatch,
                          std::to_string(probs.size()) + " probabilities but " +
                              std::to_string(utils.size()) + " utilities");
  }
  auto dist = make_distribution(std::move(probs), kind);
  auto util = make_utility(std::move(utils));
  return make_scheme(std::move(dist), std::move(util), std::move(labels));
}

void validate(const ParametricFamily& family) {
  std::visit(
      [](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, Uniform>) {
          if (f.n < 1) {
            throw ValidationError(ErrorCode::InvalidParameter,
                                  "uniform family needs n >= 1, got " + std::to_string(f.n));
          }
        } else if constexpr (std::is_same_v<F, Geometric>) {
          if (!(f.p > 0.0 && f.p < 1.0)) {
            throw ValidationError(ErrorCode::InvalidParameter,
                                  "geometric family needs 0 < p < 1, got " + num(f.p));
          }
        } else {
          if (!(f.beta > 1.0) || !std::isfinite(f.beta)) {
            throw ValidationError(ErrorCode::InvalidParameter,
                                  "beta-power family needs beta > 1, got " + num(f.beta));
          }
        }
      },
      family);
}

ProbabilityDistribution realize_family(const ParametricFamily& family,
                                       std::optional<std::size_t> truncation) {
  validate(family);
  if (const auto* uniform = std::get_if<Uniform>(&family)) {
    const auto n = static_cast<std::size_t>(uniform->n);
    return make_complete(std::vector<double>(n, 1.0 / static_cast<double>(n)));
  }
  if (!truncation || *truncation == 0) {
    throw ValidationError(ErrorCode::TruncationRequired,
                          "infinite-support family needs a positive truncation");
  }
  const std::size_t count = *truncation;
  std::vector<double> probs(count);
  if (const auto* geometric = std::get_if<Geometric>(&family)) {
    const double q = 1.0 - geometric->p;
    for (std::size_t i = 0; i < count; ++i) {
      probs[i] = q * std::pow(geometric->p, static_cast<double>(i));
    }
  } else {
    const double beta = std::get<BetaPower>(family).beta;
    const double norm = zeta(beta);
    for (std::size_t i = 0; i < count; ++i) {
      probs[i] = std::pow(static_cast<double>(i + 1), -beta) / norm;
    }
  }
  return make_generalized(std::move(probs));
}

}  // namespace igf
