#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace igf {

/// Tolerance on |sum - 1| for complete distributions, and on the excess
/// over 1 for generalized ones.
inline constexpr double kSumTolerance = 1e-9;

enum class DistributionKind { complete, generalized };

/// A finite vector of probabilities. Complete distributions sum to one;
/// generalized (incomplete) ones sum to at most one. Zero entries are allowed.
/// Instances only come out of the validating factories below.
class ProbabilityDistribution {
 public:
  std::span<const double> probs() const noexcept { return probs_; }
  DistributionKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

  /// Compensated sum of the probabilities.
  double total_mass() const;

  friend bool operator==(const ProbabilityDistribution&,
                         const ProbabilityDistribution&) = default;

 private:
  ProbabilityDistribution(std::vector<double> probs, DistributionKind kind)
      : probs_(std::move(probs)), kind_(kind) {}

  friend ProbabilityDistribution make_distribution(std::vector<double>,
                                                   DistributionKind);

  std::vector<double> probs_;
  DistributionKind kind_;
};

ProbabilityDistribution make_distribution(std::vector<double> probs,
                                          DistributionKind kind);
ProbabilityDistribution make_complete(std::vector<double> probs);
ProbabilityDistribution make_generalized(std::vector<double> probs);

/// Re-runs the construction checks; throws ValidationError on violation.
void validate(const ProbabilityDistribution& dist);

/// Strictly positive utility weights, one per event.
class UtilityDistribution {
 public:
  std::span<const double> utils() const noexcept { return utils_; }
  std::size_t size() const noexcept { return utils_.size(); }
  double operator[](std::size_t i) const { return utils_[i]; }

  /// The shared value when every weight is identical.
  std::optional<double> constant_value() const;

  friend bool operator==(const UtilityDistribution&,
                         const UtilityDistribution&) = default;

 private:
  explicit UtilityDistribution(std::vector<double> utils)
      : utils_(std::move(utils)) {}

  friend UtilityDistribution make_utility(std::vector<double>);

  std::vector<double> utils_;
};

UtilityDistribution make_utility(std::vector<double> utils);
UtilityDistribution constant_utility(std::size_t n, double u);

/// Events with probabilities and independent utilities; the input to every
/// weighted measure.
struct UtilityInformationScheme {
  ProbabilityDistribution dist;
  UtilityDistribution util;
  std::vector<std::string> labels;  // empty, or one per event

  std::size_t size() const noexcept { return dist.size(); }

  friend bool operator==(const UtilityInformationScheme&,
                         const UtilityInformationScheme&) = default;
};

UtilityInformationScheme make_scheme(ProbabilityDistribution dist,
                                     UtilityDistribution util,
                                     std::vector<std::string> labels = {});
UtilityInformationScheme make_scheme(
    std::vector<double> probs, std::vector<double> utils,
    DistributionKind kind = DistributionKind::complete,
    std::vector<std::string> labels = {});

// Parametric families. Uniform is indexed i = 1..n, geometric i = 0, 1, ...
// with p_i = (1-p) p^i, and beta-power i = 1, 2, ... with p_i = i^-beta / zeta(beta).

struct Uniform {
  long long n;
};
struct Geometric {
  double p;
};
struct BetaPower {
  double beta;
};

using ParametricFamily = std::variant<Uniform, Geometric, BetaPower>;

/// Throws ValidationError(InvalidParameter) unless n >= 1, 0 < p < 1, beta > 1.
void validate(const ParametricFamily& family);

/// Uniform yields a complete distribution and ignores `truncation`. The
/// infinite-support families require a truncation and yield the first
/// `truncation` terms as a generalized distribution.
ProbabilityDistribution realize_family(const ParametricFamily& family,
                                       std::optional<std::size_t> truncation);

}  // namespace igf
