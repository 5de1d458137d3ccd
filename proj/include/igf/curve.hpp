#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "igf/distributions.hpp"
#include "igf/generating_functions.hpp"

namespace igf {

enum class Measure { weighted, golomb, hooda_bhaker };

std::string_view to_string(Measure measure);
/// Accepts "weighted", "golomb", "hooda_bhaker" and "hooda-bhaker".
std::optional<Measure> parse_measure(std::string_view name);

/// A t-sweep of one or more generating functions.
struct CurveRequest {
  double t_min = 1.0;
  double t_max = 3.0;
  std::size_t steps = 101;
  std::vector<Measure> measures{Measure::weighted};
  TDomain domain = TDomain::standard;
};

struct CurveSample {
  double t;
  std::vector<double> values;  // one per requested measure, in request order
};

/// Throws ValidationError for steps < 2, t_min >= t_max, no measures or
/// non-finite bounds, and DomainError for t_min < 1 in the standard domain.
void validate(const CurveRequest& request);

/// `steps` equally spaced t values including both endpoints.
std::vector<double> curve_grid(const CurveRequest& request);

std::vector<CurveSample> compute_curve(const UtilityInformationScheme& scheme,
                                       const CurveRequest& request);

/// Header `t,<measure>...`, one row per sample, '\n' line endings.
void write_curve_csv(std::ostream& out, std::span<const Measure> measures,
                     std::span<const CurveSample> samples, int digits);

}  // namespace igf
