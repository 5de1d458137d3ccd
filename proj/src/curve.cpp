#include "igf/curve.hpp"

#include <cmath>
#include <string>

#include "igf/errors.hpp"
#include "igf/format.hpp"

namespace igf {

std::string_view to_string(Measure measure) {
  switch (measure) {
    case Measure::weighted: return "weighted";
    case Measure::golomb: return "golomb";
    case Measure::hooda_bhaker: return "hooda_bhaker";
  }
  return "unknown";
}

std::optional<Measure> parse_measure(std::string_view name) {
  if (name == "weighted") return Measure::weighted;
  if (name == "golomb") return Measure::golomb;
  if (name == "hooda_bhaker" || name == "hooda-bhaker") return Measure::hooda_bhaker;
  return std::nullopt;
}

void validate(const CurveRequest& request) {
  if (!std::isfinite(request.t_min) || !std::isfinite(request.t_max)) {
    throw ValidationError(ErrorCode::InvalidParameter, "curve bounds must be finite");
  }
  if (request.steps < 2) {
    throw ValidationError(ErrorCode::InvalidParameter, "curve needs at least 2 steps");
  }
  if (!(request.t_min < request.t_max)) {
    throw ValidationError(ErrorCode::InvalidParameter, "curve needs t_min < t_max");
  }
  if (request.measures.empty()) {
    throw ValidationError(ErrorCode::InvalidParameter, "curve needs at least one measure");
  }
  if (request.domain == TDomain::standard && request.t_min < 1.0) {
    throw DomainError("curve starts below t = 1 (enable the extended domain to allow it)");
  }
}

std::vector<double> curve_grid(const CurveRequest& request) {
  validate(request);
  std::vector<double> grid(request.steps);
  const double span = request.t_max - request.t_min;
  const double last = static_cast<double>(request.steps - 1);
  for (std::size_t i = 0; i < request.steps; ++i) {
    grid[i] = request.t_min + span * (static_cast<double>(i) / last);
  }
  grid.back() = request.t_max;
  return grid;
}

std::vector<CurveSample> compute_curve(const UtilityInformationScheme& scheme,
                                       const CurveRequest& request) {
  const auto grid = curve_grid(request);
  std::vector<CurveSample> samples;
  samples.reserve(grid.size());
  for (double t : grid) {
    CurveSample sample{t, {}};
    sample.values.reserve(request.measures.size());
    for (Measure m : request.measures) {
      switch (m) {
        case Measure::weighted:
          sample.values.push_back(weighted_igf(scheme, t, request.domain));
          break;
        case Measure::golomb:
          sample.values.push_back(golomb_igf(scheme.dist, t, request.domain));
          break;
        case Measure::hooda_bhaker:
          sample.values.push_back(hooda_bhaker_igf(scheme, t, request.domain));
          break;
      }
    }
    samples.push_back(std::move(sample));
  }
  return samples;
}

void write_curve_csv(std::ostream& out, std::span<const Measure> measures,
                     std::span<const CurveSample> samples, int digits) {
  std::string text = "t";
  for (Measure m : measures) {
    text += ',';
    text += to_string(m);
  }
  text += '\n';
  for (const auto& sample : samples) {
    if (sample.values.size() != measures.size()) {
      throw ValidationError(ErrorCode::LengthMismatch,
                            "curve sample has " + std::to_string(sample.values.size()) +
                                " values for " + std::to_string(measures.size()) + " measures");
    }
    text += format_value(sample.t, digits);
    for (double v : sample.values) {
      text += ',';
      text += format_value(v, digits);
    }
    text += '\n';
  }
  out << text;
}

}  // namespace igf
