#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "igf/closed_forms.hpp"
#include "igf/errors.hpp"
#include "igf/escort.hpp"
#include "igf/generating_functions.hpp"

namespace py = pybind11;
using namespace py::literals;

namespace {

igf::DistributionKind parse_kind(const std::string& kind) {
  if (kind == "complete") return igf::DistributionKind::complete;
  if (kind == "generalized") return igf::DistributionKind::generalized;
  throw igf::ValidationError(igf::ErrorCode::InvalidParameter,
                             "kind must be 'complete' or 'generalized'");
}

igf::TDomain domain_of(bool extended) {
  return extended ? igf::TDomain::extended : igf::TDomain::standard;
}

igf::LogBase parse_base(const std::string& base) {
  if (base == "e") return igf::LogBase::natural;
  if (base == "2") return igf::LogBase::two;
  throw igf::ValidationError(igf::ErrorCode::InvalidParameter, "base must be 'e' or '2'");
}

igf::UtilityInformationScheme scheme_of(const std::vector<double>& p,
                                        const std::optional<std::vector<double>>& u,
                                        const std::string& kind) {
  auto utils = u ? *u : std::vector<double>(p.size(), 1.0);
  return igf::make_scheme(p, std::move(utils), parse_kind(kind));
}

}  // namespace

PYBIND11_MODULE(_igf, m) {
  m.doc() = "Weighted information generating functions";

  auto base_error = py::register_exception<igf::Error>(m, "IgfError", PyExc_ValueError);
  py::register_exception<igf::ValidationError>(m, "ValidationError", base_error.ptr());
  py::register_exception<igf::DomainError>(m, "DomainError", base_error.ptr());

  m.def(
      "weighted_igf",
      [](const std::vector<double>& p, const std::optional<std::vector<double>>& u, double t,
         const std::string& kind, bool extended) {
        return igf::weighted_igf(scheme_of(p, u, kind), t, domain_of(extended));
      },
      "p"_a, "u"_a = py::none(), "t"_a = 1.0, "kind"_a = "complete", "extended"_a = false,
      "sum_i p_i^(1 - u_i (1 - t))");

  m.def(
      "golomb_igf",
      [](const std::vector<double>& p, double t, const std::string& kind, bool extended) {
        return igf::golomb_igf(igf::make_distribution(p, parse_kind(kind)), t,
                               domain_of(extended));
      },
      "p"_a, "t"_a = 1.0, "kind"_a = "complete", "extended"_a = false, "sum_i p_i^t");

  m.def(
      "hooda_bhaker_igf",
      [](const std::vector<double>& p, const std::vector<double>& u, double t,
         const std::string& kind, bool extended) {
        return igf::hooda_bhaker_igf(scheme_of(p, u, kind), t, domain_of(extended));
      },
      "p"_a, "u"_a, "t"_a = 1.0, "kind"_a = "complete", "extended"_a = false,
      "sum_i u_i p_i^t");

  m.def(
      "weighted_entropy",
      [](const std::vector<double>& p, const std::optional<std::vector<double>>& u,
         const std::string& kind, const std::string& base) {
        return igf::weighted_entropy(scheme_of(p, u, kind), parse_base(base));
      },
      "p"_a, "u"_a = py::none(), "kind"_a = "complete", "base"_a = "e",
      "-sum_i u_i p_i log p_i");

  m.def(
      "weighted_igf_derivative",
      [](const std::vector<double>& p, const std::optional<std::vector<double>>& u, double t,
         unsigned r, const std::string& kind, bool extended) {
        return igf::weighted_igf_derivative(scheme_of(p, u, kind), t, r, domain_of(extended));
      },
      "p"_a, "u"_a = py::none(), "t"_a = 1.0, "r"_a = 1, "kind"_a = "complete",
      "extended"_a = false, "Exact r-th t-derivative of the weighted IGF");

  m.def(
      "weighted_self_information_moment",
      [](const std::vector<double>& p, const std::optional<std::vector<double>>& u, unsigned r,
         const std::string& kind) {
        return igf::weighted_self_information_moment(scheme_of(p, u, kind), r);
      },
      "p"_a, "u"_a = py::none(), "r"_a = 1, "kind"_a = "complete",
      "sum_i p_i (-u_i ln p_i)^r");

  m.def("zeta", &igf::zeta, "beta"_a, "Riemann zeta for beta > 1");
  m.def("uniform_igf", [](long long n, double u, double t) { return igf::uniform_igf(n, u, t); },
        "n"_a, "u"_a, "t"_a);
  m.def("geometric_igf",
        [](double p, double u, double t) { return igf::geometric_igf(p, u, t); }, "p"_a, "u"_a,
        "t"_a);
  m.def("beta_power_igf",
        [](double beta, double u, double t) { return igf::beta_power_igf(beta, u, t); },
        "beta"_a, "u"_a, "t"_a);
  m.def("uniform_entropy", &igf::uniform_entropy, "n"_a, "u"_a);
  m.def("geometric_entropy", &igf::geometric_entropy, "p"_a, "u"_a);
  m.def("beta_power_entropy", &igf::beta_power_entropy, "beta"_a, "u"_a);

  m.def(
      "escort",
      [](const std::vector<double>& p, double beta, const std::string& kind) {
        const auto pair = igf::escort_transform(igf::make_distribution(p, parse_kind(kind)), beta);
        const auto probs = pair.normalized.probs();
        return py::make_tuple(std::vector<double>(probs.begin(), probs.end()), pair.mass);
      },
      "p"_a, "beta"_a, "kind"_a = "complete",
      "Returns (p^beta / sum p^beta, sum p^beta)");

  m.def(
      "verify_scaling_identity",
      [](const std::vector<double>& p, double u, double beta, double t, const std::string& kind,
         bool extended) {
        const auto r = igf::verify_scaling_identity(igf::make_distribution(p, parse_kind(kind)),
                                                    u, beta, t, domain_of(extended));
        py::dict out;
        out["lhs"] = r.lhs;
        out["rhs"] = r.rhs;
        out["abs_diff"] = r.abs_diff;
        out["pass"] = r.pass;
        return out;
      },
      "p"_a, "u"_a, "beta"_a, "t"_a, "kind"_a = "complete", "extended"_a = false);
}
