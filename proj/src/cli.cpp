#include "igf/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "igf/closed_forms.hpp"
#include "igf/curve.hpp"
#include "igf/errors.hpp"
#include "igf/escort.hpp"
#include "igf/format.hpp"
#include "igf/generating_functions.hpp"
#include "igf/scheme_io.hpp"

namespace igf::cli {
namespace {

constexpr unsigned kMaxMomentOrder = 8;
constexpr std::size_t kDefaultBetaPowerTruncation = 1'000'000;

struct GlobalOptions {
  std::string input;
  std::string format;
  std::string base = "e";
  bool extended_t = false;
  int digits = kDefaultDigits;

  TDomain domain() const { return extended_t ? TDomain::extended : TDomain::standard; }
  LogBase log_base() const { return base == "2" ? LogBase::two : LogBase::natural; }
};

struct FamilyOptions {
  std::string family;
  std::optional<long long> n;
  std::optional<double> p;
  std::optional<double> beta;
  double u = 1.0;
  std::optional<std::size_t> truncation;
};

void add_family_options(CLI::App* cmd, FamilyOptions& f) {
  cmd->add_option("--n", f.n, "Uniform family size");
  cmd->add_option("--p", f.p, "Geometric family ratio p (q = 1 - p)");
  cmd->add_option("--beta", f.beta, "Beta-power exponent");
  cmd->add_option("--u", f.u, "Constant utility")->capture_default_str();
  cmd->add_option("--truncation", f.truncation, "Number of terms for infinite-support families");
}

ParametricFamily family_from(const FamilyOptions& f) {
  auto need = [&](const auto& value, const char* flag) {
    if (!value) {
      throw ValidationError(ErrorCode::InvalidParameter,
                            f.family + " family needs " + std::string(flag));
    }
    return *value;
  };
  ParametricFamily family;
  if (f.family == "uniform") {
    family = Uniform{need(f.n, "--n")};
  } else if (f.family == "geometric") {
    family = Geometric{need(f.p, "--p")};
  } else if (f.family == "beta-power") {
    family = BetaPower{need(f.beta, "--beta")};
  } else {
    throw ValidationError(ErrorCode::InvalidParameter, "unknown family " + f.family);
  }
  validate(family);
  return family;
}

UtilityInformationScheme load_input(const GlobalOptions& g) {
  if (g.input.empty()) {
    throw ValidationError(ErrorCode::EmptyInput, "no input file given (use --input PATH)");
  }
  InputFormat format = InputFormat::json;
  if (g.format == "csv" ||
      (g.format.empty() && std::filesystem::path(g.input).extension() == ".csv")) {
    format = InputFormat::csv;
  }
  return load_scheme(g.input, format);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw ValidationError(ErrorCode::InvalidParameter, "cannot write " + path);
  }
  return file;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  auto file = open_output(path);
  file << text;
  if (!file.flush()) throw ValidationError(ErrorCode::InvalidParameter, "cannot write " + path);
}

// Terms of the truncated geometric sum needed to push the tail of
// sum (q p^i)^s below ~1e-18 of the head.
std::size_t geometric_check_terms(double p, double s) {
  const double terms = 45.0 / (s * -std::log(p));
  return static_cast<std::size_t>(std::min(terms, 1e7)) + 2;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted information generating functions of discrete distributions", "igf"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--input", g.input, "Scheme file (JSON, or CSV with --format csv)");
  app.add_option("--format", g.format, "Input format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--base", g.base, "Logarithm base for entropies and moments")
      ->check(CLI::IsMember({"e", "2"}));
  app.add_flag("--extended-t", g.extended_t, "Allow t < 1 wherever every term is defined");
  app.add_option("--digits", g.digits, "Decimal digits in printed values")
      ->check(CLI::Range(1, kMaxDigits));

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate a generating function at t");
  double eval_t = 1.0;
  std::string eval_measure = "weighted";
  eval->add_option("--t", eval_t, "Argument t")->required();
  eval->add_option("--measure", eval_measure, "weighted | golomb | hooda-bhaker")
      ->capture_default_str();

  // entropy
  auto* entropy = app.add_subcommand("entropy", "Weighted (or Shannon) entropy of the scheme");
  std::string entropy_measure = "weighted";
  entropy->add_option("--measure", entropy_measure, "weighted | shannon")
      ->check(CLI::IsMember({"weighted", "shannon"}))
      ->capture_default_str();

  // moments
  auto* moments = app.add_subcommand("moments", "Moments of the (weighted) self-information");
  unsigned r_max = 4;
  bool unweighted = false;
  moments->add_option("--r-max", r_max, "Highest order, at most 8")->capture_default_str();
  moments->add_flag("--unweighted", unweighted, "Ignore utilities");

  // curve
  auto* curve = app.add_subcommand("curve", "Tabulate generating functions over a t-grid as CSV");
  CurveRequest request;
  std::vector<std::string> measure_names{"weighted"};
  std::string curve_out;
  FamilyOptions curve_family;
  curve->add_option("--t-min", request.t_min)->capture_default_str();
  curve->add_option("--t-max", request.t_max)->capture_default_str();
  curve->add_option("--steps", request.steps)->capture_default_str();
  curve->add_option("--measures", measure_names, "Comma-separated measures")->delimiter(',');
  curve->add_option("--out", curve_out, "CSV path (standard output if omitted)");
  curve->add_option("--family", curve_family.family, "Use a parametric family instead of --input")
      ->check(CLI::IsMember({"uniform", "geometric", "beta-power"}));
  add_family_options(curve, curve_family);

  // closed-form
  auto* closed = app.add_subcommand("closed-form", "Closed-form IGF or entropy of a family");
  FamilyOptions closed_family;
  std::optional<double> closed_t;
  bool closed_entropy = false;
  bool closed_check = false;
  closed->add_option("family", closed_family.family, "uniform | geometric | beta-power")
      ->required()
      ->check(CLI::IsMember({"uniform", "geometric", "beta-power"}));
  add_family_options(closed, closed_family);
  closed->add_option("--t", closed_t, "Evaluate the IGF at t");
  closed->add_flag("--entropy", closed_entropy, "Print the entropy instead of the IGF");
  closed->add_flag("--check", closed_check, "Also print a direct summation and the difference");

  // escort
  auto* escort = app.add_subcommand("escort", "Escort (power) transform and the generalized IGF");
  double escort_beta = 1.0;
  std::optional<double> escort_u;
  std::optional<double> escort_t;
  bool verify_identity = false;
  escort->add_option("--beta", escort_beta, "Power exponent")->required();
  escort->add_option("--u", escort_u, "Constant utility (defaults to the file's utilities)");
  escort->add_option("--t", escort_t, "Evaluate the generalized IGF at t");
  escort->add_flag("--verify-identity", verify_identity,
                   "Check the constant-utility scaling identity at t");

  // normalize
  auto* normalize = app.add_subcommand("normalize", "Re-emit the scheme as canonical JSON");
  std::string normalize_out;
  normalize->add_option("--out", normalize_out, "Output path (standard output if omitted)");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kValidationFailure;
  }

  const int digits = g.digits;
  auto print = [&](double v) { out << format_value(v, digits) << '\n'; };

  try {
    if (eval->parsed()) {
      const auto scheme = load_input(g);
      const auto measure = parse_measure(eval_measure);
      if (!measure) {
        throw ValidationError(ErrorCode::InvalidParameter, "unknown measure " + eval_measure);
      }
      switch (*measure) {
        case Measure::weighted: print(weighted_igf(scheme, eval_t, g.domain())); break;
        case Measure::golomb: print(golomb_igf(scheme.dist, eval_t, g.domain())); break;
        case Measure::hooda_bhaker: print(hooda_bhaker_igf(scheme, eval_t, g.domain())); break;
      }
    } else if (entropy->parsed()) {
      const auto scheme = load_input(g);
      print(entropy_measure == "shannon" ? shannon_entropy(scheme.dist, g.log_base())
                                         : weighted_entropy(scheme, g.log_base()));
    } else if (moments->parsed()) {
      if (r_max > kMaxMomentOrder) {
        throw ValidationError(ErrorCode::InvalidParameter,
                              "--r-max is limited to " + std::to_string(kMaxMomentOrder));
      }
      const auto scheme = load_input(g);
      for (unsigned r = 0; r <= r_max; ++r) {
        const double m = unweighted ? self_information_moment(scheme.dist, r)
                                    : weighted_self_information_moment(scheme, r);
        out << r << '\t' << format_value(convert_log_base(m, g.log_base(), r), digits) << '\n';
      }
    } else if (curve->parsed()) {
      request.domain = g.domain();
      request.measures.clear();
      for (const auto& name : measure_names) {
        const auto m = parse_measure(name);
        if (!m) throw ValidationError(ErrorCode::InvalidParameter, "unknown measure " + name);
        request.measures.push_back(*m);
      }
      UtilityInformationScheme scheme = [&] {
        if (curve_family.family.empty()) return load_input(g);
        auto dist = realize_family(family_from(curve_family), curve_family.truncation);
        const auto n = dist.size();
        return make_scheme(std::move(dist), constant_utility(n, curve_family.u));
      }();
      const auto samples = compute_curve(scheme, request);
      std::ostringstream csv;
      write_curve_csv(csv, request.measures, samples, digits);
      write_text(curve_out, csv.str(), out);
    } else if (closed->parsed()) {
      const auto family = family_from(closed_family);
      const double u = closed_family.u;
      if (!(u > 0.0)) {
        throw ValidationError(ErrorCode::NonPositiveUtility, "--u must be positive");
      }
      if (closed_entropy == closed_t.has_value()) {
        throw ValidationError(ErrorCode::InvalidParameter, "give exactly one of --t or --entropy");
      }
      const double t = closed_t.value_or(1.0);
      const double value = closed_entropy
                               ? convert_log_base(closed_form_entropy(family, u), g.log_base())
                               : closed_form_igf(family, u, t, g.domain());
      if (!closed_check) {
        print(value);
      } else {
        std::optional<std::size_t> terms = closed_family.truncation;
        if (const auto* geo = std::get_if<Geometric>(&family); geo && !terms) {
          terms = geometric_check_terms(geo->p, closed_entropy ? 1.0 : 1.0 - u * (1.0 - t));
        } else if (std::holds_alternative<BetaPower>(family) && !terms) {
          terms = kDefaultBetaPowerTruncation;
        }
        auto dist = realize_family(family, terms);
        const auto n = dist.size();
        const auto scheme = make_scheme(std::move(dist), constant_utility(n, u));
        const double direct = closed_entropy
                                  ? weighted_entropy(scheme, g.log_base())
                                  : weighted_igf(scheme, t, g.domain());
        out << "closed_form\t" << format_value(value, digits) << '\n'
            << "direct\t" << format_value(direct, digits) << '\n'
            << "difference\t" << format_value(value - direct, digits) << '\n';
      }
    } else if (escort->parsed()) {
      const auto scheme = load_input(g);
      const auto pair = escort_transform(scheme.dist, escort_beta);
      out << "normalized";
      for (double p : pair.normalized.probs()) out << '\t' << format_value(p, digits);
      out << '\n' << "mass\t" << format_value(pair.mass, digits) << '\n';
      if (escort_t) {
        const auto util = escort_u ? constant_utility(scheme.size(), *escort_u) : scheme.util;
        out << "generalized_igf\t"
            << format_value(generalized_igf(scheme.dist, util, escort_beta, *escort_t, g.domain()),
                            digits)
            << '\n';
      }
      if (verify_identity) {
        if (!escort_t) {
          throw ValidationError(ErrorCode::InvalidParameter, "--verify-identity needs --t");
        }
        const auto u = escort_u ? std::optional<double>(*escort_u) : scheme.util.constant_value();
        if (!u) {
          throw ValidationError(ErrorCode::InvalidParameter,
                                "the scaling identity holds for constant utility; pass --u");
        }
        const auto report = verify_scaling_identity(scheme.dist, *u, escort_beta, *escort_t,
                                                    g.domain());
        out << "lhs\t" << format_value(report.lhs, digits) << '\n'
            << "rhs\t" << format_value(report.rhs, digits) << '\n'
            << "abs_diff\t" << format_value(report.abs_diff, digits) << '\n'
            << (report.pass ? "PASS" : "FAIL") << '\n';
        if (!report.pass) return kVerificationFailure;
      }
    } else if (normalize->parsed()) {
      write_text(normalize_out, scheme_to_json(load_input(g)), out);
    }
  } catch (const DomainError& e) {
    err << "igf: domain error: " << e.what() << '\n';
    return kDomainFailure;
  } catch (const Error& e) {
    err << "igf: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kValidationFailure;
  } catch (const std::exception& e) {
    err << "igf: " << e.what() << '\n';
    return kValidationFailure;
  }
  return kSuccess;
}

}  // namespace igf::cli
