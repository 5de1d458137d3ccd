#include "igf/scheme_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "igf/errors.hpp"
#include "igf/format.hpp"

namespace igf {
namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& what) {
  throw ValidationError(ErrorCode::ParseError, what);
}

std::vector<double> number_array(const json& doc, const char* key) {
  const auto& node = doc.at(key);
  if (!node.is_array()) parse_error(std::string("\"") + key + "\" must be an array");
  std::vector<double> values;
  values.reserve(node.size());
  for (const auto& item : node) {
    if (!item.is_number()) parse_error(std::string("\"") + key + "\" must contain only numbers");
    values.push_back(item.get<double>());
  }
  return values;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<double> to_double(std::string_view field) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end || field.empty()) return std::nullopt;
  return value;
}

void append_array(std::string& out, std::span<const double> values) {
  out += '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += format_roundtrip(values[i]);
  }
  out += ']';
}

}  // namespace

UtilityInformationScheme parse_scheme_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) parse_error("scheme document must be a JSON object");
  if (!doc.contains("probabilities")) parse_error("missing \"probabilities\"");

  auto probs = number_array(doc, "probabilities");
  std::vector<double> utils = doc.contains("utilities") ? number_array(doc, "utilities")
                                                        : std::vector<double>(probs.size(), 1.0);

  auto kind = DistributionKind::complete;
  if (doc.contains("kind")) {
    const auto& node = doc["kind"];
    if (node == "complete") {
      kind = DistributionKind::complete;
    } else if (node == "generalized") {
      kind = DistributionKind::generalized;
    } else {
      parse_error("\"kind\" must be \"complete\" or \"generalized\"");
    }
  }

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const auto& node = doc["labels"];
    if (!node.is_array()) parse_error("\"labels\" must be an array");
    for (const auto& item : node) {
      if (!item.is_string()) parse_error("\"labels\" must contain only strings");
      labels.push_back(item.get<std::string>());
    }
  }
  return make_scheme(std::move(probs), std::move(utils), kind, std::move(labels));
}

UtilityInformationScheme parse_scheme_csv(std::string_view text) {
  std::vector<double> probs;
  std::vector<double> utils;
  std::size_t line_no = 0;
  bool first_data_line = true;
  while (!text.empty()) {
    const auto newline = text.find('\n');
    auto line = trim(text.substr(0, newline));
    text = newline == std::string_view::npos ? std::string_view{} : text.substr(newline + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      parse_error("line " + std::to_string(line_no) + ": expected two columns p,u");
    }
    const auto left = line.substr(0, comma);
    const auto right = line.substr(comma + 1);
    if (first_data_line && trim(left) == "p" && trim(right) == "u") {
      first_data_line = false;
      continue;
    }
    first_data_line = false;
    const auto p = to_double(left);
    const auto u = to_double(right);
    if (!p || !u) parse_error("line " + std::to_string(line_no) + ": not a number");
    probs.push_back(*p);
    utils.push_back(*u);
  }
  return make_scheme(std::move(probs), std::move(utils), DistributionKind::complete);
}

UtilityInformationScheme load_scheme(const std::filesystem::path& path,
                                     InputFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  return format == InputFormat::json ? parse_scheme_json(text) : parse_scheme_csv(text);
}

std::string scheme_to_json(const UtilityInformationScheme& scheme) {
  std::string out = "{\n  \"probabilities\": ";
  append_array(out, scheme.dist.probs());
  out += ",\n  \"utilities\": ";
  append_array(out, scheme.util.utils());
  out += ",\n  \"kind\": ";
  out += scheme.dist.kind() == DistributionKind::complete ? "\"complete\"" : "\"generalized\"";
  if (!scheme.labels.empty()) {
    out += ",\n  \"labels\": [";
    for (std::size_t i = 0; i < scheme.labels.size(); ++i) {
      if (i) out += ", ";
      out += json(scheme.labels[i]).dump();
    }
    out += ']';
  }
  out += "\n}\n";
  return out;
}

}  // namespace igf
