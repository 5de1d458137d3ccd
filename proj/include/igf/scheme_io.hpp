#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "igf/distributions.hpp"

namespace igf {

enum class InputFormat { json, csv };

/// Parses a scheme document:
///   {"probabilities": [...], "utilities": [...], "kind": "complete"|"generalized",
///    "labels": [...]}
/// `utilities` defaults to all 1.0, `kind` to "complete", `labels` to none.
/// Throws ValidationError (ParseError for malformed documents, or the
/// distribution error for invalid contents).
UtilityInformationScheme parse_scheme_json(std::string_view text);

/// Two-column `p,u` rows, optional `p,u` header line. Blank lines and lines
/// starting with '#' are skipped. Always a complete distribution.
UtilityInformationScheme parse_scheme_csv(std::string_view text);

UtilityInformationScheme load_scheme(const std::filesystem::path& path,
                                     InputFormat format);

/// Canonical JSON rendering with every number at 17 significant digits.
/// parse_scheme_json(scheme_to_json(s)) == s bit for bit.
std::string scheme_to_json(const UtilityInformationScheme& scheme);

}  // namespace igf
