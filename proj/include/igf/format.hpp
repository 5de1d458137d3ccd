#pragma once

#include <string>

namespace igf {

inline constexpr int kDefaultDigits = 12;
inline constexpr int kMaxDigits = 17;

/// Renders a value for CLI and CSV output: fixed notation with `digits`
/// decimals for magnitudes in [1e-4, 1e16) and for zero, scientific with
/// `digits` significant digits otherwise. Negative zero prints as zero.
std::string format_value(double value, int digits = kDefaultDigits);

/// "%.17g": enough digits to parse back to the same double.
std::string format_roundtrip(double value);

}  // namespace igf
