#include "igf/format.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace igf {

std::string format_value(double value, int digits) {
  digits = std::clamp(digits, 1, kMaxDigits);
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) value = 0.0;  // drop the sign of -0

  char buf[64];
  const double magnitude = std::fabs(value);
  if (value == 0.0 || (magnitude >= 1e-4 && magnitude < 1e16)) {
    std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  } else {
    std::snprintf(buf, sizeof buf, "%.*e", digits - 1, value);
  }
  return buf;
}

std::string format_roundtrip(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace igf
