#pragma once

#include <cmath>

namespace igf {

/// Neumaier's variant of Kahan summation. Unlike plain Kahan it stays exact
/// when an incoming term is larger in magnitude than the running sum, which
/// happens in the IGF sums when a large probability follows many small ones.
class CompensatedSum {
 public:
  CompensatedSum() = default;

  CompensatedSum& operator+=(double value) noexcept {
    const double t = sum_ + value;
    if (std::fabs(sum_) >= std::fabs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace igf
