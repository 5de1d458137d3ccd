#include "igf/summation.hpp"

#include <gtest/gtest.h>

#include <vector>

namespace igf {
namespace {

TEST(CompensatedSum, RecoversSmallTermsAfterLargeOne) {
  // Naive summation loses every 1.0 against 1e16.
  CompensatedSum sum;
  sum += 1e16;
  for (int i = 0; i < 1000; ++i) sum += 1.0;
  sum += -1e16;
  EXPECT_EQ(sum.value(), 1000.0);
}

TEST(CompensatedSum, HandlesTermLargerThanRunningSum) {
  // Plain Kahan returns 0 here; Neumaier's ordering check returns 2.
  CompensatedSum sum;
  sum += 1.0;
  sum += 1e100;
  sum += 1.0;
  sum += -1e100;
  EXPECT_EQ(sum.value(), 2.0);
}

TEST(CompensatedSum, MillionTenths) {
  CompensatedSum sum;
  for (int i = 0; i < 1'000'000; ++i) sum += 0.1;
  EXPECT_NEAR(sum.value(), 100000.0, 1e-9);
}

}  // namespace
}  // namespace igf
