#pragma once

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace testing_support {

// splitmix64; property tests draw from it with a fixed seed per test.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(next() >> 11) * 0x1.0p-53; }
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

inline double rel(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

inline ::testing::AssertionResult rel_check(const char* a_expr, const char* e_expr, const char*, double a,
                                           double e, double tol) {
  const double r = rel(a, e);
  if (r <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << a_expr << " = " << a << " vs " << e_expr << " = " << e
                                       << ": relative difference " << r << " > " << tol;
}

}  // namespace testing_support

#define EXPECT_REL(actual, expected, tol) EXPECT_PRED_FORMAT3(testing_support::rel_check, actual, expected, tol)
