#pragma once

// Complete Gauss 2F1 and Kummer 1F1 by direct series. These are the reference
// values the incomplete functions decompose into.

#include <cmath>

#include "inchyp/core.hpp"
#include "inchyp/gamma.hpp"
#include "inchyp/series.hpp"

namespace inchyp {

/// Γ(c)Γ(c-a-b) / (Γ(c-a)Γ(c-b)), the value of 2F1(a, b; c; 1) when c-a-b > 0.
inline double gauss_summation(double a, double b, double c) {
  detail::require(c - a - b > 0.0, "gauss_summation: requires c - a - b > 0");
  detail::require(!detail::is_nonpositive_integer(c), "gauss_summation: c is a pole");
  if (detail::is_nonpositive_integer(c - a) || detail::is_nonpositive_integer(c - b)) return 0.0;
  const auto g1 = detail::log_abs_gamma(c);
  const auto g2 = detail::log_abs_gamma(c - a - b);
  const auto g3 = detail::log_abs_gamma(c - a);
  const auto g4 = detail::log_abs_gamma(c - b);
  const int sign = g1.sign * g2.sign * g3.sign * g4.sign;
  return sign * std::exp(g1.log_abs + g2.log_abs - g3.log_abs - g4.log_abs);
}

/// Gauss hypergeometric series Σ (a)_n (b)_n / (c)_n xⁿ/n!.
///
/// |x| < 1, or x = 1 with c - a - b > 0 (Gauss summation).
inline EvalResult complete_2f1(double a, double b, double c, double x,
                               const EvalOptions& opts = {}) {
  detail::require(!detail::is_nonpositive_integer(c), "complete_2f1: c must not be a nonpositive integer");
  if (x == 1.0) return {gauss_summation(a, b, c), 0.0, 0, true};
  detail::require(std::abs(x) < 1.0, "complete_2f1: requires |x| < 1");
  double t = 1.0;
  return sum_series(
      [&](std::size_t n) {
        if (n > 0) {
          const double k = static_cast<double>(n - 1);
          t *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
        }
        return t;
      },
      opts);
}

/// Kummer series Σ (a)_n / (b)_n xⁿ/n!, entire in x.
inline EvalResult complete_1f1(double a, double b, double x, const EvalOptions& opts = {}) {
  detail::require(!detail::is_nonpositive_integer(b), "complete_1f1: b must not be a nonpositive integer");
  double t = 1.0;
  return sum_series(
      [&](std::size_t n) {
        if (n > 0) {
          const double k = static_cast<double>(n - 1);
          t *= (a + k) / ((b + k) * (k + 1.0)) * x;
        }
        return t;
      },
      opts);
}

}  // namespace inchyp
