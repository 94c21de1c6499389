#pragma once

// Incomplete beta function B_y(x, z) = ∫₀^y t^{x-1} (1-t)^{z-1} dt, 0 <= y < 1.

#include <array>
#include <cmath>
#include <limits>

#include "inchyp/core.hpp"
#include "inchyp/gamma.hpp"
#include "inchyp/quadrature.hpp"

namespace inchyp {

namespace detail {

struct ContinuedFraction {
  double value;
  std::size_t iterations;
  bool converged;
};

// Modified Lentz evaluation of the continued fraction h with
// B_y(a, b) = y^a (1-y)^b h / a. Converges quickly for y < (a+1)/(a+b+2).
inline ContinuedFraction beta_continued_fraction(double a, double b, double y,
                                                 std::size_t max_iter) {
  constexpr double tiny = 1e-300;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * y / qap;
  if (std::abs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (std::size_t m = 1; m <= max_iter; ++m) {
    const double mm = static_cast<double>(m);
    const double m2 = 2.0 * mm;
    double aa = mm * (b - mm) * y / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + mm) * (qab + mm) * y / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) <= 2.0 * eps) return {h, m, true};
  }
  return {h, max_iter, false};
}

}  // namespace detail

/// The two halves of a complete beta integral, both divided by exp(log_scale):
/// lower = B_y(p, q), upper = B_{1-y}(q, p).
struct BetaSplit {
  double lower = 0.0;
  double upper = 0.0;
  std::size_t iterations = 0;
  bool converged = true;
};

/// Splits B(p, q) at y, for p, q > 0.
///
/// The continued fraction is run for whichever half it converges fastest on;
/// the other half is the scaled complete value minus it, which never loses
/// more than a factor of about two. `log_complete` is ln B(p, q); callers that
/// know it more accurately than log_beta() can pass it in.
inline BetaSplit beta_split(double y, double p, double q, double log_scale,
                            double log_complete, const EvalOptions& opts = {}) {
  detail::require(y >= 0.0 && y < 1.0, "incomplete beta: cutoff must lie in [0, 1)");
  detail::require(p > 0.0 && q > 0.0, "incomplete beta: parameters must be positive");
  const double complete = std::exp(log_complete - log_scale);
  if (y == 0.0) return {0.0, complete, 0, true};
  const double ly = std::log(y);
  const double l1y = std::log1p(-y);
  BetaSplit out;
  if (y < (p + 1.0) / (p + q + 2.0)) {
    const auto cf = detail::beta_continued_fraction(p, q, y, opts.max_terms);
    out.lower = std::exp(p * ly + q * l1y - std::log(p) - log_scale) * cf.value;
    out.upper = complete - out.lower;
    out.iterations = cf.iterations;
    out.converged = cf.converged;
  } else {
    const auto cf = detail::beta_continued_fraction(q, p, 1.0 - y, opts.max_terms);
    out.upper = std::exp(q * l1y + p * ly - std::log(q) - log_scale) * cf.value;
    out.lower = complete - out.upper;
    out.iterations = cf.iterations;
    out.converged = cf.converged;
  }
  return out;
}

/// B_y(x, z) by graded Gauss-Jacobi quadrature of t = y·u:
/// y^x ∫₀¹ u^{x-1} (1 - y u)^{z-1} du.
///
/// Valid for any real z because 1 - y u >= 1 - y > 0. Independent of the
/// continued fraction, so it doubles as a cross-check.
inline EvalResult incomplete_beta_quadrature(double y, double x, double z,
                                             const EvalOptions& opts = {}) {
  detail::require(y >= 0.0 && y < 1.0, "incomplete_beta: cutoff must lie in [0, 1)");
  detail::require(x > 0.0, "incomplete_beta: first parameter must be positive");
  if (y == 0.0) return {0.0, 0.0, 0, true};
  const std::array<LinearPowerFactor, 1> factors{{{1.0, -y, z - 1.0}}};
  auto r = euler_integral(x - 1.0, 0.0, factors, opts);
  const double scale = std::pow(y, x);
  r.value *= scale;
  r.abs_err_est *= scale;
  return r;
}

/// B_y(x, z) for 0 <= y < 1, x > 0 and any real z.
///
/// Uses the continued fraction when z > 0 and the quadrature path otherwise.
inline double incomplete_beta(double y, double x, double z, const EvalOptions& opts = {}) {
  detail::require(y >= 0.0 && y < 1.0, "incomplete_beta: cutoff must lie in [0, 1)");
  detail::require(x > 0.0, "incomplete_beta: first parameter must be positive");
  if (y == 0.0) return 0.0;
  if (z > 0.0) {
    const auto s = beta_split(y, x, z, 0.0, log_beta(x, z), opts);
    if (!s.converged) throw convergence_error("incomplete_beta: continued fraction did not converge");
    return s.lower;
  }
  return detail::require_converged(incomplete_beta_quadrature(y, x, z, opts),
                                   "incomplete_beta: quadrature did not converge")
      .value;
}

/// I_y(x, z) = B_y(x, z)/B(x, z) for x, z > 0.
inline double regularized_incomplete_beta(double y, double x, double z,
                                          const EvalOptions& opts = {}) {
  detail::require(z > 0.0, "regularized_incomplete_beta: second parameter must be positive");
  detail::require(x > 0.0, "regularized_incomplete_beta: first parameter must be positive");
  const double lb = log_beta(x, z);
  const auto s = beta_split(y, x, z, lb, lb, opts);
  if (!s.converged)
    throw convergence_error("regularized_incomplete_beta: continued fraction did not converge");
  return s.lower;
}

}  // namespace inchyp
