#pragma once

// Incomplete Pochhammer ratios
//   [b,c;y]_n = B_y(b+n, c-b) / B(b, c-b)
//   {b,c;y}_n = B_{1-y}(c-b, b+n) / B(b, c-b)
// which split the complete ratio (b)_n/(c)_n at the cutoff y.

#include <cmath>
#include <cstdint>

#include "inchyp/core.hpp"
#include "inchyp/gamma.hpp"
#include "inchyp/hypergeometric.hpp"
#include "inchyp/incomplete_beta.hpp"

namespace inchyp {

/// Addresses one incomplete Pochhammer ratio.
struct RatioSpec {
  double b = 1.0;
  double c = 2.0;
  std::uint64_t n = 0;
  double y = 0.0;
  Variant variant = Variant::lower;

  void validate() const {
    detail::require(b > 0.0, "ratio: requires b > 0");
    detail::require(c - b > 0.0, "ratio: requires c > b");
    detail::require(y >= 0.0 && y < 1.0, "ratio: cutoff must lie in [0, 1)");
  }
};

/// A Pochhammer symbol argument pair (λ, n).
struct PochhammerArg {
  double lambda = 1.0;
  std::uint64_t n = 0;
};

inline double pochhammer(PochhammerArg arg) { return pochhammer(arg.lambda, arg.n); }

namespace detail {

// Both ratios for one (b, c, n, y), each multiplied by exp(-extra_log_scale).
// The series evaluators pass n·ln y here so [b,c;y]_n / yⁿ stays O(1).
inline BetaSplit ratio_pair(double b, double c, std::uint64_t n, double y,
                            double complete_ratio, double extra_log_scale,
                            const EvalOptions& opts) {
  const double lb = log_beta(b, c - b);
  return beta_split(y, b + static_cast<double>(n), c - b, lb + extra_log_scale,
                    lb + std::log(complete_ratio), opts);
}

}  // namespace detail

/// [b,c;y]_n (lower) or {b,c;y}_n (upper).
///
/// Evaluated as the matching half of B(b+n, c-b) scaled by 1/B(b, c-b) in
/// log space, with the complete ratio (b)_n/(c)_n formed as a product so
/// large n neither overflows nor underflows.
inline EvalResult ratio(const RatioSpec& spec, const EvalOptions& opts = {}) {
  spec.validate();
  const double pr = pochhammer_ratio(spec.b, spec.c, spec.n);
  const auto s = detail::ratio_pair(spec.b, spec.c, spec.n, spec.y, pr, 0.0, opts);
  const double v = spec.variant == Variant::lower ? s.lower : s.upper;
  const double err = 8.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(v), pr);
  return {v, err, s.iterations, s.converged};
}

/// The same ratios through their closed 2F1 forms:
///   [b,c;y]_n = y^{b+n} (1-y)^{c-b} / ((b+n) B) · 2F1(1, c+n; b+n+1; y)
///   {b,c;y}_n = y^{b+n} (1-y)^{c-b} / ((c-b) B) · 2F1(1, c+n; 1+c-b; 1-y)
/// The upper form needs y > 0 so that its series argument stays below one.
inline EvalResult ratio_via_2f1(const RatioSpec& spec, const EvalOptions& opts = {}) {
  spec.validate();
  const double b = spec.b, c = spec.c, y = spec.y;
  const double n = static_cast<double>(spec.n);
  if (spec.variant == Variant::lower) {
    if (y == 0.0) return {0.0, 0.0, 0, true};
    const double pre =
        std::exp((b + n) * std::log(y) + (c - b) * std::log1p(-y) - std::log(b + n) - log_beta(b, c - b));
    auto r = complete_2f1(1.0, c + n, b + n + 1.0, y, opts);
    r.value *= pre;
    r.abs_err_est *= pre;
    return r;
  }
  detail::require(y > 0.0, "ratio_via_2f1: upper form needs y > 0");
  const double pre =
      std::exp((b + n) * std::log(y) + (c - b) * std::log1p(-y) - std::log(c - b) - log_beta(b, c - b));
  auto r = complete_2f1(1.0, c + n, 1.0 + c - b, 1.0 - y, opts);
  r.value *= pre;
  r.abs_err_est *= pre;
  return r;
}

/// [b,c;y]_n + {b,c;y}_n - (b)_n/(c)_n.
inline double decomposition_residual(double b, double c, std::uint64_t n, double y,
                                     const EvalOptions& opts = {}) {
  const auto lo = ratio({b, c, n, y, Variant::lower}, opts);
  const auto up = ratio({b, c, n, y, Variant::upper}, opts);
  return (lo.value + up.value) - pochhammer_ratio(b, c, n);
}

/// Outcome of a finite-difference check of the n-th derivative formulas.
struct DerivativeCheck {
  double rhs = 0.0;        // derivative formula evaluated by finite differences
  double ratio = 0.0;      // ratio() at the same spec
  double residual = 0.0;   // rhs - ratio
  double roundoff = 0.0;   // rounding error estimate of the difference quotient
  bool step_warning = false;
};

namespace detail {

inline double binomial(std::uint64_t n, std::uint64_t k) {
  double r = 1.0;
  for (std::uint64_t i = 1; i <= k; ++i)
    r *= static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

// Central n-th difference quotient with one Richardson step (O(h⁴) error).
template <typename G>
std::pair<double, double> central_derivative(G&& g, double y, std::uint64_t n, double h) {
  double gmax = 0.0;
  auto quotient = [&](double step) {
    double s = 0.0;
    for (std::uint64_t k = 0; k <= n; ++k) {
      const double offset = (static_cast<double>(n) / 2.0 - static_cast<double>(k)) * step;
      const double gv = g(y + offset);
      gmax = std::max(gmax, std::abs(gv));
      s += ((k % 2 == 0) ? 1.0 : -1.0) * binomial(n, k) * gv;
    }
    return s / std::pow(step, static_cast<double>(n));
  };
  const double coarse = quotient(h);
  const double fine = quotient(h / 2.0);
  const double roundoff = std::numeric_limits<double>::epsilon() * gmax *
                          std::pow(2.0, static_cast<double>(n)) /
                          std::pow(h / 2.0, static_cast<double>(n));
  return {(4.0 * fine - coarse) / 3.0, roundoff};
}

}  // namespace detail

/// Checks the n-th derivative representations of the ratios:
///   [b,c;y]_n = (-1)ⁿ Γ(c) / (Γ(c-b+n) Γ(b)) · y^{b+n} dⁿ/dyⁿ [y^{-b} B_y(b, c-b+n)]
///   {b,c;y}_n = Γ(b+n) / (Γ(b+2n) B(b,c-b)) · (1-y)^{c-b}
///               · dⁿ/dyⁿ [(1-y)^{b+n-c} B_{1-y}(c-b-n, b+2n)]
/// The upper form needs c - b - n > 0.
inline DerivativeCheck derivative_identity_residual(const RatioSpec& spec, double h,
                                                    const EvalOptions& opts = {}) {
  spec.validate();
  detail::require(spec.n >= 1, "derivative_identity_residual: requires n >= 1");
  detail::require(h > 0.0, "derivative_identity_residual: step must be positive");
  const double b = spec.b, c = spec.c, y = spec.y;
  const double n = static_cast<double>(spec.n);
  detail::require(y - n * h / 2.0 > 0.0 && y + n * h / 2.0 < 1.0,
                  "derivative_identity_residual: stencil leaves (0, 1)");
  DerivativeCheck out;
  out.ratio = ratio(spec, opts).value;
  if (spec.variant == Variant::lower) {
    auto g = [&](double t) { return std::pow(t, -b) * incomplete_beta(t, b, c - b + n, opts); };
    const auto [d, ro] = detail::central_derivative(g, y, spec.n, h);
    const double sign = (spec.n % 2 == 0) ? 1.0 : -1.0;
    const double coef = sign * std::exp(log_gamma(c) - log_gamma(c - b + n) - log_gamma(b));
    out.rhs = coef * std::pow(y, b + n) * d;
    out.roundoff = std::abs(coef * std::pow(y, b + n)) * ro;
  } else {
    detail::require(c - b - n > 0.0, "derivative_identity_residual: upper form needs c - b - n > 0");
    auto g = [&](double t) {
      return std::pow(1.0 - t, b + n - c) * incomplete_beta(1.0 - t, c - b - n, b + 2.0 * n, opts);
    };
    const auto [d, ro] = detail::central_derivative(g, y, spec.n, h);
    const double coef = std::exp(log_gamma(b + n) - log_gamma(b + 2.0 * n) - log_beta(b, c - b)) *
                        std::pow(1.0 - y, c - b);
    out.rhs = coef * d;
    out.roundoff = coef * ro;
  }
  out.residual = out.rhs - out.ratio;
  out.step_warning = out.roundoff > 1e-6 * std::max(std::abs(out.ratio), 1e-300);
  return out;
}

}  // namespace inchyp
