#pragma once

// Linear and bilinear generating relations for the incomplete 2F1, checked by
// truncating the series side at N terms and bounding the omitted tail.
//
//   shift:    Σ (λ)_n/n! 2F1(λ+n,[α,β;y];z) tⁿ = (1-t)^{-λ} 2F1(λ,[α,β;y]; z/(1-t))
//   negshift: Σ (λ)_n/n! 2F1(ρ-n,[α,β;y];z) tⁿ = (1-t)^{-λ} F1[α,ρ,λ;β; z, -zt/(1-t); y]
//   bilinear: Σ (λ)_n/n! 2F1(-n,[γ,δ;y];x) 2F1(λ+n,[α,β;y];z) tⁿ
//                 = (1-t)^{-λ} F2[λ,α,γ;β,δ; z/(1-t), -xt/(1-t); y]
// and the same with {·} in place of [·].

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string_view>

#include "inchyp/appell.hpp"
#include "inchyp/core.hpp"
#include "inchyp/gamma.hpp"
#include "inchyp/incomplete_hypergeometric.hpp"
#include "inchyp/pochhammer_ratio.hpp"

namespace inchyp {

struct GenRelSpec {
  double lambda = 1.0;
  double alpha = 1.0;
  double beta = 2.0;
  double gamma = 1.0;
  double delta = 2.0;
  double rho = 1.0;
  double t = 0.0;
  double x = 0.0;
  double z = 0.0;
  double y = 0.5;
  Variant variant = Variant::lower;
  std::uint64_t terms = 0;  // truncation N; 0 picks N from the tail bound
};

enum class LinearRelation { shift, negshift };

inline constexpr std::string_view to_string(LinearRelation k) {
  return k == LinearRelation::shift ? "shift" : "negshift";
}

inline LinearRelation parse_linear_relation(std::string_view s) {
  if (s == "shift") return LinearRelation::shift;
  if (s == "negshift") return LinearRelation::negshift;
  throw std::invalid_argument("unknown generating relation '" + std::string(s) + "'");
}

struct GenRelCheck {
  double lhs = 0.0;         // series side truncated after N terms (n = 0..N)
  double rhs = 0.0;         // closed side
  double residual = 0.0;    // |lhs - rhs|
  double tail_bound = 0.0;  // bound on the omitted terms n > N
  std::uint64_t terms = 0;  // N
};

namespace detail {

inline constexpr double kTailTarget = 1e-10;
inline constexpr std::uint64_t kMaxTerms = 200;

// Range of 1 - w s over the ratio's integration range in s: [0, y] for the
// lower variant, [y, 1] for the upper.
struct LinearRange {
  double lo;
  double hi;
};

inline LinearRange linear_range(double w, double y, Variant v) {
  const double s0 = v == Variant::lower ? 0.0 : y;
  const double s1 = v == Variant::lower ? y : 1.0;
  const double e0 = 1.0 - w * s0, e1 = 1.0 - w * s1;
  return {std::min(e0, e1), std::max(e0, e1)};
}

// Weight of the ratio at n = 0, which bounds the Euler integral's measure.
inline double ratio_mass(double b, double c, double y, Variant v) {
  return ratio({b, c, 0, y, v}).value;
}

// Terms bounded by T_n = K (λ)_n/n! qⁿ. Returns the smallest admissible N
// (or `fixed` when nonzero) and the bound Σ_{n>N} T_n ≤ T_{N+1}/(1 - q*),
// where q* bounds every later term ratio (λ+n)/(n+1)·q.
struct TailChoice {
  std::uint64_t terms;
  double bound;
};

inline TailChoice choose_tail(double lambda, double q, double k, std::uint64_t fixed) {
  auto bound_after = [&](std::uint64_t n) {
    // T_{n+1}
    double tn = k;
    for (std::uint64_t j = 0; j <= n; ++j) tn *= (lambda + static_cast<double>(j)) / static_cast<double>(j + 1) * q;
    const double first = (lambda + static_cast<double>(n + 1)) / static_cast<double>(n + 2) * q;
    const double qs = std::max(first, q);
    if (qs >= 1.0) return std::numeric_limits<double>::infinity();
    return std::abs(tn) / (1.0 - qs);
  };
  if (fixed > 0) return {fixed, bound_after(fixed)};
  for (std::uint64_t n = 1; n <= kMaxTerms; ++n) {
    const double b = bound_after(n);
    if (b <= kTailTarget) return {n, b};
  }
  return {kMaxTerms, bound_after(kMaxTerms)};
}

inline double eval_2f1(double a, double b, double c, double y, double x, Variant v, const EvalOptions& opts) {
  return require_converged(ihyp_2f1({a, b, c, y, x, v}, Method::automatic, opts),
                           "generating relation: 2F1 evaluation did not converge")
      .value;
}

}  // namespace detail

/// Linear generating relations (shift / negshift), truncated at N terms.
inline GenRelCheck genrel_linear_residual(LinearRelation kind, const GenRelSpec& s,
                                          const EvalOptions& opts = {}) {
  detail::require(s.lambda > 0.0, "generating relation: requires lambda > 0");
  detail::require(s.alpha > 0.0 && s.beta > s.alpha, "generating relation: requires beta > alpha > 0");
  detail::require(s.y > 0.0 && s.y < 1.0, "generating relation: cutoff must lie in (0, 1)");
  detail::require(std::abs(s.t) < 1.0, "generating relation: requires |t| < 1");
  const auto range = detail::linear_range(s.z, s.y, s.variant);
  detail::require(range.lo > 0.0, "generating relation: 1 - z s must stay positive");
  const double mass = detail::ratio_mass(s.alpha, s.beta, s.y, s.variant);

  GenRelCheck out;
  detail::TailChoice tail{};
  if (kind == LinearRelation::shift) {
    detail::require(std::abs(s.z) < std::min(1.0, std::abs(1.0 - s.t)),
                    "generating relation: requires |z| < min(1, |1-t|)");
    // |2F1(λ+n,[α,β;y];z)| <= mass · lo^{-(λ+n)}
    tail = detail::choose_tail(s.lambda, std::abs(s.t) / range.lo, mass * std::pow(range.lo, -s.lambda),
                               s.terms);
    double coef = 1.0;
    detail::CompensatedSum sum;
    for (std::uint64_t n = 0; n <= tail.terms; ++n) {
      const double nn = static_cast<double>(n);
      if (n > 0) coef *= (s.lambda + nn - 1.0) / nn * s.t;
      if (coef == 0.0) break;
      sum.add(coef * detail::eval_2f1(s.lambda + nn, s.alpha, s.beta, s.y, s.z, s.variant, opts));
    }
    out.lhs = sum.value();
    out.rhs = std::pow(1.0 - s.t, -s.lambda) *
              detail::eval_2f1(s.lambda, s.alpha, s.beta, s.y, s.z / (1.0 - s.t), s.variant, opts);
  } else {
    detail::require(s.rho > 0.0, "generating relation: requires rho > 0");
    detail::require(std::abs(s.t) < 1.0 / (1.0 + std::abs(s.z)),
                    "generating relation: requires |t| < 1/(1+|z|)");
    // |2F1(ρ-n,[α,β;y];z)| <= mass · hi^n · lo^{-ρ}
    tail = detail::choose_tail(s.lambda, std::abs(s.t) * range.hi, mass * std::pow(range.lo, -s.rho), s.terms);
    double coef = 1.0;
    detail::CompensatedSum sum;
    for (std::uint64_t n = 0; n <= tail.terms; ++n) {
      const double nn = static_cast<double>(n);
      if (n > 0) coef *= (s.lambda + nn - 1.0) / nn * s.t;
      if (coef == 0.0) break;
      sum.add(coef * detail::eval_2f1(s.rho - nn, s.alpha, s.beta, s.y, s.z, s.variant, opts));
    }
    out.lhs = sum.value();
    const double w = -s.z * s.t / (1.0 - s.t);
    const auto f1 = detail::require_converged(
        appell_f1({s.alpha, s.rho, s.lambda, s.beta, s.z, w, s.y, s.variant}, Method::automatic, opts),
        "generating relation: F1 evaluation did not converge");
    out.rhs = std::pow(1.0 - s.t, -s.lambda) * f1.value;
  }
  out.terms = tail.terms;
  out.tail_bound = tail.bound;
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

/// Bilinear generating relation in the form its derivation produces:
/// the x-factor is 2F1(-n,[γ,δ;y];x), a terminating series.
inline GenRelCheck genrel_bilinear_residual(const GenRelSpec& s, const EvalOptions& opts = {}) {
  detail::require(s.lambda > 0.0, "generating relation: requires lambda > 0");
  detail::require(s.alpha > 0.0 && s.beta > s.alpha, "generating relation: requires beta > alpha > 0");
  detail::require(s.gamma > 0.0 && s.delta > s.gamma, "generating relation: requires delta > gamma > 0");
  detail::require(s.y > 0.0 && s.y < 1.0, "generating relation: cutoff must lie in (0, 1)");
  detail::require(std::abs(s.z) < 1.0, "generating relation: requires |z| < 1");
  detail::require(std::abs(s.t) < (1.0 - std::abs(s.z)) / (1.0 + std::abs(s.x)),
                  "generating relation: requires |t| < (1-|z|)/(1+|x|)");
  const auto rx = detail::linear_range(s.x, s.y, s.variant);
  const auto rz = detail::linear_range(s.z, s.y, s.variant);
  detail::require(rx.lo > 0.0 && rz.lo > 0.0, "generating relation: linear factors must stay positive");
  // |2F1(-n,[γ,δ;y];x)| <= mass_γ hiₓⁿ,  |2F1(λ+n,[α,β;y];z)| <= mass_α lo_z^{-(λ+n)}
  const double k = detail::ratio_mass(s.gamma, s.delta, s.y, s.variant) *
                   detail::ratio_mass(s.alpha, s.beta, s.y, s.variant) * std::pow(rz.lo, -s.lambda);
  const auto tail = detail::choose_tail(s.lambda, std::abs(s.t) * rx.hi / rz.lo, k, s.terms);

  GenRelCheck out;
  double coef = 1.0;
  detail::CompensatedSum sum;
  for (std::uint64_t n = 0; n <= tail.terms; ++n) {
    const double nn = static_cast<double>(n);
    if (n > 0) coef *= (s.lambda + nn - 1.0) / nn * s.t;
    if (coef == 0.0) break;
    const double fx = detail::eval_2f1(-nn, s.gamma, s.delta, s.y, s.x, s.variant, opts);
    const double fz = detail::eval_2f1(s.lambda + nn, s.alpha, s.beta, s.y, s.z, s.variant, opts);
    sum.add(coef * fx * fz);
  }
  out.lhs = sum.value();
  const double xs = s.z / (1.0 - s.t);
  const double zs = -s.x * s.t / (1.0 - s.t);
  const auto f2 = detail::require_converged(
      appell_f2({s.lambda, s.alpha, s.gamma, s.beta, s.delta, xs, zs, s.y, s.variant}, Method::automatic, opts),
      "generating relation: F2 evaluation did not converge");
  out.rhs = std::pow(1.0 - s.t, -s.lambda) * f2.value;
  out.terms = tail.terms;
  out.tail_bound = tail.bound;
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

}  // namespace inchyp
