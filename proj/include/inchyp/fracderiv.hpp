#pragma once

// Cutoff-split fractional integrals of order μ < 0:
//   D^μ[f; y](z) = z^{-μ}/Γ(-μ) ∫₀^y f(uz) (1-u)^{-μ-1} du
//   D^μ{f; y}(z) = z^{-μ}/Γ(-μ) ∫_y^1 f(uz) (1-u)^{-μ-1} du
// which split the classical operator 1/Γ(-μ) ∫₀^z f(t) (z-t)^{-μ-1} dt.

#include <cmath>
#include <string_view>

#include "inchyp/appell.hpp"
#include "inchyp/core.hpp"
#include "inchyp/gamma.hpp"
#include "inchyp/incomplete_beta.hpp"
#include "inchyp/incomplete_hypergeometric.hpp"
#include "inchyp/quadrature.hpp"

namespace inchyp {

struct FracOpSpec {
  double mu = -1.0;
  double y = 0.0;
  double z = 1.0;
  Variant variant = Variant::lower;

  void validate() const {
    detail::require(mu < 0.0, "fractional operator: order must be negative");
    detail::require(y >= 0.0 && y < 1.0, "fractional operator: cutoff must lie in [0, 1)");
    detail::require(z > 0.0, "fractional operator: evaluation point must be positive");
  }
};

namespace detail {

inline EvalResult add(EvalResult a, const EvalResult& b) {
  a.value += b.value;
  a.abs_err_est += b.abs_err_est;
  a.effort += b.effort;
  a.converged = a.converged && b.converged;
  return a;
}

inline double frac_prefactor(double mu, double z) {
  return std::exp(-mu * std::log(z) - log_gamma(-mu));
}

// ∫₀^L g(w) w^e dw with e > -1, by a Jacobi rule in s = w/L (n and 2n
// nodes); falls back to tanh-sinh when the two disagree.
template <typename G>
EvalResult jacobi_endpoint_integral(G&& g, double e, double len, const EvalOptions& opts) {
  auto apply = [&](std::size_t n) {
    const auto rule = gauss_jacobi_rule(n, e, 0.0);
    return rule.apply([&](double s) { return g(len * s); });
  };
  const double scale = std::pow(len, e + 1.0);
  const double coarse = apply(opts.quad_nodes) * scale;
  const double fine = apply(2 * opts.quad_nodes) * scale;
  const double err = std::abs(fine - coarse);
  if (std::isfinite(fine) && err <= std::max(opts.rel_tol * std::abs(fine), 1e-300))
    return {fine, err, 3 * opts.quad_nodes, true};
  return adaptive_integrate([&](double w) { return g(w) * std::pow(w, e); }, 0.0, len, opts);
}

}  // namespace detail

/// Incomplete operator applied to f at spec.z.
///
/// Lower: tanh-sinh on [0, y/2] in u, then [y/2, y] in w = 1-u so points near
/// u = 1 keep their precision. Upper: tanh-sinh on [y, (1+y)/2], then a
/// Gauss-Jacobi rule carrying w^{-μ-1} on the last half.
template <typename F>
EvalResult ifrac(F&& f, const FracOpSpec& spec, const EvalOptions& opts = {}) {
  opts.validate();
  spec.validate();
  const double z = spec.z;
  const double e = -spec.mu - 1.0;
  auto in_u = [&](double u) { return f(u * z) * std::pow(1.0 - u, e); };
  auto in_w = [&](double w) { return f((1.0 - w) * z) * std::pow(w, e); };
  EvalResult r;
  if (spec.variant == Variant::lower) {
    if (spec.y == 0.0) return {0.0, 0.0, 0, true};
    r = detail::add(adaptive_integrate(in_u, 0.0, spec.y / 2.0, opts),
                    adaptive_integrate(in_w, 1.0 - spec.y, 1.0 - spec.y / 2.0, opts));
  } else {
    const double mid = (1.0 + spec.y) / 2.0;
    auto g = [&](double w) { return f((1.0 - w) * z); };
    r = detail::add(adaptive_integrate(in_u, spec.y, mid, opts),
                    detail::jacobi_endpoint_integral(g, e, 1.0 - mid, opts));
  }
  const double pre = detail::frac_prefactor(spec.mu, z);
  r.value *= pre;
  r.abs_err_est *= pre;
  return r;
}

/// Classical operator 1/Γ(-μ) ∫₀^z f(t) (z-t)^{-μ-1} dt by tanh-sinh, split
/// at z/2 with s = z - t on the right half so both singular ends sit at the
/// lower limit.
template <typename F>
EvalResult classical_rl(F&& f, double mu, double z, const EvalOptions& opts = {}) {
  detail::require(mu < 0.0, "fractional operator: order must be negative");
  detail::require(z > 0.0, "fractional operator: evaluation point must be positive");
  const double e = -mu - 1.0;
  auto left = [&](double t) { return f(t) * std::pow(z - t, e); };
  auto right = [&](double s) { return f(z - s) * std::pow(s, e); };
  auto r = detail::add(adaptive_integrate(left, 0.0, z / 2.0, opts),
                       adaptive_integrate(right, 0.0, z / 2.0, opts));
  const double pre = std::exp(-log_gamma(-mu));
  r.value *= pre;
  r.abs_err_est *= pre;
  return r;
}

/// Closed form on monomials t^λ, λ > -1:
///   lower: B_y(λ+1, -μ)/Γ(-μ) z^{λ-μ};  upper: B_{1-y}(-μ, λ+1)/Γ(-μ) z^{λ-μ}.
inline EvalResult ifrac_power(Variant variant, double lambda, const FracOpSpec& spec,
                              const EvalOptions& opts = {}) {
  detail::require(lambda > -1.0, "ifrac_power: requires lambda > -1");
  FracOpSpec s = spec;
  s.variant = variant;
  s.validate();
  const double scale = log_gamma(-s.mu) - (lambda - s.mu) * std::log(s.z);
  const auto split = beta_split(s.y, lambda + 1.0, -s.mu, scale, log_beta(lambda + 1.0, -s.mu), opts);
  const double v = variant == Variant::lower ? split.lower : split.upper;
  return {v, 4.0 * std::numeric_limits<double>::epsilon() * std::abs(v), split.iterations, split.converged};
}

// ---------------------------------------------------------------------------
// Closed forms producing incomplete hypergeometric functions

/// two_f1:    D^{λ-μ}[t^{λ-1}(1-t)^{-α}; y]                = Γ(λ)/Γ(μ) z^{μ-1} 2F1(α,[λ,μ;y];z)
/// appell_f1: D^{λ-μ}[t^{λ-1}(1-at)^{-α}(1-bt)^{-β}; y]    = Γ(λ)/Γ(μ) z^{μ-1} F1[λ,α,β;μ;az,bz;y]
/// appell_f2: D^{λ-μ}[t^{λ-1}(1-t)^{-α} 2F1(α,[β,γ;y]; τ/(1-t)); y]
///                                                       = Γ(λ)/Γ(μ) z^{μ-1} F2[α,β,λ;γ,μ;τ,z;y]
/// and the upper forms with {·} throughout. The operator order λ-μ must be
/// negative, so μ > λ > 0.
enum class ClosedFormKind { two_f1, appell_f1, appell_f2 };

inline constexpr std::string_view to_string(ClosedFormKind k) {
  switch (k) {
    case ClosedFormKind::two_f1: return "two_f1";
    case ClosedFormKind::appell_f1: return "appell_f1";
    default: return "appell_f2";
  }
}

inline ClosedFormKind parse_closed_form_kind(std::string_view s) {
  if (s == "two_f1") return ClosedFormKind::two_f1;
  if (s == "appell_f1") return ClosedFormKind::appell_f1;
  if (s == "appell_f2") return ClosedFormKind::appell_f2;
  throw std::invalid_argument("unknown closed form '" + std::string(s) + "'");
}

struct ClosedFormParams {
  double lambda = 1.0;
  double mu = 2.0;
  double alpha = 1.0;
  double beta = 1.0;   // second exponent (appell_f1) or inner ratio parameter (appell_f2)
  double gamma = 2.0;  // inner ratio parameter (appell_f2)
  double a = 0.0;      // coefficient of z in the first factor (appell_f1)
  double b = 0.0;      // coefficient of z in the second factor (appell_f1)
  double tau = 0.0;    // first F2 argument (appell_f2)
  double y = 0.5;
  double z = 0.5;
};

struct ClosedFormCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  // (lhs - rhs) / |rhs|
  /// appell_f2 upper only: relative residual when the inner function keeps
  /// the lower ratio [β,γ;y] while the operator and F2 are upper. Zero
  /// elsewhere.
  double mixed_inner_residual = 0.0;
};

namespace detail {

inline double closed_form_operator(ClosedFormKind kind, Variant variant, Variant inner,
                                   const ClosedFormParams& p, const EvalOptions& opts) {
  const FracOpSpec spec{p.lambda - p.mu, p.y, p.z, variant};
  auto run = [&](auto&& f) {
    return require_converged(ifrac(f, spec, opts), "closed form: operator quadrature did not converge").value;
  };
  switch (kind) {
    case ClosedFormKind::two_f1:
      return run([&](double t) { return std::pow(t, p.lambda - 1.0) * std::pow(1.0 - t, -p.alpha); });
    case ClosedFormKind::appell_f1:
      return run([&](double t) {
        return std::pow(t, p.lambda - 1.0) * std::pow(1.0 - p.a * t, -p.alpha) *
               std::pow(1.0 - p.b * t, -p.beta);
      });
    default:
      return run([&](double t) {
        const double w = p.tau / (1.0 - t);
        const double inner_value =
            ihyp_2f1({p.alpha, p.beta, p.gamma, p.y, w, inner}, Method::automatic, opts).value;
        return std::pow(t, p.lambda - 1.0) * std::pow(1.0 - t, -p.alpha) * inner_value;
      });
  }
}

}  // namespace detail

inline ClosedFormCheck closed_form_residual(ClosedFormKind kind, Variant variant, const ClosedFormParams& p,
                                            const EvalOptions& opts = {}) {
  detail::require(p.lambda > 0.0 && p.mu > p.lambda, "closed form: requires mu > lambda > 0");
  detail::require(p.z > 0.0 && p.z < 1.0, "closed form: requires 0 < z < 1");
  const double pre = std::exp(log_gamma(p.lambda) - log_gamma(p.mu) + (p.mu - 1.0) * std::log(p.z));
  ClosedFormCheck out;
  double target = 0.0;
  switch (kind) {
    case ClosedFormKind::two_f1:
      target = ihyp_2f1({p.alpha, p.lambda, p.mu, p.y, p.z, variant}, Method::automatic, opts).value;
      break;
    case ClosedFormKind::appell_f1:
      target = appell_f1({p.lambda, p.alpha, p.beta, p.mu, p.a * p.z, p.b * p.z, p.y, variant},
                         Method::automatic, opts)
                   .value;
      break;
    case ClosedFormKind::appell_f2:
      target = appell_f2({p.alpha, p.beta, p.lambda, p.gamma, p.mu, p.tau, p.z, p.y, variant},
                         Method::automatic, opts)
                   .value;
      break;
  }
  out.rhs = pre * target;
  out.lhs = detail::closed_form_operator(kind, variant, variant, p, opts);
  const double scale = std::max(std::abs(out.rhs), 1e-300);
  out.residual = (out.lhs - out.rhs) / scale;
  if (kind == ClosedFormKind::appell_f2 && variant == Variant::upper) {
    const double mixed = detail::closed_form_operator(kind, variant, Variant::lower, p, opts);
    out.mixed_inner_residual = (mixed - out.rhs) / scale;
  }
  return out;
}

}  // namespace inchyp
