#pragma once

// Incomplete Gauss and Kummer functions
//   2F1(a, [b,c;y]; x) = Σ (a)_n [b,c;y]_n xⁿ/n!     (lower)
//   2F1(a, {b,c;y}; x) = Σ (a)_n {b,c;y}_n xⁿ/n!     (upper)
//   1F1([a,b;y]; x)    = Σ [a,b;y]_n xⁿ/n!           (lower)
//   1F1({a,b;y}; x)    = Σ {a,b;y}_n xⁿ/n!           (upper)
// with a series path and an Euler-integral path for each.

#include <array>
#include <cmath>
#include <cstdint>
#include <string_view>

#include "inchyp/core.hpp"
#include "inchyp/gamma.hpp"
#include "inchyp/hypergeometric.hpp"
#include "inchyp/pochhammer_ratio.hpp"
#include "inchyp/quadrature.hpp"
#include "inchyp/series.hpp"

namespace inchyp {

struct Hyp2F1Params {
  double a = 1.0;
  double b = 1.0;
  double c = 2.0;
  double y = 0.0;
  double x = 0.0;
  Variant variant = Variant::lower;

  void validate() const {
    detail::require(b > 0.0, "2F1: requires b > 0");
    detail::require(c > b, "2F1: requires c > b");
    detail::require(y >= 0.0 && y < 1.0, "2F1: cutoff must lie in [0, 1)");
    if (variant == Variant::lower)
      detail::require(x * y < 1.0, "2F1: lower variant requires x*y < 1");
    else
      detail::require(x < 1.0, "2F1: upper variant requires x < 1");
  }
};

struct Hyp1F1Params {
  double a = 1.0;
  double b = 2.0;
  double y = 0.0;
  double x = 0.0;
  Variant variant = Variant::lower;

  void validate() const {
    detail::require(a > 0.0, "1F1: requires a > 0");
    detail::require(b > a, "1F1: requires b > a");
    detail::require(y >= 0.0 && y < 1.0, "1F1: cutoff must lie in [0, 1)");
  }
};

namespace detail {

// Ratios evaluated term by term. The lower ratio is returned divided by yⁿ so
// a lower series can be summed in powers of x·y without overflow.
class RatioSequence {
 public:
  RatioSequence(double b, double c, double y, Variant v, const EvalOptions& opts)
      : b_(b), c_(c), y_(y), log_y_(y > 0.0 ? std::log(y) : 0.0), variant_(v), opts_(opts) {}

  double operator()(std::uint64_t n) {
    // pochhammer ratio advanced incrementally; callers ask for n = 0, 1, 2, ...
    while (next_ < n) {
      pr_ *= (b_ + static_cast<double>(next_)) / (c_ + static_cast<double>(next_));
      ++next_;
    }
    const double extra = variant_ == Variant::lower ? static_cast<double>(n) * log_y_ : 0.0;
    const auto s = ratio_pair(b_, c_, n, y_, pr_, extra, opts_);
    if (!s.converged) ok_ = false;
    return variant_ == Variant::lower ? s.lower : s.upper;
  }

  bool ok() const { return ok_; }

 private:
  double b_, c_, y_, log_y_;
  Variant variant_;
  const EvalOptions& opts_;
  double pr_ = 1.0;
  std::uint64_t next_ = 0;
  bool ok_ = true;
};

// Cutoff that sets the geometric decay of a series: y for lower, 1 for upper.
inline double effective_cutoff(Variant v, double y) { return v == Variant::lower ? y : 1.0; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Incomplete 2F1

namespace detail {

inline EvalResult ihyp_2f1_series(const Hyp2F1Params& p, const EvalOptions& opts) {
  const double ye = effective_cutoff(p.variant, p.y);
  require(std::abs(p.x) * ye < 1.0, "2F1 series: argument outside the series radius");
  RatioSequence ratio_at(p.b, p.c, p.y, p.variant, opts);
  const double step = p.x * ye;
  double coef = 1.0;
  auto r = sum_series(
      [&](std::size_t n) {
        if (n > 0) {
          const double k = static_cast<double>(n - 1);
          coef *= (p.a + k) / (k + 1.0) * step;
        }
        if (coef == 0.0) return 0.0;
        return coef * ratio_at(n);
      },
      opts);
  r.converged = r.converged && ratio_at.ok();
  return r;
}

inline EvalResult ihyp_2f1_integral(const Hyp2F1Params& p, const EvalOptions& opts) {
  const double lb = log_beta(p.b, p.c - p.b);
  EvalResult r;
  double pre;
  if (p.variant == Variant::lower) {
    // y^b/B ∫ u^{b-1} (1-uy)^{c-b-1} (1-xyu)^{-a} du
    const std::array<LinearPowerFactor, 2> f{{{1.0, -p.y, p.c - p.b - 1.0},
                                              {1.0, -p.x * p.y, -p.a}}};
    r = euler_integral(p.b - 1.0, 0.0, f, opts);
    pre = std::exp(p.b * std::log(p.y) - lb);
  } else {
    // (1-y)^{c-b}/B ∫ u^{c-b-1} (1-u(1-y))^{b-1} (1-x+xu(1-y))^{-a} du
    const double w = 1.0 - p.y;
    const std::array<LinearPowerFactor, 2> f{{{1.0, -w, p.b - 1.0},
                                              {1.0 - p.x, p.x * w, -p.a}}};
    r = euler_integral(p.c - p.b - 1.0, 0.0, f, opts);
    pre = std::exp((p.c - p.b) * std::log1p(-p.y) - lb);
  }
  r.value *= pre;
  r.abs_err_est *= pre;
  return r;
}

// The series loses about log10 of this factor to cancellation when the
// terms alternate in sign.
inline double alternating_magnification_2f1(double a, double x, double ye) {
  const double s = std::abs(x) * ye;
  if (x >= 0.0 && a >= 0.0) return 1.0;
  if (s >= 1.0) return std::numeric_limits<double>::infinity();
  return std::exp(std::abs(a) * std::log((1.0 + s) / (1.0 - s)));
}

}  // namespace detail

/// Incomplete 2F1, lower or upper.
///
/// `automatic` uses the series while |x|·y (lower) or |x| (upper) is at most
/// 0.95 and the alternating-sign cancellation stays under three digits, and
/// the Euler integral otherwise.
inline EvalResult ihyp_2f1(const Hyp2F1Params& p, Method method = Method::automatic,
                           const EvalOptions& opts = {}) {
  opts.validate();
  p.validate();
  if (p.variant == Variant::lower && p.y == 0.0) return {0.0, 0.0, 0, true};
  if (method == Method::automatic) {
    const double ye = detail::effective_cutoff(p.variant, p.y);
    const bool in_radius = std::abs(p.x) * ye <= 0.95;
    const bool stable = detail::alternating_magnification_2f1(p.a, p.x, ye) <= 1e3;
    method = in_radius && stable ? Method::series : Method::integral;
  }
  return method == Method::series ? detail::ihyp_2f1_series(p, opts)
                                  : detail::ihyp_2f1_integral(p, opts);
}

// ---------------------------------------------------------------------------
// Incomplete 1F1

namespace detail {

inline EvalResult ihyp_1f1_series(const Hyp1F1Params& p, const EvalOptions& opts) {
  const double ye = effective_cutoff(p.variant, p.y);
  RatioSequence ratio_at(p.a, p.b, p.y, p.variant, opts);
  const double step = p.x * ye;
  double coef = 1.0;
  auto r = sum_series(
      [&](std::size_t n) {
        if (n > 0) coef *= step / static_cast<double>(n);
        if (coef == 0.0) return 0.0;
        return coef * ratio_at(n);
      },
      opts);
  r.converged = r.converged && ratio_at.ok();
  return r;
}

inline EvalResult ihyp_1f1_integral(const Hyp1F1Params& p, const EvalOptions& opts) {
  const double lb = log_beta(p.a, p.b - p.a);
  EvalResult r;
  double pre;
  if (p.variant == Variant::lower) {
    // y^a/B ∫ u^{a-1} (1-uy)^{b-a-1} e^{xuy} du
    const std::array<LinearPowerFactor, 1> f{{{1.0, -p.y, p.b - p.a - 1.0}}};
    const double k = p.x * p.y;
    r = euler_integral(p.a - 1.0, 0.0, f, [k](double u) { return std::exp(k * u); }, opts);
    pre = std::exp(p.a * std::log(p.y) - lb);
  } else {
    // (1-y)^{b-a}/B ∫ u^{b-a-1} (1-u(1-y))^{a-1} e^{(1-u(1-y))x} du
    const double w = 1.0 - p.y;
    const std::array<LinearPowerFactor, 1> f{{{1.0, -w, p.a - 1.0}}};
    const double x = p.x;
    r = euler_integral(p.b - p.a - 1.0, 0.0, f, [x, w](double u) { return std::exp(x * (1.0 - u * w)); },
                       opts);
    pre = std::exp((p.b - p.a) * std::log1p(-p.y) - lb);
  }
  r.value *= pre;
  r.abs_err_est *= pre;
  return r;
}

}  // namespace detail

/// Incomplete 1F1, lower or upper; entire in x.
///
/// `automatic` uses the series unless x < 0 and the alternating terms would
/// cancel by more than three digits (2|x|·y > ln 1000), then the integral.
inline EvalResult ihyp_1f1(const Hyp1F1Params& p, Method method = Method::automatic,
                           const EvalOptions& opts = {}) {
  opts.validate();
  p.validate();
  if (p.variant == Variant::lower && p.y == 0.0) return {0.0, 0.0, 0, true};
  if (method == Method::automatic) {
    const double ye = detail::effective_cutoff(p.variant, p.y);
    const bool stable = !(p.x < 0.0 && 2.0 * std::abs(p.x) * ye > std::log(1e3));
    method = stable ? Method::series : Method::integral;
  }
  return method == Method::series ? detail::ihyp_1f1_series(p, opts)
                                  : detail::ihyp_1f1_integral(p, opts);
}

// ---------------------------------------------------------------------------
// Values at x = 1

/// Incomplete 2F1 at x = 1 from the closed forms
///   2F1(a,[b,c;y];1) = G - (1-y)^{c-b-a} y^b / (B(b,c-b)(c-a-b)) · 2F1(c-a, 1; 1+c-b-a; 1-y)
///   2F1(a,{b,c;y};1) = G - (1-y)^{c-b-a} y^b / (B(b,c-b) b) · 2F1(c-a, 1; b+1; y)
/// with G = Γ(c)Γ(c-a-b)/(Γ(c-a)Γ(c-b)). The subtracted term of each form is
/// the other variant, so when a form's series argument exceeds 0.9 the
/// other variant's term is used directly instead (same identity, no slow
/// series near argument one).
inline EvalResult ihyp_2f1_at_one(Variant variant, double a, double b, double c, double y,
                                  const EvalOptions& opts = {}) {
  detail::require(b > 0.0 && c > b, "2F1 at one: requires c > b > 0");
  detail::require(c - a - b > 0.0, "2F1 at one: requires c - a - b > 0");
  detail::require(y >= 0.0 && y < 1.0, "2F1 at one: cutoff must lie in [0, 1)");
  const double g = gauss_summation(a, b, c);
  if (y == 0.0) return {variant == Variant::lower ? 0.0 : g, 0.0, 0, true};
  const double s = c - a - b;
  const double lpre = s * std::log1p(-y) + b * std::log(y) - log_beta(b, c - b);
  // upper_term: value of the upper variant; lower_term: value of the lower.
  auto upper_term = [&] {
    auto r = complete_2f1(c - a, 1.0, 1.0 + s, 1.0 - y, opts);
    const double k = std::exp(lpre) / s;
    return EvalResult{k * r.value, k * r.abs_err_est, r.effort, r.converged};
  };
  auto lower_term = [&] {
    auto r = complete_2f1(c - a, 1.0, b + 1.0, y, opts);
    const double k = std::exp(lpre) / b;
    return EvalResult{k * r.value, k * r.abs_err_est, r.effort, r.converged};
  };
  const bool direct = variant == Variant::lower ? (1.0 - y) <= 0.9 : y <= 0.9;
  if (!direct) return variant == Variant::lower ? lower_term() : upper_term();
  auto t = variant == Variant::lower ? upper_term() : lower_term();
  t.value = g - t.value;
  t.abs_err_est += std::numeric_limits<double>::epsilon() * std::abs(g);
  return t;
}

// ---------------------------------------------------------------------------
// Derivative formulas

enum class HypKind { two_f1, one_f1 };

/// Coefficient and shifted parameters of the n-th x-derivative formulas
///   dⁿ/dxⁿ 2F1(a,[b,c;y];x) = (a)_n (b)_n/(c)_n · 2F1(a+n,[b+n,c+n;y];x)
///   dⁿ/dxⁿ 1F1([a,b;y];x)   = (a)_n/(b)_n · 1F1([a+n,b+n;y];x)
/// (the upper variants shift the same way).
struct DerivativeShift {
  double coefficient = 1.0;
  Hyp2F1Params shifted_2f1;
  Hyp1F1Params shifted_1f1;
};

inline DerivativeShift derivative_shift(const Hyp2F1Params& p, std::uint64_t n) {
  detail::require(n >= 1, "derivative_shift: requires n >= 1");
  const double nn = static_cast<double>(n);
  DerivativeShift out;
  out.coefficient = pochhammer(p.a, n) * pochhammer_ratio(p.b, p.c, n);
  out.shifted_2f1 = {p.a + nn, p.b + nn, p.c + nn, p.y, p.x, p.variant};
  return out;
}

inline DerivativeShift derivative_shift(const Hyp1F1Params& p, std::uint64_t n) {
  detail::require(n >= 1, "derivative_shift: requires n >= 1");
  const double nn = static_cast<double>(n);
  DerivativeShift out;
  out.coefficient = pochhammer_ratio(p.a, p.b, n);
  out.shifted_1f1 = {p.a + nn, p.b + nn, p.y, p.x, p.variant};
  return out;
}

/// Relative difference between a central finite-difference n-th x-derivative
/// (one Richardson step) and coefficient·shifted evaluation.
inline double derivative_shift_residual(const Hyp2F1Params& p, std::uint64_t n, double h,
                                        const EvalOptions& opts = {}) {
  const auto ds = derivative_shift(p, n);
  auto f = [&](double x) {
    auto q = p;
    q.x = x;
    return ihyp_2f1(q, Method::automatic, opts).value;
  };
  const double d = detail::central_derivative(f, p.x, n, h).first;
  const double rhs = ds.coefficient * ihyp_2f1(ds.shifted_2f1, Method::automatic, opts).value;
  return (d - rhs) / std::max(std::abs(rhs), 1e-300);
}

inline double derivative_shift_residual(const Hyp1F1Params& p, std::uint64_t n, double h,
                                        const EvalOptions& opts = {}) {
  const auto ds = derivative_shift(p, n);
  auto f = [&](double x) {
    auto q = p;
    q.x = x;
    return ihyp_1f1(q, Method::automatic, opts).value;
  };
  const double d = detail::central_derivative(f, p.x, n, h).first;
  const double rhs = ds.coefficient * ihyp_1f1(ds.shifted_1f1, Method::automatic, opts).value;
  return (d - rhs) / std::max(std::abs(rhs), 1e-300);
}

// ---------------------------------------------------------------------------
// Transformations

/// pf_lower:     2F1(α,[β,γ;y];z) = (1-z)^{-α} 2F1(α,{γ-β,γ;1-y}; z/(z-1))
/// pf_upper:     2F1(α,{β,γ;y};z) = (1-z)^{-α} 2F1(α,[γ-β,γ;1-y]; z/(z-1))
/// kummer_upper: 1F1({α,β;y};z)   = e^z 1F1([β-α,β;1-y]; -z)
/// kummer_lower: 1F1([α,β;y];z)   = e^z 1F1({β-α,β;1-y}; -z)
enum class TransformKind { pf_lower, pf_upper, kummer_upper, kummer_lower };

inline constexpr std::string_view to_string(TransformKind k) {
  switch (k) {
    case TransformKind::pf_lower: return "pf_lower";
    case TransformKind::pf_upper: return "pf_upper";
    case TransformKind::kummer_upper: return "kummer_upper";
    default: return "kummer_lower";
  }
}

inline TransformKind parse_transform_kind(std::string_view s) {
  if (s == "pf_lower") return TransformKind::pf_lower;
  if (s == "pf_upper") return TransformKind::pf_upper;
  if (s == "kummer_upper") return TransformKind::kummer_upper;
  if (s == "kummer_lower") return TransformKind::kummer_lower;
  throw std::invalid_argument("unknown transform '" + std::string(s) + "'");
}

/// Parameters of the function on the left of a transformation. For the
/// Kummer kinds `alpha` and `beta` are the 1F1 parameters and `gamma` is
/// unused.
struct TransformParams {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 2.0;
  double y = 0.5;
  double z = 0.0;
};

namespace detail {

inline bool is_pfaff(TransformKind k) {
  return k == TransformKind::pf_lower || k == TransformKind::pf_upper;
}

inline Variant lhs_variant(TransformKind k) {
  return (k == TransformKind::pf_lower || k == TransformKind::kummer_lower) ? Variant::lower
                                                                            : Variant::upper;
}

inline void validate_transform(TransformKind k, const TransformParams& p) {
  require(p.y > 0.0 && p.y < 1.0, "transform: cutoff must lie in (0, 1)");
  if (is_pfaff(k)) require(p.z < 1.0, "transform: Pfaff forms need z < 1");
}

}  // namespace detail

/// Left side of the transformation: the original incomplete function.
inline EvalResult transform_lhs(TransformKind kind, const TransformParams& p,
                                const EvalOptions& opts = {}) {
  detail::validate_transform(kind, p);
  const Variant v = detail::lhs_variant(kind);
  if (detail::is_pfaff(kind)) return ihyp_2f1({p.alpha, p.beta, p.gamma, p.y, p.z, v}, Method::automatic, opts);
  return ihyp_1f1({p.alpha, p.beta, p.y, p.z, v}, Method::automatic, opts);
}

/// Right side of the transformation, evaluated independently of the left.
inline EvalResult transform(TransformKind kind, const TransformParams& p,
                            const EvalOptions& opts = {}) {
  detail::validate_transform(kind, p);
  const Variant target =
      detail::lhs_variant(kind) == Variant::lower ? Variant::upper : Variant::lower;
  EvalResult r;
  double pre;
  if (detail::is_pfaff(kind)) {
    const double w = p.z / (p.z - 1.0);
    r = ihyp_2f1({p.alpha, p.gamma - p.beta, p.gamma, 1.0 - p.y, w, target}, Method::automatic, opts);
    pre = std::exp(-p.alpha * std::log1p(-p.z));
  } else {
    r = ihyp_1f1({p.beta - p.alpha, p.beta, 1.0 - p.y, -p.z, target}, Method::automatic, opts);
    pre = std::exp(p.z);
  }
  r.value *= pre;
  r.abs_err_est *= pre;
  return r;
}

// ---------------------------------------------------------------------------
// Identities checked numerically

/// Difference formula, left side minus right side:
///   (b+h-1)/B(b,h) y^{b-1} (1-y)^{h-1} (1-xy)^{-a}
///   - [2F1(a,[b,b+h-1;y];x) + 2F1(a,[b-1,b+h-1;y];x) - a x (b+h-1) 2F1(a+1,[b,b+h;y];x)]
/// Every function is evaluated by its integral path. b > 1 and h > 1 keep
/// all three ratio families well defined.
inline double difference_relation_residual(double a, double b, double h, double y, double x,
                                           const EvalOptions& opts = {}) {
  detail::require(b > 1.0 && h > 1.0, "difference relation: requires b > 1 and h > 1");
  detail::require(y > 0.0 && y < 1.0, "difference relation: cutoff must lie in (0, 1)");
  detail::require(x * y < 1.0, "difference relation: requires x*y < 1");
  const double lhs = (b + h - 1.0) *
                     std::exp(-log_beta(b, h) + (b - 1.0) * std::log(y) + (h - 1.0) * std::log1p(-y) -
                              a * std::log1p(-x * y));
  auto f = [&](double aa, double bb, double cc) {
    return detail::require_converged(ihyp_2f1({aa, bb, cc, y, x, Variant::lower}, Method::integral, opts),
                                     "difference relation: integral did not converge")
        .value;
  };
  const double rhs = f(a, b, b + h - 1.0) + f(a, b - 1.0, b + h - 1.0) -
                     a * x * (b + h - 1.0) * f(a + 1.0, b, b + h);
  return lhs - rhs;
}

/// The four moment relations over the cutoff y ∈ [0, 1]:
///   lowered_c:      ∫ y^{k-1} 2F1(a,[b,c-k;y];x) dy
///                     = (1/k)[2F1(a,b;c-k;x) - Γ(c-k)Γ(b+k)/(Γ(b)Γ(c)) 2F1(a,b+k;c;x)]
///   lowered_c_unit: lowered_c at k = 1
///   raised_c:       ∫ y^{k-1} 2F1(a,[b,c;y];x) dy
///                     = (1/k) Γ(c)Γ(c-b+k)/(Γ(c-b)Γ(c+k)) 2F1(a,b;c+k;x)
///   raised_c_unit:  2F1(a,b;c+1;x) = c/(c-b) ∫ 2F1(a,[b,c;y];x) dy
enum class MomentKind { lowered_c, lowered_c_unit, raised_c, raised_c_unit };

inline constexpr std::string_view to_string(MomentKind k) {
  switch (k) {
    case MomentKind::lowered_c: return "lowered_c";
    case MomentKind::lowered_c_unit: return "lowered_c_unit";
    case MomentKind::raised_c: return "raised_c";
    default: return "raised_c_unit";
  }
}

inline MomentKind parse_moment_kind(std::string_view s) {
  if (s == "lowered_c") return MomentKind::lowered_c;
  if (s == "lowered_c_unit") return MomentKind::lowered_c_unit;
  if (s == "raised_c") return MomentKind::raised_c;
  if (s == "raised_c_unit") return MomentKind::raised_c_unit;
  throw std::invalid_argument("unknown moment relation '" + std::string(s) + "'");
}

struct MomentCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  /// For raised_c, the right side the moment actually equals:
  /// (1/k)[2F1(a,b;c;x) - (b)_k/(c)_k 2F1(a,b+k;c+k;x)]. Equal to rhs at k = 1.
  double rhs_integration_by_parts = 0.0;
};

/// ∫₀¹ y^{k-1} 2F1(a,[b,c;y];x) dy by tanh-sinh quadrature in y.
inline EvalResult y_moment(std::uint64_t k, double a, double b, double c, double x,
                           const EvalOptions& opts = {}) {
  detail::require(k >= 1, "y moment: requires k >= 1");
  detail::require(b > 0.0 && c > b, "y moment: requires c > b > 0");
  detail::require(std::abs(x) < 1.0, "y moment: requires |x| < 1");
  const double kk = static_cast<double>(k);
  auto integrand = [&](double y) {
    return std::pow(y, kk - 1.0) * ihyp_2f1({a, b, c, y, x, Variant::lower}, Method::automatic, opts).value;
  };
  return adaptive_integrate(integrand, 0.0, 1.0, opts);
}

inline MomentCheck y_moment_residual(MomentKind kind, std::uint64_t k, double a, double b, double c,
                                     double x, const EvalOptions& opts = {}) {
  if (kind == MomentKind::lowered_c_unit || kind == MomentKind::raised_c_unit) k = 1;
  const double kk = static_cast<double>(k);
  auto f21 = [&](double aa, double bb, double cc) { return complete_2f1(aa, bb, cc, x, opts).value; };
  MomentCheck out;
  switch (kind) {
    case MomentKind::lowered_c:
    case MomentKind::lowered_c_unit: {
      detail::require(c - kk > b, "y moment: requires c - k > b");
      out.lhs = y_moment(k, a, b, c - kk, x, opts).value;
      const double g = std::exp(log_gamma(c - kk) + log_gamma(b + kk) - log_gamma(b) - log_gamma(c));
      out.rhs = (f21(a, b, c - kk) - g * f21(a, b + kk, c)) / kk;
      out.rhs_integration_by_parts = out.rhs;
      break;
    }
    case MomentKind::raised_c: {
      out.lhs = y_moment(k, a, b, c, x, opts).value;
      const double g = std::exp(log_gamma(c) + log_gamma(c - b + kk) - log_gamma(c - b) - log_gamma(c + kk));
      out.rhs = g * f21(a, b, c + kk) / kk;
      out.rhs_integration_by_parts =
          (f21(a, b, c) - pochhammer_ratio(b, c, k) * f21(a, b + kk, c + kk)) / kk;
      break;
    }
    case MomentKind::raised_c_unit: {
      out.lhs = c / (c - b) * y_moment(1, a, b, c, x, opts).value;
      out.rhs = f21(a, b, c + 1.0);
      out.rhs_integration_by_parts = out.rhs;
      break;
    }
  }
  out.residual = out.lhs - out.rhs;
  return out;
}

}  // namespace inchyp
