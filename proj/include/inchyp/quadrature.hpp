#pragma once

// Quadrature on [0, 1]: Gauss-Jacobi rules for integrable endpoint powers,
// graded composite rules for factors with nearby singularities, and a
// double-exponential integrator for callables with unknown endpoint behaviour.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <span>
#include <tuple>
#include <vector>

#include "inchyp/core.hpp"
#include "inchyp/gamma.hpp"

namespace inchyp {

/// Real-to-real callable consumed by the integrators and fractional operators.
using FunctionHandle = std::function<double(double)>;

/// Nodes and weights on (0, 1) for the weight u^p (1-u)^q.
///
/// The weights already contain the endpoint powers, so Σ w_i g(u_i)
/// approximates ∫ u^p (1-u)^q g(u) du.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double exponent_at_zero = 0.0;
  double exponent_at_one = 0.0;

  std::size_t size() const { return nodes.size(); }

  template <typename G>
  double apply(G&& g) const {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * g(nodes[i]);
    return s;
  }
};

namespace detail {

// Three-term recurrence of the monic Jacobi polynomials shifted to [0, 1]
// for weight u^p (1-u)^q: P_{k+1} = (u - alpha_k) P_k - beta_k P_{k-1}.
inline void shifted_jacobi_recurrence(std::size_t n, double p, double q,
                                      std::vector<double>& alpha,
                                      std::vector<double>& beta) {
  // Standard interval [-1, 1] with weight (1-x)^a (1+x)^b; u = (1+x)/2.
  const double a = q;
  const double b = p;
  alpha.assign(n, 0.0);
  beta.assign(n, 0.0);
  const double ab = a + b;
  for (std::size_t k = 0; k < n; ++k) {
    const double kk = static_cast<double>(k);
    double ak;
    if (k == 0) {
      ak = (b - a) / (ab + 2.0);
    } else {
      const double s = 2.0 * kk + ab;
      ak = (b * b - a * a) / (s * (s + 2.0));
    }
    alpha[k] = 0.5 * (1.0 + ak);
    if (k == 0) {
      beta[k] = 0.0;
    } else if (k == 1) {
      const double bk = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
      beta[k] = 0.25 * bk;
    } else {
      const double s = 2.0 * kk + ab;
      const double bk = 4.0 * kk * (kk + a) * (kk + b) * (kk + ab) /
                        (s * s * (s + 1.0) * (s - 1.0));
      beta[k] = 0.25 * bk;
    }
  }
}

// Orthonormal polynomial values at u; returns p_n(u), p_n'(u) and Σ_{k<n} p_k(u)^2.
struct OrthoEval {
  double value;
  double deriv;
  double sum_sq;
};

inline OrthoEval eval_orthonormal(double u, const std::vector<double>& alpha,
                                  const std::vector<double>& beta, double beta_n) {
  const std::size_t n = alpha.size();
  double pm1 = 0.0, p = 1.0;
  double dpm1 = 0.0, dp = 0.0;
  double sum_sq = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sum_sq += p * p;
    const double sb_next = std::sqrt(k + 1 < n ? beta[k + 1] : beta_n);
    const double sb = std::sqrt(beta[k]);
    const double pn = ((u - alpha[k]) * p - sb * pm1) / sb_next;
    const double dpn = ((u - alpha[k]) * dp + p - sb * dpm1) / sb_next;
    pm1 = p;
    p = pn;
    dpm1 = dp;
    dp = dpn;
  }
  return {p, dp, sum_sq};
}

inline QuadratureRule build_gauss_jacobi(std::size_t n, double p, double q) {
  std::vector<double> alpha, beta;
  shifted_jacobi_recurrence(n + 1, p, q, alpha, beta);
  const double beta_n = beta[n];
  alpha.resize(n);
  beta.resize(n);

  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 1);
  for (std::size_t k = 0; k < n; ++k) diag[static_cast<Eigen::Index>(k)] = alpha[k];
  for (std::size_t k = 1; k < n; ++k)
    sub[static_cast<Eigen::Index>(k - 1)] = std::sqrt(beta[k]);

  std::vector<double> nodes(n);
  if (n == 1) {
    nodes[0] = alpha[0];
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub.head(static_cast<Eigen::Index>(n - 1)),
                                  Eigen::EigenvaluesOnly);
    for (std::size_t i = 0; i < n; ++i)
      nodes[i] = solver.eigenvalues()[static_cast<Eigen::Index>(i)];
  }
  std::sort(nodes.begin(), nodes.end());

  // Newton polish on p_n improves the relative accuracy of nodes near 0 and 1.
  for (std::size_t i = 0; i < n; ++i) {
    const double gap_lo = i == 0 ? nodes[0] : nodes[i] - nodes[i - 1];
    const double gap_hi = i + 1 == n ? 1.0 - nodes[i] : nodes[i + 1] - nodes[i];
    const double limit = 0.25 * std::min(gap_lo, gap_hi);
    double u = nodes[i];
    for (int it = 0; it < 3; ++it) {
      const auto e = eval_orthonormal(u, alpha, beta, beta_n);
      if (e.deriv == 0.0) break;
      const double step = e.value / e.deriv;
      if (!std::isfinite(step) || std::abs(step) > limit) break;
      u -= step;
      if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * u) break;
    }
    nodes[i] = std::clamp(u, std::numeric_limits<double>::min(),
                          1.0 - std::numeric_limits<double>::epsilon() / 2.0);
  }

  const double mu0 = std::exp(log_beta(p + 1.0, q + 1.0));
  QuadratureRule rule;
  rule.nodes = nodes;
  rule.weights.resize(n);
  rule.exponent_at_zero = p;
  rule.exponent_at_one = q;
  for (std::size_t i = 0; i < n; ++i) {
    const auto e = eval_orthonormal(nodes[i], alpha, beta, beta_n);
    rule.weights[i] = mu0 / e.sum_sq;
  }
  return rule;
}

class RuleCache {
 public:
  std::shared_ptr<const QuadratureRule> get(std::size_t n, double p, double q) {
    const Key key{n, p, q};
    {
      std::lock_guard lock(mutex_);
      if (auto it = rules_.find(key); it != rules_.end()) return it->second;
    }
    auto rule = std::make_shared<const QuadratureRule>(build_gauss_jacobi(n, p, q));
    std::lock_guard lock(mutex_);
    if (rules_.size() >= kMaxEntries) rules_.clear();
    rules_.emplace(key, rule);
    return rule;
  }

  static RuleCache& instance() {
    static RuleCache cache;
    return cache;
  }

 private:
  using Key = std::tuple<std::size_t, double, double>;
  static constexpr std::size_t kMaxEntries = 2048;
  std::mutex mutex_;
  std::map<Key, std::shared_ptr<const QuadratureRule>> rules_;
};

}  // namespace detail

/// n-point Gauss-Jacobi rule on [0, 1] for the weight u^p (1-u)^q.
///
/// Exact for polynomials of degree <= 2n-1 against that weight. Nodes come
/// from the eigenvalues of the Jacobi matrix, polished by Newton steps on the
/// orthonormal recurrence; weights are Christoffel numbers.
inline QuadratureRule gauss_jacobi_rule(std::size_t n, double p, double q) {
  detail::require(n >= 1, "gauss_jacobi_rule: need at least one node");
  detail::require(p > -1.0 && q > -1.0, "gauss_jacobi_rule: exponents must exceed -1");
  return *detail::RuleCache::instance().get(n, p, q);
}

/// Distances from the ends of [0, 1] to the nearest singularity of the smooth
/// factor; infinity when there is none on that side.
struct SingularityGaps {
  double left = std::numeric_limits<double>::infinity();
  double right = std::numeric_limits<double>::infinity();
};

/// Composite rule for ∫ u^p (1-u)^q g(u) du where g is analytic on [0, 1]
/// but may have singularities close to either end.
///
/// Panels shrink geometrically towards an end whose gap is small, so every
/// panel sits at least one panel-length away from the singularity. The first
/// panel carries u^p as a Jacobi weight, the last carries (1-u)^q; interior
/// panels are Gauss-Legendre with the endpoint powers folded into the weights.
inline QuadratureRule graded_jacobi_rule(std::size_t n, double p, double q,
                                         SingularityGaps gaps) {
  detail::require(p > -1.0 && q > -1.0, "graded_jacobi_rule: exponents must exceed -1");
  detail::require(gaps.left > 0.0 && gaps.right > 0.0,
                  "graded_jacobi_rule: singularity on the integration range");
  std::vector<double> breaks{0.0};
  const bool grade_left = gaps.left < 0.5;
  const bool grade_right = gaps.right < 0.5;
  if (grade_left) {
    for (double b = gaps.left; b < 0.5; b *= 2.0) breaks.push_back(b);
  }
  if (grade_left || grade_right) breaks.push_back(0.5);
  if (grade_right) {
    std::vector<double> right;
    for (double g = gaps.right; g < 0.5; g *= 2.0) right.push_back(1.0 - g);
    std::reverse(right.begin(), right.end());
    breaks.insert(breaks.end(), right.begin(), right.end());
  }
  breaks.push_back(1.0);

  QuadratureRule out;
  out.exponent_at_zero = p;
  out.exponent_at_one = q;
  if (breaks.size() == 2) {
    out = gauss_jacobi_rule(n, p, q);
    return out;
  }
  const std::size_t panels = breaks.size() - 1;
  out.nodes.reserve(panels * n);
  out.weights.reserve(panels * n);
  for (std::size_t k = 0; k < panels; ++k) {
    const double lo = breaks[k];
    const double hi = breaks[k + 1];
    const double len = hi - lo;
    if (k == 0) {
      const auto r = gauss_jacobi_rule(n, p, 0.0);
      const double scale = std::pow(len, p + 1.0);
      for (std::size_t i = 0; i < r.size(); ++i) {
        const double u = len * r.nodes[i];
        out.nodes.push_back(u);
        out.weights.push_back(scale * r.weights[i] * std::pow(1.0 - u, q));
      }
    } else if (k + 1 == panels) {
      const auto r = gauss_jacobi_rule(n, 0.0, q);
      const double scale = std::pow(len, q + 1.0);
      for (std::size_t i = 0; i < r.size(); ++i) {
        const double u = lo + len * r.nodes[i];
        out.nodes.push_back(u);
        out.weights.push_back(scale * r.weights[i] * std::pow(u, p));
      }
    } else {
      const auto r = gauss_jacobi_rule(n, 0.0, 0.0);
      for (std::size_t i = 0; i < r.size(); ++i) {
        const double u = lo + len * r.nodes[i];
        out.nodes.push_back(u);
        out.weights.push_back(len * r.weights[i] * std::pow(u, p) * std::pow(1.0 - u, q));
      }
    }
  }
  return out;
}

/// Applies graded rules with n and n/2 points per panel; the difference is
/// the error estimate.
template <typename G>
EvalResult integrate_jacobi(double p, double q, SingularityGaps gaps, G&& g,
                            const EvalOptions& opts) {
  const std::size_t n = opts.quad_nodes;
  const auto fine = graded_jacobi_rule(n, p, q, gaps);
  const auto coarse = graded_jacobi_rule(std::max<std::size_t>(n / 2, 1), p, q, gaps);
  const double vf = fine.apply(g);
  const double vc = coarse.apply(g);
  const double err = std::abs(vf - vc);
  const bool ok = std::isfinite(vf) &&
                  err <= std::max(opts.rel_tol * std::abs(vf), 1e-300);
  return {vf, err, fine.size() + coarse.size(), ok};
}

/// (c0 + c1·u)^exponent, a factor of an Euler-type integrand on [0, 1].
struct LinearPowerFactor {
  double c0;
  double c1;
  double exponent;

  double operator()(double u) const { return std::pow(c0 + c1 * u, exponent); }
};

namespace detail {

// Locates the root of c0 + c1·u relative to [0, 1] and widens `gaps`.
inline void note_linear_root(double c0, double c1, SingularityGaps& gaps) {
  if (c1 == 0.0) return;
  const double root = -c0 / c1;
  if (root > 1.0) gaps.right = std::min(gaps.right, root - 1.0);
  if (root < 0.0) gaps.left = std::min(gaps.left, -root);
}

}  // namespace detail

/// ∫₀¹ u^p (1-u)^q Π factors(u) · extra(u) du, with `extra` entire.
///
/// Each factor must stay positive on [0, 1]. A factor whose root sits exactly
/// at u = 0 or u = 1 is folded into the Jacobi exponent at that end.
template <typename Extra>
EvalResult euler_integral(double p, double q, std::span<const LinearPowerFactor> factors,
                          Extra&& extra, const EvalOptions& opts) {
  SingularityGaps gaps;
  std::vector<LinearPowerFactor> smooth;
  double scale = 1.0;
  for (const auto& f : factors) {
    if (f.exponent == 0.0) continue;
    const double at0 = f.c0;
    const double at1 = f.c0 + f.c1;
    if (at1 == 0.0 && at0 > 0.0) {
      // c0 (1 - u)^e
      q += f.exponent;
      scale *= std::pow(at0, f.exponent);
      continue;
    }
    if (at0 == 0.0 && at1 > 0.0) {
      p += f.exponent;
      scale *= std::pow(f.c1, f.exponent);
      continue;
    }
    detail::require(at0 > 0.0 && at1 > 0.0, "euler_integral: integrand factor vanishes on [0, 1]");
    detail::note_linear_root(f.c0, f.c1, gaps);
    smooth.push_back(f);
  }
  detail::require(p > -1.0 && q > -1.0, "euler_integral: non-integrable endpoint power");
  auto g = [&](double u) {
    double v = extra(u);
    for (const auto& f : smooth) v *= f(u);
    return v;
  };
  auto r = integrate_jacobi(p, q, gaps, g, opts);
  r.value *= scale;
  r.abs_err_est *= std::abs(scale);
  return r;
}

inline EvalResult euler_integral(double p, double q, std::span<const LinearPowerFactor> factors,
                                 const EvalOptions& opts) {
  return euler_integral(p, q, factors, [](double) { return 1.0; }, opts);
}

/// ∫_lo^hi f(t) dt by tanh-sinh (double exponential) quadrature.
///
/// The step is halved each level until two successive levels agree to
/// rel_tol; the level count is capped by adaptive_max_depth (and at 12).
/// Integrable algebraic singularities at either end are handled, but nodes
/// that round onto an endpoint are dropped, so singularities should sit at
/// `lo` where the node offsets keep full relative precision.
template <typename F>
  requires std::invocable<F&, double>
EvalResult adaptive_integrate(F&& f, double lo, double hi, const EvalOptions& opts = {}) {
  detail::require(lo < hi, "adaptive_integrate: need lo < hi");
  constexpr double half_pi = std::numbers::pi / 2.0;
  constexpr double t_max = 6.5;
  const double width = hi - lo;
  std::size_t evals = 0;

  auto node_sum = [&](double t) {
    const double s = half_pi * std::sinh(t);
    // u = (1 + tanh s)/2 and 1-u computed separately for accuracy.
    const double e = std::exp(-2.0 * std::abs(s));
    const double small = e / (1.0 + e);
    const double big = 1.0 / (1.0 + e);
    const double w = std::numbers::pi * std::cosh(t) * small * big;
    const double x = s < 0.0 ? lo + width * small : hi - width * small;
    if (!(x > lo && x < hi) || w == 0.0) return 0.0;
    ++evals;
    const double fx = f(x);
    return w * fx;
  };

  double h = 1.0;
  double sum = node_sum(0.0);
  for (double t = h; t <= t_max; t += h) sum += node_sum(t) + node_sum(-t);
  double estimate = width * h * sum;
  const std::size_t max_level = std::min<std::size_t>(opts.adaptive_max_depth, 12);
  double err = std::numeric_limits<double>::infinity();
  for (std::size_t level = 1; level <= max_level; ++level) {
    h /= 2.0;
    double add = 0.0;
    for (double t = h; t <= t_max; t += 2.0 * h) add += node_sum(t) + node_sum(-t);
    sum += add;
    const double next = width * h * sum;
    err = std::abs(next - estimate);
    estimate = next;
    if (!std::isfinite(estimate)) return {estimate, err, evals, false};
    if (level >= 3 && err <= std::max(opts.rel_tol * std::abs(estimate), 1e-300))
      return {estimate, err, evals, true};
  }
  return {estimate, err, evals, false};
}

}  // namespace inchyp
