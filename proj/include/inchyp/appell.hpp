#pragma once

// Incomplete Appell functions
//   F1[a,b,c;d;x,z;y]   = Σ [a,d;y]_{m+n} (b)_m (c)_n xᵐ/m! zⁿ/n!
//   F2[a,b,c;d,e;x,z;y] = Σ (a)_{m+n} [b,d;y]_m [c,e;y]_n xᵐ/m! zⁿ/n!
// and their upper ({·}) counterparts, summed by anti-diagonals m+n = k or
// integrated as Euler integrals (1-D for F1, 2-D for F2).

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "inchyp/core.hpp"
#include "inchyp/gamma.hpp"
#include "inchyp/incomplete_hypergeometric.hpp"
#include "inchyp/quadrature.hpp"
#include "inchyp/series.hpp"

namespace inchyp {

struct AppellF1Params {
  double a = 1.0;
  double b = 1.0;
  double c = 1.0;
  double d = 2.0;
  double x = 0.0;
  double z = 0.0;
  double y = 0.0;
  Variant variant = Variant::lower;

  void validate() const {
    detail::require(a > 0.0, "F1: requires a > 0");
    detail::require(d > a, "F1: requires d > a");
    detail::require(y >= 0.0 && y < 1.0, "F1: cutoff must lie in [0, 1)");
    detail::require(std::max(std::abs(x), std::abs(z)) < 1.0, "F1: requires max(|x|, |z|) < 1");
  }
};

struct AppellF2Params {
  double a = 1.0;
  double b = 1.0;
  double c = 1.0;
  double d = 2.0;
  double e = 2.0;
  double x = 0.0;
  double z = 0.0;
  double y = 0.0;
  Variant variant = Variant::lower;

  void validate() const {
    detail::require(b > 0.0 && d > b, "F2: requires d > b > 0");
    detail::require(c > 0.0 && e > c, "F2: requires e > c > 0");
    detail::require(y >= 0.0 && y < 1.0, "F2: cutoff must lie in [0, 1)");
    detail::require(std::abs(x) + std::abs(z) < 1.0, "F2: requires |x| + |z| < 1");
  }
};

namespace detail {

// Coefficients (λ)_m wᵐ/m!, extended on demand.
class BinomialSeriesCoefficients {
 public:
  BinomialSeriesCoefficients(double lambda, double w) : lambda_(lambda), w_(w), c_{1.0} {}

  double operator[](std::size_t m) {
    while (c_.size() <= m) {
      const double k = static_cast<double>(c_.size() - 1);
      c_.push_back(c_.back() * (lambda_ + k) / (k + 1.0) * w_);
    }
    return c_[m];
  }

 private:
  double lambda_, w_;
  std::vector<double> c_;
};

// A ratio sequence cached for random access; filled in order.
class CachedRatios {
 public:
  CachedRatios(double b, double c, double y, Variant v, const EvalOptions& opts) : seq_(b, c, y, v, opts) {}

  double operator[](std::size_t n) {
    while (values_.size() <= n) values_.push_back(seq_(values_.size()));
    return values_[n];
  }
  bool ok() const { return seq_.ok(); }

 private:
  RatioSequence seq_;
  std::vector<double> values_;
};

// (p)_m/(q)_m, extended on demand.
class CompleteRatios {
 public:
  CompleteRatios(double p, double q) : p_(p), q_(q), r_{1.0} {}

  double operator[](std::size_t m) {
    while (r_.size() <= m) {
      const double k = static_cast<double>(r_.size() - 1);
      r_.push_back(r_.back() * (p_ + k) / (q_ + k));
    }
    return r_[m];
  }

 private:
  double p_, q_;
  std::vector<double> r_;
};

// Generic F1 diagonal sum: ratio_k · Σ_m (b)_m Xᵐ/m! (c)_{k-m} Z^{k-m}/(k-m)!.
template <typename Ratio>
EvalResult f1_diagonal_series(Ratio&& ratio, double b, double c, double xs, double zs,
                              const EvalOptions& opts) {
  BinomialSeriesCoefficients bx(b, xs), cz(c, zs);
  return sum_series(
      [&](std::size_t k) {
        const double r = ratio(k);
        if (r == 0.0) return 0.0;
        CompensatedSum s;
        for (std::size_t m = 0; m <= k; ++m) s.add(bx[m] * cz[k - m]);
        return r * s.value();
      },
      opts);
}

// Generic F2 diagonal sum: (a)_k/k! Σ_m C(k,m) Xᵐ Z^{k-m} r1_m r2_{k-m}.
template <typename R1, typename R2>
EvalResult f2_diagonal_series(double a, R1&& r1, R2&& r2, double xs, double zs, const EvalOptions& opts) {
  std::vector<double> log_fact{0.0};
  const double lx = xs != 0.0 ? std::log(std::abs(xs)) : 0.0;
  const double lz = zs != 0.0 ? std::log(std::abs(zs)) : 0.0;
  double ak = 1.0;  // (a)_k / k!
  return sum_series(
      [&](std::size_t k) {
        if (k > 0) {
          const double kk = static_cast<double>(k - 1);
          ak *= (a + kk) / (kk + 1.0);
          log_fact.push_back(log_fact.back() + std::log(static_cast<double>(k)));
        }
        if (ak == 0.0) return 0.0;
        CompensatedSum s;
        for (std::size_t m = 0; m <= k; ++m) {
          const std::size_t n = k - m;
          if ((m > 0 && xs == 0.0) || (n > 0 && zs == 0.0)) continue;
          const double mag = std::exp(log_fact[k] - log_fact[m] - log_fact[n] +
                                      static_cast<double>(m) * lx + static_cast<double>(n) * lz);
          const bool neg = ((m % 2 == 1) && xs < 0.0) != ((n % 2 == 1) && zs < 0.0);
          s.add((neg ? -mag : mag) * r1[m] * r2[n]);
        }
        return ak * s.value();
      },
      opts);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Complete Appell functions (reference values)

/// F1(a,b,c;d;x,z) = Σ (a)_{m+n}/(d)_{m+n} (b)_m (c)_n xᵐ/m! zⁿ/n!, summed by diagonals.
inline EvalResult complete_appell_f1(double a, double b, double c, double d, double x, double z,
                                     const EvalOptions& opts = {}) {
  detail::require(!detail::is_nonpositive_integer(d), "F1: d must not be a nonpositive integer");
  detail::require(std::max(std::abs(x), std::abs(z)) < 1.0, "F1: requires max(|x|, |z|) < 1");
  double pr = 1.0;
  std::size_t next = 0;
  auto ratio = [&](std::size_t k) {
    for (; next < k; ++next) pr *= (a + static_cast<double>(next)) / (d + static_cast<double>(next));
    return pr;
  };
  return detail::f1_diagonal_series(ratio, b, c, x, z, opts);
}

/// F2(a,b,c;d,e;x,z) = Σ (a)_{m+n} (b)_m (c)_n / ((d)_m (e)_n) xᵐ/m! zⁿ/n!.
inline EvalResult complete_appell_f2(double a, double b, double c, double d, double e, double x, double z,
                                     const EvalOptions& opts = {}) {
  detail::require(!detail::is_nonpositive_integer(d) && !detail::is_nonpositive_integer(e),
                  "F2: d and e must not be nonpositive integers");
  detail::require(std::abs(x) + std::abs(z) < 1.0, "F2: requires |x| + |z| < 1");
  detail::CompleteRatios r1(b, d), r2(c, e);
  return detail::f2_diagonal_series(a, r1, r2, x, z, opts);
}

// ---------------------------------------------------------------------------
// Incomplete F1

namespace detail {

inline EvalResult appell_f1_series(const AppellF1Params& p, const EvalOptions& opts) {
  const double ye = effective_cutoff(p.variant, p.y);
  require(std::max(std::abs(p.x), std::abs(p.z)) * ye < 1.0, "F1 series: outside the series radius");
  RatioSequence seq(p.a, p.d, p.y, p.variant, opts);
  auto r = f1_diagonal_series([&](std::size_t k) { return seq(k); }, p.b, p.c, p.x * ye, p.z * ye, opts);
  r.converged = r.converged && seq.ok();
  return r;
}

inline EvalResult appell_f1_integral(const AppellF1Params& p, const EvalOptions& opts) {
  const double lb = log_beta(p.a, p.d - p.a);
  EvalResult r;
  double pre;
  if (p.variant == Variant::lower) {
    // y^a/B ∫ u^{a-1} (1-uy)^{d-a-1} (1-xuy)^{-b} (1-zuy)^{-c} du
    const std::array<LinearPowerFactor, 3> f{
        {{1.0, -p.y, p.d - p.a - 1.0}, {1.0, -p.x * p.y, -p.b}, {1.0, -p.z * p.y, -p.c}}};
    r = euler_integral(p.a - 1.0, 0.0, f, opts);
    pre = std::exp(p.a * std::log(p.y) - lb);
  } else {
    // (1-y)^{d-a}/B ∫ u^{d-a-1} (1-u(1-y))^{a-1} (1-x(1-u(1-y)))^{-b} (1-z(1-u(1-y)))^{-c} du
    const double w = 1.0 - p.y;
    const std::array<LinearPowerFactor, 3> f{
        {{1.0, -w, p.a - 1.0}, {1.0 - p.x, p.x * w, -p.b}, {1.0 - p.z, p.z * w, -p.c}}};
    r = euler_integral(p.d - p.a - 1.0, 0.0, f, opts);
    pre = std::exp((p.d - p.a) * std::log1p(-p.y) - lb);
  }
  r.value *= pre;
  r.abs_err_est *= pre;
  return r;
}

}  // namespace detail

/// Incomplete Appell F1, lower or upper.
///
/// `automatic` picks the series while max(|x|,|z|)·y (lower) or
/// max(|x|,|z|) (upper) is at most 0.95.
inline EvalResult appell_f1(const AppellF1Params& p, Method method = Method::automatic,
                            const EvalOptions& opts = {}) {
  opts.validate();
  p.validate();
  if (p.variant == Variant::lower && p.y == 0.0) return {0.0, 0.0, 0, true};
  if (method == Method::automatic) {
    const double s = std::max(std::abs(p.x), std::abs(p.z)) * detail::effective_cutoff(p.variant, p.y);
    method = s <= 0.95 ? Method::series : Method::integral;
  }
  if (method == Method::series) return detail::appell_f1_series(p, opts);
  return detail::appell_f1_integral(p, opts);
}

// ---------------------------------------------------------------------------
// Incomplete F2

namespace detail {

inline EvalResult appell_f2_series(const AppellF2Params& p, Variant vx, Variant vz,
                                    const EvalOptions& opts) {
  const double yx = effective_cutoff(vx, p.y);
  const double yz = effective_cutoff(vz, p.y);
  require(std::abs(p.x) * yx + std::abs(p.z) * yz < 1.0, "F2 series: outside the series radius");
  CachedRatios r1(p.b, p.d, p.y, vx, opts);
  CachedRatios r2(p.c, p.e, p.y, vz, opts);
  auto r = f2_diagonal_series(p.a, r1, r2, p.x * yx, p.z * yz, opts);
  r.converged = r.converged && r1.ok() && r2.ok();
  return r;
}

// One axis of a product Euler integral: u^p (1-u)^q (own factor).
struct ProductAxis {
  double p = 0.0;
  double q = 0.0;
  double scale = 1.0;
  bool has_own = false;
  LinearPowerFactor own{1.0, 0.0, 0.0};
  SingularityGaps gaps;
};

inline ProductAxis make_axis(double p, LinearPowerFactor own) {
  ProductAxis ax;
  ax.p = p;
  if (own.exponent == 0.0 || own.c1 == 0.0) {
    ax.scale = std::pow(own.c0, own.exponent);
  } else if (own.c0 + own.c1 == 0.0) {
    ax.q += own.exponent;
    ax.scale = std::pow(own.c0, own.exponent);
  } else {
    require(own.c0 > 0.0 && own.c0 + own.c1 > 0.0, "F2 integral: axis factor vanishes on [0, 1]");
    note_linear_root(own.c0, own.c1, ax.gaps);
    ax.has_own = true;
    ax.own = own;
  }
  require(ax.p > -1.0 && ax.q > -1.0, "F2 integral: non-integrable endpoint power");
  return ax;
}

// ∫∫ u^pu (1-u)^qu own_u(u) v^pv (1-v)^qv own_v(v) (j0 + ju u + jv v)^ja du dv
inline EvalResult product_euler_integral(ProductAxis au, ProductAxis av, double j0, double ju, double jv,
                                         double ja, const EvalOptions& opts) {
  for (double cu : {0.0, ju})
    for (double cv : {0.0, jv})
      require(j0 + cu + cv > 0.0, "F2 integral: joint factor vanishes on the unit square");
  if (ja != 0.0) {
    note_linear_root(j0 + std::min(0.0, jv), ju, au.gaps);
    note_linear_root(j0 + std::min(0.0, ju), jv, av.gaps);
  }
  auto evaluate = [&](std::size_t n) {
    const auto ru = graded_jacobi_rule(n, au.p, au.q, au.gaps);
    const auto rv = graded_jacobi_rule(n, av.p, av.q, av.gaps);
    std::vector<double> wv(rv.size());
    for (std::size_t j = 0; j < rv.size(); ++j)
      wv[j] = rv.weights[j] * (av.has_own ? av.own(rv.nodes[j]) : 1.0);
    CompensatedSum total;
    for (std::size_t i = 0; i < ru.size(); ++i) {
      const double u = ru.nodes[i];
      const double wu = ru.weights[i] * (au.has_own ? au.own(u) : 1.0);
      const double base = j0 + ju * u;
      double row = 0.0;
      for (std::size_t j = 0; j < rv.size(); ++j) row += wv[j] * std::pow(base + jv * rv.nodes[j], ja);
      total.add(wu * row);
    }
    return std::pair<double, std::size_t>{total.value(), ru.size() * rv.size()};
  };
  const std::size_t n = opts.quad_nodes;
  const auto [fine, nf] = evaluate(n);
  const auto [coarse, nc] = evaluate(std::max<std::size_t>(n / 2, 1));
  const double scale = au.scale * av.scale;
  const double err = std::abs(fine - coarse) * std::abs(scale);
  const double value = fine * scale;
  const bool ok = std::isfinite(value) && err <= std::max(opts.rel_tol * std::abs(value), 1e-300);
  return {value, err, nf + nc, ok};
}

inline EvalResult appell_f2_integral(const AppellF2Params& p, const EvalOptions& opts) {
  const double lb = log_beta(p.b, p.d - p.b) + log_beta(p.c, p.e - p.c);
  EvalResult r;
  double pre;
  if (p.variant == Variant::lower) {
    // y^{b+c}/(B1 B2) ∫∫ u^{b-1}(1-uy)^{d-b-1} v^{c-1}(1-vy)^{e-c-1} (1-xuy-zvy)^{-a}
    const auto au = make_axis(p.b - 1.0, {1.0, -p.y, p.d - p.b - 1.0});
    const auto av = make_axis(p.c - 1.0, {1.0, -p.y, p.e - p.c - 1.0});
    r = product_euler_integral(au, av, 1.0, -p.x * p.y, -p.z * p.y, -p.a, opts);
    pre = std::exp((p.b + p.c) * std::log(p.y) - lb);
  } else {
    // (1-y)^{d-b+e-c}/(B1 B2) ∫∫ u^{d-b-1}(1-u(1-y))^{b-1} v^{e-c-1}(1-v(1-y))^{c-1}
    //   (1 - x(1-u(1-y)) - z(1-v(1-y)))^{-a}
    const double w = 1.0 - p.y;
    const auto au = make_axis(p.d - p.b - 1.0, {1.0, -w, p.b - 1.0});
    const auto av = make_axis(p.e - p.c - 1.0, {1.0, -w, p.c - 1.0});
    r = product_euler_integral(au, av, 1.0 - p.x - p.z, p.x * w, p.z * w, -p.a, opts);
    pre = std::exp((p.d - p.b + p.e - p.c) * std::log1p(-p.y) - lb);
  }
  r.value *= pre;
  r.abs_err_est *= pre;
  return r;
}

}  // namespace detail

/// Incomplete Appell F2, lower or upper.
///
/// `automatic` picks the series while (|x|+|z|)·y (lower) or |x|+|z|
/// (upper) is at most 0.95.
inline EvalResult appell_f2(const AppellF2Params& p, Method method = Method::automatic,
                            const EvalOptions& opts = {}) {
  opts.validate();
  p.validate();
  if (p.variant == Variant::lower && p.y == 0.0) return {0.0, 0.0, 0, true};
  if (method == Method::automatic) {
    const double s = (std::abs(p.x) + std::abs(p.z)) * detail::effective_cutoff(p.variant, p.y);
    method = s <= 0.95 ? Method::series : Method::integral;
  }
  if (method == Method::series) return detail::appell_f2_series(p, p.variant, p.variant, opts);
  return detail::appell_f2_integral(p, opts);
}

/// F2 series with the x-ratio [b,d;y]_m and z-ratio [c,e;y]_n chosen
/// independently (p.variant is ignored). The four combinations sum to the
/// complete F2, since each factor splits on its own.
inline EvalResult appell_f2_mixed(const AppellF2Params& p, Variant vx, Variant vz,
                                  const EvalOptions& opts = {}) {
  opts.validate();
  p.validate();
  if (p.y == 0.0 && (vx == Variant::lower || vz == Variant::lower)) return {0.0, 0.0, 0, true};
  return detail::appell_f2_series(p, vx, vz, opts);
}

}  // namespace inchyp
