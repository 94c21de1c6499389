#pragma once

// Identity-verification suites. Each suite draws a seeded parameter grid,
// evaluates a residual per case (in parallel, order preserved) and reports
// the worst case against the suite tolerance.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "inchyp/appell.hpp"
#include "inchyp/core.hpp"
#include "inchyp/fracderiv.hpp"
#include "inchyp/generating.hpp"
#include "inchyp/hypergeometric.hpp"
#include "inchyp/incomplete_beta.hpp"
#include "inchyp/incomplete_hypergeometric.hpp"
#include "inchyp/parallel.hpp"
#include "inchyp/pochhammer_ratio.hpp"

namespace inchyp::verify {

inline constexpr std::uint64_t kDefaultSeed = 20240517;

/// Seeded uniform draws; 53 random bits per double.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  std::uint64_t integer(std::uint64_t lo, std::uint64_t hi) { return lo + eng_() % (hi - lo + 1); }
  bool coin() { return (eng_() >> 63) != 0; }

 private:
  std::mt19937_64 eng_;
};

using NamedValues = std::vector<std::pair<std::string, double>>;

struct Config {
  std::uint64_t seed = kDefaultSeed;
  std::optional<double> tolerance;  // overrides the suite default
  EvalOptions opts;
  std::size_t threads = 1;
};

struct Report {
  std::string suite;
  std::size_t cases = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool report_only = false;
  std::uint64_t seed = 0;
  double wall_time_s = 0.0;
  NamedValues worst_case;
  NamedValues extras;  // per-suite maxima, e.g. tail bounds
};

/// A residual plus optional named quantities whose maxima are reported.
struct Outcome {
  double residual = 0.0;
  NamedValues extras;
};

/// |a - b| / max(|a|, |b|), zero when both vanish.
inline double rel_diff(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

namespace detail {

struct Case {
  NamedValues params;
  std::function<Outcome()> eval;
};

inline double param(const NamedValues& p, const std::string& name) {
  for (const auto& [k, v] : p)
    if (k == name) return v;
  throw std::out_of_range("missing parameter " + name);
}

inline double variant_code(Variant v) { return v == Variant::lower ? 0.0 : 1.0; }

inline Report run_cases(const std::string& name, double default_tol, bool report_only,
                        std::vector<Case> cases, const Config& cfg) {
  const auto start = std::chrono::steady_clock::now();
  auto outcomes = parallel_map<Outcome>(
      cases.size(), [&](std::size_t i) { return cases[i].eval(); }, cfg.threads);
  Report r;
  r.suite = name;
  r.cases = cases.size();
  r.tolerance = cfg.tolerance.value_or(default_tol);
  r.report_only = report_only;
  r.seed = cfg.seed;
  std::map<std::string, double> extra_max;
  std::vector<std::string> extra_order;
  std::size_t worst = 0;
  bool finite = true;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const double res = outcomes[i].residual;
    if (!std::isfinite(res)) {
      finite = false;
      worst = i;
      r.max_residual = res;
    } else if (finite && res > r.max_residual) {
      r.max_residual = res;
      worst = i;
    }
    for (const auto& [k, v] : outcomes[i].extras) {
      auto it = extra_max.find(k);
      if (it == extra_max.end()) {
        extra_max.emplace(k, v);
        extra_order.push_back(k);
      } else {
        it->second = std::max(it->second, v);
      }
    }
  }
  if (!cases.empty()) r.worst_case = cases[worst].params;
  for (const auto& k : extra_order) r.extras.emplace_back(k, extra_max[k]);
  r.pass = finite && r.max_residual <= r.tolerance;
  r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// ---------------------------------------------------------------------------
// Suites

inline Report beta_decomposition(const Config& cfg) {
  Rng rng(cfg.seed);
  std::vector<Case> cases;
  const auto opts = cfg.opts;
  for (int i = 0; i < 500; ++i) {
    const double x = rng.uniform(0.2, 10.0), z = rng.uniform(0.2, 10.0), y = rng.uniform(0.02, 0.98);
    cases.push_back({{{"x", x}, {"z", z}, {"y", y}}, [=] {
                       const double lo = incomplete_beta_quadrature(y, x, z, opts).value;
                       const double up = incomplete_beta_quadrature(1.0 - y, z, x, opts).value;
                       const double b = beta(x, z);
                       const double decomposition = std::abs(lo + up - b) / b;
                       const double cf = rel_diff(incomplete_beta(y, x, z, opts), lo);
                       return Outcome{std::max(decomposition, cf),
                                      {{"decomposition", decomposition}, {"continued_fraction_vs_quadrature", cf}}};
                     }});
  }
  return run_cases("beta-decomposition", 1e-11, false, std::move(cases), cfg);
}

struct RatioCase {
  double b, c;
  std::uint64_t n;
  double y;
};

inline std::vector<RatioCase> ratio_grid(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<RatioCase> g;
  for (int i = 0; i < 100; ++i) {
    const double b = rng.uniform(0.05, 5.0);
    const double c = b + rng.uniform(0.05, 5.0);
    const auto n = rng.integer(0, 20);
    const double y = rng.uniform(0.05, 0.95);
    g.push_back({b, c, n, y});
  }
  return g;
}

inline NamedValues ratio_params(const RatioCase& r) {
  return {{"b", r.b}, {"c", r.c}, {"n", static_cast<double>(r.n)}, {"y", r.y}};
}

inline Report ratio_decomposition(const Config& cfg) {
  std::vector<Case> cases;
  const auto opts = cfg.opts;
  for (const auto& rc : ratio_grid(cfg.seed)) {
    cases.push_back({ratio_params(rc), [=] {
                       const double p = pochhammer_ratio(rc.b, rc.c, rc.n);
                       const double direct = std::abs(decomposition_residual(rc.b, rc.c, rc.n, rc.y, opts)) / p;
                       const double lo = ratio_via_2f1({rc.b, rc.c, rc.n, rc.y, Variant::lower}, opts).value;
                       const double up = ratio_via_2f1({rc.b, rc.c, rc.n, rc.y, Variant::upper}, opts).value;
                       const double via = std::abs(lo + up - p) / p;
                       return Outcome{std::max(direct, via), {{"beta_path", direct}, {"hypergeometric_path", via}}};
                     }});
  }
  return run_cases("ratio-decomposition", 1e-10, false, std::move(cases), cfg);
}

inline Report ratio_paths(const Config& cfg) {
  std::vector<Case> cases;
  const auto opts = cfg.opts;
  for (const auto& rc : ratio_grid(cfg.seed)) {
    cases.push_back({ratio_params(rc), [=] {
                       double worst = 0.0;
                       for (Variant v : {Variant::lower, Variant::upper}) {
                         const RatioSpec s{rc.b, rc.c, rc.n, rc.y, v};
                         worst = std::max(worst, rel_diff(ratio(s, opts).value, ratio_via_2f1(s, opts).value));
                       }
                       return Outcome{worst, {}};
                     }});
  }
  return run_cases("ratio-paths", 1e-10, false, std::move(cases), cfg);
}

inline Report ratio_derivative(const Config& cfg) {
  std::vector<Case> cases;
  const auto opts = cfg.opts;
  auto add = [&](RatioSpec s) {
    const double h = s.n == 1 ? 1e-4 : 1e-3;
    NamedValues p = ratio_params({s.b, s.c, s.n, s.y});
    p.emplace_back("variant", variant_code(s.variant));
    p.emplace_back("h", h);
    cases.push_back({p, [=] {
                       const auto d = derivative_identity_residual(s, h, opts);
                       return Outcome{std::abs(d.residual), {{"roundoff_estimate", d.roundoff}}};
                     }});
  };
  add({1.5, 3.0, 1, 0.5, Variant::lower});
  add({2.0, 5.0, 2, 0.4, Variant::lower});
  add({1.2, 4.8, 1, 0.6, Variant::upper});
  for (double b : {0.8, 1.5, 2.5})
    for (double cmb : {2.5, 4.0})
      for (std::uint64_t n : {1u, 2u})
        for (double y : {0.3, 0.6})
          for (Variant v : {Variant::lower, Variant::upper}) add({b, b + cmb, n, y, v});
  return run_cases("ratio-derivative", 1e-5, false, std::move(cases), cfg);
}

inline Report decomposition_2f1(const Config& cfg) {
  Rng rng(cfg.seed);
  std::vector<Case> cases;
  const auto opts = cfg.opts;
  for (int i = 0; i < 200; ++i) {
    const double a = rng.uniform(0.1, 3.0), b = rng.uniform(0.1, 4.0), c = b + rng.uniform(0.1, 4.0);
    const double x = rng.uniform(-0.9, 0.9), y = rng.uniform(0.05, 0.95);
    cases.push_back({{{"a", a}, {"b", b}, {"c", c}, {"x", x}, {"y", y}}, [=] {
                       const double lo = ihyp_2f1({a, b, c, y, x, Variant::lower}, Method::automatic, opts).value;
                       const double up = ihyp_2f1({a, b, c, y, x, Variant::upper}, Method::automatic, opts).value;
                       return Outcome{rel_diff(lo + up, complete_2f1(a, b, c, x, opts).value), {}};
                     }});
  }
  return run_cases("decomposition-2f1", 1e-10, false, std::move(cases), cfg);
}

inline Report decomposition_1f1(const Config& cfg) {
  Rng rng(cfg.seed);
  std::vector<Case> cases;
  const auto opts = cfg.opts;
  for (int i = 0; i < 200; ++i) {
    const double a = rng.uniform(0.1, 5.0), b = a + rng.uniform(0.1, 5.0);
    const double x = rng.uniform(-5.0, 5.0), y = rng.uniform(0.05, 0.95);
    cases.push_back({{{"a", a}, {"b", b}, {"x", x}, {"y", y}}, [=] {
                       const double lo = ihyp_1f1({a, b, y, x, Variant::lower}, Method::automatic, opts).value;
                       const double up = ihyp_1f1({a, b, y, x, Variant::upper}, Method::automatic, opts).value;
                       return Outcome{rel_diff(lo + up, complete_1f1(a, b, x, opts).value), {}};
                     }});
  }
  return run_cases("decomposition-1f1", 1e-10, false, std::move(cases), cfg);
}

inline Report dual_path(const Config& cfg) {
  Rng rng(cfg.seed);
  std::vector<Case> cases;
  const auto opts = cfg.opts;
  for (int i = 0; i < 100; ++i) {
    const double a = rng.uniform(0.1, 3.0), b = rng.uniform(0.1, 4.0), c = b + rng.uniform(0.1, 4.0);
    const double x = rng.uniform(-0.9, 0.9), y = rng.uniform(0.05, 0.95);
    const Variant v = i % 2 == 0 ? Variant::lower : Variant::upper;
    cases.push_back({{{"kind", 2.0}, {"a", a}, {"b", b}, {"c", c}, {"x", x}, {"y", y}, {"variant", variant_code(v)}},
                     [=] {
                       const Hyp2F1Params p{a, b, c, y, x, v};
                       const double d = rel_diff(ihyp_2f1(p, Method::series, opts).value,
                                                 ihyp_2f1(p, Method::integral, opts).value);
                       return Outcome{d, {{"two_f1", d}}};
                     }});
  }
  for (int i = 0; i < 100; ++i) {
    const double a = rng.uniform(0.1, 5.0), b = a + rng.uniform(0.1, 5.0);
    const double x = rng.uniform(-5.0, 5.0), y = rng.uniform(0.05, 0.95);
    const Variant v = i % 2 == 0 ? Variant::lower : Variant::upper;
    cases.push_back({{{"kind", 1.0}, {"a", a}, {"b", b}, {"x", x}, {"y", y}, {"variant", variant_code(v)}}, [=] {
                       const Hyp1F1Params p{a, b, y, x, v};
                       const double d = rel_diff(ihyp_1f1(p, Method::series, opts).value,
                                                 ihyp_1f1(p, Method::integral, opts).value);
                       return Outcome{d, {{"one_f1", d}}};
                     }});
  }
  return run_cases("dual-path", 1e-9, false, std::move(cases), cfg);
}

inline Report closed_forms(const Config& cfg) {
  Rng rng(cfg.seed);
  std::vector<Case> cases;
  const auto opts = cfg.opts;
  for (int i = 0; i < 20; ++i) {
    const double sign = rng.coin() ? 1.0 : -1.0;
    const double x = sign * rng.uniform(0.05, 0.9);
    const double xk = sign * rng.uniform(0.05, 5.0);
    const double y = rng.uniform(0.05, 0.95);
    cases.push_back({{{"x", x}, {"x_kummer", xk}, {"y", y}}, [=] {
                       const double f21 = ihyp_2f1({1.0, 1.0, 2.0, y, x, Variant::lower}, Method::automatic, opts).value;
                       const double f11 = ihyp_1f1({1.0, 2.0, y, xk, Variant::lower}, Method::automatic, opts).value;
                       const double r21 = rel_diff(f21, -std::log1p(-x * y) / x);
                       const double r11 = rel_diff(f11, std::expm1(xk * y) / xk);
                       return Outcome{std::max(r21, r11), {{"two_f1", r21}, {"one_f1", r11}}};
                     }});
  }
  return run_cases("closed-forms", 1e-10, false, std::move(cases), cfg);
}

inline Report gauss_value(const Config& cfg) {
  Rng rng(cfg.seed);
  std::vector<Case> cases;
  const auto opts = cfg.opts;
  auto add = [&](double a, double b, double c, double y, Variant v, std::optional<double> exact) {
    cases.push_back({{{"a", a}, {"b", b}, {"c", c}, {"y", y}, {"variant", variant_code(v)}}, [=] {
                       const double closed = ihyp_2f1_at_one(v, a, b, c, y, opts).value;
                       const double s = c - a - b;
                       const double lb = log_beta(b, c - b);
                       const double quad = v == Variant::lower
                                               ? incomplete_beta_quadrature(y, b, s, opts).value * std::exp(-lb)
                                               : incomplete_beta_quadrature(1.0 - y, s, b, opts).value * std::exp(-lb);
                       double r = rel_diff(closed, quad);
                       if (exact) r = std::max(r, rel_diff(closed, *exact));
                       return Outcome{r, {}};
                     }});
  };
  add(1.0, 1.0, 3.0, 0.3, Variant::lower, 0.6);
  add(1.0, 1.0, 3.0, 0.3, Variant::upper, 1.4);
  for (double y : {0.1, 0.5, 0.9}) add(1.0, 1.0, 3.0, y, Variant::lower, 2.0 * y);
  for (int i = 0; i < 60; ++i) {
    const double a = rng.uniform(-1.0, 2.0), b = rng.uniform(0.2, 3.0);
    const double s = std::max(rng.uniform(0.2, 3.0), 0.2 - a);
    const double y = rng.uniform(0.05, 0.95);
    add(a, b, a + b + s, y, i % 2 == 0 ? Variant::lower : Variant::upper, std::nullopt);
  }
  return run_cases("gauss-value", 1e-8, false, std::move(cases), cfg);
}

inline Report transformations(const Config& cfg) {
  Rng rng(cfg.seed);
  std::vector<Case> cases;
  const auto opts = cfg.opts;
  for (TransformKind k : {TransformKind::pf_lower, TransformKind::pf_upper, TransformKind::kummer_upper,
                          TransformKind::kummer_lower}) {
    const bool pf = k == TransformKind::pf_lower || k == TransformKind::pf_upper;
    for (int i = 0; i < 50; ++i) {
      TransformParams p;
      p.alpha = rng.uniform(0.1, pf ? 3.0 : 4.0);
      p.beta = pf ? rng.uniform(0.1, 4.0) : p.alpha + rng.uniform(0.1, 4.0);
      p.gamma = pf ? p.beta + rng.uniform(0.1, 4.0) : 0.0;
      p.y = rng.uniform(0.05, 0.95);
      p.z = pf ? rng.uniform(-0.9, 0.9) : rng.uniform(-5.0, 5.0);
      const double code = static_cast<double>(static_cast<int>(k));
      cases.push_back({{{"kind", code}, {"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma}, {"y", p.y}, {"z", p.z}},
                       [=] {
                         const double d = rel_diff(transform_lhs(k, p, opts).value, transform(k, p, opts).value);
                         return Outcome{d, {{std::string(to_string(k)), d}}};
                       }});
    }
  }
  // Round trips: Pfaff lower then Pfaff upper, Kummer lower then Kummer upper.
  for (int i = 0; i < 50; ++i) {
    TransformParams p{rng.uniform(0.1, 3.0), rng.uniform(0.1, 4.0), 0.0, rng.uniform(0.05, 0.95),
                      rng.uniform(-0.9, 0.9)};
    p.gamma = p.beta + rng.uniform(0.1, 4.0);
    cases.push_back({{{"kind", 4.0}, {"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma}, {"y", p.y}, {"z", p.z}},
                     [=] {
                       const double w = p.z / (p.z - 1.0);
                       const TransformParams q{p.alpha, p.gamma - p.beta, p.gamma, 1.0 - p.y, w};
                       const double back =
                           std::pow(1.0 - p.z, -p.alpha) * transform(TransformKind::pf_upper, q, opts).value;
                       const double d = rel_diff(transform_lhs(TransformKind::pf_lower, p, opts).value, back);
                       return Outcome{d, {{"round_trip_pfaff", d}}};
                     }});
  }
  for (int i = 0; i < 50; ++i) {
    TransformParams p{rng.uniform(0.1, 4.0), 0.0, 0.0, rng.uniform(0.05, 0.95), rng.uniform(-5.0, 5.0)};
    p.beta = p.alpha + rng.uniform(0.1, 4.0);
    cases.push_back({{{"kind", 5.0}, {"alpha", p.alpha}, {"beta", p.beta}, {"y", p.y}, {"z", p.z}}, [=] {
                       const TransformParams q{p.beta - p.alpha, p.beta, 0.0, 1.0 - p.y, -p.z};
                       const double back = std::exp(p.z) * transform(TransformKind::kummer_upper, q, opts).value;
                       const double d = rel_diff(transform_lhs(TransformKind::kummer_lower, p, opts).value, back);
                       return Outcome{d, {{"round_trip_kummer", d}}};
                     }});
  }
  return run_cases("transformations", 1e-9, false, std::move(cases), cfg);
}

inline Report derivative_shift_suite(const Config& cfg) {
  Rng rng(cfg.seed);
  std::vector<Case> cases;
  const auto opts = cfg.opts;
  auto step = [](std::uint64_t n) { return n == 1 ? 1e-3 : 1e-2; };
  cases.push_back({{{"kind", 2.0}, {"a", 1.0}, {"b", 1.0}, {"c", 2.0}, {"x", 0.2}, {"y", 0.5}, {"n", 1.0}}, [=] {
                     const Hyp2F1Params p{1.0, 1.0, 2.0, 0.5, 0.2, Variant::lower};
                     return Outcome{std::abs(derivative_shift_residual(p, 1, step(1), opts)), {}};
                   }});
  for (int i = 0; i < 40; ++i) {
    const double a = rng.uniform(0.1, 2.0), b = rng.uniform(0.1, 3.0), c = b + rng.uniform(0.1, 3.0);
    const double x = rng.uniform(-0.5, 0.5), y = rng.uniform(0.1, 0.9);
    const std::uint64_t n = 1 + static_cast<std::uint64_t>(i % 2);
    const Variant v = (i / 2) % 2 == 0 ? Variant::lower : Variant::upper;
    cases.push_back({{{"kind", 2.0}, {"a", a}, {"b", b}, {"c", c}, {"x", x}, {"y", y}, {"n", static_cast<double>(n)},
                      {"variant", variant_code(v)}},
                     [=] {
                       const Hyp2F1Params p{a, b, c, y, x, v};
                       return Outcome{std::abs(derivative_shift_residual(p, n, step(n), opts)), {}};
                     }});
  }
  for (int i = 0; i < 40; ++i) {
    const double a = rng.uniform(0.1, 3.0), b = a + rng.uniform(0.1, 3.0);
    const double x = rng.uniform(-2.0, 2.0), y = rng.uniform(0.1, 0.9);
    const std::uint64_t n = 1 + static_cast<std::uint64_t>(i % 2);
    const Variant v = (i / 2) % 2 == 0 ? Variant::lower : Variant::upper;
    cases.push_back({{{"kind", 1.0}, {"a", a}, {"b", b}, {"x", x}, {"y", y}, {"n", static_cast<double>(n)},
                      {"variant", variant_code(v)}},
                     [=] {
                       const Hyp1F1Params p{a, b, y, x, v};
                       return Outcome{std::abs(derivative_shift_residual(p, n, step(n), opts)), {}};
                     }});
  }
  return run_cases("derivative-shift", 1e-6, false, std::move(cases), cfg);
}

inline Report y_moment_suite(const Config& cfg) {
  std::vector<Case> cases;
  const auto opts = cfg.opts;
  auto add = [&](MomentKind kind, std::uint64_t k, double a, double b, double c, double x,
                 std::optional<double> exact_lhs) {
    const double code = static_cast<double>(static_cast<int>(kind));
    cases.push_back({{{"kind", code}, {"k", static_cast<double>(k)}, {"a", a}, {"b", b}, {"c", c}, {"x", x}},
                     [=] {
                       const auto m = y_moment_residual(kind, k, a, b, c, x, opts);
                       double r = std::abs(m.residual);
                       if (exact_lhs) r = std::max(r, std::abs(m.lhs - *exact_lhs));
                       Outcome o{r, {{"residual_" + std::string(to_string(kind)), r}}};
                       if (kind == MomentKind::raised_c)
                         o.extras.emplace_back("raised_c_integration_by_parts_form", std::abs(m.lhs - m.rhs_integration_by_parts));
                       return o;
                     }});
  };
  add(MomentKind::raised_c, 1, 1.0, 1.0, 2.0, 0.5, 0.6137056388801094);
  add(MomentKind::raised_c_unit, 1, 1.0, 1.0, 2.0, 0.5, std::nullopt);
  const std::vector<std::array<double, 4>> sets{{0.7, 1.3, 5.1, 0.4}, {1.5, 0.6, 4.2, -0.5}, {0.5, 2.0, 6.5, 0.7}};
  for (const auto& s : sets) {
    for (std::uint64_t k : {1u, 2u, 3u}) {
      add(MomentKind::lowered_c, k, s[0], s[1], s[2], s[3], std::nullopt);
      add(MomentKind::raised_c, k, s[0], s[1], s[2], s[3], std::nullopt);
    }
    add(MomentKind::lowered_c_unit, 1, s[0], s[1], s[2], s[3], std::nullopt);
    add(MomentKind::raised_c_unit, 1, s[0], s[1], s[2], s[3], std::nullopt);
  }
  // x = 0: pure beta moments.
  add(MomentKind::lowered_c, 2, 1.0, 1.5, 4.0, 0.0, std::nullopt);
  add(MomentKind::raised_c, 2, 1.0, 1.5, 4.0, 0.0, std::nullopt);
  return run_cases("y-moment", 1e-7, false, std::move(cases), cfg);
}

inline Report difference_relation(const Config& cfg) {
  std::vector<Case> cases;
  const auto opts = cfg.opts;
  auto add = [&](double a, double b, double h, double y, double x) {
    cases.push_back({{{"a", a}, {"b", b}, {"h", h}, {"y", y}, {"x", x}}, [=] {
                       return Outcome{std::abs(difference_relation_residual(a, b, h, y, x, opts)), {}};
                     }});
  };
  add(1.0, 2.0, 2.0, 0.5, 0.3);
  add(0.5, 3.0, 1.5, 0.25, 0.5);
  add(1.0, 2.0, 2.0, 0.5, 0.0);
  for (double a : {0.5, 1.0, 2.0})
    for (double b : {1.5, 2.0, 3.0})
      for (double h : {1.5, 2.0, 3.0})
        for (double y : {0.25, 0.5})
          for (double x : {0.0, 0.3}) add(a, b, h, y, x);
  return run_cases("difference-relation", 1e-8, true, std::move(cases), cfg);
}

inline Report appell_f1_paths(const Config& cfg) {
  Rng rng(cfg.seed);
  std::vector<Case> cases;
  const auto opts = cfg.opts;
  for (int i = 0; i < 60; ++i) {
    AppellF1Params p;
    p.a = rng.uniform(0.1, 3.0);
    p.d = p.a + rng.uniform(0.1, 3.0);
    p.b = rng.uniform(-1.0, 2.0);
    p.c = rng.uniform(-1.0, 2.0);
    p.x = rng.uniform(-0.9, 0.9);
    p.z = rng.uniform(-0.9, 0.9);
    p.y = rng.uniform(0.05, 0.95);
    p.variant = i % 2 == 0 ? Variant::lower : Variant::upper;
    cases.push_back({{{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}, {"x", p.x}, {"z", p.z}, {"y", p.y},
                      {"variant", variant_code(p.variant)}},
                     [=] {
                       return Outcome{rel_diff(appell_f1(p, Method::series, opts).value,
                                               appell_f1(p, Method::integral, opts).value),
                                      {}};
                     }});
  }
  return run_cases("appell-f1-paths", 1e-8, false, std::move(cases), cfg);
}

inline AppellF2Params random_f2(Rng& rng, double radius) {
  AppellF2Params p;
  p.a = rng.uniform(0.1, 3.0);
  p.b = rng.uniform(0.1, 3.0);
  p.d = p.b + rng.uniform(0.1, 3.0);
  p.c = rng.uniform(0.1, 3.0);
  p.e = p.c + rng.uniform(0.1, 3.0);
  p.x = rng.uniform(-radius, radius);
  p.z = rng.uniform(-1.0, 1.0) * (radius - std::abs(p.x));
  p.y = rng.uniform(0.05, 0.95);
  return p;
}

inline NamedValues f2_params(const AppellF2Params& p) {
  return {{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}, {"e", p.e},
          {"x", p.x}, {"z", p.z}, {"y", p.y}, {"variant", variant_code(p.variant)}};
}

inline Report appell_f2_paths(const Config& cfg) {
  Rng rng(cfg.seed);
  std::vector<Case> cases;
  const auto opts = cfg.opts;
  for (int i = 0; i < 40; ++i) {
    auto p = random_f2(rng, 0.9);
    p.variant = i % 2 == 0 ? Variant::lower : Variant::upper;
    cases.push_back({f2_params(p), [=] {
                       return Outcome{rel_diff(appell_f2(p, Method::series, opts).value,
                                               appell_f2(p, Method::integral, opts).value),
                                      {}};
                     }});
  }
  return run_cases("appell-f2-paths", 1e-7, false, std::move(cases), cfg);
}

inline Report appell_reductions(const Config& cfg) {
  Rng rng(cfg.seed);
  std::vector<Case> cases;
  const auto opts = cfg.opts;
  for (int i = 0; i < 40; ++i) {
    const double a = rng.uniform(0.1, 3.0), d = a + rng.uniform(0.1, 3.0);
    const double b = rng.uniform(0.1, 2.0), c = rng.uniform(0.1, 2.0);
    const double x = rng.uniform(-0.9, 0.9), z = rng.uniform(-0.9, 0.9), y = rng.uniform(0.05, 0.95);
    const Variant v = i % 2 == 0 ? Variant::lower : Variant::upper;
    cases.push_back({{{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"x", x}, {"z", z}, {"y", y}, {"variant", variant_code(v)}},
                     [=] {
                       auto f1 = [&](double cc, double xx, double zz) {
                         return appell_f1({a, b, cc, d, xx, zz, y, v}, Method::series, opts).value;
                       };
                       auto g = [&](double aa, double xx) {
                         return ihyp_2f1({aa, a, d, y, xx, v}, Method::series, opts).value;
                       };
                       const double r_z0 = rel_diff(f1(c, x, 0.0), g(b, x));
                       const double r_c0 = rel_diff(f1(0.0, x, z), g(b, x));
                       const double r_xz = rel_diff(f1(c, x, x), g(b + c, x));
                       return Outcome{std::max({r_z0, r_c0, r_xz}),
                                      {{"f1_z0", r_z0}, {"f1_c0", r_c0}, {"f1_x_eq_z", r_xz}}};
                     }});
  }
  for (int i = 0; i < 40; ++i) {
    auto p = random_f2(rng, 0.9);
    p.variant = i % 2 == 0 ? Variant::lower : Variant::upper;
    cases.push_back({f2_params(p), [=] {
                       auto q = p;
                       q.z = 0.0;
                       const double wz = ratio({p.c, p.e, 0, p.y, p.variant}, opts).value;
                       const double r_z0 = rel_diff(appell_f2(q, Method::series, opts).value,
                                                    wz * ihyp_2f1({p.a, p.b, p.d, p.y, p.x, p.variant},
                                                                  Method::series, opts)
                                                             .value);
                       q.x = 0.0;
                       const double wx = ratio({p.b, p.d, 0, p.y, p.variant}, opts).value;
                       const double r_00 = rel_diff(appell_f2(q, Method::series, opts).value, wx * wz);
                       return Outcome{std::max(r_z0, r_00), {{"f2_z0", r_z0}, {"f2_origin", r_00}}};
                     }});
  }
  return run_cases("appell-reductions", 1e-11, false, std::move(cases), cfg);
}

inline Report appell_decomposition(const Config& cfg) {
  Rng rng(cfg.seed);
  std::vector<Case> cases;
  const auto opts = cfg.opts;
  for (int i = 0; i < 40; ++i) {
    AppellF1Params p;
    p.a = rng.uniform(0.1, 3.0);
    p.d = p.a + rng.uniform(0.1, 3.0);
    p.b = rng.uniform(-1.0, 2.0);
    p.c = rng.uniform(-1.0, 2.0);
    p.x = rng.uniform(-0.8, 0.8);
    p.z = rng.uniform(-0.8, 0.8);
    p.y = rng.uniform(0.05, 0.95);
    cases.push_back({{{"kind", 1.0}, {"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}, {"x", p.x}, {"z", p.z}, {"y", p.y}},
                     [=] {
                       auto lo = p, up = p;
                       lo.variant = Variant::lower;
                       up.variant = Variant::upper;
                       const double sum = appell_f1(lo, Method::series, opts).value +
                                          appell_f1(up, Method::series, opts).value;
                       const double d = rel_diff(sum, complete_appell_f1(p.a, p.b, p.c, p.d, p.x, p.z, opts).value);
                       return Outcome{d, {{"f1", d}}};
                     }});
  }
  for (int i = 0; i < 40; ++i) {
    const auto p = random_f2(rng, 0.8);
    cases.push_back({f2_params(p), [=] {
                       inchyp::detail::CompensatedSum sum;
                       for (Variant vx : {Variant::lower, Variant::upper})
                         for (Variant vz : {Variant::lower, Variant::upper})
                           sum.add(appell_f2_mixed(p, vx, vz, opts).value);
                       const double d =
                           rel_diff(sum.value(), complete_appell_f2(p.a, p.b, p.c, p.d, p.e, p.x, p.z, opts).value);
                       return Outcome{d, {{"f2_four_way", d}}};
                     }});
  }
  return run_cases("appell-decomposition", 1e-9, false, std::move(cases), cfg);
}

inline Report fracderiv_power(const Config& cfg) {
  Rng rng(cfg.seed);
  std::vector<Case> cases;
  const auto opts = cfg.opts;
  auto add = [&](double lambda, FracOpSpec s) {
    cases.push_back({{{"lambda", lambda}, {"mu", s.mu}, {"y", s.y}, {"z", s.z}, {"variant", variant_code(s.variant)}},
                     [=] {
                       const double numeric = ifrac([&](double t) { return std::pow(t, lambda); }, s, opts).value;
                       return Outcome{rel_diff(numeric, ifrac_power(s.variant, lambda, s, opts).value), {}};
                     }});
  };
  for (double lambda : {0.0, 0.5, 1.0, 2.3}) {
    add(lambda, {-0.7, 0.0, 1.5, Variant::upper});
    for (int i = 0; i < 10; ++i) {
      const FracOpSpec s{rng.uniform(-3.0, -0.1), rng.uniform(0.0, 0.95), rng.uniform(0.1, 3.0),
                         i % 2 == 0 ? Variant::lower : Variant::upper};
      add(lambda, s);
    }
  }
  return run_cases("fracderiv-power", 1e-9, false, std::move(cases), cfg);
}

inline Report fracderiv_decomposition(const Config& cfg) {
  Rng rng(cfg.seed);
  std::vector<Case> cases;
  const auto opts = cfg.opts;
  for (int i = 0; i < 30; ++i) {
    const std::array<double, 4> coef{rng.uniform(0.1, 1.0), rng.uniform(0.1, 1.0), rng.uniform(0.1, 1.0),
                                     rng.uniform(0.1, 1.0)};
    const double mu = rng.uniform(-3.0, -0.1), y = i == 0 ? 0.0 : rng.uniform(0.0, 0.95), z = rng.uniform(0.1, 3.0);
    cases.push_back({{{"c0", coef[0]}, {"c1", coef[1]}, {"c2", coef[2]}, {"c3", coef[3]}, {"mu", mu}, {"y", y}, {"z", z}},
                     [=] {
                       auto f = [&](double t) { return coef[0] + t * (coef[1] + t * (coef[2] + t * coef[3])); };
                       const double lo = ifrac(f, {mu, y, z, Variant::lower}, opts).value;
                       const double up = ifrac(f, {mu, y, z, Variant::upper}, opts).value;
                       return Outcome{rel_diff(lo + up, classical_rl(f, mu, z, opts).value), {}};
                     }});
  }
  return run_cases("fracderiv-decomposition", 1e-8, false, std::move(cases), cfg);
}

inline Report fracderiv_closed_forms(const Config& cfg) {
  Rng rng(cfg.seed);
  std::vector<Case> cases;
  const auto opts = cfg.opts;
  auto add = [&](ClosedFormKind k, Variant v, ClosedFormParams p) {
    cases.push_back({{{"kind", static_cast<double>(static_cast<int>(k))}, {"variant", variant_code(v)},
                      {"lambda", p.lambda}, {"mu", p.mu}, {"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma},
                      {"a", p.a}, {"b", p.b}, {"tau", p.tau}, {"y", p.y}, {"z", p.z}},
                     [=] {
                       const auto c = closed_form_residual(k, v, p, opts);
                       Outcome o{std::abs(c.residual), {{std::string(to_string(k)), std::abs(c.residual)}}};
                       if (k == ClosedFormKind::appell_f2 && v == Variant::upper)
                         o.extras.emplace_back("appell_f2_upper_with_lower_inner", std::abs(c.mixed_inner_residual));
                       return o;
                     }});
  };
  add(ClosedFormKind::two_f1, Variant::lower, {1.0, 2.0, 1.0, 1.0, 2.0, 0.0, 0.0, 0.0, 0.5, 0.5});
  add(ClosedFormKind::appell_f1, Variant::lower, {1.0, 2.0, 0.5, 0.5, 2.0, 0.3, 0.4, 0.0, 0.5, 0.5});
  for (Variant v : {Variant::lower, Variant::upper}) {
    for (int i = 0; i < 5; ++i) {
      ClosedFormParams p;
      p.lambda = rng.uniform(0.3, 2.0);
      p.mu = p.lambda + rng.uniform(0.2, 2.0);
      p.alpha = rng.uniform(0.1, 2.0);
      p.y = rng.uniform(0.05, 0.95);
      p.z = rng.uniform(0.1, 0.9);
      add(ClosedFormKind::two_f1, v, p);
    }
    for (int i = 0; i < 5; ++i) {
      ClosedFormParams p;
      p.lambda = rng.uniform(0.3, 2.0);
      p.mu = p.lambda + rng.uniform(0.2, 2.0);
      p.alpha = rng.uniform(0.1, 2.0);
      p.beta = rng.uniform(0.1, 2.0);
      p.a = rng.uniform(-0.9, 0.9);
      p.b = rng.uniform(-0.9, 0.9);
      p.y = rng.uniform(0.05, 0.95);
      p.z = rng.uniform(0.1, 0.9);
      add(ClosedFormKind::appell_f1, v, p);
    }
    for (int i = 0; i < 3; ++i) {
      ClosedFormParams p;
      p.lambda = rng.uniform(0.3, 1.5);
      p.mu = p.lambda + rng.uniform(0.2, 2.0);
      p.alpha = rng.uniform(0.2, 1.5);
      p.beta = rng.uniform(0.2, 1.5);
      p.gamma = p.beta + rng.uniform(0.2, 2.0);
      p.z = rng.uniform(0.1, 0.5);
      p.tau = rng.uniform(0.0, 0.85 - p.z);
      p.y = rng.uniform(0.05, 0.95);
      add(ClosedFormKind::appell_f2, v, p);
    }
  }
  return run_cases("fracderiv-closed-forms", 1e-7, false, std::move(cases), cfg);
}

inline Outcome genrel_outcome(const GenRelCheck& c) {
  return {std::max(0.0, c.residual - c.tail_bound),
          {{"max_residual_raw", c.residual}, {"max_tail_bound", c.tail_bound},
           {"max_terms", static_cast<double>(c.terms)}}};
}

inline Report genrel_linear(const Config& cfg) {
  Rng rng(cfg.seed);
  std::vector<Case> cases;
  const auto opts = cfg.opts;
  auto add = [&](LinearRelation k, GenRelSpec s) {
    cases.push_back({{{"kind", k == LinearRelation::shift ? 0.0 : 1.0}, {"variant", variant_code(s.variant)},
                      {"lambda", s.lambda}, {"alpha", s.alpha}, {"beta", s.beta}, {"rho", s.rho}, {"y", s.y},
                      {"z", s.z}, {"t", s.t}, {"N", static_cast<double>(s.terms)}},
                     [=] { return genrel_outcome(genrel_linear_residual(k, s, opts)); }});
  };
  {
    GenRelSpec s;
    s.lambda = 1.0, s.alpha = 1.0, s.beta = 2.0, s.y = 0.5, s.z = 0.3, s.t = 0.0;
    add(LinearRelation::shift, s);
    s.lambda = 1.5, s.beta = 2.5, s.y = 0.4, s.t = 0.15, s.terms = 40;
    add(LinearRelation::shift, s);
    GenRelSpec n;
    n.rho = 2.0, n.lambda = 1.0, n.alpha = 1.2, n.beta = 2.4, n.y = 0.6, n.z = 0.25, n.t = 0.1, n.terms = 40;
    n.variant = Variant::upper;
    add(LinearRelation::negshift, n);
  }
  for (LinearRelation k : {LinearRelation::shift, LinearRelation::negshift}) {
    for (Variant v : {Variant::lower, Variant::upper}) {
      for (int i = 0; i < 15; ++i) {
        GenRelSpec s;
        s.variant = v;
        s.lambda = rng.uniform(0.3, 2.5);
        s.alpha = rng.uniform(0.2, 2.0);
        s.beta = s.alpha + rng.uniform(0.2, 3.0);
        s.rho = rng.uniform(0.2, 3.0);
        s.y = rng.uniform(0.1, 0.9);
        s.z = rng.uniform(-0.5, 0.5);
        s.t = rng.uniform(-0.2, 0.2);
        add(k, s);
      }
    }
  }
  return run_cases("genrel-linear", 1e-7, false, std::move(cases), cfg);
}

inline Report genrel_bilinear(const Config& cfg) {
  Rng rng(cfg.seed);
  std::vector<Case> cases;
  const auto opts = cfg.opts;
  auto add = [&](GenRelSpec s) {
    cases.push_back({{{"variant", variant_code(s.variant)}, {"lambda", s.lambda}, {"alpha", s.alpha},
                      {"beta", s.beta}, {"gamma", s.gamma}, {"delta", s.delta}, {"y", s.y}, {"x", s.x},
                      {"z", s.z}, {"t", s.t}, {"N", static_cast<double>(s.terms)}},
                     [=] { return genrel_outcome(genrel_bilinear_residual(s, opts)); }});
  };
  {
    GenRelSpec s;
    s.lambda = 1.0, s.alpha = 1.0, s.beta = 2.0, s.gamma = 1.0, s.delta = 2.0, s.y = 0.5, s.x = 0.2, s.z = 0.2;
    s.t = 0.0;
    add(s);
    s.variant = Variant::upper;
    add(s);
    s.variant = Variant::lower, s.t = 0.05, s.terms = 30;
    add(s);
  }
  for (Variant v : {Variant::lower, Variant::upper}) {
    for (int i = 0; i < 15; ++i) {
      GenRelSpec s;
      s.variant = v;
      s.lambda = rng.uniform(0.3, 2.0);
      s.alpha = rng.uniform(0.2, 2.0);
      s.beta = s.alpha + rng.uniform(0.2, 3.0);
      s.gamma = rng.uniform(0.2, 2.0);
      s.delta = s.gamma + rng.uniform(0.2, 3.0);
      s.y = rng.uniform(0.1, 0.9);
      s.x = rng.uniform(-0.4, 0.4);
      s.z = rng.uniform(-0.4, 0.4);
      s.t = rng.uniform(-0.1, 0.1);
      add(s);
    }
  }
  return run_cases("genrel-bilinear", 1e-7, false, std::move(cases), cfg);
}

}  // namespace detail

struct SuiteInfo {
  std::string name;
  std::string description;
  bool report_only;
  Report (*run)(const Config&);
};

/// Every registered suite, in the order `verify all` runs them.
inline const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> list{
      {"beta-decomposition", "B_y(x,z) + B_{1-y}(z,x) = B(x,z); continued fraction vs quadrature", false,
       detail::beta_decomposition},
      {"ratio-decomposition", "[b,c;y]_n + {b,c;y}_n = (b)_n/(c)_n by beta and 2F1 paths", false,
       detail::ratio_decomposition},
      {"ratio-paths", "ratio() vs ratio_via_2f1()", false, detail::ratio_paths},
      {"ratio-derivative", "n-th derivative formulas for the ratios (finite differences)", false,
       detail::ratio_derivative},
      {"decomposition-2f1", "lower + upper incomplete 2F1 = 2F1", false, detail::decomposition_2f1},
      {"decomposition-1f1", "lower + upper incomplete 1F1 = 1F1", false, detail::decomposition_1f1},
      {"dual-path", "series vs Euler integral for incomplete 2F1 and 1F1", false, detail::dual_path},
      {"closed-forms", "2F1(1,[1,2;y];x) = -ln(1-xy)/x and 1F1([1,2;y];x) = (e^{xy}-1)/x", false,
       detail::closed_forms},
      {"gauss-value", "incomplete 2F1 at x = 1 vs quadrature", false, detail::gauss_value},
      {"transformations", "Pfaff and Kummer transformations and round trips", false, detail::transformations},
      {"derivative-shift", "x-derivative formulas for incomplete 2F1 and 1F1", false,
       detail::derivative_shift_suite},
      {"y-moment", "moment relations over the cutoff y", false, detail::y_moment_suite},
      {"difference-relation", "difference formula in b and h (report only)", true, detail::difference_relation},
      {"appell-f1-paths", "incomplete F1 series vs 1-D integral", false, detail::appell_f1_paths},
      {"appell-f2-paths", "incomplete F2 series vs 2-D integral", false, detail::appell_f2_paths},
      {"appell-reductions", "F1 and F2 reductions to incomplete 2F1 and ratios", false, detail::appell_reductions},
      {"appell-decomposition", "incomplete Appell variants summing to the complete functions", false,
       detail::appell_decomposition},
      {"fracderiv-power", "incomplete operators on t^lambda vs closed form", false, detail::fracderiv_power},
      {"fracderiv-decomposition", "lower + upper operator = classical operator on polynomials", false,
       detail::fracderiv_decomposition},
      {"fracderiv-closed-forms", "operators producing incomplete 2F1, F1 and F2", false,
       detail::fracderiv_closed_forms},
      {"genrel-linear", "linear generating relations; residual above tail bound", false, detail::genrel_linear},
      {"genrel-bilinear", "bilinear generating relation; residual above tail bound", false,
       detail::genrel_bilinear},
  };
  return list;
}

inline const SuiteInfo* find_suite(const std::string& name) {
  for (const auto& s : suites())
    if (s.name == name) return &s;
  return nullptr;
}

inline Report run_suite(const std::string& name, const Config& cfg) {
  const auto* s = find_suite(name);
  if (s == nullptr) throw std::invalid_argument("unknown suite '" + name + "'");
  return s->run(cfg);
}

}  // namespace inchyp::verify
