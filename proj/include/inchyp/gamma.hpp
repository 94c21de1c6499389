#pragma once

// Gamma, beta and Pochhammer symbols on the real line.

#include <cmath>
#include <cstdint>
#include <limits>

#include "inchyp/core.hpp"

namespace inchyp {

namespace detail {

struct SignedLog {
  double log_abs;
  int sign;  // 0 when the underlying value is exactly zero or a pole
};

// glibc's lgamma writes the global signgam; lgamma_r keeps this reentrant.
inline SignedLog log_abs_gamma(double x) {
#if defined(__GLIBC__)
  int sign = 1;
  const double v = ::lgamma_r(x, &sign);
  return {v, sign};
#else
  const double v = std::lgamma(x);
  int sign = 1;
  if (x < 0.0 && std::fmod(std::floor(x), 2.0) != 0.0) sign = -1;
  return {v, sign};
#endif
}

inline bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

}  // namespace detail

/// ln Γ(x) for x > 0.
inline double log_gamma(double x) {
  detail::require(x > 0.0, "log_gamma: argument must be positive");
  return detail::log_abs_gamma(x).log_abs;
}

/// Γ(x) for any real x that is not a pole.
inline double gamma_fn(double x) {
  detail::require(!detail::is_nonpositive_integer(x), "gamma: pole at nonpositive integer");
  return std::tgamma(x);
}

/// 1/Γ(x); zero at the poles.
inline double reciprocal_gamma(double x) {
  if (detail::is_nonpositive_integer(x)) return 0.0;
  const auto g = detail::log_abs_gamma(x);
  return g.sign * std::exp(-g.log_abs);
}

inline double log_beta(double x, double z) {
  detail::require(x > 0.0 && z > 0.0, "beta: arguments must be positive");
  return log_gamma(x) + log_gamma(z) - log_gamma(x + z);
}

/// B(x, z) = Γ(x)Γ(z)/Γ(x+z), computed in log space.
inline double beta(double x, double z) { return std::exp(log_beta(x, z)); }

/// Rising factorial (λ)_n = Γ(λ+n)/Γ(λ).
///
/// Direct product for n <= 64; beyond that a log-gamma ratio with the sign
/// tracked separately so negative λ is handled.
inline double pochhammer(double lambda, std::uint64_t n) {
  if (n == 0) return 1.0;
  const bool hits_zero = detail::is_nonpositive_integer(lambda);
  if (hits_zero && static_cast<double>(n) > -lambda) return 0.0;
  if (n <= 64 || hits_zero) {
    double p = 1.0;
    for (std::uint64_t k = 0; k < n; ++k) p *= lambda + static_cast<double>(k);
    return p;
  }
  const double top = lambda + static_cast<double>(n);
  const auto num = detail::log_abs_gamma(top);
  const auto den = detail::log_abs_gamma(lambda);
  return num.sign * den.sign * std::exp(num.log_abs - den.log_abs);
}

/// (b)_n / (c)_n for c > 0, b > 0, computed without forming either factor.
inline double pochhammer_ratio(double b, double c, std::uint64_t n) {
  if (n <= 4096) {
    double r = 1.0;
    for (std::uint64_t k = 0; k < n; ++k) {
      const double kk = static_cast<double>(k);
      r *= (b + kk) / (c + kk);
    }
    return r;
  }
  const double nn = static_cast<double>(n);
  return std::exp(log_gamma(b + nn) - log_gamma(b) - log_gamma(c + nn) + log_gamma(c));
}

}  // namespace inchyp
