#pragma once

// Guarded power-series summation shared by every series evaluator.

#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>

#include "inchyp/core.hpp"

namespace inchyp {

namespace detail {

// Neumaier compensated accumulator.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace detail

/// Sums term(0) + term(1) + ... until the tail is negligible.
///
/// A term counts as small when its tail estimate |t_n|·r/(1-r) (r the
/// magnitude ratio of the last two terms, or just |t_n| when the ratio is
/// unavailable) falls below rel_tol·|partial sum|. Summation stops after
/// three consecutive small terms, which lets exact zeros such as a
/// terminating (-m)_n pass through without ending the sum early.
/// abs_err_est is the last tail estimate plus the rounding floor
/// eps·Σ|t_n|, so cancellation shows up in the estimate.
template <typename TermFn>
  requires std::invocable<TermFn&, std::size_t>
EvalResult sum_series(TermFn&& term, const EvalOptions& opts = {}) {
  detail::CompensatedSum sum;
  double abs_sum = 0.0;
  double prev = 0.0;
  double tail = 0.0;
  int small_run = 0;
  for (std::size_t n = 0; n < opts.max_terms; ++n) {
    const double t = static_cast<double>(term(n));
    if (!std::isfinite(t)) {
      return {sum.value(), std::numeric_limits<double>::infinity(), n + 1, false};
    }
    sum.add(t);
    abs_sum += std::abs(t);
    const double at = std::abs(t);
    tail = at;
    if (prev != 0.0 && at != 0.0) {
      const double r = at / prev;
      tail = r < 1.0 ? at * r / (1.0 - r) : std::numeric_limits<double>::infinity();
    }
    prev = at;
    const double s = std::abs(sum.value());
    if (at == 0.0 || tail <= opts.rel_tol * s) {
      if (++small_run >= 3) {
        const double err = (at == 0.0 ? 0.0 : tail) +
                           std::numeric_limits<double>::epsilon() * abs_sum;
        return {sum.value(), err, n + 1, true};
      }
    } else {
      small_run = 0;
    }
  }
  return {sum.value(), tail + std::numeric_limits<double>::epsilon() * abs_sum,
          opts.max_terms, false};
}

}  // namespace inchyp
