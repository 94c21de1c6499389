#pragma once

// Shared vocabulary for every evaluator: tolerances, results and errors.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace inchyp {

/// Controls the effort of every evaluation in the library.
struct EvalOptions {
  double rel_tol = 1e-12;
  std::size_t max_terms = 10000;
  std::size_t quad_nodes = 64;
  std::size_t adaptive_max_depth = 30;

  void validate() const;
};

/// A value with an error estimate and the work it took.
///
/// When `converged` is false the value is the best partial result obtained
/// before the term or depth budget ran out.
struct EvalResult {
  double value = 0.0;
  double abs_err_est = 0.0;
  std::size_t effort = 0;
  bool converged = true;
};

/// Lower = bracket form (integral over [0, y]); upper = brace form ([y, 1]).
enum class Variant { lower, upper };

inline constexpr std::string_view to_string(Variant v) {
  return v == Variant::lower ? "lower" : "upper";
}

inline Variant parse_variant(std::string_view s) {
  if (s == "lower") return Variant::lower;
  if (s == "upper") return Variant::upper;
  throw std::invalid_argument("unknown variant '" + std::string(s) + "'");
}

/// Evaluation path for functions with both a series and an integral form.
enum class Method { series, integral, automatic };

inline constexpr std::string_view to_string(Method m) {
  switch (m) {
    case Method::series: return "series";
    case Method::integral: return "integral";
    default: return "auto";
  }
}

inline Method parse_method(std::string_view s) {
  if (s == "series") return Method::series;
  if (s == "integral") return Method::integral;
  if (s == "auto") return Method::automatic;
  throw std::invalid_argument("unknown method '" + std::string(s) + "'");
}

/// Thrown when arguments fall outside the domain of a function.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown by callers that require a converged result and did not get one.
class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool ok, const char* what) {
  if (!ok) throw domain_error(what);
}

inline EvalResult require_converged(EvalResult r, const char* what) {
  if (!r.converged) throw convergence_error(what);
  return r;
}

}  // namespace detail

inline void EvalOptions::validate() const {
  detail::require(rel_tol > 0.0, "EvalOptions: rel_tol must be positive");
  detail::require(max_terms >= 1, "EvalOptions: max_terms must be >= 1");
  detail::require(quad_nodes >= 2, "EvalOptions: quad_nodes must be >= 2");
  detail::require(adaptive_max_depth >= 1,
                  "EvalOptions: adaptive_max_depth must be >= 1");
}

}  // namespace inchyp
