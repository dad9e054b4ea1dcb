#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace radmax {

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  std::size_t max_evaluations = 1'000'000;
};

/// Outcome of an adaptive integration. When the evaluation cap is hit the best
/// estimate is still returned with `converged == false`.
struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  std::size_t evaluations = 0;
  bool converged = true;
};

/// Globally adaptive Gauss–Kronrod (7/15) integration of f over [a, b].
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureOptions& options = {});

struct LogIntegrateOptions {
  QuadratureOptions quadrature;
  /// Integrate only where the log-integrand is within this many log units of
  /// its maximum. Non-positive disables truncation.
  double truncation = 46.0;
  /// Known location of the maximum of a unimodal log-integrand. Skips the
  /// probe grid when set.
  std::optional<double> peak;
  std::size_t probes = 33;
  /// Cosine substitution that clusters nodes at both ends; removes
  /// square-root endpoint behaviour.
  bool smooth_endpoints = true;
};

struct LogQuadratureResult {
  double log_value = 0.0;
  double rel_error = 0.0;
  std::size_t evaluations = 0;
  bool converged = true;
};

/// log ∫_a^b exp(log_f(x)) dx, evaluated on the integrand shifted by its
/// log-maximum so that neither overflow nor underflow occurs. log_f may
/// return -inf (zero integrand). The truncation step assumes log_f is
/// unimodal on [a, b].
LogQuadratureResult log_integrate(const std::function<double(double)>& log_f,
                                  double a, double b,
                                  const LogIntegrateOptions& options = {});

}  // namespace radmax
