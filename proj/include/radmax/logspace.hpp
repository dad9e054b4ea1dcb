#pragma once

#include <cmath>
#include <limits>

namespace radmax {

/// log Γ(x) for x > 0 (Lanczos, g = 7, 9 terms; ~15 significant digits).
double log_gamma(double x);

/// log(e^a + e^b) with -inf as the zero element.
double log_add(double a, double b);

/// log(e^a - e^b) for a >= b; returns -inf when a == b.
/// Throws DomainError if b exceeds a by more than `slack` (relative).
double log_sub(double a, double b, double slack = 0.0);

/// A nonnegative quantity held as its logarithm. -inf is zero; NaN and +inf
/// are rejected at construction.
class LogNonNegative {
 public:
  constexpr LogNonNegative() = default;
  explicit LogNonNegative(double log_value);

  static LogNonNegative zero() { return LogNonNegative{}; }
  static LogNonNegative one() { return LogNonNegative{0.0}; }
  static LogNonNegative from_value(double value);

  double log() const { return log_value_; }
  double value() const { return std::exp(log_value_); }
  bool is_zero() const { return log_value_ == kNegInf; }

  LogNonNegative operator*(LogNonNegative other) const;
  LogNonNegative operator/(LogNonNegative other) const;
  LogNonNegative operator+(LogNonNegative other) const;
  /// Difference; requires *this >= other up to 1e-12 relative slack.
  LogNonNegative operator-(LogNonNegative other) const;
  LogNonNegative pow(double exponent) const;

  auto operator<=>(const LogNonNegative&) const = default;

 private:
  static constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  double log_value_ = kNegInf;
};

}  // namespace radmax
