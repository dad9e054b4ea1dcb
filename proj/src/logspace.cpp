#include "radmax/logspace.hpp"

#include <array>
#include <numbers>
#include <string>

#include "radmax/errors.hpp"

namespace radmax {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Lanczos approximation, g = 7, n = 9 (Godfrey's coefficients).
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoef = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw DomainError("log_gamma: argument must be positive, got " +
                      std::to_string(x));
  }
  if (x < 0.5) {
    // Reflection: Γ(x)Γ(1-x) = π / sin(πx).
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) -
           log_gamma(1.0 - x);
  }
  const double z = x - 1.0;
  double series = kLanczosCoef[0];
  for (std::size_t i = 1; i < kLanczosCoef.size(); ++i) {
    series += kLanczosCoef[i] / (z + static_cast<double>(i));
  }
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) -
         t + std::log(series);
}

double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  if (a < b) std::swap(a, b);
  return a + std::log1p(std::exp(b - a));
}

double log_sub(double a, double b, double slack) {
  if (b == kNegInf) return a;
  if (b > a) {
    if (b - a <= slack) return kNegInf;
    throw DomainError("log_sub: subtrahend exceeds minuend");
  }
  if (a == b) return kNegInf;
  return a + std::log(-std::expm1(b - a));
}

LogNonNegative::LogNonNegative(double log_value) : log_value_(log_value) {
  if (std::isnan(log_value)) {
    throw NumericalError("LogNonNegative: NaN log-value");
  }
  if (log_value == std::numeric_limits<double>::infinity()) {
    throw NumericalError("LogNonNegative: infinite quantity");
  }
}

LogNonNegative LogNonNegative::from_value(double value) {
  if (!(value >= 0.0)) {
    throw DomainError("LogNonNegative: negative or NaN value");
  }
  return LogNonNegative(value == 0.0 ? kNegInf : std::log(value));
}

LogNonNegative LogNonNegative::operator*(LogNonNegative other) const {
  if (is_zero() || other.is_zero()) return zero();
  return LogNonNegative(log_value_ + other.log_value_);
}

LogNonNegative LogNonNegative::operator/(LogNonNegative other) const {
  if (other.is_zero()) throw DomainError("LogNonNegative: division by zero");
  if (is_zero()) return zero();
  return LogNonNegative(log_value_ - other.log_value_);
}

LogNonNegative LogNonNegative::operator+(LogNonNegative other) const {
  return LogNonNegative(log_add(log_value_, other.log_value_));
}

LogNonNegative LogNonNegative::operator-(LogNonNegative other) const {
  return LogNonNegative(log_sub(log_value_, other.log_value_, 1e-12));
}

LogNonNegative LogNonNegative::pow(double exponent) const {
  if (exponent == 0.0) return one();
  if (is_zero()) {
    if (exponent < 0.0) throw DomainError("LogNonNegative: 0 to negative power");
    return zero();
  }
  return LogNonNegative(exponent * log_value_);
}

}  // namespace radmax
