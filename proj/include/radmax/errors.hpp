#pragma once

#include <stdexcept>
#include <string>

namespace radmax {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A measure that is infinite was requested where a finite one is required.
class NonFiniteMeasure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A root finder was given an interval without a sign change.
class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The balanced-radius equation has no sign change on the scanned range.
class NoBalancedRadius : public std::runtime_error {
 public:
  NoBalancedRadius(const std::string& what, double log_ratio_min,
                   double log_ratio_max)
      : std::runtime_error(what),
        log_ratio_min_(log_ratio_min),
        log_ratio_max_(log_ratio_max) {}

  // Range of log μ(B_{R sinβ0})/μ(B_R) seen during the scan.
  double log_ratio_min() const { return log_ratio_min_; }
  double log_ratio_max() const { return log_ratio_max_; }

 private:
  double log_ratio_min_;
  double log_ratio_max_;
};

/// Any other numerical failure (non-finite objective, empty sample table...).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace radmax
