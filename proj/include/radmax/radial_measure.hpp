#pragma once

#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "radmax/logspace.hpp"

namespace radmax {

/// Ambient dimension n >= 1.
class Dimension {
 public:
  explicit Dimension(long n);
  long value() const { return n_; }
  double as_double() const { return static_cast<double>(n_); }
  auto operator<=>(const Dimension&) const = default;

 private:
  long n_;
};

enum class DensityKind { Lebesgue, Gaussian, UnitBallIndicator, TabulatedDecreasing };

/// A radially nonincreasing density f(|x|) described through log f.
///
/// Gaussian is e^{-π s²} (unit total mass in every dimension). The unit-ball
/// indicator is 1 on [0, 1] and 0 beyond. Tabulated densities are piecewise
/// constant and left-continuous: log f(s) = logf_i for s in (s_{i-1}, s_i],
/// logf_0 on [0, s_0] and -inf past the last knot.
class RadialDensity {
 public:
  static RadialDensity lebesgue();
  static RadialDensity gaussian();
  static RadialDensity unit_ball_indicator();
  static RadialDensity tabulated(std::vector<double> radii,
                                 std::vector<double> log_values);

  DensityKind kind() const { return kind_; }
  std::string name() const;

  double log_density_at(double s) const;
  double log_density_at_zero() const { return log_density_at(0.0); }
  /// +inf when the support is unbounded.
  double support_upper_bound() const { return support_; }
  bool is_finite(Dimension n) const;

  /// Radii in (0, support) where log f is discontinuous.
  std::span<const double> breakpoints() const { return breaks_; }

  /// Argmax of log f(s) + (n-1) log s on [lo, hi], on which log f must be
  /// continuous.
  double mass_peak(Dimension n, double lo, double hi) const;

 private:
  RadialDensity(DensityKind kind, double support) : kind_(kind), support_(support) {}

  DensityKind kind_;
  double support_;
  std::vector<double> breaks_;
  std::vector<double> radii_;
  std::vector<double> log_values_;
};

/// Parses the two-column "s logf" table format ('#' lines are comments).
RadialDensity load_tabulated(std::istream& in);
RadialDensity load_tabulated_file(const std::string& path);

/// log ω_{n-1} = log(n π^{n/2} / Γ(n/2 + 1)), the area of the unit sphere in ℝⁿ.
LogNonNegative log_sphere_area(Dimension n);

/// Closed-form bracket of ω_{n-2}/ω_{n-1}; n >= 2.
std::pair<double, double> sphere_ratio_bounds(Dimension n);

/// log of the radial mass density ω_{n-1} f(s) s^{n-1} without the ω factor.
double log_radial_mass(const RadialDensity& f, Dimension n, double s);

/// log μ(B_ρ). ρ may be +inf for finite measures.
LogNonNegative log_ball_measure(const RadialDensity& f, Dimension n, double rho);

/// log μ(B_b \ B_a), 0 <= a <= b (b may be +inf for finite measures).
LogNonNegative log_annulus_measure(const RadialDensity& f, Dimension n, double a,
                                   double b);

/// log μ(ℝⁿ); throws NonFiniteMeasure when infinite.
LogNonNegative log_total_measure(const RadialDensity& f, Dimension n);

/// Radius past which the radial mass is negligible (e^{-60} below its peak);
/// the support bound for compactly supported densities.
double effective_radius(const RadialDensity& f, Dimension n);

}  // namespace radmax
