#pragma once

#include "radmax/logspace.hpp"
#include "radmax/radial_measure.hpp"

namespace radmax {

/// Polar angle in [0, π].
class Angle {
 public:
  explicit Angle(double radians);
  double radians() const { return beta_; }
  double cos() const;
  double sin() const;

 private:
  double beta_;
};

/// Ball B(d ξ, t): centre at distance d from the origin, radius t.
struct GeometrySpec {
  GeometrySpec(Dimension n, double d, double t);
  Dimension n;
  double d;
  double t;
};

/// How the sphere {|y| = s} meets a ball B(d ξ, t).
struct SphereSection {
  enum class Kind { Full, Empty, Cap };
  Kind kind;
  /// Angular radius around ξ; meaningful for Kind::Cap (π for Full, 0 for Empty).
  double theta;
};

/// log ∫_0^θ sin^m β dβ for integer m >= 0.
double log_sin_power_integral(long m, double theta);

/// log of the (n-1)-dimensional area of a polar cap of angular radius θ on
/// the unit sphere of ℝⁿ; n >= 2.
LogNonNegative cap_log_area(Dimension n, Angle theta);

/// log of the share of the unit sphere within angle θ of a pole. For n = 1
/// the "sphere" is two points and any 0 < θ < π holds exactly one.
double log_cap_fraction(Dimension n, double theta);

SphereSection intersection_angle(Dimension n, double d, double t, double s);

/// log μ(B(d ξ, t)).
LogNonNegative off_center_ball_measure(const RadialDensity& f, const GeometrySpec& g);

/// log μ(B(d ξ, t) ∩ B_ρ).
LogNonNegative intersect_with_centered_ball(const RadialDensity& f,
                                            const GeometrySpec& g, double rho);

/// log μ(E ∩ B_R) where E is the cone of half-angle θ around ξ.
LogNonNegative cone_ball_measure(const RadialDensity& f, Dimension n, Angle theta,
                                 double R);

/// Angle at the origin between ξ and ∂B(Rξ, R + r) ∩ ∂B_R, with λ = r/R:
/// cos β0 = 1 - (1+λ)²/2. Requires 0 < λ < 1.
Angle beta0_concentric(double lambda);

/// The unit-ball variant cos β0 = 1 - R²(1+λ)²/2, used verbatim.
Angle beta0_unit_ball(double R, double lambda);

/// log sin β0 computed without cancellation from cos β0.
double log_sin_from_cos(double cos_value);

}  // namespace radmax
