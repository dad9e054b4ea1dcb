#include "radmax/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "radmax/errors.hpp"
#include "radmax/quadrature.hpp"

namespace radmax {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNegInf = -kInf;
constexpr double kPi = std::numbers::pi;
constexpr double kAcosSlack = 1e-12;

double checked_acos(double c, const char* where) {
  if (std::isnan(c) || c < -1.0 - kAcosSlack || c > 1.0 + kAcosSlack) {
    throw DomainError(std::string(where) + ": cosine outside [-1, 1]");
  }
  return std::acos(std::clamp(c, -1.0, 1.0));
}

double log_full_sin_power(long m) {
  const double mm = static_cast<double>(m);
  return 0.5 * std::log(kPi) + log_gamma(0.5 * (mm + 1.0)) - log_gamma(0.5 * mm + 1.0);
}

}  // namespace

Angle::Angle(double radians) : beta_(radians) {
  if (!(radians >= 0.0 && radians <= kPi)) {
    throw DomainError("angle must lie in [0, pi]");
  }
}

double Angle::cos() const { return std::cos(beta_); }
double Angle::sin() const { return std::sin(beta_); }

GeometrySpec::GeometrySpec(Dimension n_, double d_, double t_) : n(n_), d(d_), t(t_) {
  if (!(d >= 0.0) || !std::isfinite(d)) throw DomainError("ball centre distance must be >= 0");
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("ball radius must be > 0");
}

double log_sin_power_integral(long m, double theta) {
  if (m < 0) throw DomainError("sin power must be >= 0");
  if (theta <= 0.0) return kNegInf;
  if (theta >= kPi) return log_full_sin_power(m);
  if (m == 0) return std::log(theta);
  if (theta > 0.5 * kPi) {
    return log_sub(log_full_sin_power(m), log_sin_power_integral(m, kPi - theta));
  }
  const double mm = static_cast<double>(m);
  // The integrand increases on [0, θ]; below asin(sin θ · e^{-46/m}) it is
  // more than 46 log units under its value at θ.
  const double floor_beta = std::asin(std::sin(theta) * std::exp(-46.0 / mm));
  LogIntegrateOptions options;
  options.peak = theta;
  options.truncation = 0.0;
  options.smooth_endpoints = false;
  const auto integrand = [mm](double beta) {
    return beta <= 0.0 ? kNegInf : mm * std::log(std::sin(beta));
  };
  return log_integrate(integrand, floor_beta, theta, options).log_value;
}

LogNonNegative cap_log_area(Dimension n, Angle theta) {
  if (n.value() < 2) throw DomainError("cap_log_area: n must be >= 2");
  const double log_integral = log_sin_power_integral(n.value() - 2, theta.radians());
  if (log_integral == kNegInf) return LogNonNegative::zero();
  return log_sphere_area(Dimension(n.value() - 1)) * LogNonNegative(log_integral);
}

double log_cap_fraction(Dimension n, double theta) {
  if (theta <= 0.0) return kNegInf;
  if (theta >= kPi) return 0.0;
  if (n.value() == 1) return -std::numbers::ln2;
  const long m = n.value() - 2;
  return log_sin_power_integral(m, theta) - log_full_sin_power(m);
}

SphereSection intersection_angle(Dimension, double d, double t, double s) {
  using Kind = SphereSection::Kind;
  if (d < 0.0 || t <= 0.0 || s < 0.0) throw DomainError("intersection_angle: bad arguments");
  if (d == 0.0 || s == 0.0) {
    return (s < t && d < t) || (s == 0.0 && d < t) ? SphereSection{Kind::Full, kPi}
                                                   : SphereSection{Kind::Empty, 0.0};
  }
  if (s <= t - d) return {Kind::Full, kPi};
  if (s >= t + d) return {Kind::Empty, 0.0};
  // Half-angle forms: sin²(θ/2) = (t² - (s-d)²)/(4sd), cos²(θ/2) = ((s+d)² - t²)/(4sd).
  const double gap = std::abs(s - d);
  const double sin_half_sq = (t - gap) * (t + gap) / (4.0 * s * d);
  if (sin_half_sq <= 0.0) return {Kind::Empty, 0.0};
  if (sin_half_sq <= 0.5) return {Kind::Cap, 2.0 * std::asin(std::sqrt(sin_half_sq))};
  const double cos_half_sq = (s + d - t) * (s + d + t) / (4.0 * s * d);
  if (cos_half_sq <= 0.0) return {Kind::Full, kPi};
  return {Kind::Cap, kPi - 2.0 * std::asin(std::sqrt(cos_half_sq))};
}

namespace {

// log μ(B(dξ, t) ∩ B_upper), in the same split used by both public entry
// points so that containment cases give bit-identical values.
LogNonNegative log_ball_section(const RadialDensity& f, Dimension n, double d, double t,
                                double upper) {
  const double outer = std::min({d + t, upper, f.support_upper_bound()});
  if (d == 0.0) return log_ball_measure(f, n, std::min(t, outer));
  // B_upper inside the off-centre ball.
  if (t >= d + upper) return log_ball_measure(f, n, outer);

  LogNonNegative total = LogNonNegative::zero();
  const double full_edge = std::min(t - d, outer);
  if (full_edge > 0.0) total = log_ball_measure(f, n, full_edge);

  const double cap_lo = std::abs(t - d);
  if (!(outer > cap_lo)) return total;

  std::vector<double> cuts{cap_lo};
  for (double x : f.breakpoints()) {
    if (x > cap_lo && x < outer) cuts.push_back(x);
  }
  cuts.push_back(outer);

  double log_caps = kNegInf;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = cuts[i + 1];
    const double logf_piece = f.log_density_at(lo + 0.5 * (hi - lo));
    if (logf_piece == kNegInf) continue;
    const bool gaussian = f.kind() == DensityKind::Gaussian;
    const auto integrand = [&](double s) {
      if (s <= 0.0) return kNegInf;
      const SphereSection section = intersection_angle(n, d, t, s);
      double log_frac = 0.0;
      if (section.kind == SphereSection::Kind::Empty) return kNegInf;
      if (section.kind == SphereSection::Kind::Cap) {
        log_frac = log_cap_fraction(n, section.theta);
      }
      const double logf = gaussian ? f.log_density_at(s) : logf_piece;
      const double radial = n.value() == 1 ? 0.0 : (n.as_double() - 1.0) * std::log(s);
      return logf + radial + log_frac;
    };
    log_caps = log_add(log_caps, log_integrate(integrand, lo, hi).log_value);
  }
  if (log_caps == kNegInf) return total;
  return total + log_sphere_area(n) * LogNonNegative(log_caps);
}

}  // namespace

LogNonNegative off_center_ball_measure(const RadialDensity& f, const GeometrySpec& g) {
  return log_ball_section(f, g.n, g.d, g.t, kInf);
}

LogNonNegative intersect_with_centered_ball(const RadialDensity& f, const GeometrySpec& g,
                                            double rho) {
  if (!(rho > 0.0)) throw DomainError("intersect_with_centered_ball: rho must be > 0");
  return log_ball_section(f, g.n, g.d, g.t, rho);
}

LogNonNegative cone_ball_measure(const RadialDensity& f, Dimension n, Angle theta,
                                 double R) {
  if (n.value() < 2) throw DomainError("cone_ball_measure: n must be >= 2");
  const double log_frac = log_cap_fraction(n, theta.radians());
  if (log_frac == kNegInf) return LogNonNegative::zero();
  return log_ball_measure(f, n, R) * LogNonNegative(log_frac);
}

Angle beta0_concentric(double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw DomainError("beta0_concentric: lambda must lie in (0, 1)");
  }
  const double c = 1.0 - 0.5 * (1.0 + lambda) * (1.0 + lambda);
  return Angle(checked_acos(c, "beta0_concentric"));
}

Angle beta0_unit_ball(double R, double lambda) {
  if (!(R > 0.0 && R <= 1.0)) throw DomainError("beta0_unit_ball: R must lie in (0, 1]");
  if (!(lambda > 0.0)) throw DomainError("beta0_unit_ball: lambda must be > 0");
  const double u = R * (1.0 + lambda);
  const double c = 1.0 - 0.5 * u * u;
  return Angle(checked_acos(c, "beta0_unit_ball"));
}

double log_sin_from_cos(double cos_value) {
  return 0.5 * std::log1p(-cos_value * cos_value);
}

}  // namespace radmax
