#include "radmax/radial_measure.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <sstream>

#include "radmax/errors.hpp"
#include "radmax/quadrature.hpp"

namespace radmax {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNegInf = -kInf;

}  // namespace

Dimension::Dimension(long n) : n_(n) {
  if (n < 1) throw DomainError("dimension must be >= 1");
}

RadialDensity RadialDensity::lebesgue() {
  return RadialDensity(DensityKind::Lebesgue, kInf);
}

RadialDensity RadialDensity::gaussian() {
  return RadialDensity(DensityKind::Gaussian, kInf);
}

RadialDensity RadialDensity::unit_ball_indicator() {
  return RadialDensity(DensityKind::UnitBallIndicator, 1.0);
}

RadialDensity RadialDensity::tabulated(std::vector<double> radii,
                                       std::vector<double> log_values) {
  if (radii.empty() || radii.size() != log_values.size()) {
    throw DomainError("tabulated density: need matching, nonempty columns");
  }
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0) || !std::isfinite(radii[i])) {
      throw DomainError("tabulated density: radii must be positive and finite");
    }
    if (std::isnan(log_values[i]) || log_values[i] == kInf) {
      throw DomainError("tabulated density: log f must be < +inf");
    }
    if (i > 0 && !(radii[i] > radii[i - 1])) {
      throw DomainError("tabulated density: radii must be strictly increasing");
    }
    if (i > 0 && log_values[i] > log_values[i - 1]) {
      throw DomainError("tabulated density: log f increases at s = " +
                        std::to_string(radii[i]));
    }
  }
  while (!log_values.empty() && log_values.back() == -kInf) {
    log_values.pop_back();
    radii.pop_back();
  }
  if (radii.empty()) throw DomainError("tabulated density: f vanishes identically");
  RadialDensity f(DensityKind::TabulatedDecreasing, radii.back());
  for (std::size_t i = 0; i + 1 < radii.size(); ++i) {
    if (log_values[i + 1] != log_values[i]) f.breaks_.push_back(radii[i]);
  }
  f.radii_ = std::move(radii);
  f.log_values_ = std::move(log_values);
  return f;
}

std::string RadialDensity::name() const {
  switch (kind_) {
    case DensityKind::Lebesgue:
      return "lebesgue";
    case DensityKind::Gaussian:
      return "gaussian";
    case DensityKind::UnitBallIndicator:
      return "unitball";
    case DensityKind::TabulatedDecreasing:
      return "tabulated";
  }
  return "unknown";
}

double RadialDensity::log_density_at(double s) const {
  switch (kind_) {
    case DensityKind::Lebesgue:
      return 0.0;
    case DensityKind::Gaussian:
      return -std::numbers::pi * s * s;
    case DensityKind::UnitBallIndicator:
      return s <= 1.0 ? 0.0 : kNegInf;
    case DensityKind::TabulatedDecreasing: {
      if (s > radii_.back()) return kNegInf;
      const auto it = std::lower_bound(radii_.begin(), radii_.end(), s);
      return log_values_[static_cast<std::size_t>(it - radii_.begin())];
    }
  }
  return kNegInf;
}

bool RadialDensity::is_finite(Dimension) const {
  return kind_ != DensityKind::Lebesgue;
}

double RadialDensity::mass_peak(Dimension n, double lo, double hi) const {
  if (n.value() == 1) {
    // f itself is nonincreasing.
    return lo;
  }
  if (kind_ == DensityKind::Gaussian) {
    const double mode = std::sqrt((n.as_double() - 1.0) / (2.0 * std::numbers::pi));
    return std::clamp(mode, lo, hi);
  }
  // Constant density on the piece, s^{n-1} increasing.
  return hi;
}

RadialDensity load_tabulated(std::istream& in) {
  std::vector<double> radii;
  std::vector<double> log_values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    double s = 0.0;
    std::string logf_text;
    if (!(fields >> s >> logf_text)) {
      throw DomainError("tabulated density: malformed line " + std::to_string(line_no));
    }
    double logf = 0.0;
    if (logf_text == "-inf" || logf_text == "-Inf" || logf_text == "-INF") {
      logf = kNegInf;
    } else {
      try {
        std::size_t used = 0;
        logf = std::stod(logf_text, &used);
        if (used != logf_text.size()) throw std::invalid_argument(logf_text);
      } catch (const std::exception&) {
        throw DomainError("tabulated density: bad log f on line " +
                          std::to_string(line_no));
      }
    }
    radii.push_back(s);
    log_values.push_back(logf);
  }
  return RadialDensity::tabulated(std::move(radii), std::move(log_values));
}

RadialDensity load_tabulated_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open density table: " + path);
  return load_tabulated(in);
}

LogNonNegative log_sphere_area(Dimension n) {
  const double nn = n.as_double();
  return LogNonNegative(std::log(nn) + 0.5 * nn * std::log(std::numbers::pi) -
                        log_gamma(0.5 * nn + 1.0));
}

std::pair<double, double> sphere_ratio_bounds(Dimension n) {
  if (n.value() < 2) throw DomainError("sphere_ratio_bounds: n must be >= 2");
  const double nn = n.as_double();
  const double lower = (nn - 1.0) / nn / std::sqrt(std::numbers::pi);
  const double upper =
      (nn - 1.0) / std::sqrt(2.0 * std::numbers::pi) * std::sqrt(1.0 + 1.0 / nn);
  return {lower, upper};
}

double log_radial_mass(const RadialDensity& f, Dimension n, double s) {
  const double logf = f.log_density_at(s);
  if (logf == kNegInf) return kNegInf;
  if (n.value() == 1) return logf;
  if (s <= 0.0) return kNegInf;
  return logf + (n.as_double() - 1.0) * std::log(s);
}

double effective_radius(const RadialDensity& f, Dimension n) {
  if (std::isfinite(f.support_upper_bound())) return f.support_upper_bound();
  if (!f.is_finite(n)) throw NonFiniteMeasure("measure of " + f.name() + " is infinite");
  // Unbounded support: walk outward from the mode until the mass density has
  // dropped far below its peak.
  const double mode = f.mass_peak(n, 0.0, kInf);
  const double top = log_radial_mass(f, n, mode);
  double step = 1.0;
  double s = mode + step;
  while (log_radial_mass(f, n, s) > top - 60.0) {
    step *= 2.0;
    s = mode + step;
  }
  return s;
}

namespace {

// Integral of f(s) s^{n-1} over [a, b] split at density discontinuities, in
// log space, without the sphere-area factor.
double log_radial_integral(const RadialDensity& f, Dimension n, double a, double b) {
  b = std::min(b, f.support_upper_bound());
  if (!(b > a)) return kNegInf;
  std::vector<double> cuts{a};
  for (double x : f.breakpoints()) {
    if (x > a && x < b) cuts.push_back(x);
  }
  cuts.push_back(b);

  double total = kNegInf;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = cuts[i + 1];
    if (n.value() == 1 && f.kind() != DensityKind::Gaussian) {
      // Piecewise-constant density: exact.
      const double logf = f.log_density_at(hi);
      if (logf != kNegInf) total = log_add(total, logf + std::log(hi - lo));
      continue;
    }
    LogIntegrateOptions options;
    options.peak = f.mass_peak(n, lo, hi);
    // Evaluate the piece with its own density value so the left-continuous
    // jump at `lo` does not leak into the piece.
    const double inner = lo + 0.5 * (hi - lo);
    const double logf_piece = f.log_density_at(inner);
    const auto integrand = [&](double s) {
      if (f.kind() == DensityKind::Gaussian) return log_radial_mass(f, n, s);
      if (logf_piece == kNegInf || s <= 0.0) return kNegInf;
      return logf_piece + (n.as_double() - 1.0) * std::log(s);
    };
    total = log_add(total, log_integrate(integrand, lo, hi, options).log_value);
  }
  return total;
}

}  // namespace

LogNonNegative log_ball_measure(const RadialDensity& f, Dimension n, double rho) {
  return log_annulus_measure(f, n, 0.0, rho);
}

LogNonNegative log_annulus_measure(const RadialDensity& f, Dimension n, double a,
                                   double b) {
  if (std::isnan(a) || std::isnan(b) || a < 0.0) {
    throw DomainError("annulus radii must be nonnegative");
  }
  if (a > b) throw DomainError("annulus requires a <= b");
  if (a == b) return LogNonNegative::zero();
  if (b == kInf) {
    if (!f.is_finite(n)) {
      throw NonFiniteMeasure("measure of " + f.name() + " is infinite in dimension " +
                             std::to_string(n.value()));
    }
    b = effective_radius(f, n);
    if (a >= b) {
      // Deep tail of an unbounded density; integrate a fixed span past a.
      b = a + 64.0 / (1.0 + a);
    }
  }
  const double log_integral = log_radial_integral(f, n, a, b);
  if (log_integral == kNegInf) return LogNonNegative::zero();
  return log_sphere_area(n) * LogNonNegative(log_integral);
}

LogNonNegative log_total_measure(const RadialDensity& f, Dimension n) {
  return log_ball_measure(f, n, kInf);
}

}  // namespace radmax
