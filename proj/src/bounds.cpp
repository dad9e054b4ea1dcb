#include "radmax/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "radmax/errors.hpp"
#include "radmax/optimize.hpp"

namespace radmax {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
const double kLogSqrtPi = 0.5 * std::log(kPi);

double exponent_q(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("p must be a finite real >= 1");
  return (p - 1.0) / p;
}

void require_finite_measure(const RadialDensity& f, Dimension n) {
  if (!f.is_finite(n)) {
    throw NonFiniteMeasure("measure of " + f.name() + " is infinite in dimension " +
                           std::to_string(n.value()));
  }
}

void require_admissible_lambda(double lambda) {
  if (!(lambda > 0.0 && lambda < std::numbers::sqrt2 - 1.0)) {
    throw DomainError("lambda must lie in (0, sqrt(2) - 1)");
  }
}

double lball(const RadialDensity& f, Dimension n, double rho) {
  return log_ball_measure(f, n, rho).log();
}

}  // namespace

std::optional<double> BoundReport::term(const std::string& name) const {
  for (const auto& [key, value] : terms) {
    if (key == name) return value;
  }
  return std::nullopt;
}

LogNonNegative T_exact(const RadialDensity& f, Dimension n, double p, double R, double r) {
  const double q = exponent_q(p);
  if (!(r > 0.0) || !(R > r) || !std::isfinite(R)) {
    throw DomainError("T_exact requires 0 < r < R");
  }
  require_finite_measure(f, n);
  const double log_big = lball(f, n, R);
  const double log_small = lball(f, n, r);
  const double log_tilde = off_center_ball_measure(f, GeometrySpec(n, R, R + r)).log();
  return LogNonNegative(log_big - log_tilde + q * (log_small - log_big));
}

double solve_radius_equation(const RadialDensity& f, Dimension n, Angle beta0, double k) {
  if (!(k > 0.0 && k < 1.0)) throw DomainError("balance exponent k must lie in (0, 1)");
  if (!f.is_finite(n)) {
    throw NoBalancedRadius("no balanced radius: measure of " + f.name() + " is infinite",
                           0.0, 0.0);
  }
  const double log_s = log_sin_from_cos(beta0.cos());
  if (!(log_s < 0.0)) throw DomainError("solve_radius_equation: sin(beta0) must be < 1");
  const double target = n.as_double() * k * log_s;
  double ratio_min = std::numeric_limits<double>::infinity();
  double ratio_max = -std::numeric_limits<double>::infinity();
  const auto log_ratio = [&](double R) {
    const double v = lball(f, n, R * std::exp(log_s)) - lball(f, n, R);
    ratio_min = std::min(ratio_min, v);
    ratio_max = std::max(ratio_max, v);
    return v;
  };
  const auto residual = [&](double R) { return log_ratio(R) - target; };

  // The ratio tends to 1 as R grows; anchor the scan where it is within 1e-6.
  double r_max = 1.0;
  const double near_one = std::log1p(-1e-6);
  while (true) {
    const double v = log_ratio(r_max);
    if (v >= near_one && v > target) break;
    r_max *= 2.0;
    if (r_max > 0x1p60) {
      throw NoBalancedRadius("no balanced radius: ratio never approaches 1", ratio_min,
                             ratio_max);
    }
  }
  constexpr int kSteps = 10'000;
  const double step = r_max / kSteps;
  double upper = r_max;
  for (int i = 1; i < kSteps; ++i) {
    const double R = r_max - step * i;
    if (residual(R) <= 0.0) {
      return find_root(residual, R, upper, 1e-10 * R);
    }
    upper = R;
  }
  throw NoBalancedRadius("no balanced radius: no sign change on the scan range", ratio_min,
                         ratio_max);
}

BoundReport theorem1_construction(const RadialDensity& f, Dimension n, double p,
                                  double lambda, long exact_threshold) {
  const double q = exponent_q(p);
  require_admissible_lambda(lambda);
  require_finite_measure(f, n);

  const Angle beta0 = beta0_concentric(lambda);
  const double c = beta0.cos();
  const double log_s = log_sin_from_cos(c);
  const double s = std::exp(log_s);
  const long l = balance_integer(lambda);
  const double k = 1.0 / (1.0 + static_cast<double>(l));
  const double nn = n.as_double();

  BoundReport report;
  report.construction = "theorem1";
  report.density = f.name();
  report.n = n.value();
  report.p = p;
  report.lambda = lambda;
  report.beta0 = beta0.radians();
  report.l = l;
  report.k = k;
  report.R = solve_radius_equation(f, n, beta0, k);
  report.r = lambda * report.R;
  report.Q = 1.0 / (std::sqrt(kPi) * s * c);
  const double log_alpha = q * std::log(lambda) - k * log_s;
  report.alpha = std::exp(log_alpha);
  report.logT_lower = -std::log(*report.Q + 1.0) + nn * log_alpha;

  const double R = report.R;
  const double r = report.r;
  auto& t = report.terms;
  const double log_big = lball(f, n, R);
  const double log_small = lball(f, n, r);
  const double log_inner = lball(f, n, R * s);
  t.emplace_back("log_growth_base", log_alpha);
  t.emplace_back("log_l_condition", -static_cast<double>(l) * log_s - std::log(2.0 + lambda));
  t.emplace_back("log_mu_B_R", log_big);
  t.emplace_back("log_mu_B_r", log_small);
  t.emplace_back("log_mu_B_R_sin_beta0", log_inner);
  t.emplace_back("radius_equation_residual", log_inner - log_big - nn * k * log_s);
  t.emplace_back("log_small_ball_ratio", log_small - log_big);
  t.emplace_back("log_small_ball_ratio_bound", nn * std::log(lambda));
  t.emplace_back("log_mu_B_2R_plus_r", lball(f, n, 2.0 * R + r));
  t.emplace_back("log_outer_ball_bound", log_big - static_cast<double>(l) * nn * log_s);
  t.emplace_back("log_ratio_lower_bound",
                 -log_add(std::log(*report.Q) + nn * (1.0 - l * k) * log_s, nn * k * log_s));

  if (n.value() <= exact_threshold) {
    const GeometrySpec tilde(n, R, R + r);
    const double log_tilde = off_center_ball_measure(f, tilde).log();
    const double log_cap = intersect_with_centered_ball(f, tilde, R).log();
    const double log_outside = log_sub(log_tilde, log_cap, 1e-9);
    const double log_annulus = log_annulus_measure(f, n, R, 2.0 * R + r).log();
    t.emplace_back("log_mu_B_tilde", log_tilde);
    t.emplace_back("log_mu_B_tilde_cap_B_R", log_cap);
    t.emplace_back("log_mu_B_tilde_minus_B_R", log_outside);
    t.emplace_back("log_annulus_bound",
                   -std::log(std::sqrt(kPi) * s * c) + nn * log_s + log_annulus);
    t.emplace_back("log_ratio_exact", log_big - log_tilde);
    report.logT_exact = log_big - log_tilde + q * (log_small - log_big);
  }
  return report;
}

bool RemarkReport::all_ok() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const RemarkEntry& e) { return e.monotone_ok && e.decay_ok; });
}

RemarkReport verify_remark(const RadialDensity& f, const std::vector<long>& dims,
                           double lambda) {
  require_admissible_lambda(lambda);
  const Angle beta0 = beta0_concentric(lambda);
  const double log_s = log_sin_from_cos(beta0.cos());
  RemarkReport report;
  report.lambda = lambda;
  report.l = balance_integer(lambda);
  report.k = 1.0 / (1.0 + static_cast<double>(report.l));
  double previous = 0.0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const Dimension n(dims[i]);
    RemarkEntry entry{};
    entry.n = n.value();
    entry.R = solve_radius_equation(f, n, beta0, report.k);
    entry.log_f_at_R = f.log_density_at(entry.R);
    entry.log_decay_bound =
        f.log_density_at_zero() + n.as_double() * (1.0 - report.k) * log_s;
    entry.monotone_ok = i == 0 || entry.R >= previous - 1e-3;
    entry.decay_ok = entry.log_f_at_R <=
                     entry.log_decay_bound + 1e-9 * std::max(1.0, std::abs(entry.log_decay_bound));
    previous = entry.R;
    report.entries.push_back(entry);
  }
  return report;
}

double gaussian_mode(Dimension n) {
  return std::sqrt((n.as_double() - 1.0) / (2.0 * kPi));
}

LogSandwich gaussian_lemma_sandwich(Dimension n, double rho) {
  const double mode = gaussian_mode(n);
  if (!(rho > 0.0 && rho < mode)) {
    throw DomainError("gaussian_lemma_sandwich requires 0 < rho < R_n");
  }
  const double nn = n.as_double();
  const double upper = log_sphere_area(n).log() - kPi * rho * rho + nn * std::log(rho);
  return {upper - std::log(nn), lball(RadialDensity::gaussian(), n, rho), upper};
}

MassConcentration gaussian_mass_concentration(Dimension n) {
  if (n.value() < 2) throw DomainError("gaussian_mass_concentration requires n >= 2");
  const auto gauss = RadialDensity::gaussian();
  const double mode = gaussian_mode(n);
  MassConcentration out{};
  out.log_mass = lball(gauss, n, mode);
  out.log_complement =
      log_annulus_measure(gauss, n, mode, std::numeric_limits<double>::infinity()).log();
  const double deficit = 2.0 / (std::sqrt(kPi) * std::sqrt(n.as_double() - 1.0));
  out.lower_bound = 1.0 - deficit;
  out.holds = out.lower_bound <= 0.0 || out.log_complement <= std::log(deficit);
  return out;
}

BoundReport gaussian_construction(Dimension n, double p, double lambda,
                                  long exact_threshold) {
  const double q = exponent_q(p);
  require_admissible_lambda(lambda);
  if (n.value() < 2) throw DomainError("gaussian_construction requires n >= 2");
  const auto gauss = RadialDensity::gaussian();
  const Angle beta0 = beta0_concentric(lambda);
  const double c = beta0.cos();
  const double c2 = c * c;
  const double log_s = log_sin_from_cos(c);
  const double s = std::exp(log_s);
  const double s2 = s * s;
  const double decay = std::exp(-c2);
  const double nn = n.as_double();
  const double mode = gaussian_mode(n);
  const double log_mode_sq = std::log((nn - 1.0) / (2.0 * kPi));
  const double log_omega = log_sphere_area(n).log();

  BoundReport report;
  report.construction = "gaussian";
  report.density = gauss.name();
  report.n = n.value();
  report.p = p;
  report.lambda = lambda;
  report.beta0 = beta0.radians();
  report.R = std::exp(-0.5 * c2) * mode;
  report.r = lambda * report.R;
  report.Q = 1.0 / (std::sqrt(kPi) * s * c);
  const double log_alpha =
      -0.5 * c2 * decay - log_s + q * (0.5 * decay * (1.0 - lambda * lambda) + std::log(lambda));
  report.alpha = std::exp(log_alpha);
  report.logT_lower = -std::log(nn) + nn * log_alpha;

  const double R = report.R;
  const double r = report.r;
  const double log_R = std::log(R);
  auto& t = report.terms;
  t.emplace_back("log_growth_base", log_alpha);
  t.emplace_back("transcendental_residual",
                 nn * log_R - kPi * R * R * s2 - ((nn - 1.0) * std::log(mode) - kPi * mode * mode));
  t.emplace_back("exponent_gap", 0.5 * (s2 * decay + c2) - 0.5);
  t.emplace_back("log_intersection_bound", log_omega - kPi * R * R * s2 + nn * (log_R + log_s));
  t.emplace_back("log_outer_piece_bound", nn * log_s - std::log(std::sqrt(kPi) * s * c) +
                                              log_omega + std::log(R + r) - kPi * mode * mode +
                                              (nn - 1.0) * std::log(mode));
  const double shared = log_omega + 0.5 * nn * log_mode_sq;
  t.emplace_back("log_intersection_bound_closed",
                 shared + 0.5 - 0.5 * nn * (s2 * decay + c2) + nn * log_s);
  t.emplace_back("log_outer_piece_bound_closed",
                 shared + 0.5 + nn * log_s - std::log(std::sqrt(kPi) * s * c) - 0.5 * nn);
  t.emplace_back("log_tilde_ball_bound",
                 shared + std::numbers::ln2 - 0.5 * nn * (s2 * decay + c2) + nn * log_s);
  t.emplace_back("log_ball_R_estimate",
                 shared + 0.5 - std::log(nn) - 0.5 * nn * (decay + c2));
  t.emplace_back("log_ball_R_lemma_lower", log_omega - kPi * R * R + nn * log_R - std::log(nn));
  t.emplace_back("log_small_ball_ratio_lemma",
                 -std::log(nn) + kPi * R * R * (1.0 - lambda * lambda) + nn * std::log(lambda));
  t.emplace_back("log_small_ball_ratio_estimate",
                 0.5 * (nn - 1.0) * decay * (1.0 - lambda * lambda) + nn * std::log(lambda));

  if (n.value() <= exact_threshold) {
    const GeometrySpec tilde(n, R, R + r);
    const double log_big = lball(gauss, n, R);
    const double log_small = lball(gauss, n, r);
    const double log_tilde = off_center_ball_measure(gauss, tilde).log();
    t.emplace_back("log_mu_B_R", log_big);
    t.emplace_back("log_mu_B_r", log_small);
    t.emplace_back("log_mu_B_R_sin_beta0", lball(gauss, n, R * s));
    t.emplace_back("log_mu_B_tilde", log_tilde);
    t.emplace_back("log_mu_B_tilde_cap_B_R", intersect_with_centered_ball(gauss, tilde, R).log());
    t.emplace_back("log_small_ball_ratio", log_small - log_big);
    report.logT_exact = log_big - log_tilde + q * (log_small - log_big);
  }
  return report;
}

double gaussian_upper_construction(Dimension n, double p, double R, double r) {
  const double q = exponent_q(p);
  if (n.value() < 2) throw DomainError("gaussian_upper_construction requires n >= 2");
  const double mode = gaussian_mode(n);
  if (!(r > 0.0 && r < R)) throw DomainError("gaussian_upper_construction requires 0 < r < R");
  if (R > mode * (1.0 + 1e-12)) {
    throw DomainError("gaussian_upper_construction requires R <= R_n");
  }
  const double lambda = r / R;
  const double log_s = log_sin_from_cos(beta0_concentric(lambda).cos());
  const double nn = n.as_double();
  return kLogSqrtPi + std::log(nn) + log_s + q * 0.5 * (lambda * lambda - 1.0) +
         nn * (q * (0.5 * (1.0 - lambda * lambda) + std::log(lambda)) - log_s);
}

LogBounds unitball_sandwich(Dimension n, double p, double R, double lambda) {
  const double q = exponent_q(p);
  if (!(lambda > 0.0)) throw DomainError("unitball_sandwich requires lambda > 0");
  if (!(R > 0.0 && R <= 1.0)) throw DomainError("unitball_sandwich requires 0 < R <= 1");
  if (!(R < std::numbers::sqrt2 / (1.0 + lambda))) {
    throw DomainError("unitball_sandwich requires R < sqrt(2)/(1 + lambda)");
  }
  const double log_s = log_sin_from_cos(beta0_unit_ball(R, lambda).cos());
  const double nn = n.as_double();
  const double lower = nn * (std::log(R) + q * std::log(lambda) - log_s);
  return {lower, lower + kLogSqrtPi + std::log(nn)};
}

CaseBound unitball_case_analysis(Dimension n, double p, double R, double lambda) {
  const double q = exponent_q(p);
  if (!(lambda > 0.0 && lambda < 1.0)) throw DomainError("case analysis requires 0 < r < R");
  if (!(R > 0.0 && R <= 1.0)) throw DomainError("case analysis requires 0 < R <= 1");
  const double nn = n.as_double();
  const double log_prefactor = kLogSqrtPi + std::log(nn);
  const double critical_R = std::numbers::sqrt2 / (1.0 + lambda);
  const auto log_alpha_unit = [&] {
    return q * std::log(lambda) - log_sin_from_cos(beta0_unit_ball(1.0, lambda).cos());
  };
  if (R == 1.0 && lambda < std::numbers::sqrt2 - 1.0) {
    return {1, log_prefactor + nn * log_alpha_unit()};
  }
  if (R >= critical_R) {
    // μ(B̃) >= |B_1 ∩ E_0| = |B_1|/2 and μ(B_R) = Rⁿ|B_1|.
    return {4, std::numbers::ln2 + nn * std::log(R) + nn * q * std::log(lambda)};
  }
  const double sin_beta0 = beta0_unit_ball(R, lambda).sin();
  if (sin_beta0 < R) return {2, log_prefactor + nn * log_alpha_unit()};
  return {3, log_prefactor + nn * q * std::log(lambda)};
}

BoundReport unitball_construction(Dimension n, double p, double R, double lambda,
                                  long exact_threshold) {
  const double q = exponent_q(p);
  const auto unit = RadialDensity::unit_ball_indicator();
  const LogBounds sandwich = unitball_sandwich(n, p, R, lambda);
  const Angle beta0 = beta0_unit_ball(R, lambda);
  const double nn = n.as_double();

  BoundReport report;
  report.construction = "unitball";
  report.density = unit.name();
  report.n = n.value();
  report.p = p;
  report.lambda = lambda;
  report.beta0 = beta0.radians();
  report.R = R;
  report.r = lambda * R;
  const double log_alpha = std::log(R) + q * std::log(lambda) - log_sin_from_cos(beta0.cos());
  report.alpha = std::exp(log_alpha);
  report.logT_lower = sandwich.lower;
  auto& t = report.terms;
  t.emplace_back("log_growth_base", log_alpha);
  t.emplace_back("logT_upper", sandwich.upper);
  if (lambda < 1.0) {
    const CaseBound bound = unitball_case_analysis(n, p, R, lambda);
    t.emplace_back("case_id", bound.case_id);
    t.emplace_back("log_case_bound", bound.log_upper);
  }
  t.emplace_back("log_small_ball_ratio_bound", nn * std::log(lambda));
  if (n.value() <= exact_threshold) {
    const double log_big = lball(unit, n, R);
    const double log_small = lball(unit, n, report.r);
    const double log_tilde =
        off_center_ball_measure(unit, GeometrySpec(n, R, R + report.r)).log();
    t.emplace_back("log_mu_B_R", log_big);
    t.emplace_back("log_mu_B_r", log_small);
    t.emplace_back("log_mu_B_tilde", log_tilde);
    t.emplace_back("log_small_ball_ratio", log_small - log_big);
    report.logT_exact = log_big - log_tilde + q * (log_small - log_big);
  }
  return report;
}

BoundReport exact_report(const RadialDensity& f, Dimension n, double p, double R, double r) {
  const double q = exponent_q(p);
  const double logT = T_exact(f, n, p, R, r).log();
  const double lambda = r / R;
  const double nn = n.as_double();

  BoundReport report;
  report.construction = "exact";
  report.density = f.name();
  report.n = n.value();
  report.p = p;
  report.lambda = lambda;
  report.beta0 = beta0_concentric(lambda).radians();
  report.R = R;
  report.r = r;
  // Per-dimension geometric rate of the exact value.
  report.alpha = std::exp(logT / nn);
  report.logT_lower = logT;
  report.logT_exact = logT;

  auto& t = report.terms;
  const double log_big = lball(f, n, R);
  const double log_small = lball(f, n, r);
  t.emplace_back("log_mu_B_R", log_big);
  t.emplace_back("log_mu_B_r", log_small);
  t.emplace_back("log_mu_B_tilde", off_center_ball_measure(f, GeometrySpec(n, R, R + r)).log());
  t.emplace_back("log_small_ball_ratio", log_small - log_big);
  t.emplace_back("log_exponent_q", q == 0.0 ? kNegInf : std::log(q));

  if (f.kind() == DensityKind::UnitBallIndicator && R <= 1.0) {
    if (R < std::numbers::sqrt2 / (1.0 + lambda)) {
      const LogBounds sandwich = unitball_sandwich(n, p, R, lambda);
      t.emplace_back("log_sandwich_lower", sandwich.lower);
      t.emplace_back("log_sandwich_upper", sandwich.upper);
      t.emplace_back("sandwich_holds",
                     sandwich.lower <= logT + 1e-9 && logT <= sandwich.upper + 1e-9 ? 1.0 : 0.0);
    }
    const CaseBound bound = unitball_case_analysis(n, p, R, lambda);
    t.emplace_back("case_id", bound.case_id);
    t.emplace_back("log_case_bound", bound.log_upper);
  }
  if (f.kind() == DensityKind::Gaussian && n.value() >= 2 && R <= gaussian_mode(n)) {
    t.emplace_back("log_gaussian_upper_bound", gaussian_upper_construction(n, p, R, r));
  }
  return report;
}

}  // namespace radmax
