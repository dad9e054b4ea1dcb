#include "radmax/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "radmax/bounds.hpp"
#include "radmax/errors.hpp"
#include "radmax/geometry.hpp"
#include "radmax/oracle.hpp"
#include "radmax/serialize.hpp"

namespace radmax {

namespace {

std::string fmt(double v) { return format_double(v); }

std::vector<CheckResult> spheres_suite() {
  long checked = 0;
  long first_failure = 0;
  for (long n = 2; n <= 10'000; ++n) {
    const Dimension dim(n);
    const auto [lower, upper] = sphere_ratio_bounds(dim);
    const double ratio =
        std::exp(log_sphere_area(Dimension(n - 1)).log() - log_sphere_area(dim).log());
    ++checked;
    if (!(lower < ratio && ratio < upper) && first_failure == 0) first_failure = n;
  }
  CheckResult check{"spheres", "ratio_bounds", first_failure == 0,
                    "n=2..10000, " + std::to_string(checked) + " dimensions", ""};
  if (first_failure) {
    check.detail += ", first failure n=" + std::to_string(first_failure);
    check.reproducer = "radmax verify spheres";
  }
  return {check};
}

std::vector<CheckResult> gaussian_lemma_suite() {
  std::vector<CheckResult> out;
  long checked = 0;
  std::string failure;
  for (int i = 0; i < 20; ++i) {
    const Dimension n(2 + 10L * i);
    const double mode = gaussian_mode(n);
    for (int j = 1; j <= 20; ++j) {
      const double rho = mode * j / 21.0;
      const LogSandwich s = gaussian_lemma_sandwich(n, rho);
      ++checked;
      const double slack = 1e-10 * std::max(1.0, std::abs(s.value));
      if (!(s.lower <= s.value + slack && s.value <= s.upper + slack) && failure.empty()) {
        failure = "n=" + std::to_string(n.value()) + " rho=" + fmt(rho);
      }
    }
  }
  out.push_back({"gaussian-lemmas", "ball_sandwich", failure.empty(),
                 "20x20 grid n=2..192, rho=R_n*j/21, " + std::to_string(checked) + " points" +
                     (failure.empty() ? "" : ", first failure " + failure),
                 failure.empty() ? "" : "radmax verify gaussian-lemmas"});

  std::vector<long> failing;
  for (long n = 2; n <= 200; ++n) {
    if (!gaussian_mass_concentration(Dimension(n)).holds) failing.push_back(n);
  }
  std::string detail = "n=2..200";
  if (!failing.empty()) {
    const MassConcentration m = gaussian_mass_concentration(Dimension(failing.front()));
    detail += ", " + std::to_string(failing.size()) + " failures, first n=" +
              std::to_string(failing.front()) + " mass=" + fmt(std::exp(m.log_mass)) +
              " bound=" + fmt(m.lower_bound);
  }
  out.push_back({"gaussian-lemmas", "mass_concentration", failing.empty(), detail,
                 failing.empty() ? "" : "radmax verify gaussian-lemmas"});
  return out;
}

std::vector<CheckResult> remark_suite() {
  std::vector<CheckResult> out;
  const std::vector<long> dims{20, 40, 80, 160};
  for (const auto& f : {RadialDensity::gaussian(), RadialDensity::unit_ball_indicator()}) {
    const RemarkReport report = verify_remark(f, dims, 0.2);
    std::ostringstream detail;
    detail << "lambda=0.2 n=20,40,80,160 R_n=";
    for (std::size_t i = 0; i < report.entries.size(); ++i) {
      detail << (i ? "," : "") << fmt(report.entries[i].R);
    }
    out.push_back({"remark", f.name() + "_radius_growth_and_decay", report.all_ok(),
                   detail.str(), report.all_ok() ? "" : "radmax verify remark"});
  }
  return out;
}

std::vector<CheckResult> inclusion_suite(const VerifyOptions& options) {
  std::vector<CheckResult> out;
  MaximalOptions maximal;
  maximal.grid = options.maximal_grid;
  for (const auto& f : {RadialDensity::gaussian(), RadialDensity::unit_ball_indicator()}) {
    for (long n : {2L, 3L}) {
      for (const auto& config : inclusion_configs()) {
        const InclusionReport report = verify_level_set_inclusion(
            f, Dimension(n), config.R, config.r, options.inclusion_radii, maximal);
        const auto failures = report.failures();
        std::string detail = std::to_string(report.points.size()) +
                             " radii, min slack " + fmt(report.min_slack());
        std::string reproducer;
        if (!failures.empty()) {
          detail += ", first failure rho=" + fmt(failures.front());
          reproducer = "radmax oracle inclusion --measure " + f.name() + " --n " +
                       std::to_string(n) + " --R " + fmt(config.R) + " --r " + fmt(config.r);
        }
        out.push_back({"inclusion",
                       f.name() + " n=" + std::to_string(n) + " R=" + fmt(config.R) +
                           " r=" + fmt(config.r),
                       failures.empty(), detail, reproducer});
      }
    }
  }
  return out;
}

std::vector<CheckResult> montecarlo_suite(const VerifyOptions& options) {
  std::vector<CheckResult> out;
  const auto unit = RadialDensity::unit_ball_indicator();
  const double lens = std::log(2.0 * std::numbers::pi / 3.0 - std::sqrt(3.0) / 2.0);
  const double got = off_center_ball_measure(unit, GeometrySpec(Dimension(2), 1.0, 1.0)).log();
  const double rel = std::abs(std::expm1(got - lens));
  out.push_back({"montecarlo", "lens_closed_form", rel <= 1e-8,
                 "relative error " + fmt(rel), rel <= 1e-8 ? "" : "radmax verify montecarlo"});

  const auto gauss = RadialDensity::gaussian();
  std::mt19937_64 engine(options.seed);
  std::uniform_real_distribution<double> center(0.0, 1.5);
  std::uniform_real_distribution<double> radius(0.2, 2.0);
  const double log_total = log_total_measure(gauss, Dimension(3)).log();
  for (int i = 0; i < 10; ++i) {
    const double d = center(engine);
    const double t = radius(engine);
    const std::uint64_t seed = options.seed + static_cast<std::uint64_t>(i) + 1;
    const MonteCarloResult mc =
        monte_carlo_ball_measure(gauss, Dimension(3), d, t, options.samples, seed);
    const double exact =
        std::exp(off_center_ball_measure(gauss, GeometrySpec(Dimension(3), d, t)).log() -
                 log_total);
    const double z = mc.standard_error > 0.0 ? (mc.estimate - exact) / mc.standard_error
                                             : (mc.estimate == exact ? 0.0 : INFINITY);
    const bool ok = std::abs(z) <= 3.0;
    out.push_back({"montecarlo", "gaussian n=3 d=" + fmt(d) + " t=" + fmt(t), ok,
                   "estimate " + fmt(mc.estimate) + " quadrature " + fmt(exact) + " z=" + fmt(z),
                   ok ? ""
                      : "radmax oracle montecarlo --measure gaussian --n 3 --d " + fmt(d) +
                            " --t " + fmt(t) + " --samples " + std::to_string(options.samples) +
                            " --seed " + std::to_string(seed)});
  }
  return out;
}

}  // namespace

const std::vector<InclusionConfig>& inclusion_configs() {
  static const std::vector<InclusionConfig> configs{
      {1.0, 0.15}, {1.0, 0.2}, {0.8, 0.3}, {0.5, 0.1}, {1.5, 0.5}, {1.0, 0.999}};
  return configs;
}

std::vector<std::string> verify_suite_names() {
  return {"spheres", "gaussian-lemmas", "remark", "inclusion", "montecarlo", "all"};
}

std::vector<CheckResult> run_verify_suite(const std::string& suite,
                                          const VerifyOptions& options) {
  if (suite == "spheres") return spheres_suite();
  if (suite == "gaussian-lemmas") return gaussian_lemma_suite();
  if (suite == "remark") return remark_suite();
  if (suite == "inclusion") return inclusion_suite(options);
  if (suite == "montecarlo") return montecarlo_suite(options);
  if (suite == "all") {
    std::vector<CheckResult> all;
    for (const auto& name : verify_suite_names()) {
      if (name == "all") continue;
      auto part = run_verify_suite(name, options);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  throw DomainError("unknown verify suite: " + suite);
}

}  // namespace radmax
