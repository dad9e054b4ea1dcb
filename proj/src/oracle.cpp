#include "radmax/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

#include "radmax/errors.hpp"
#include "radmax/geometry.hpp"

namespace radmax {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_oracle_dimension(Dimension n) {
  if (n.value() > kOracleMaxDimension) {
    throw DomainError("oracle evaluation is limited to n <= 6");
  }
}

unsigned resolve_workers(unsigned workers, std::size_t tasks) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(tasks, 1)));
}

// Runs body(i) for i in [0, count); tasks write only to their own slot.
template <class Body>
void parallel_for(std::size_t count, unsigned workers, Body body) {
  workers = resolve_workers(workers, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& thread : threads) thread.join();
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
}

class AverageEvaluator {
 public:
  AverageEvaluator(const RadialDensity& f, Dimension n, double r, double rho)
      : f_(f), n_(n), r_(r), rho_(rho), log_small_(log_ball_measure(f, n, r).log()) {
    if (log_small_ == kNegInf) throw DomainError("test function needs mu(B_r) > 0");
  }

  double log_small() const { return log_small_; }

  // log of the μ-average of g over B(ρ ξ, t).
  double operator()(double t) const {
    if (t <= rho_ - r_) return kNegInf;
    const GeometrySpec ball(n_, rho_, t);
    const double den = off_center_ball_measure(f_, ball).log();
    if (den == kNegInf) return kNegInf;
    if (t <= r_ - rho_) return -log_small_;
    const double num =
        t >= rho_ + r_ ? log_small_ : intersect_with_centered_ball(f_, ball, r_).log();
    return std::min(num - den, 0.0) - log_small_;
  }

 private:
  const RadialDensity& f_;
  Dimension n_;
  double r_;
  double rho_;
  double log_small_;
};

// Golden-section maximum of h(e^u) for u in [a, b].
double golden_max(const AverageEvaluator& h, double a, double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = h(std::exp(x1));
  double f2 = h(std::exp(x2));
  double best = std::max({h(std::exp(a)), h(std::exp(b)), f1, f2});
  while (b - a > tol) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = h(std::exp(x1));
      best = std::max(best, f1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = h(std::exp(x2));
      best = std::max(best, f2);
    }
  }
  return best;
}

}  // namespace

TestFunctionSpec::TestFunctionSpec(double radius) : r(radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw DomainError("test function radius must be positive");
  }
}

RadialProfile::RadialProfile(std::vector<double> g, std::vector<double> v)
    : grid(std::move(g)), values(std::move(v)) {
  if (grid.size() != values.size()) throw DomainError("profile grid and values differ in length");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw DomainError("profile grid must be strictly increasing");
  }
}

double log_maximal_function_at(const RadialDensity& f, Dimension n, const TestFunctionSpec& g,
                               double rho, const MaximalOptions& options) {
  require_oracle_dimension(n);
  if (!(rho >= 0.0) || !std::isfinite(rho)) throw DomainError("rho must be finite and >= 0");
  if (options.grid < 3) throw DomainError("maximal function grid needs >= 3 points");
  const AverageEvaluator average(f, n, g.r, rho);

  const double t_lo = std::max(1e-6, rho - g.r) * (1.0 - 1e-9);
  const double t_hi = 2.0 * (rho + g.r) + effective_radius(f, n);
  const double u_lo = std::log(t_lo);
  const double u_hi = std::log(t_hi);
  std::vector<double> u(options.grid);
  for (std::size_t i = 0; i < u.size(); ++i) {
    u[i] = u_lo + (u_hi - u_lo) * static_cast<double>(i) / static_cast<double>(u.size() - 1);
  }
  const double touching = std::log(rho + g.r);
  u.insert(std::upper_bound(u.begin(), u.end(), touching), touching);

  std::vector<double> values(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) values[i] = average(std::exp(u[i]));

  std::vector<std::size_t> order(u.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  double best = values[order.front()];
  const std::size_t refined = std::min<std::size_t>(3, order.size());
  for (std::size_t k = 0; k < refined; ++k) {
    const std::size_t i = order[k];
    const double a = u[i == 0 ? 0 : i - 1];
    const double b = u[std::min(i + 1, u.size() - 1)];
    best = std::max(best, golden_max(average, a, b, options.tol));
  }
  return best;
}

double maximal_function_at(const RadialDensity& f, Dimension n, const TestFunctionSpec& g,
                           double rho, const MaximalOptions& options) {
  return std::exp(log_maximal_function_at(f, n, g, rho, options));
}

std::vector<double> InclusionReport::failures() const {
  std::vector<double> out;
  for (const auto& point : points) {
    if (!point.ok) out.push_back(point.rho);
  }
  return out;
}

double InclusionReport::min_slack() const {
  double slack = std::numeric_limits<double>::infinity();
  for (const auto& point : points) slack = std::min(slack, point.slack);
  return slack;
}

InclusionReport verify_level_set_inclusion(const RadialDensity& f, Dimension n, double R,
                                           double r, std::size_t radii,
                                           const MaximalOptions& options) {
  require_oracle_dimension(n);
  if (!(r > 0.0 && r < R) || !std::isfinite(R)) {
    throw DomainError("level-set inclusion requires 0 < r < R");
  }
  if (radii < 2) throw DomainError("level-set inclusion needs >= 2 radii");
  InclusionReport report{R, r, 0.0, {}};
  report.log_threshold = -off_center_ball_measure(f, GeometrySpec(n, R, R + r)).log();
  const TestFunctionSpec g(r);
  const double top = R * (1.0 - 1e-6);
  report.points.resize(radii);
  parallel_for(radii, 0, [&](std::size_t i) {
    const double rho = top * static_cast<double>(i) / static_cast<double>(radii - 1);
    const double log_value = log_maximal_function_at(f, n, g, rho, options);
    const double slack = log_value - report.log_threshold;
    report.points[i] = {rho, log_value, slack, slack > 0.0};
  });
  return report;
}

std::vector<double> profile_grid(const RadialDensity& f, Dimension n, double r,
                                 const ProfileOptions& options) {
  if (options.points < 2) throw DomainError("profile grid needs >= 2 points");
  const double top = effective_radius(f, n);
  std::vector<double> grid;
  grid.reserve(options.points + options.extra_radii.size() + 1);
  const auto m = static_cast<double>(options.points - 1);
  if (options.focus > 0.0 && options.focus < top) {
    const std::size_t inner = options.points / 2;
    for (std::size_t i = 0; i <= inner; ++i) {
      const double u = static_cast<double>(i) / static_cast<double>(inner);
      grid.push_back(options.focus * 0.5 * (1.0 - std::cos(std::numbers::pi * u)));
    }
    const std::size_t outer = options.points - 1 - inner;
    for (std::size_t j = 1; j <= outer; ++j) {
      const double u = static_cast<double>(j) / static_cast<double>(outer);
      grid.push_back(options.focus + (top - options.focus) * u * u);
    }
  } else {
    for (std::size_t i = 0; i < options.points; ++i) {
      const double u = static_cast<double>(i) / m;
      grid.push_back(top * u * u);
    }
  }
  grid.push_back(r);
  for (double extra : options.extra_radii) {
    if (!(extra >= 0.0) || !std::isfinite(extra)) throw DomainError("extra radii must be >= 0");
    grid.push_back(extra);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

RadialProfile maximal_function_profile(const RadialDensity& f, Dimension n,
                                       const TestFunctionSpec& g,
                                       const ProfileOptions& options) {
  require_oracle_dimension(n);
  std::vector<double> grid = profile_grid(f, n, g.r, options);
  std::vector<double> values(grid.size());
  parallel_for(grid.size(), 0, [&](std::size_t i) {
    values[i] = maximal_function_at(f, n, g, grid[i], options.maximal);
  });
  return RadialProfile(std::move(grid), std::move(values));
}

double empirical_constant_from_profile(const RadialDensity& f, Dimension n,
                                       const TestFunctionSpec& g, double p,
                                       const RadialProfile& profile) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("p must be a finite real >= 1");
  if (profile.grid.size() < 2) throw DomainError("profile needs >= 2 points");
  const double log_small = log_ball_measure(f, n, g.r).log();
  const double log_total = log_total_measure(f, n).log();
  // On the open ball B_r, M g equals its supremum 1/μ(B_r); beyond r the
  // profile is read as nonincreasing between grid points.
  const auto cell_log_value = [&](std::size_t i) {
    if (profile.grid[i] <= g.r) return -log_small;
    return std::log(std::min(profile.values[i - 1], profile.values[i]));
  };

  if (p == 1.0) {
    double best = 0.0;  // τ = 1/μ(ℝⁿ) gives τ μ(ℝⁿ) = 1 - checked below
    double level = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < profile.grid.size(); ++i) {
      level = std::min(level, cell_log_value(i));
      best = std::max(best, level + log_ball_measure(f, n, profile.grid[i]).log());
    }
    return std::exp(best);
  }

  double log_sum = kNegInf;
  for (std::size_t i = 1; i < profile.grid.size(); ++i) {
    const double log_mass =
        log_annulus_measure(f, n, profile.grid[i - 1], profile.grid[i]).log();
    log_sum = log_add(log_sum, p * cell_log_value(i) + log_mass);
  }
  // M g >= 1/μ(ℝⁿ) everywhere (t → ∞).
  const double log_tail =
      log_annulus_measure(f, n, profile.grid.back(), std::numeric_limits<double>::infinity())
          .log();
  log_sum = log_add(log_sum, -p * log_total + log_tail);
  return std::exp((log_sum - (1.0 - p) * log_small) / p);
}

double empirical_constant_lower_bound(const RadialDensity& f, Dimension n,
                                      const TestFunctionSpec& g, double p,
                                      const ProfileOptions& options) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("p must be a finite real >= 1");
  const RadialProfile profile = maximal_function_profile(f, n, g, options);
  return empirical_constant_from_profile(f, n, g, p, profile);
}

MonteCarloResult monte_carlo_ball_measure(const RadialDensity& f, Dimension n, double d,
                                          double t, std::uint64_t samples,
                                          std::uint64_t seed, unsigned workers) {
  if (n.value() < 2 || n.value() > kOracleMaxDimension) {
    throw DomainError("Monte Carlo requires 2 <= n <= 6");
  }
  if (samples < 10'000) throw DomainError("Monte Carlo requires >= 10^4 samples");
  if (!(d >= 0.0) || !(t > 0.0) || !std::isfinite(d) || !std::isfinite(t)) {
    throw DomainError("Monte Carlo requires d >= 0 and t > 0");
  }
  if (!f.is_finite(n)) throw NonFiniteMeasure("Monte Carlo requires a finite measure");

  constexpr std::size_t kKnots = 10'000;
  const double top = effective_radius(f, n);
  const double step = top / static_cast<double>(kKnots);
  const double log_total = log_total_measure(f, n).log();
  if (log_total == kNegInf) throw DomainError("Monte Carlo on a zero-mass density");
  std::vector<double> cdf(kKnots + 1, 0.0);
  for (std::size_t j = 1; j <= kKnots; ++j) {
    const double lo = step * static_cast<double>(j - 1);
    const double hi = j == kKnots ? top : step * static_cast<double>(j);
    cdf[j] = cdf[j - 1] + std::exp(log_annulus_measure(f, n, lo, hi).log() - log_total);
  }
  const double mass = cdf.back();
  if (!(mass > 0.0)) throw DomainError("Monte Carlo on a zero-mass density");

  const std::uint64_t chunks = (samples + kMonteCarloChunk - 1) / kMonteCarloChunk;
  std::vector<std::uint64_t> hits(chunks, 0);
  const auto dim = static_cast<std::size_t>(n.value());
  const double d2_minus_t2 = d * d - t * t;
  parallel_for(chunks, workers, [&](std::size_t c) {
    std::seed_seq sequence{static_cast<std::uint32_t>(seed),
                           static_cast<std::uint32_t>(seed >> 32),
                           static_cast<std::uint32_t>(c)};
    std::mt19937_64 engine(sequence);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::normal_distribution<double> normal(0.0, 1.0);
    const std::uint64_t begin = c * kMonteCarloChunk;
    const std::uint64_t count = std::min(kMonteCarloChunk, samples - begin);
    std::uint64_t local = 0;
    for (std::uint64_t k = 0; k < count; ++k) {
      const double u = uniform(engine) * mass;
      const auto it = std::upper_bound(cdf.begin() + 1, cdf.end() - 1, u);
      const auto j = static_cast<std::size_t>(it - cdf.begin());
      const double width = cdf[j] - cdf[j - 1];
      const double frac = width > 0.0 ? (u - cdf[j - 1]) / width : 0.0;
      const double s = step * (static_cast<double>(j - 1) + std::clamp(frac, 0.0, 1.0));
      double first = normal(engine);
      double norm2 = first * first;
      for (std::size_t i = 1; i < dim; ++i) {
        const double z = normal(engine);
        norm2 += z * z;
      }
      const double cosine = first / std::sqrt(norm2);
      if (s * s - 2.0 * s * d * cosine + d2_minus_t2 <= 0.0) ++local;
    }
    hits[c] = local;
  });
  const std::uint64_t total_hits = std::accumulate(hits.begin(), hits.end(), std::uint64_t{0});
  const double estimate = static_cast<double>(total_hits) / static_cast<double>(samples);
  const double variance = estimate * (1.0 - estimate) / static_cast<double>(samples - 1);
  return {estimate, std::sqrt(std::max(variance, 0.0)), samples, total_hits};
}

}  // namespace radmax
