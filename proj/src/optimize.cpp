#include "radmax/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "radmax/errors.hpp"
#include "radmax/geometry.hpp"

namespace radmax {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kLambdaEpsilon = 1e-9;

struct Candidate {
  double x;
  double value;
};

// Golden-section search on [a, b] that also considers both endpoints, so a
// supremum sitting on the edge of a piece is found.
Candidate golden_piece(const std::function<double(double)>& f, double a, double b,
                       double tol, std::size_t& evals) {
  const auto safe = [&](double x) {
    ++evals;
    const double v = f(x);
    return std::isfinite(v) ? v : kNegInf;
  };
  Candidate best{a, safe(a)};
  const double vb = safe(b);
  if (vb > best.value) best = {b, vb};
  if (!(b > a)) return best;

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = a;
  double hi = b;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = safe(c);
  double fd = safe(d);
  while (hi - lo > tol) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = safe(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = safe(d);
    }
    if (c == d) break;
  }
  const Candidate inner = fc >= fd ? Candidate{c, fc} : Candidate{d, fd};
  if (inner.value > best.value || (inner.value == best.value && inner.x < best.x)) {
    best = inner;
  }
  return best;
}

// Splits [a, b] at every change of the piece label. Each returned interval
// carries endpoints evaluated inside its own piece.
void split_pieces(const std::function<long(double)>& piece, double a, double b,
                  std::vector<std::pair<double, double>>& out,
                  std::vector<double>& jumps) {
  const long label_a = piece(a);
  if (piece(b) == label_a) {
    out.emplace_back(a, b);
    return;
  }
  // Bisect for the first label change after a.
  double left = a;
  double right = b;
  while (true) {
    const double mid = 0.5 * (left + right);
    if (mid <= left || mid >= right) break;
    if (piece(mid) == label_a) {
      left = mid;
    } else {
      right = mid;
    }
  }
  out.emplace_back(a, left);
  jumps.push_back(right);
  split_pieces(piece, right, b, out, jumps);
}

}  // namespace

SupremumResult maximize_scalar(const std::function<double(double)>& objective, double lo,
                               double hi, double tol, const MaximizeOptions& options) {
  if (!(lo < hi)) throw DomainError("maximize_scalar: need lo < hi");
  if (!(tol > 0.0)) throw DomainError("maximize_scalar: tolerance must be positive");
  const std::size_t count = std::max<std::size_t>(options.grid, 3);

  SupremumResult result;
  std::vector<double> xs(count);
  std::size_t best = count;
  double best_value = kNegInf;
  for (std::size_t i = 0; i < count; ++i) {
    xs[i] = i + 1 == count
                ? hi
                : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    const double v = objective(xs[i]);
    if (std::isfinite(v) && (best == count || v > best_value)) {
      best = i;
      best_value = v;
    }
  }
  result.evaluations = count;
  if (best == count) throw NumericalError("maximize_scalar: objective non-finite everywhere");

  Candidate winner{xs[best], best_value};
  double win_lo = xs[best];
  double win_hi = xs[best];
  std::vector<std::pair<double, double>> cells;
  if (best > 0) cells.emplace_back(xs[best - 1], xs[best]);
  if (best + 1 < count) cells.emplace_back(xs[best], xs[best + 1]);

  for (const auto& [a, b] : cells) {
    std::vector<std::pair<double, double>> pieces;
    if (options.piece) {
      split_pieces(options.piece, a, b, pieces, result.discontinuities);
    } else {
      pieces.emplace_back(a, b);
    }
    for (const auto& [pa, pb] : pieces) {
      const Candidate c = golden_piece(objective, pa, pb, tol, result.evaluations);
      if (c.value > winner.value || (c.value == winner.value && c.x < winner.x)) {
        winner = c;
        win_lo = pa;
        win_hi = pb;
      }
    }
  }
  if (win_lo == win_hi) {
    win_lo = best > 0 ? xs[best - 1] : xs[best];
    win_hi = best + 1 < count ? xs[best + 1] : xs[best];
  }
  std::sort(result.discontinuities.begin(), result.discontinuities.end());
  result.argmax = winner.x;
  result.value = objective(winner.x);
  ++result.evaluations;
  result.bracket_lo = win_lo;
  result.bracket_hi = win_hi;
  return result;
}

double find_root(const std::function<double(double)>& g, double lo, double hi,
                 double tol) {
  if (!(lo <= hi)) throw DomainError("find_root: need lo <= hi");
  double g_lo = g(lo);
  const double g_hi = g(hi);
  if (g_lo == 0.0) return lo;
  if (g_hi == 0.0) return hi;
  if (std::isnan(g_lo) || std::isnan(g_hi) || (g_lo > 0.0) == (g_hi > 0.0)) {
    throw BracketError("find_root: no sign change on [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double g_mid = g(mid);
    if (g_mid == 0.0) return mid;
    if ((g_mid > 0.0) == (g_lo > 0.0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

ExponentKind parse_exponent_kind(const std::string& name) {
  if (name == "general") return ExponentKind::General;
  if (name == "gaussian-lower") return ExponentKind::GaussianLower;
  if (name == "gaussian-upper") return ExponentKind::GaussianUpper;
  if (name == "unitball") return ExponentKind::UnitBall;
  throw DomainError("unknown exponent target: " + name);
}

std::string to_string(ExponentKind kind) {
  switch (kind) {
    case ExponentKind::General:
      return "general";
    case ExponentKind::GaussianLower:
      return "gaussian-lower";
    case ExponentKind::GaussianUpper:
      return "gaussian-upper";
    case ExponentKind::UnitBall:
      return "unitball";
  }
  return "unknown";
}

double lambda_search_lo() { return kLambdaEpsilon; }
double lambda_search_hi() { return std::numbers::sqrt2 - 1.0 - kLambdaEpsilon; }

namespace {

struct ConeAngle {
  double cos;
  double log_sin;
};

ConeAngle concentric(double lambda) {
  const double c = beta0_concentric(lambda).cos();
  return {c, log_sin_from_cos(c)};
}

// Gaussian growth exponent split as -a + q b, q = (p-1)/p.
struct GaussianExponent {
  double a;
  double b;
};

GaussianExponent gaussian_exponent(double lambda) {
  const auto [c, log_s] = concentric(lambda);
  const double decay = std::exp(-c * c);
  return {0.5 * c * c * decay + log_s, 0.5 * decay * (1.0 - lambda * lambda) + std::log(lambda)};
}

// Largest p with q·log_a_term > log_s_term, i.e. log A / log(A/s).
double ratio_objective(double log_a, double log_s) {
  const double denom = log_a - log_s;
  if (!(denom < 0.0)) return std::numeric_limits<double>::infinity();
  return log_a / denom;
}

}  // namespace

long balance_integer(double lambda) {
  const double log_s = concentric(lambda).log_sin;
  return static_cast<long>(std::ceil(-std::log(2.0 + lambda) / log_s));
}

double critical_objective(ExponentKind kind, double lambda) {
  switch (kind) {
    case ExponentKind::General: {
      const double log_s = concentric(lambda).log_sin;
      const double k = 1.0 / (1.0 + static_cast<double>(balance_integer(lambda)));
      return ratio_objective(std::log(lambda), k * log_s);
    }
    case ExponentKind::GaussianLower: {
      // α = exp(-a + q b) > 1  ⇔  q < a / b  ⇔  p < b / (b - a).
      const auto [a, b] = gaussian_exponent(lambda);
      if (a >= 0.0) return 1.0;
      if (b >= 0.0) return std::numeric_limits<double>::infinity();
      if (b - a >= 0.0) return std::numeric_limits<double>::infinity();
      return b / (b - a);
    }
    case ExponentKind::GaussianUpper: {
      const double log_s = concentric(lambda).log_sin;
      const double log_a = 0.5 * (1.0 - lambda * lambda) + std::log(lambda);
      return ratio_objective(log_a, log_s);
    }
    case ExponentKind::UnitBall: {
      const double log_s = log_sin_from_cos(beta0_unit_ball(1.0, lambda).cos());
      return ratio_objective(std::log(lambda), log_s);
    }
  }
  return 1.0;
}

double log_growth_base(ExponentKind kind, double p, double lambda) {
  if (!(p >= 1.0)) throw DomainError("growth base requires p >= 1");
  const double q = (p - 1.0) / p;
  switch (kind) {
    case ExponentKind::General: {
      const double log_s = concentric(lambda).log_sin;
      const double k = 1.0 / (1.0 + static_cast<double>(balance_integer(lambda)));
      return q * std::log(lambda) - k * log_s;
    }
    case ExponentKind::GaussianLower: {
      const auto [a, b] = gaussian_exponent(lambda);
      return -a + q * b;
    }
    case ExponentKind::GaussianUpper: {
      const double log_s = concentric(lambda).log_sin;
      return q * (0.5 * (1.0 - lambda * lambda) + std::log(lambda)) - log_s;
    }
    case ExponentKind::UnitBall: {
      const double log_s = log_sin_from_cos(beta0_unit_ball(1.0, lambda).cos());
      return q * std::log(lambda) - log_s;
    }
  }
  return 0.0;
}

double gaussian_ratio_objective(double lambda) {
  const auto [c, log_s] = concentric(lambda);
  const double sin2 = std::exp(2.0 * log_s);
  return ratio_objective(std::log(lambda) - c * c * (sin2 - lambda * lambda), log_s);
}

SupremumResult critical_exponent(ExponentKind kind, const SearchSettings& settings) {
  MaximizeOptions options;
  options.grid = settings.grid;
  if (kind == ExponentKind::General) options.piece = balance_integer;
  return maximize_scalar([kind](double lambda) { return critical_objective(kind, lambda); },
                         lambda_search_lo(), lambda_search_hi(), settings.tol, options);
}

SupremumResult p0_general(const SearchSettings& settings) {
  return critical_exponent(ExponentKind::General, settings);
}
SupremumResult p0_gaussian(const SearchSettings& settings) {
  return critical_exponent(ExponentKind::GaussianLower, settings);
}
SupremumResult p1_gaussian(const SearchSettings& settings) {
  return critical_exponent(ExponentKind::GaussianUpper, settings);
}
SupremumResult p0_unitball(const SearchSettings& settings) {
  return critical_exponent(ExponentKind::UnitBall, settings);
}

}  // namespace radmax
