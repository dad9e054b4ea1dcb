#include "radmax/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

namespace radmax {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Kronrod 15-point abscissae (positive half); odd indices are Gauss 7 nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureOptions& options) {
  QuadratureResult result;
  if (a == b) return result;
  if (a > b) {
    result = integrate(f, b, a, options);
    result.value = -result.value;
    return result;
  }

  std::priority_queue<Segment> heap;
  Segment first = gk15(f, a, b);
  result.evaluations = 15;
  double total = first.value;
  double error = first.error;
  heap.push(first);

  const auto done = [&] {
    return error <= std::max(options.abs_tol, options.rel_tol * std::abs(total));
  };
  while (!done()) {
    if (result.evaluations + 30 > options.max_evaluations) {
      result.converged = false;
      break;
    }
    Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Interval exhausted at machine resolution.
      result.converged = false;
      break;
    }
    heap.pop();
    Segment left = gk15(f, worst.a, mid);
    Segment right = gk15(f, mid, worst.b);
    result.evaluations += 30;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum to shed accumulated cancellation in the running totals.
  total = 0.0;
  error = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  result.value = total;
  result.error = error;
  return result;
}

namespace {

// Golden-section maximisation of a locally unimodal function.
double golden_max(const std::function<double(double)>& g, double lo, double hi,
                  int iterations, std::size_t& evals) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double gc = g(c);
  double gd = g(d);
  evals += 2;
  for (int i = 0; i < iterations; ++i) {
    if (gc >= gd) {
      hi = d;
      d = c;
      gd = gc;
      c = hi - inv_phi * (hi - lo);
      gc = g(c);
    } else {
      lo = c;
      c = d;
      gc = gd;
      d = lo + inv_phi * (hi - lo);
      gd = g(d);
    }
    ++evals;
  }
  return gc >= gd ? c : d;
}

// Returns the point on [outside, inside] where g crosses `level`, biased to
// the outside so that the kept interval never loses mass above `level`.
double locate_level(const std::function<double(double)>& g, double outside,
                    double inside, double level, std::size_t& evals) {
  const double width = std::abs(inside - outside);
  for (int i = 0; i < 60 && std::abs(inside - outside) > 1e-4 * width; ++i) {
    const double mid = 0.5 * (outside + inside);
    ++evals;
    if (g(mid) < level) {
      outside = mid;
    } else {
      inside = mid;
    }
  }
  return outside;
}

}  // namespace

LogQuadratureResult log_integrate(const std::function<double(double)>& log_f,
                                  double a, double b,
                                  const LogIntegrateOptions& options) {
  LogQuadratureResult result;
  if (!(b > a)) {
    result.log_value = kNegInf;
    return result;
  }

  double peak_x = 0.0;
  double peak = kNegInf;
  // Probe points kept sorted by abscissa; used to bracket truncation levels.
  std::vector<std::pair<double, double>> probes;
  if (options.peak) {
    peak_x = std::clamp(*options.peak, a, b);
    peak = log_f(peak_x);
    result.evaluations = 1;
  } else {
    const std::size_t count = std::max<std::size_t>(options.probes, 3);
    probes.reserve(count + 1);
    std::size_t best = 0;
    for (std::size_t i = 0; i < count; ++i) {
      const double x =
          a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1);
      const double v = log_f(x);
      probes.emplace_back(x, v);
      if (v > probes[best].second) best = i;
    }
    result.evaluations = count;
    peak_x = probes[best].first;
    peak = probes[best].second;
    if (peak == kNegInf) {
      result.log_value = kNegInf;
      return result;
    }
    const double lo = probes[best == 0 ? 0 : best - 1].first;
    const double hi = probes[std::min(best + 1, count - 1)].first;
    const double x = golden_max(log_f, lo, hi, 30, result.evaluations);
    const double v = log_f(x);
    ++result.evaluations;
    if (v > peak) {
      peak = v;
      peak_x = x;
      probes.insert(std::upper_bound(probes.begin(), probes.end(),
                                     std::make_pair(x, kNegInf)),
                    {x, v});
    }
  }
  if (peak == kNegInf) {
    result.log_value = kNegInf;
    return result;
  }

  double lo = a;
  double hi = b;
  if (options.truncation > 0.0) {
    const double level = peak - options.truncation;
    if (options.peak) {
      if (log_f(a) < level) lo = locate_level(log_f, a, peak_x, level, result.evaluations);
      if (log_f(b) < level) hi = locate_level(log_f, b, peak_x, level, result.evaluations);
      result.evaluations += 2;
    } else {
      std::size_t first = 0;
      while (probes[first].second < level) ++first;
      if (first > 0) {
        lo = locate_level(log_f, probes[first - 1].first, probes[first].first,
                          level, result.evaluations);
      }
      std::size_t last = probes.size() - 1;
      while (probes[last].second < level) --last;
      if (last + 1 < probes.size()) {
        hi = locate_level(log_f, probes[last + 1].first, probes[last].first,
                          level, result.evaluations);
      }
    }
  }

  const auto shifted = [&](double x) {
    const double v = log_f(x);
    return v == kNegInf ? 0.0 : std::exp(v - peak);
  };
  QuadratureResult q;
  if (options.smooth_endpoints) {
    const double half = 0.5 * (hi - lo);
    q = integrate(
        [&](double u) {
          const double x = lo + half * (1.0 - std::cos(u));
          return shifted(std::clamp(x, lo, hi)) * half * std::sin(u);
        },
        0.0, std::numbers::pi, options.quadrature);
  } else {
    q = integrate(shifted, lo, hi, options.quadrature);
  }
  result.evaluations += q.evaluations;
  result.converged = q.converged;
  result.rel_error = q.value > 0.0 ? q.error / q.value : 0.0;
  result.log_value = q.value > 0.0 ? peak + std::log(q.value) : kNegInf;
  return result;
}

}  // namespace radmax
