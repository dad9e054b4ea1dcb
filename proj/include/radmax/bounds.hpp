#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "radmax/geometry.hpp"
#include "radmax/logspace.hpp"
#include "radmax/radial_measure.hpp"

namespace radmax {

/// Full record of one lower-bound construction for C_{μ,p}.
///
/// `terms` keeps every intermediate log-quantity of the construction (exact
/// quadrature values and the closed-form estimates they are compared with),
/// in insertion order.
struct BoundReport {
  std::string construction;
  std::string density;
  long n = 0;
  double p = 1.0;
  double lambda = 0.0;
  double beta0 = 0.0;
  std::optional<long> l;
  std::optional<double> k;
  double R = 0.0;
  double r = 0.0;
  std::optional<double> Q;
  double alpha = 0.0;
  double logT_lower = 0.0;
  std::optional<double> logT_exact;
  std::vector<std::pair<std::string, double>> terms;

  std::optional<double> term(const std::string& name) const;
};

/// Default dimension above which quadrature-based T is skipped.
inline constexpr long kExactThreshold = 10'000;

/// log T_{μ,p}(R, r) = log μ(B_R)/μ(B̃) + ((p-1)/p) log μ(B_r)/μ(B_R), with
/// B̃ = B(Rξ, R + r) measured exactly.
LogNonNegative T_exact(const RadialDensity& f, Dimension n, double p, double R, double r);

/// Largest R with μ(B_{R sin β0}) = (sin β0)^{nk} μ(B_R).
double solve_radius_equation(const RadialDensity& f, Dimension n, Angle beta0, double k);

BoundReport theorem1_construction(const RadialDensity& f, Dimension n, double p,
                                  double lambda, long exact_threshold = kExactThreshold);

struct RemarkEntry {
  long n;
  double R;
  double log_f_at_R;
  double log_decay_bound;
  bool monotone_ok;
  bool decay_ok;
};

struct RemarkReport {
  double lambda;
  long l;
  double k;
  std::vector<RemarkEntry> entries;
  bool all_ok() const;
};

/// Balanced radii across dimensions: R_n nondecreasing (up to 1e-3) and
/// f(R_n) <= f(0) (sin β0)^{n(1-k)}.
RemarkReport verify_remark(const RadialDensity& f, const std::vector<long>& dims,
                           double lambda);

/// Mode √((n-1)/(2π)) of the Gaussian radial mass e^{-πs²}s^{n-1}.
double gaussian_mode(Dimension n);

struct LogSandwich {
  double lower;
  double value;
  double upper;
};

/// ω e^{-πρ²} ρⁿ/n <= μ(B_ρ) <= ω e^{-πρ²} ρⁿ for 0 < ρ < R_n.
LogSandwich gaussian_lemma_sandwich(Dimension n, double rho);

struct MassConcentration {
  double log_mass;        // log μ(B_{R_n})
  double log_complement;  // log μ(ℝⁿ \ B_{R_n})
  double lower_bound;     // 1 - 2/(√π √(n-1))
  bool holds;
};

MassConcentration gaussian_mass_concentration(Dimension n);

/// The explicit Gaussian construction R = e^{-cos²β0/2} R_n, r = λR.
BoundReport gaussian_construction(Dimension n, double p, double lambda,
                                  long exact_threshold = kExactThreshold);

/// Closed-form upper bound on log T for the Gaussian, 0 < r < R <= R_n.
double gaussian_upper_construction(Dimension n, double p, double R, double r);

struct LogBounds {
  double lower;
  double upper;
};

/// (R λ^{(p-1)/p}/sin β0)ⁿ <= T <= √π n (R λ^{(p-1)/p}/sin β0)ⁿ, in logs.
LogBounds unitball_sandwich(Dimension n, double p, double R, double lambda);

struct CaseBound {
  int case_id;
  double log_upper;
};

/// Upper bound on log T for the unit-ball measure by the four-way split on
/// (R, λ).
CaseBound unitball_case_analysis(Dimension n, double p, double R, double lambda);

/// Unit-ball construction at (R, λ): the sandwich sides as bounds, plus
/// exact T when n is within the threshold.
BoundReport unitball_construction(Dimension n, double p, double R, double lambda,
                                  long exact_threshold = kExactThreshold);

/// Exact T at a user-supplied (R, r), with density-specific closed-form
/// comparisons in `terms`.
BoundReport exact_report(const RadialDensity& f, Dimension n, double p, double R,
                         double r);

}  // namespace radmax
