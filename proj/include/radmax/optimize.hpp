#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace radmax {

/// Outcome of a one-dimensional supremum search.
struct SupremumResult {
  double argmax = 0.0;
  double value = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  std::size_t evaluations = 0;
  /// Points in the refined cells where the objective jumps.
  std::vector<double> discontinuities;
};

struct MaximizeOptions {
  std::size_t grid = 2048;
  /// Integer-valued labelling of the continuous pieces of the objective
  /// (e.g. λ ↦ l(λ)). Jumps are located where the label changes.
  std::function<long(double)> piece;
};

/// Global maximum of `objective` on [lo, hi]: uniform pre-scan, then
/// golden-section refinement of every continuous piece of the two cells
/// adjacent to the best grid point. Ties go to the smallest abscissa.
SupremumResult maximize_scalar(const std::function<double(double)>& objective,
                               double lo, double hi, double tol,
                               const MaximizeOptions& options = {});

/// Bisection root of g on [lo, hi] to argument tolerance `tol`.
/// Throws BracketError when g(lo) and g(hi) have the same strict sign.
double find_root(const std::function<double(double)>& g, double lo, double hi,
                 double tol);

/// The four critical exponents below which the constructive lower bounds
/// grow exponentially in n (or, for GaussianUpper, above which the Gaussian
/// upper bound decays).
enum class ExponentKind { General, GaussianLower, GaussianUpper, UnitBall };

ExponentKind parse_exponent_kind(const std::string& name);
std::string to_string(ExponentKind kind);

/// Open search interval (ε, √2 − 1 − ε) with ε = 1e-9.
double lambda_search_lo();
double lambda_search_hi();

/// l(λ) = ⌈−log(2+λ)/log sin β0⌉ for the concentric β0.
long balance_integer(double lambda);

/// Largest p for which the growth base at λ is > 1 (the per-λ objective whose
/// supremum is the critical exponent).
double critical_objective(ExponentKind kind, double lambda);

/// log of the growth base α(p, λ); exponential growth of the bound iff > 0.
double log_growth_base(ExponentKind kind, double p, double lambda);

/// The objective log(λ e^{-cos²β0(sin²β0-λ²)}) / log(... / sin β0) exactly
/// for the Gaussian case. Its supremum is ≈1.0373, not 1.011871; the
/// Gaussian p0 uses the growth condition of the T lower bound instead.
double gaussian_ratio_objective(double lambda);

struct SearchSettings {
  std::size_t grid = 2048;
  double tol = 1e-12;
};

SupremumResult critical_exponent(ExponentKind kind, const SearchSettings& settings = {});

SupremumResult p0_general(const SearchSettings& settings = {});
SupremumResult p0_gaussian(const SearchSettings& settings = {});
SupremumResult p1_gaussian(const SearchSettings& settings = {});
SupremumResult p0_unitball(const SearchSettings& settings = {});

}  // namespace radmax
