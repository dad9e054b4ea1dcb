#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "radmax/radial_measure.hpp"

namespace radmax {

/// The normalized indicator g = χ_{B_r} / μ(B_r).
struct TestFunctionSpec {
  explicit TestFunctionSpec(double r);
  double r;
};

/// A radial function sampled on a strictly increasing grid of radii.
struct RadialProfile {
  RadialProfile(std::vector<double> grid, std::vector<double> values);
  std::vector<double> grid;
  std::vector<double> values;
};

inline constexpr long kOracleMaxDimension = 6;

struct MaximalOptions {
  std::size_t grid = 512;
  double tol = 1e-10;
};

/// log M_μ g(ρ ξ): sup over t of the μ-average of g on B(ρ ξ, t).
double log_maximal_function_at(const RadialDensity& f, Dimension n,
                               const TestFunctionSpec& g, double rho,
                               const MaximalOptions& options = {});

double maximal_function_at(const RadialDensity& f, Dimension n, const TestFunctionSpec& g,
                           double rho, const MaximalOptions& options = {});

struct InclusionPoint {
  double rho;
  double log_value;
  /// log M g(ρ) + log μ(B̃); positive when the inclusion holds at ρ.
  double slack;
  bool ok;
};

struct InclusionReport {
  double R;
  double r;
  double log_threshold;  // -log μ(B̃)
  std::vector<InclusionPoint> points;
  std::vector<double> failures() const;
  bool all_ok() const { return failures().empty(); }
  double min_slack() const;
};

/// Checks B_R ⊂ {M g > 1/μ(B(Rξ, R + r))} on equispaced radii in [0, R(1 - 1e-6)].
InclusionReport verify_level_set_inclusion(const RadialDensity& f, Dimension n, double R,
                                           double r, std::size_t radii = 64,
                                           const MaximalOptions& options = {});

struct ProfileOptions {
  std::size_t points = 256;
  /// Radius toward which the grid is additionally graded (0 disables).
  double focus = 0.0;
  /// Radii forced into the grid.
  std::vector<double> extra_radii;
  MaximalOptions maximal;
};

/// Default profile grid on [0, effective radius], graded quadratically toward 0
/// and toward `focus`, always containing r and the extra radii.
std::vector<double> profile_grid(const RadialDensity& f, Dimension n, double r,
                                 const ProfileOptions& options);

RadialProfile maximal_function_profile(const RadialDensity& f, Dimension n,
                                       const TestFunctionSpec& g,
                                       const ProfileOptions& options = {});

/// Lower bound on C_{μ,p} witnessed by g. For p > 1 the ratio
/// (∫ (Mg)^p dμ / ∫ g^p dμ)^{1/p} from lower sums over the profile; for p = 1
/// the weak form sup_τ τ μ({Mg ≥ τ}) / ∫ g dμ. Both are invariant under
/// scaling μ, so they equal the values for μ normalized to unit mass.
double empirical_constant_lower_bound(const RadialDensity& f, Dimension n,
                                      const TestFunctionSpec& g, double p,
                                      const ProfileOptions& options = {});

double empirical_constant_from_profile(const RadialDensity& f, Dimension n,
                                       const TestFunctionSpec& g, double p,
                                       const RadialProfile& profile);

struct MonteCarloResult {
  double estimate;
  double standard_error;
  std::uint64_t samples;
  std::uint64_t hits;
};

inline constexpr std::uint64_t kMonteCarloChunk = 1u << 16;

/// Estimate of μ(B(dξ, t)) / μ(ℝⁿ). Radii are drawn by inverse CDF from a
/// 10⁴-knot table of the radial mass, directions from normalized Gaussians.
/// Chunk c of kMonteCarloChunk samples uses mt19937_64 seeded with
/// seed_seq{seed_lo, seed_hi, c}, so the result depends only on the seed.
MonteCarloResult monte_carlo_ball_measure(const RadialDensity& f, Dimension n, double d,
                                          double t, std::uint64_t samples,
                                          std::uint64_t seed, unsigned workers = 0);

}  // namespace radmax
