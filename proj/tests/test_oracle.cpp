#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "radmax/bounds.hpp"
#include "radmax/errors.hpp"
#include "radmax/geometry.hpp"
#include "radmax/oracle.hpp"

using namespace radmax;

TEST_CASE("maximal function at the centre") {
  const auto unit = RadialDensity::unit_ball_indicator();
  const TestFunctionSpec g(0.3);
  const double expected = -log_ball_measure(unit, Dimension(3), 0.3).log();
  CHECK(log_maximal_function_at(unit, Dimension(3), g, 0.0) == doctest::Approx(expected));
}

TEST_CASE("maximal function in one dimension matches an interval scan") {
  const auto unit = RadialDensity::unit_ball_indicator();
  for (double rho : {0.1, 0.5, 0.9}) {
    const double got = maximal_function_at(unit, Dimension(1), TestFunctionSpec(0.2), rho);
    CHECK(got == doctest::Approx(oracles::interval_maximal(rho, 0.2)).epsilon(1e-5));
  }
}

TEST_CASE("maximal function bounds") {
  const auto gauss = RadialDensity::gaussian();
  const TestFunctionSpec g(0.25);
  const double cap = -log_ball_measure(gauss, Dimension(3), 0.25).log();
  for (double rho : {0.0, 0.2, 0.6, 1.0}) {
    const double v = log_maximal_function_at(gauss, Dimension(3), g, rho);
    CHECK(v <= cap + 1e-12);
    // The ball touching B_r from the far side is one candidate.
    const double touch = -off_center_ball_measure(gauss, GeometrySpec(Dimension(3), rho, rho + 0.25)).log();
    CHECK(v >= touch - 1e-12);
  }
  CHECK_THROWS_AS(log_maximal_function_at(gauss, Dimension(7), g, 0.1), DomainError);
}

TEST_CASE("level-set inclusion examples") {
  MaximalOptions fast;
  fast.grid = 128;
  const auto unit = RadialDensity::unit_ball_indicator();
  const auto r1 = verify_level_set_inclusion(unit, Dimension(2), 1.0, 0.15, 16, fast);
  CHECK(r1.all_ok());
  CHECK(r1.min_slack() > 0.0);
  const auto gauss = RadialDensity::gaussian();
  CHECK(verify_level_set_inclusion(gauss, Dimension(3), 1.0, 0.2, 12, fast).all_ok());
  CHECK(verify_level_set_inclusion(gauss, Dimension(2), 1.0, 0.999, 12, fast).all_ok());
  CHECK_THROWS_AS(verify_level_set_inclusion(gauss, Dimension(2), 1.0, 1.0), DomainError);
}

TEST_CASE("empirical constant lower bounds") {
  const auto unit = RadialDensity::unit_ball_indicator();
  const TestFunctionSpec g(0.15);
  ProfileOptions options;
  options.points = 40;
  options.focus = 1.0;
  options.extra_radii = {1.0};
  options.maximal.grid = 128;
  const RadialProfile profile = maximal_function_profile(unit, Dimension(2), g, options);
  const double cap = 1.0 / log_ball_measure(unit, Dimension(2), 0.15).value();
  for (double v : profile.values) CHECK(v <= cap * (1.0 + 1e-12));

  const double strong = empirical_constant_from_profile(unit, Dimension(2), g, 1.5, profile);
  CHECK(strong >= T_exact(unit, Dimension(2), 1.5, 1.0, 0.15).value());
  CHECK(strong >= 1.0);

  const double weak = empirical_constant_from_profile(unit, Dimension(2), g, 1.0, profile);
  const double chain = std::exp(log_ball_measure(unit, Dimension(2), 1.0).log() -
                                off_center_ball_measure(unit, GeometrySpec(Dimension(2), 1.0, 1.15)).log());
  CHECK(weak >= chain);
  CHECK(weak >= 1.0);
}

TEST_CASE("empirical constant is at least one on random configurations") {
  const auto gauss = RadialDensity::gaussian();
  ProfileOptions options;
  options.points = 24;
  options.maximal.grid = 96;
  const double rs[] = {0.1, 0.3, 0.6, 0.9, 1.4};
  const double ps[] = {1.01, 1.3, 2.0, 1.0, 3.0};
  for (int i = 0; i < 5; ++i) {
    const long n = 1 + i % 3;
    CHECK(empirical_constant_lower_bound(gauss, Dimension(n), TestFunctionSpec(rs[i]), ps[i],
                                         options) >= 1.0 - 1e-12);
  }
}

TEST_CASE("profile grid") {
  ProfileOptions options;
  options.points = 10;
  options.extra_radii = {0.33};
  const auto grid = profile_grid(RadialDensity::unit_ball_indicator(), Dimension(2), 0.2, options);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == 1.0);
  CHECK(std::find(grid.begin(), grid.end(), 0.2) != grid.end());
  CHECK(std::find(grid.begin(), grid.end(), 0.33) != grid.end());
  CHECK(std::is_sorted(grid.begin(), grid.end()));
  CHECK_THROWS_AS(RadialProfile({0.0, 0.0}, {1.0, 1.0}), DomainError);
}

TEST_CASE("Monte Carlo ball measure") {
  const auto unit = RadialDensity::unit_ball_indicator();
  const auto all = monte_carlo_ball_measure(unit, Dimension(3), 0.0, 1.5, 20'000, 7);
  CHECK(all.estimate == 1.0);
  CHECK(all.standard_error == 0.0);

  const auto gauss = RadialDensity::gaussian();
  const auto a = monte_carlo_ball_measure(gauss, Dimension(3), 0.7, 1.2, 1'000'000, 99);
  const auto b = monte_carlo_ball_measure(gauss, Dimension(3), 0.7, 1.2, 1'000'000, 99, 3);
  CHECK(a.hits == b.hits);
  CHECK(a.estimate == b.estimate);
  const double exact = oracles::gaussian3_ball(0.7, 1.2);
  CHECK(std::abs(a.estimate - exact) <= 3.0 * a.standard_error);

  const auto lens = monte_carlo_ball_measure(unit, Dimension(2), 1.0, 1.0, 1'000'000, 5);
  const double lens_exact = oracles::lens_area(1.0, 1.0, 1.0) / std::numbers::pi;
  CHECK(std::abs(lens.estimate - lens_exact) <= 3.0 * lens.standard_error);

  CHECK_THROWS_AS(monte_carlo_ball_measure(gauss, Dimension(3), 0.7, 1.2, 100, 1), DomainError);
  CHECK_THROWS_AS(monte_carlo_ball_measure(gauss, Dimension(7), 0.7, 1.2, 20'000, 1), DomainError);
}
