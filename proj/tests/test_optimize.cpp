#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "radmax/errors.hpp"
#include "radmax/optimize.hpp"

using namespace radmax;

TEST_CASE("maximize_scalar on smooth and kinked objectives") {
  const auto r = maximize_scalar([](double x) { return -(x - 0.3) * (x - 0.3); }, 0.0, 1.0, 1e-12);
  CHECK(r.argmax == doctest::Approx(0.3).epsilon(1e-6));
  CHECK(r.value == doctest::Approx(0.0));
  CHECK(r.bracket_lo <= r.argmax);
  CHECK(r.argmax <= r.bracket_hi);

  const auto kink = maximize_scalar([](double x) { return -std::abs(x - 0.123456); }, -1.0, 2.0,
                                    1e-12);
  CHECK(kink.argmax == doctest::Approx(0.123456).epsilon(1e-8));
}

TEST_CASE("maximize_scalar finds a supremum sitting at a jump") {
  // Increasing ramp that drops at x = 0.4123: supremum approached from the left.
  const auto f = [](double x) { return x < 0.4123 ? x : x - 1.0; };
  MaximizeOptions options;
  options.piece = [](double x) { return x < 0.4123 ? 0L : 1L; };
  const auto r = maximize_scalar(f, 0.0, 1.0, 1e-13, options);
  CHECK(r.value == doctest::Approx(0.4123).epsilon(1e-9));
  REQUIRE(!r.discontinuities.empty());
  CHECK(r.discontinuities.front() == doctest::Approx(0.4123).epsilon(1e-9));
}

TEST_CASE("find_root bisection") {
  CHECK(find_root([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-14) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
  CHECK_THROWS_AS(find_root([](double x) { return x * x + 1.0; }, -1.0, 1.0, 1e-10),
                  BracketError);
}

TEST_CASE("balance integer") {
  CHECK(balance_integer(0.2) == 20);
  for (double lambda : {0.01, 0.1, 0.3, 0.4}) {
    const long l = balance_integer(lambda);
    const double s = std::sqrt(1.0 - std::pow(1.0 - (1.0 + lambda) * (1.0 + lambda) / 2.0, 2));
    CHECK(std::pow(s, -static_cast<double>(l)) >= 2.0 + lambda);
    CHECK(std::pow(s, -static_cast<double>(l - 1)) < 2.0 + lambda);
  }
}

TEST_CASE("exponent kind names") {
  for (auto kind : {ExponentKind::General, ExponentKind::GaussianLower,
                    ExponentKind::GaussianUpper, ExponentKind::UnitBall}) {
    CHECK(parse_exponent_kind(to_string(kind)) == kind);
  }
  CHECK_THROWS_AS(parse_exponent_kind("other"), DomainError);
}

TEST_CASE("critical exponents match reference values") {
  CHECK(std::abs(p0_general().value - 1.005274) < 1e-6);
  CHECK(std::abs(p0_gaussian().value - 1.011871) < 1e-6);
  CHECK(std::abs(p1_gaussian().value - 1.049427) < 1e-6);
  CHECK(std::abs(p0_unitball().value - 1.03946) < 1e-5);
}

TEST_CASE("critical exponents dominate a dense brute-force scan") {
  for (auto kind : {ExponentKind::General, ExponentKind::GaussianLower,
                    ExponentKind::GaussianUpper, ExponentKind::UnitBall}) {
    const double scan =
        oracles::scan_max([&](double x) { return critical_objective(kind, x); },
                          lambda_search_lo(), lambda_search_hi(), 200'000);
    const double found = critical_exponent(kind).value;
    CHECK(found >= scan - 1e-12);
    CHECK(found - scan < 1e-6);
  }
}

TEST_CASE("criticality sandwich of the growth bases") {
  for (auto kind : {ExponentKind::General, ExponentKind::GaussianLower,
                    ExponentKind::GaussianUpper, ExponentKind::UnitBall}) {
    const auto best = critical_exponent(kind);
    CHECK(log_growth_base(kind, best.value - 1e-3, best.argmax) > 0.0);
    const double sup_above = oracles::scan_max(
        [&](double x) { return log_growth_base(kind, best.value + 1e-3, x); },
        lambda_search_lo(), lambda_search_hi(), 100'000);
    CHECK(sup_above <= std::log1p(1e-6));
  }
}

TEST_CASE("Gaussian ratio objective differs from the growth condition") {
  const auto ratio = maximize_scalar(gaussian_ratio_objective, lambda_search_lo(),
                                       lambda_search_hi(), 1e-12);
  CHECK(ratio.value == doctest::Approx(1.0373).epsilon(1e-3));
  CHECK(std::abs(ratio.value - p0_gaussian().value) > 0.02);
}

TEST_CASE("p0 is deterministic") {
  const auto a = p0_general();
  const auto b = p0_general();
  CHECK(a.value == b.value);
  CHECK(a.argmax == b.argmax);
  CHECK(a.evaluations == b.evaluations);
}
