#include <cmath>
#include <numbers>

#include "doctest.h"
#include "radmax/quadrature.hpp"

using namespace radmax;

TEST_CASE("integrate reproduces elementary integrals") {
  CHECK(integrate([](double x) { return x * x; }, 0.0, 3.0).value ==
        doctest::Approx(9.0).epsilon(1e-13));
  CHECK(integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi).value ==
        doctest::Approx(2.0).epsilon(1e-12));
  const auto r = integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("integrate flags a hit evaluation cap") {
  QuadratureOptions options;
  options.max_evaluations = 45;
  options.rel_tol = 1e-15;
  const auto r = integrate([](double x) { return std::cos(200.0 * x); }, 0.0, 10.0, options);
  CHECK_FALSE(r.converged);
  CHECK(r.evaluations <= 60);
}

TEST_CASE("log_integrate handles integrands far below underflow") {
  // ∫_0^∞ x^{n-1} e^{-x} dx = (n-1)! with n = 2000: log value ~ 13200.
  const double n = 2000.0;
  const auto log_f = [&](double x) { return (n - 1.0) * std::log(x) - x; };
  const auto r = log_integrate(log_f, 0.0, 10'000.0);
  CHECK(r.log_value == doctest::Approx(std::lgamma(n)).epsilon(1e-12));

  const auto shifted = [&](double x) { return log_f(x) - 1e5; };
  CHECK(log_integrate(shifted, 0.0, 10'000.0).log_value ==
        doctest::Approx(std::lgamma(n) - 1e5).epsilon(1e-12));
}

TEST_CASE("log_integrate with -inf regions and endpoint peaks") {
  const auto step = [](double x) {
    return x < 1.0 ? 0.0 : -std::numeric_limits<double>::infinity();
  };
  CHECK(log_integrate(step, 0.0, 1.0).log_value == doctest::Approx(0.0).epsilon(1e-12));
  const auto decay = [](double x) { return -50.0 * x; };
  CHECK(log_integrate(decay, 0.0, 1.0).log_value ==
        doctest::Approx(std::log((1.0 - std::exp(-50.0)) / 50.0)).epsilon(1e-12));
}
