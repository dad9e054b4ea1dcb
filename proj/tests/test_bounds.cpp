#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "radmax/bounds.hpp"
#include "radmax/errors.hpp"
#include "radmax/optimize.hpp"

using namespace radmax;

namespace {
constexpr double kPi = std::numbers::pi;
const double kSqrt2m1 = std::numbers::sqrt2 - 1.0;
}  // namespace

TEST_CASE("T_exact against disk areas") {
  const auto unit = RadialDensity::unit_ball_indicator();
  const double R = 0.8, r = 0.2, p = 1.5;
  const double big = kPi * R * R;
  const double small = kPi * r * r;
  const double tilde = oracles::lens_area(1.0, R + r, R);
  const double expected = big / tilde * std::pow(small / big, (p - 1.0) / p);
  CHECK(T_exact(unit, Dimension(2), p, R, r).value() == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("T_exact trivial and invalid cases") {
  const auto unit = RadialDensity::unit_ball_indicator();
  CHECK(T_exact(unit, Dimension(4), 1.3, 2.0, 1.0).log() == 0.0);
  CHECK_THROWS_AS(T_exact(unit, Dimension(2), 1.5, 0.5, 0.5), DomainError);
  CHECK_THROWS_AS(T_exact(unit, Dimension(2), 0.9, 0.5, 0.2), DomainError);
  CHECK_THROWS_AS(T_exact(RadialDensity::lebesgue(), Dimension(2), 1.5, 0.5, 0.2),
                  NonFiniteMeasure);
  // p = 1: T is the plain ratio μ(B_R)/μ(B̃).
  const auto g = RadialDensity::gaussian();
  const double ratio = log_ball_measure(g, Dimension(3), 1.0).log() -
                       std::log(oracles::gaussian3_ball(1.0, 1.3));
  CHECK(T_exact(g, Dimension(3), 1.0, 1.0, 0.3).log() == doctest::Approx(ratio).epsilon(1e-9));
}

TEST_CASE("theorem 1 construction at lambda = 0.2") {
  const auto unit = RadialDensity::unit_ball_indicator();
  const auto report = theorem1_construction(unit, Dimension(10), 1.1, 0.2);
  REQUIRE(report.l);
  CHECK(*report.l == 20);
  CHECK(*report.k == doctest::Approx(1.0 / 21.0));
  const double s = 0.96;
  // For the unit ball the balanced radius is sin(β0)^{k-1}.
  CHECK(report.R == doctest::Approx(std::pow(s, *report.k - 1.0)).epsilon(1e-9));
  CHECK(report.r == doctest::Approx(0.2 * report.R));
  CHECK(*report.Q == doctest::Approx(1.0 / (std::sqrt(kPi) * s * 0.28)));
  const double log_alpha = (0.1 / 1.1) * std::log(0.2) - std::log(s) / 21.0;
  CHECK(report.alpha == doctest::Approx(std::exp(log_alpha)));
  CHECK(report.logT_lower == doctest::Approx(-std::log(*report.Q + 1.0) + 10.0 * log_alpha));
  CHECK(*report.term("log_l_condition") >= 0.0);
  CHECK(std::abs(*report.term("radius_equation_residual")) < 1e-8);
  REQUIRE(report.logT_exact);
  CHECK(*report.logT_exact >= report.logT_lower);
}

TEST_CASE("theorem 1 estimate chain for the Gaussian") {
  const auto g = RadialDensity::gaussian();
  for (long n : {5L, 20L, 50L, 200L}) {
    for (double lambda : {0.05, 0.2, 0.4}) {
      const auto rep = theorem1_construction(g, Dimension(n), 1.005, lambda);
      CAPTURE(n);
      CAPTURE(lambda);
      CHECK(std::abs(*rep.term("radius_equation_residual")) < 1e-7);
      CHECK(*rep.term("log_small_ball_ratio") >= *rep.term("log_small_ball_ratio_bound") - 1e-9);
      CHECK(*rep.term("log_mu_B_2R_plus_r") <= *rep.term("log_outer_ball_bound") + 1e-9);
      CHECK(*rep.term("log_mu_B_tilde_minus_B_R") <= *rep.term("log_annulus_bound") + 1e-9);
      CHECK(*rep.term("log_ratio_exact") >= *rep.term("log_ratio_lower_bound") - 1e-9);
      REQUIRE(rep.logT_exact);
      CHECK(*rep.logT_exact >= rep.logT_lower);
    }
  }
}

TEST_CASE("balanced radius agrees with a dense scan") {
  const auto g = RadialDensity::gaussian();
  const Dimension n(20);
  const Angle beta0 = beta0_concentric(0.2);
  const double k = 1.0 / 21.0;
  const double R = solve_radius_equation(g, n, beta0, k);
  const double log_s = std::log(beta0.sin());
  const auto residual = [&](double x) {
    return log_ball_measure(g, n, x * beta0.sin()).log() - log_ball_measure(g, n, x).log() -
           20.0 * k * log_s;
  };
  // Largest grid radius with residual <= 0 on a 10^5-point scan.
  const double top = 2.0 * R;
  double last = 0.0;
  for (int i = 1; i <= 100'000; ++i) {
    const double x = top * i / 100'000.0;
    if (residual(x) <= 0.0) last = x;
  }
  CHECK(std::abs(last - R) <= top / 100'000.0);
}

TEST_CASE("radius equation failures") {
  CHECK_THROWS_AS(solve_radius_equation(RadialDensity::lebesgue(), Dimension(3),
                                        beta0_concentric(0.2), 0.05),
                  NoBalancedRadius);
  CHECK_THROWS_AS(theorem1_construction(RadialDensity::lebesgue(), Dimension(3), 1.1, 0.2),
                  NonFiniteMeasure);
  CHECK_THROWS_AS(theorem1_construction(RadialDensity::gaussian(), Dimension(3), 1.1, 0.5),
                  DomainError);
}

TEST_CASE("remark: radii grow and the density decays") {
  const auto g = RadialDensity::gaussian();
  const auto report = verify_remark(g, {20, 40, 80, 160}, 0.2);
  CHECK(report.all_ok());
  for (std::size_t i = 1; i < report.entries.size(); ++i) {
    CHECK(report.entries[i].R > report.entries[i - 1].R);
  }
  const auto unit = verify_remark(RadialDensity::unit_ball_indicator(), {10, 100}, 0.2);
  CHECK(unit.all_ok());
  CHECK(unit.entries[0].R == doctest::Approx(unit.entries[1].R));
}

TEST_CASE("Gaussian lemma sandwich") {
  const auto s10 = gaussian_lemma_sandwich(Dimension(10), 0.5 * gaussian_mode(Dimension(10)));
  CHECK(s10.upper - s10.lower == doctest::Approx(std::log(10.0)));
  CHECK(s10.lower <= s10.value);
  CHECK(s10.value <= s10.upper);
  const auto s100 = gaussian_lemma_sandwich(Dimension(100), 0.9 * gaussian_mode(Dimension(100)));
  CHECK(s100.lower <= s100.value);
  CHECK(s100.value <= s100.upper);
  const auto s2 = gaussian_lemma_sandwich(Dimension(2), 0.3);
  CHECK(s2.lower <= s2.value);
  CHECK(s2.value <= s2.upper);
  CHECK_THROWS_AS(gaussian_lemma_sandwich(Dimension(5), gaussian_mode(Dimension(5))), DomainError);
}

TEST_CASE("mass inside R_n is the chi-square probability") {
  // μ(B_{R_n}) = P(χ²_n ≤ n - 1); reference values from an independent χ² CDF.
  CHECK(std::exp(gaussian_mass_concentration(Dimension(5)).log_mass) ==
        doctest::Approx(0.4505840486472198).epsilon(1e-9));
  CHECK(std::exp(gaussian_mass_concentration(Dimension(101)).log_mass) ==
        doctest::Approx(0.4905754960281161).epsilon(1e-9));
  CHECK(std::exp(gaussian_mass_concentration(Dimension(10'000)).log_mass) ==
        doctest::Approx(0.49905961558730644).epsilon(1e-8));
  const auto n2 = gaussian_mass_concentration(Dimension(2));
  CHECK(n2.lower_bound < 0.0);
  CHECK(n2.holds);
  for (long n : {3L, 4L, 5L}) CHECK(gaussian_mass_concentration(Dimension(n)).holds);
  // The stated bound 1 - 2/(√π √(n-1)) exceeds the true mass from n = 6 on.
  CHECK_FALSE(gaussian_mass_concentration(Dimension(6)).holds);
  CHECK(gaussian_mass_concentration(Dimension(101)).lower_bound ==
        doctest::Approx(0.8872).epsilon(1e-4));
}

TEST_CASE("Gaussian construction") {
  for (long n : {50L, 200L}) {
    const auto rep = gaussian_construction(Dimension(n), 1.005, 0.2);
    const double c = 0.28;
    const double mode = std::sqrt((n - 1.0) / (2.0 * kPi));
    CHECK(rep.R == doctest::Approx(std::exp(-0.5 * c * c) * mode));
    REQUIRE(rep.logT_exact);
    CHECK(*rep.logT_exact >= rep.logT_lower);
    CHECK(*rep.term("log_mu_B_tilde_cap_B_R") <= *rep.term("log_intersection_bound") + 1e-9);
    CHECK(*rep.term("log_intersection_bound") <= *rep.term("log_intersection_bound_closed"));
    CHECK(*rep.term("log_mu_B_R") >= *rep.term("log_ball_R_lemma_lower"));
    CHECK(*rep.term("log_small_ball_ratio") >= *rep.term("log_small_ball_ratio_lemma") - 1e-9);
    const double e = std::exp(-c * c);
    const double s2 = 1.0 - c * c;
    CHECK(*rep.term("transcendental_residual") ==
          doctest::Approx(std::log(mode) + 0.5 * (n - 1.0) * (1.0 - s2 * e) - 0.5 * n * c * c));
  }
  const auto big = gaussian_construction(Dimension(200), 1.005, 0.2);
  CHECK(*big.term("log_mu_B_tilde") <= *big.term("log_tilde_ball_bound"));
}

TEST_CASE("Gaussian exponent comparison has the opposite sign for every lambda") {
  for (int i = 1; i < 100; ++i) {
    const double lambda = kSqrt2m1 * i / 100.0;
    const auto rep = gaussian_construction(Dimension(10), 1.0, lambda, 0);
    CHECK(*rep.term("exponent_gap") < 0.0);
  }
}

TEST_CASE("Gaussian upper construction dominates T_exact") {
  const auto g = RadialDensity::gaussian();
  for (long n : {20L, 50L}) {
    const double mode = gaussian_mode(Dimension(n));
    for (double lambda : {0.1, 0.3}) {
      for (double frac : {0.1, 0.5, 1.0}) {
        const double R = frac * mode;
        const double bound = gaussian_upper_construction(Dimension(n), 1.06, R, lambda * R);
        CHECK(T_exact(g, Dimension(n), 1.06, R, lambda * R).log() <= bound);
      }
    }
  }
  CHECK_THROWS_AS(gaussian_upper_construction(Dimension(20), 1.06, 2.0 * gaussian_mode(Dimension(20)), 0.1),
                  DomainError);
}

TEST_CASE("unit-ball sandwich at R = 1") {
  const auto unit = RadialDensity::unit_ball_indicator();
  for (long n : {5L, 15L, 40L}) {
    for (double lambda : {0.05, 0.15, 0.3, 0.4}) {
      for (double p : {1.02, 1.2}) {
        const auto b = unitball_sandwich(Dimension(n), p, 1.0, lambda);
        const double exact = T_exact(unit, Dimension(n), p, 1.0, lambda).log();
        CHECK(b.lower <= exact + 1e-9);
        CHECK(exact <= b.upper + 1e-9);
        CHECK(b.upper - b.lower == doctest::Approx(std::log(std::sqrt(kPi) * n)));
      }
    }
  }
  CHECK_THROWS_AS(unitball_sandwich(Dimension(5), 1.1, 1.2, 0.1), DomainError);
  CHECK_THROWS_AS(unitball_sandwich(Dimension(5), 1.1, 1.0, 0.5), DomainError);
}

TEST_CASE("unit-ball case classification") {
  CHECK(unitball_case_analysis(Dimension(5), 1.1, 1.0, 0.2).case_id == 1);
  CHECK(unitball_case_analysis(Dimension(5), 1.1, 1.0, 0.5).case_id == 4);
  CHECK(unitball_case_analysis(Dimension(5), 1.1, 0.95, 0.2).case_id == 2);
  CHECK(unitball_case_analysis(Dimension(5), 1.1, 0.5, 0.2).case_id == 3);
}

TEST_CASE("every unit-ball case bound dominates T_exact") {
  const auto unit = RadialDensity::unit_ball_indicator();
  for (long n : {5L, 15L}) {
    for (double R : {0.3, 0.6, 0.9, 0.95, 1.0}) {
      for (double lambda : {0.1, 0.2, 0.3, 0.6, 0.8}) {
        for (double p : {1.05, 1.2}) {
          const auto bound = unitball_case_analysis(Dimension(n), p, R, lambda);
          CAPTURE(bound.case_id);
          CHECK(T_exact(unit, Dimension(n), p, R, lambda * R).log() <= bound.log_upper + 1e-9);
        }
      }
    }
  }
}

TEST_CASE("unit-ball construction report") {
  const auto rep = unitball_construction(Dimension(20), 1.02, 1.0, 0.15);
  REQUIRE(rep.logT_exact);
  CHECK(rep.logT_lower <= *rep.logT_exact);
  CHECK(*rep.logT_exact <= *rep.term("logT_upper"));
  CHECK(*rep.logT_exact <= *rep.term("log_case_bound"));
  CHECK(*rep.term("case_id") == 1.0);
}

TEST_CASE("exact report") {
  const auto g = RadialDensity::gaussian();
  const auto rep = exact_report(g, Dimension(6), 1.1, 0.8, 0.2);
  CHECK(rep.logT_exact == rep.logT_lower);
  CHECK(rep.alpha == doctest::Approx(std::exp(*rep.logT_exact / 6.0)));
  CHECK(*rep.logT_exact <= *rep.term("log_gaussian_upper_bound"));
  const auto unit = exact_report(RadialDensity::unit_ball_indicator(), Dimension(8), 1.1, 1.0, 0.2);
  CHECK(*unit.term("sandwich_holds") == 1.0);
}

TEST_CASE("lower bounds are affine in n with slope log alpha") {
  const auto g = RadialDensity::gaussian();
  const auto a = theorem1_construction(g, Dimension(100), 1.002, 0.04, 0);
  const auto b = theorem1_construction(g, Dimension(10'000), 1.002, 0.04, 0);
  const double slope = (b.logT_lower - a.logT_lower) / 9900.0;
  CHECK(slope == doctest::Approx(std::log(a.alpha)).epsilon(1e-10));
  CHECK(a.alpha > 1.0);
}
