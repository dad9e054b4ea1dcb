#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "radmax/errors.hpp"
#include "radmax/geometry.hpp"

using namespace radmax;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("Angle and GeometrySpec validation") {
  CHECK_THROWS_AS(Angle(-0.1), DomainError);
  CHECK_THROWS_AS(Angle(4.0), DomainError);
  CHECK(Angle(kPi / 3).cos() == doctest::Approx(0.5));
  CHECK_THROWS_AS(GeometrySpec(Dimension(2), -1.0, 1.0), DomainError);
  CHECK_THROWS_AS(GeometrySpec(Dimension(2), 1.0, 0.0), DomainError);
}

TEST_CASE("cap areas and fractions") {
  for (double theta : {0.1, 1.0, kPi / 2, 2.5, kPi}) {
    CHECK(cap_log_area(Dimension(3), Angle(theta)).log() ==
          doctest::Approx(std::log(2.0 * kPi * (1.0 - std::cos(theta)))).epsilon(1e-12));
    CHECK(std::exp(log_cap_fraction(Dimension(2), theta)) ==
          doctest::Approx(theta / kPi).epsilon(1e-12));
  }
  CHECK(std::exp(log_cap_fraction(Dimension(1), 0.3)) == doctest::Approx(0.5));
  for (long n : {2L, 5L, 50L, 5000L}) {
    CHECK(std::exp(log_cap_fraction(Dimension(n), kPi / 2)) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(log_cap_fraction(Dimension(n), kPi) == doctest::Approx(0.0).epsilon(1e-12));
  }
  // Complementary caps tile the sphere.
  const double a = std::exp(log_cap_fraction(Dimension(7), 1.1));
  const double b = std::exp(log_cap_fraction(Dimension(7), kPi - 1.1));
  CHECK(a + b == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(cap_log_area(Dimension(1), Angle(1.0)), DomainError);
}

TEST_CASE("intersection_angle cases") {
  using Kind = SphereSection::Kind;
  CHECK(intersection_angle(Dimension(3), 1.0, 2.0, 0.5).kind == Kind::Full);
  CHECK(intersection_angle(Dimension(3), 1.0, 0.5, 2.0).kind == Kind::Empty);
  CHECK(intersection_angle(Dimension(3), 1.0, 0.5, 0.2).kind == Kind::Empty);
  const auto cap = intersection_angle(Dimension(3), 1.0, 1.0, 1.0);
  CHECK(cap.kind == Kind::Cap);
  CHECK(cap.theta == doctest::Approx(kPi / 3));
  // Law of cosines over a spread of configurations.
  for (double s : {0.3, 0.9, 1.4}) {
    const auto sec = intersection_angle(Dimension(2), 0.8, 0.7, s);
    if (sec.kind == Kind::Cap) {
      CHECK(std::cos(sec.theta) ==
            doctest::Approx((0.64 + s * s - 0.49) / (1.6 * s)).epsilon(1e-12));
    }
  }
  // Tiny balls far from the origin keep full relative accuracy.
  const auto tiny = intersection_angle(Dimension(2), 0.5, 1e-7, 0.5);
  CHECK(tiny.theta == doctest::Approx(2.0 * std::asin(1e-7 / 1.0)).epsilon(1e-9));
}

TEST_CASE("unit-disk lens") {
  const auto unit = RadialDensity::unit_ball_indicator();
  const double lens = std::log(2.0 * kPi / 3.0 - std::sqrt(3.0) / 2.0);
  const double got = off_center_ball_measure(unit, GeometrySpec(Dimension(2), 1.0, 1.0)).log();
  CHECK(std::abs(std::expm1(got - lens)) < 1e-8);
  const auto leb = RadialDensity::lebesgue();
  const double cut =
      intersect_with_centered_ball(leb, GeometrySpec(Dimension(2), 1.0, 1.0), 1.0).log();
  CHECK(std::abs(std::expm1(cut - lens)) < 1e-8);
}

TEST_CASE("off-centre balls against disk and ball lens formulas") {
  const auto unit = RadialDensity::unit_ball_indicator();
  for (double d : {0.2, 0.6, 1.1, 1.7}) {
    for (double t : {0.15, 0.5, 0.9, 1.3, 2.5}) {
      const double area = oracles::lens_area(1.0, t, d);
      const double vol = oracles::lens_volume(1.0, t, d);
      const double a = off_center_ball_measure(unit, GeometrySpec(Dimension(2), d, t)).value();
      const double v = off_center_ball_measure(unit, GeometrySpec(Dimension(3), d, t)).value();
      CHECK(a == doctest::Approx(area).epsilon(1e-9));
      CHECK(v == doctest::Approx(vol).epsilon(1e-9));
    }
  }
}

TEST_CASE("off-centre Gaussian balls in R^3 against the closed form") {
  const auto g = RadialDensity::gaussian();
  for (double d : {0.05, 0.4, 0.7, 1.5}) {
    for (double t : {0.1, 0.5, 1.2, 3.0}) {
      const double expected = oracles::gaussian3_ball(d, t);
      const double got = off_center_ball_measure(g, GeometrySpec(Dimension(3), d, t)).value();
      CHECK(got == doctest::Approx(expected).epsilon(1e-9));
    }
  }
}

TEST_CASE("intersections with centred balls") {
  const auto g = RadialDensity::gaussian();
  const GeometrySpec spec(Dimension(4), 0.8, 0.9);
  const double whole = off_center_ball_measure(g, spec).log();
  double previous = -INFINITY;
  for (double rho : {0.1, 0.4, 0.9, 1.7, 5.0}) {
    const double part = intersect_with_centered_ball(g, spec, rho).log();
    CHECK(part <= whole + 1e-12);
    CHECK(part <= log_ball_measure(g, Dimension(4), rho).log() + 1e-12);
    CHECK(part >= previous - 1e-10);
    previous = part;
  }
  CHECK(previous == doctest::Approx(whole).epsilon(1e-10));
  // Containment: the centred ball lies inside B(dξ, t).
  const double inside =
      intersect_with_centered_ball(g, GeometrySpec(Dimension(4), 0.2, 1.0), 0.5).log();
  CHECK(inside == doctest::Approx(log_ball_measure(g, Dimension(4), 0.5).log()).epsilon(1e-12));
}

TEST_CASE("cones and centred degenerate geometry") {
  const auto g = RadialDensity::gaussian();
  const double half = cone_ball_measure(g, Dimension(5), Angle(kPi / 2), 1.3).log();
  CHECK(half == doctest::Approx(log_ball_measure(g, Dimension(5), 1.3).log() - std::log(2.0))
                    .epsilon(1e-12));
  CHECK(off_center_ball_measure(g, GeometrySpec(Dimension(5), 0.0, 0.7)).log() ==
        doctest::Approx(log_ball_measure(g, Dimension(5), 0.7).log()));
}

TEST_CASE("off-centre measure is monotone in t and accurate in high dimension") {
  const auto g = RadialDensity::gaussian();
  for (long n : {20L, 1000L}) {
    double previous = -INFINITY;
    const double mode = std::sqrt((n - 1.0) / (2.0 * kPi));
    for (int i = 1; i <= 12; ++i) {
      const double v =
          off_center_ball_measure(g, GeometrySpec(Dimension(n), mode, 0.2 * i * mode)).log();
      CHECK(v >= previous - 1e-10);
      previous = v;
    }
  }
}

TEST_CASE("beta0 formulas") {
  CHECK(beta0_concentric(0.2).cos() == doctest::Approx(0.28));
  CHECK(beta0_unit_ball(1.0, 0.2).cos() == doctest::Approx(0.28));
  CHECK(beta0_unit_ball(0.5, 0.2).cos() == doctest::Approx(1.0 - 0.25 * 1.44 / 2.0));
  CHECK_THROWS_AS(beta0_concentric(0.0), DomainError);
  CHECK_THROWS_AS(beta0_concentric(1.0), DomainError);
  CHECK(std::exp(log_sin_from_cos(0.28)) == doctest::Approx(0.96));
}

TEST_CASE("beta0 is the angle of the intersection circle") {
  // ∂B(Rξ, R + r) meets ∂B_R at polar angle β0 from the ξ direction... seen
  // from the origin, the meeting point y satisfies |y| = R, |y - Rξ| = R + r.
  for (double lambda : {0.05, 0.2, 0.4}) {
    const double R = 1.7;
    const auto sec = intersection_angle(Dimension(3), R, R * (1.0 + lambda), R);
    REQUIRE(sec.kind == SphereSection::Kind::Cap);
    CHECK(beta0_concentric(lambda).radians() == doctest::Approx(sec.theta).epsilon(1e-12));
  }
}
