#include <doctest.h>

#include <cmath>
#include <random>

#include "generators.hpp"
#include "specmom/analysis.hpp"
#include "specmom/error.hpp"
#include "specmom/polyfam.hpp"

using namespace specmom;

TEST_CASE("empirical_growth ratios approach the predicted rate") {
  for (int m : {2, 5}) {
    const auto report = empirical_growth(hypocycloid(m), 1e-5, 1000);
    REQUIRE(report.rows.size() == 1001);
    CHECK_FALSE(report.truncated);
    const double ratio = report.rows[1000].value / report.rows[999].value;
    CHECK(ratio == doctest::Approx(1.0 + std::sqrt(2e-5 / (m - 1))).epsilon(1e-4));
    for (std::size_t i = 1; i < report.rows.size(); ++i) {
      CHECK(report.rows[i].value >= report.rows[i - 1].value);
      CHECK(report.rows[i].ratio == doctest::Approx(report.rows[i].value / report.rows[i].predicted));
    }
  }
  CHECK_THROWS_AS(empirical_growth(hypocycloid(2), 0.0, 100), Error);
  CHECK_THROWS_AS(empirical_growth(hypocycloid(2), 1e-3, 9), Error);
}

TEST_CASE("empirical_growth truncates on overflow") {
  const auto report = empirical_growth(hypocycloid(3), 0.9, 5000);
  CHECK(report.truncated);
  CHECK(report.rows.size() < 5001);
  CHECK(std::isfinite(report.rows.back().value));
}

TEST_CASE("property: growth is sandwiched by the dominant root") {
  for (int m = 2; m <= 5; ++m) {
    for (double eps : {1e-5, 1e-3, 1e-1}) {
      const auto p = hypocycloid(m);
      const double root = dominant_root(p, 1.0 + eps).real();
      CHECK(root >= 1.0 + std::sqrt(2 * eps) / p.sigma());
      const auto report = empirical_growth(p, eps, 4000);
      const auto& rows = report.rows;
      const double measured = rows.back().value / rows[rows.size() - 2].value;
      CHECK(measured == doctest::Approx(root).epsilon(1e-6));
    }
  }
}

TEST_CASE("boundedness_scan") {
  CHECK(boundedness_scan(hypocycloid(2), 300, 256) == doctest::Approx(1.0).epsilon(1e-9));
  const double half = boundedness_scan(hypocycloid(3), 250, 1024);
  const double full = boundedness_scan(hypocycloid(3), 500, 1024);
  CHECK(std::isfinite(full));
  CHECK(full >= half);
  CHECK(std::abs(full - half) / half < 0.05);
  CHECK_THROWS_AS(boundedness_scan(hypocycloid(3), 10, 63), Error);
}

TEST_CASE("cusp_scan is exactly one") {
  for (const auto& p : testing::table2_vectors()) CHECK(cusp_scan(p, 500) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("ellipse_upper_bound") {
  CHECK(ellipse_upper_bound(0.5, 0.1, 7) == doctest::Approx(std::pow(1.3, 7)));
  CHECK(ellipse_upper_bound(0.5, 1e-300, 50) == doctest::Approx(1.0));
  const double delta = EllipseSpec::from_rho(2.0).delta();
  CHECK(delta == doctest::Approx(0.6));
  CHECK(ellipse_upper_bound(delta, 0.2, 3) == doctest::Approx(std::pow(1.5, 3)));
  CHECK_THROWS_AS(ellipse_upper_bound(1.0, 0.1, 3), Error);
  CHECK_THROWS_AS(ellipse_upper_bound(0.5, 1.0, 3), Error);
}

TEST_CASE("EllipseSpec conversions round trip") {
  for (double rho : {1.01, 1.5, 2.0, 3.7, 10.0}) {
    CHECK(EllipseSpec::from_delta(EllipseSpec::from_rho(rho).delta()).rho() == doctest::Approx(rho).epsilon(1e-12));
  }
  for (double delta : {0.01, 0.3, 0.99}) {
    CHECK(EllipseSpec::from_rho(EllipseSpec::from_delta(delta).rho()).delta() == doctest::Approx(delta).epsilon(1e-12));
  }
  CHECK_THROWS(EllipseSpec::from_rho(1.0));
  CHECK_THROWS(EllipseSpec::from_delta(1.0));
}

TEST_CASE("inverse_joukowski") {
  const Complex s = inverse_joukowski(1.25);
  CHECK(std::abs(s - 2.0) < 1e-14);
  const Complex z(0.3, 0.9);
  const Complex r = inverse_joukowski(z);
  CHECK(std::abs(r) > 1.0);
  CHECK(std::abs(0.5 * (r + 1.0 / r) - z) < 1e-14);
  CHECK_THROWS_AS(inverse_joukowski(0.5), Error);
}

TEST_CASE("ellipse_minmax_bounds") {
  // gamma = 1.5, rho = 2, n = 1: s solves s + 1/s = 1.5 * 2.5 = 3.75.
  const double s = (3.75 + std::sqrt(3.75 * 3.75 - 4)) / 2;
  const auto b = ellipse_minmax_bounds(2.0, 1.5, 1);
  CHECK(b.upper == doctest::Approx(s / 2.0).epsilon(1e-14));
  CHECK(b.lower == doctest::Approx((s + 1 / s) / 2.5).epsilon(1e-14));
  CHECK(b.lower <= b.upper);
  CHECK_THROWS_AS(ellipse_minmax_bounds(2.0, 0.5, 3), Error);
}

TEST_CASE("property: ellipse sandwich holds") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> rho_d(1.0 + 1e-9, 4.0);
  std::uniform_real_distribution<double> eps_d(1e-9, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  std::uniform_int_distribution<int> n_d(1, 50);
  for (int i = 0; i < 1000; ++i) {
    const double rho = rho_d(rng);
    const double eps = eps_d(rng);
    const int n = n_d(rng);
    const auto b = ellipse_minmax_bounds(rho, 1.0 + eps, n);
    CHECK(b.lower <= b.upper);
    CHECK(b.upper <= ellipse_upper_bound(EllipseSpec::from_rho(rho).delta(), eps, n));

    // Off-axis points outside the ellipse (vertices at +-1), too.
    const Complex gamma = std::polar(1.0 + eps, angle(rng));
    const auto off = ellipse_minmax_bounds(rho, gamma, n);
    CHECK(off.lower <= off.upper);
  }
}

TEST_CASE("disk_bound") {
  CHECK(disk_bound(3.0, 3.0, 10) == doctest::Approx(1.0));
  CHECK(disk_bound(2.0, 1.0, 3) == doctest::Approx(0.125));
  CHECK(disk_bound(Complex(0, 2), 1.0, 5) < disk_bound(Complex(0, 2), 1.0, 4));
  CHECK_THROWS_AS(disk_bound(0.5, 1.0, 3), Error);
}

TEST_CASE("cusps are necessary: ellipse bound is eventually beaten") {
  const double eps = 1e-6;
  const int n = 10000;
  const auto p = hypocycloid(3);
  const double log_lower = n * std::log1p(std::sqrt(2 * eps) / p.sigma());
  const double log_ellipse = n * std::log1p(3 * eps / (2 * 0.1));
  CHECK(log_lower > log_ellipse);
  CHECK(growth_lower_bound(p, eps, n) > ellipse_upper_bound(0.1, eps, n));
  const auto report = empirical_growth(p, eps, n);
  CHECK(report.rows.back().value > ellipse_upper_bound(0.1, eps, n));
}
