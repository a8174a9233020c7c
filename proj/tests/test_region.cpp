#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "generators.hpp"
#include "specmom/region.hpp"

using namespace specmom;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Ray-bisection oracle: largest radius along angle theta still classified
// as not exterior.
double boundary_radius(const ProbVector& p, double theta) {
  const Complex dir = std::polar(1.0, theta);
  double lo = 0.0;
  double hi = 1.5;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (contains(p, mid * dir) == Membership::Exterior) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("boundary sampling") {
  const auto h3 = hypocycloid(3);
  const auto curve = boundary(h3, 512);
  REQUIRE(curve.samples.size() == 512);
  CHECK(curve.samples.front().t == 0.0);
  CHECK(curve.samples.back().t == doctest::Approx(kTwoPi));
  CHECK(std::abs(curve.samples.front().z - 1.0) < 1e-15);
  CHECK(std::abs(curve.samples.front().z - curve.samples.back().z) < 1e-12);
  for (const auto& s : curve.samples) {
    const Complex expected = (2.0 / 3.0) * std::polar(1.0, s.t) + (1.0 / 3.0) * std::polar(1.0, -2.0 * s.t);
    CHECK(std::abs(s.z - expected) < 1e-12);
    CHECK(std::abs(s.z) <= 1.0 + 1e-12);
  }

  for (const auto& s : boundary(hypocycloid(2), 256).samples) {
    CHECK(std::abs(s.z.imag()) < 1e-12);
    CHECK(s.z.real() == doctest::Approx(std::cos(s.t)).epsilon(1e-12));
  }

  CHECK_THROWS(boundary(h3, 15));
}

TEST_CASE("property: the curve lies in the closed unit disk") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = testing::random_prob(rng);
    for (const auto& s : boundary(p, 257).samples) CHECK(std::abs(s.z) <= 1.0 + 1e-12);
  }
}

TEST_CASE("cusp counts follow the gcd of the support") {
  CHECK(cusps(parse_prob("2/3,0,0,1/3")).count == 3);
  CHECK(cusps(parse_prob("5/6,0,0,0,0,0,1/6")).count == 6);
  CHECK(cusps(parse_prob("9/12,0,0,1/6,0,0,1/12")).count == 3);
  const auto mixed = cusps(parse_prob("7/12,0,3/12,2/12"));
  CHECK(mixed.count == 1);
  REQUIRE(mixed.positions.size() == 1);
  CHECK(std::abs(mixed.positions[0] - 1.0) < 1e-15);
  CHECK(mixed.gcd_support == std::vector<int>{2, 3});
  CHECK(cusps(parse_prob("5/8,0,1/4,0,1/8")).count == 2);

  const auto h4 = cusps(hypocycloid(4));
  REQUIRE(h4.positions.size() == 4);
  for (int k = 0; k < 4; ++k) CHECK(std::abs(h4.positions[k] - std::polar(1.0, kTwoPi * k / 4)) < 1e-15);
}

TEST_CASE("property: curve derivative vanishes exactly at the cusps") {
  std::vector<ProbVector> vectors = testing::table2_vectors();
  vectors.push_back(parse_prob("5/6,0,0,0,0,0,1/6"));
  vectors.push_back(parse_prob("9/12,0,0,1/6,0,0,1/12"));
  for (const auto& p : vectors) {
    const auto cs = cusps(p);
    for (int k = 0; k < cs.count; ++k) {
      const double t = kTwoPi * k / cs.count;
      CHECK(std::abs(curve_derivative(p, t)) < 1e-10);
      CHECK(std::abs(curve_point(p, t) - cs.positions[k]) < 1e-12);
    }
    for (int i = 0; i < 4096; ++i) {
      const double t = kTwoPi * (i + 0.5) / 4096;
      CHECK(std::abs(curve_derivative(p, t)) > 1e-10);
    }
  }
}

TEST_CASE("curve_derivative matches finite differences") {
  const auto p = parse_prob("7/12,0,1/4,1/6");
  for (double t : {0.3, 1.1, 2.5, 4.0}) {
    const double h = 1e-6;
    const Complex fd = (curve_point(p, t + h) - curve_point(p, t - h)) / (2 * h);
    CHECK(std::abs(fd - curve_derivative(p, t)) < 1e-8);
  }
}

TEST_CASE("contains examples") {
  CHECK(contains(hypocycloid(3), 0.0) == Membership::Interior);
  for (const auto& p : testing::table2_vectors()) {
    CHECK(contains(p, 1.0) == Membership::Boundary);
    CHECK(contains(p, 1.5) == Membership::Exterior);
  }
  CHECK(contains(hypocycloid(3), Complex(0.0, 0.5)) == Membership::Exterior);
  CHECK(contains(hypocycloid(4), Complex(0.0, 0.5)) != Membership::Exterior);
  CHECK(contains(hypocycloid(5), Complex(0.0, 0.5)) != Membership::Exterior);
  // The Chebyshev region is a segment: nothing is interior.
  CHECK(contains(hypocycloid(2), 0.0) == Membership::Boundary);
  CHECK(contains(hypocycloid(2), Complex(0.0, 0.1)) == Membership::Exterior);
  CHECK(membership_name(Membership::Interior) == "interior");
}

TEST_CASE("scaled_contains") {
  const auto h4 = hypocycloid(4);
  for (Complex w : {Complex(0.2, 0.1), Complex(0.9, 0.0), Complex(0.0, 0.5)}) {
    CHECK(scaled_contains(h4, 1.0, w) == contains(h4, w));
  }
  CHECK(scaled_contains(h4, 2.0, 2.0) == Membership::Boundary);
  CHECK(scaled_contains(h4, 1.0, 1.0) == Membership::Boundary);
  CHECK(scaled_contains(hypocycloid(3), 2.0, Complex(0.0, 0.5)) == Membership::Interior);
  CHECK_THROWS(scaled_contains(h4, 0.0, 1.0));
}

TEST_CASE("property: regions are radially convex") {
  for (const auto& p : testing::table2_vectors()) {
    if (p.order() == 2) continue;  // segment has empty interior
    for (int i = 0; i < 256; ++i) {
      const double theta = kTwoPi * i / 256;
      const double r = boundary_radius(p, theta);
      const Complex dir = std::polar(1.0, theta);
      CHECK(contains(p, 0.99 * r * dir) == Membership::Interior);
      CHECK(contains(p, 1.01 * r * dir) == Membership::Exterior);
      // Uniqueness of the crossing: everything further out is exterior too.
      for (double f : {1.05, 1.2, 1.5}) CHECK(contains(p, f * r * dir) == Membership::Exterior);
    }
  }
}
