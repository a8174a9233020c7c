#include <doctest.h>

#include <random>
#include <vector>

#include "generators.hpp"
#include "specmom/error.hpp"
#include "specmom/prob.hpp"

using namespace specmom;

namespace {

Errc error_of(std::vector<double> raw) {
  try {
    ProbVector::validate(raw);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected validation to fail");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("validate accepts the Chebyshev and deltoid vectors") {
  const auto cheb = ProbVector::validate(std::vector<double>{0.5, 0.0, 0.5});
  CHECK(cheb.order() == 2);
  CHECK(cheb.variance() == doctest::Approx(1.0).epsilon(1e-14));

  const auto deltoid = ProbVector::validate(std::vector<double>{2.0 / 3, 0.0, 0.0, 1.0 / 3});
  CHECK(deltoid.order() == 3);
  CHECK(deltoid.variance() == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("validate: mixed 2-3 vector has variance 3/2") {
  const auto p = parse_prob("7/12,0,1/4,1/6");
  CHECK(p.variance() == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(2.0 / p.variance() == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("validate reports each violated invariant") {
  CHECK(error_of({0.5, 0.0, 0.25, 0.25}) == Errc::MeanNotZero);
  CHECK(error_of({0.5, -0.1, 0.6}) == Errc::NegativeEntry);
  CHECK(error_of({0.5, 0.0, 0.6}) == Errc::SumNotOne);
  CHECK(error_of({0.4, 0.2, 0.4}) == Errc::P1NonZero);
  CHECK(error_of({0.0, 0.0, 1.0}) == Errc::P0Zero);
  CHECK(error_of({1.0, 0.0}) == Errc::InvalidArgument);
}

TEST_CASE("validate trims trailing zeros") {
  const auto p = ProbVector::validate(std::vector<double>{0.5, 0.0, 0.5, 0.0, 0.0});
  CHECK(p.order() == 2);
  CHECK(p == hypocycloid(2));
}

TEST_CASE("hypocycloid vectors") {
  const auto h2 = hypocycloid(2);
  CHECK(std::vector<double>(h2.entries().begin(), h2.entries().end()) == std::vector<double>{0.5, 0.0, 0.5});
  const auto h3 = hypocycloid(3);
  CHECK(h3[0] == doctest::Approx(2.0 / 3.0));
  CHECK(h3[3] == doctest::Approx(1.0 / 3.0));
  const auto h5 = hypocycloid(5);
  CHECK(h5.order() == 5);
  CHECK(h5[0] == doctest::Approx(0.8));
  CHECK(h5[5] == doctest::Approx(0.2));
  CHECK(h5.variance() == doctest::Approx(4.0));
  CHECK_THROWS_AS(hypocycloid(1), Error);

  for (int m = 2; m <= 32; ++m) {
    CHECK(hypocycloid(m).variance() == doctest::Approx(m - 1.0).epsilon(1e-12));
  }
}

TEST_CASE("mix") {
  const auto h3 = hypocycloid(3);
  const std::vector<ProbVector> one{h3};
  CHECK(mix(std::vector<double>{1.0}, one) == h3);

  const std::vector<ProbVector> parts{hypocycloid(3), hypocycloid(6)};
  const auto mixed = mix(std::vector<double>{0.5, 0.5}, parts);
  const std::vector<double> expected{9.0 / 12, 0, 0, 1.0 / 6, 0, 0, 1.0 / 12};
  REQUIRE(mixed.entries().size() == expected.size());
  for (std::size_t j = 0; j < expected.size(); ++j) CHECK(mixed[j] == doctest::Approx(expected[j]).epsilon(1e-14));

  const std::vector<ProbVector> twice{hypocycloid(2), hypocycloid(2)};
  const auto idem = mix(std::vector<double>{0.75, 0.25}, twice);
  CHECK(idem[0] == doctest::Approx(0.5));
  CHECK(idem[2] == doctest::Approx(0.5));

  CHECK_THROWS_AS(mix(std::vector<double>{0.7, 0.7}, parts), Error);
  CHECK_THROWS_AS(mix(std::vector<double>{-0.5, 1.5}, parts), Error);
}

TEST_CASE("property: random convex mixes stay valid") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::vector<ProbVector> parts{testing::random_prob(rng), testing::random_prob(rng),
                                        testing::random_prob(rng)};
    std::vector<double> w{u(rng), u(rng), u(rng)};
    const double total = w[0] + w[1] + w[2];
    for (auto& x : w) x /= total;
    w[2] = 1.0 - w[0] - w[1];
    const auto p = mix(w, parts);
    double mean = 0.0;
    double var = 0.0;
    for (int j = 0; j <= p.order(); ++j) {
      mean += (1.0 - j) * p[j];
      var += (1.0 - j) * (1.0 - j) * p[j];
    }
    CHECK(std::abs(mean) <= 1e-12);
    CHECK(p.variance() == doctest::Approx(var).epsilon(1e-12));
  }
}

TEST_CASE("parse_prob handles rationals and decimals") {
  CHECK(parse_prob("1/2, 0, 1/2") == hypocycloid(2));
  CHECK(parse_prob("0.5,0,0.5") == hypocycloid(2));
  CHECK(parse_prob("14/24,0,3/12,2/12").variance() == doctest::Approx(1.5));
  CHECK_THROWS_AS(parse_prob("1/0,0,1"), Error);
  CHECK_THROWS_AS(parse_prob("a,b,c"), Error);
}
