#include <doctest.h>

#include "oracle.hpp"
#include "squig/errors.hpp"
#include "squig/series.hpp"
#include "squig/squigfn.hpp"

using namespace squig;
using namespace squig::numerics;

namespace {

Rational q(long num, long den) { return Rational(num) / Rational(den); }

}  // namespace

TEST_CASE("reversion of the n = 3 primitive gives the displayed coefficients") {
  const auto f = primitive_series(3, 5);
  const auto s = revert_series(f, 5);
  REQUIRE(s.size() == 5);
  CHECK(s.degrees == std::vector<int>{1, 4, 7, 10, 13});
  CHECK(s.coeffs[0] == q(1, 1));
  CHECK(s.coeffs[1] == q(-1, 6));
  CHECK(s.coeffs[2] == q(2, 63));
  CHECK(s.coeffs[3] == q(-13, 2268));
  CHECK(s.coeffs[4] == q(23, 22113));
}

TEST_CASE("n = 2 reproduces the classical sine") {
  const auto s = revert_series(primitive_series(2, 3), 3);
  CHECK(s.degrees == std::vector<int>{1, 3, 5});
  CHECK(s.coeffs[0] == q(1, 1));
  CHECK(s.coeffs[1] == q(-1, 6));
  CHECK(s.coeffs[2] == q(1, 120));
}

TEST_CASE("primitive series coefficients") {
  // (1 - t^3)^{-2/3} = 1 + (2/3) t^3 + (5/9) t^6 + ..., integrated term by term.
  const auto f = primitive_series(3, 3);
  CHECK(f.coeffs[0] == q(1, 1));
  CHECK(f.coeffs[1] == q(2, 3 * 4));
  CHECK(f.coeffs[2] == q(5, 9 * 7));
  CHECK(degree_spacing(f) == 3);
}

TEST_CASE("reversion edge cases") {
  RationalSeries identity;
  identity.push(1, 1);
  const auto r = revert_series(identity, 4);
  CHECK(r == identity);

  RationalSeries bad_lead;
  bad_lead.push(1, 2);
  bad_lead.push(3, 1);
  CHECK_THROWS_AS(revert_series(bad_lead, 3), InvalidSeries);

  RationalSeries constant_term;
  constant_term.push(0, 1);
  constant_term.push(1, 1);
  CHECK_THROWS_AS(revert_series(constant_term, 3), InvalidSeries);

  RationalSeries s;
  s.push(3, 1);
  CHECK_THROWS_AS(s.push(2, 1), InvalidSeries);
  s.push(5, 0);
  CHECK(s.size() == 1);
}

TEST_CASE("composition with the reverted series is the identity") {
  for (int n : {2, 3, 5, 8}) {
    const int terms = 8;
    const auto f = primitive_series(n, terms);
    const auto g = revert_series(f, terms);
    const int max_degree = 1 + (terms - 1) * n;
    const auto fg = compose(f, g, max_degree);
    RationalSeries id;
    id.push(1, 1);
    CAPTURE(n);
    CHECK(fg == id);
  }
}

TEST_CASE("sine recurrence agrees with reversion") {
  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(sine_series(n, 25) == revert_series(primitive_series(n, 25), 25));
  }
  CHECK(sine_series(3, 1).size() == 1);
  CHECK_THROWS_AS(sine_series(1, 3), InvalidSeries);
  CHECK_THROWS_AS(sine_series(3, 0), InvalidSeries);
}

TEST_CASE("series evaluation and formatting") {
  const auto s = revert_series(primitive_series(3, 5), 5);
  const Complex v = evaluate(s, Complex{0.1, 0.0});
  CHECK(v.real() == doctest::Approx(0.1 - 1e-4 / 6 + 2e-7 / 63 - 13e-10 / 2268 + 23e-13 / 22113).epsilon(1e-15));
  CHECK(to_string(q(-13, 2268)) == "-13/2268");
  CHECK(to_string(q(4, 2)) == "2/1");
}

TEST_CASE("radius estimates from coefficient ratios") {
  SUBCASE("five-term n = 3 estimate") {
    const auto s = squigfn::maclaurin_series(3, 5);
    const double r = squigfn::radius_estimate(s);
    CHECK(r == doctest::Approx(1.766).epsilon(1e-3));
    CHECK(std::abs(r / oracle::radius(3) - 1.0) < 0.005);
  }
  SUBCASE("forty-term n = 4 estimate") {
    const double r = squigfn::radius_estimate(squigfn::maclaurin_series(4, 40));
    CHECK(std::abs(r / oracle::radius(4) - 1.0) < 0.01);
  }
  SUBCASE("geometric series") {
    RationalSeries g;
    for (int k = 0; k < 12; ++k) g.push(k + 1, 1);
    CHECK(squigfn::radius_estimate(g) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("degenerate inputs") {
    RationalSeries one;
    one.push(1, 1);
    CHECK_THROWS_AS(squigfn::radius_estimate(one), InvalidSeries);
    RationalSeries uneven;
    uneven.push(1, 1);
    uneven.push(2, 1);
    uneven.push(4, 1);
    CHECK_THROWS_AS(squigfn::radius_estimate(uneven), InvalidSeries);
  }
}
