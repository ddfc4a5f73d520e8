#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "frozen_values.hpp"
#include "oracle.hpp"
#include "squig/errors.hpp"
#include "squig/sector_map.hpp"

using namespace squig;
using namespace squig::numerics;

TEST_CASE("primitive at the roots and the oracle points") {
  const SectorPrimitive F4(4);
  const double half = oracle::pi_n(4) / 2;
  CHECK(std::abs(F4(1.0) - half) < 1e-13);
  CHECK(std::abs(F4(Complex{0.0, 1.0}) - Complex{0.0, half}) < 1e-13);
  CHECK(F4(0.0) == Complex{});
  for (const auto& p : frozen::kPrimitive) {
    const SectorPrimitive F(p.n);
    CAPTURE(p.n);
    CAPTURE(p.arg);
    CHECK(std::abs(F(p.arg) - p.value) < 1e-12);
  }
}

TEST_CASE("primitive along the bisector approaches P") {
  const SectorPrimitive F(5);
  const Complex dir = std::polar(1.0, std::numbers::pi / 5);
  const Complex P = oracle::radius(5) * dir;
  double previous = std::abs(P);
  for (double t : {1.0, 3.0, 10.0, 30.0, 100.0}) {
    const Complex v = F(t * dir);
    // Image of the bisector stays on the segment [O, P).
    CHECK(std::abs(std::arg(v) - std::numbers::pi / 5) < 1e-12);
    const double gap = std::abs(P - v);
    CHECK(gap < previous);
    previous = gap;
  }
  CHECK(previous < 1e-6);
}

TEST_CASE("primitive errors") {
  const SectorPrimitive F(4);
  CHECK_THROWS_AS(F(Complex{-1.0, 0.5}), DomainError);
  CHECK(std::abs(F(1.0 + 1e-10) - F.A()) < 1e-2);
  CHECK(in_closed_sector(4, Complex{0.0, 3.0}));
  CHECK_FALSE(in_closed_sector(4, Complex{-0.1, 3.0}));
}

TEST_CASE("derivative is the kernel") {
  const SectorPrimitive F(6);
  const Complex z{0.6, 0.3};
  const double h = 1e-4;
  const Complex fd = (F(z + h) - F(z - h)) / (2 * h);
  CHECK(std::abs(fd - F.derivative(z)) < 1e-8);
}

TEST_CASE("Newton inversion") {
  SUBCASE("vertex A") {
    const double half = oracle::pi_n(4) / 2;
    CHECK(std::abs(newton_invert(4, half, 0.9) - 1.0) < 1e-9);
  }
  SUBCASE("origin") { CHECK(newton_invert(3, 0.0, 0.3) == Complex{}); }
  SUBCASE("real point checked by forward quadrature") {
    const Complex z = newton_invert(4, 0.5, 0.5);
    CHECK(std::abs(z.imag()) < 1e-15);
    CHECK(z.real() == doctest::Approx(frozen::kSin4Half).epsilon(1e-13));
    const auto back = integrate_path(4, {{0.0, z}});
    CHECK(std::abs(back - 0.5) < 1e-13);
  }
  SUBCASE("oracle sine values") {
    for (const auto& p : frozen::kSine) {
      const SectorPrimitive F(p.n);
      const auto r = newton_invert(F, p.arg, F.seed_for(p.arg));
      CAPTURE(p.n);
      CAPTURE(p.arg);
      CHECK(std::abs(r.z - p.value) < 1e-10);
      CHECK(r.residual < 1e-12);
    }
  }
}

TEST_CASE("winding numbers") {
  std::vector<Complex> circle;
  for (int k = 0; k < 64; ++k) circle.push_back(std::polar(1.0, 2 * std::numbers::pi * k / 64));
  CHECK(winding_number(circle, 0.0) == 1);
  CHECK(winding_number(circle, 3.0) == 0);
  std::vector<Complex> twice;
  for (int k = 0; k < 128; ++k) twice.push_back(std::polar(1.0, 4 * std::numbers::pi * k / 128));
  CHECK(winding_number(twice, 0.0) == 2);
  CHECK_THROWS_AS(winding_number(circle, 1.0), DegenerateLoop);
  const std::vector<Complex> coarse{1.0, -1.0};
  CHECK_THROWS_AS(winding_number(coarse, 0.0), RefinementNeeded);
}
