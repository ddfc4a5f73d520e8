#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "oracle.hpp"
#include "squig/errors.hpp"
#include "squig/geometry.hpp"

using namespace squig;
using namespace squig::geometry;

namespace {

constexpr double kPiD = std::numbers::pi;

double cross(Complex u, Complex v) { return u.real() * v.imag() - u.imag() * v.real(); }

}  // namespace

TEST_CASE("context constants") {
  for (int n = 3; n <= 8; ++n) {
    const auto ctx = make_context(n);
    CAPTURE(n);
    CHECK(std::abs(ctx.pi_n - oracle::pi_n(n)) < 1e-12);
    CHECK(std::abs(ctx.A) == doctest::Approx(ctx.pi_n / 2).epsilon(1e-15));
    CHECK(std::abs(ctx.B) == doctest::Approx(ctx.pi_n / 2).epsilon(1e-15));
    CHECK(std::arg(ctx.P) == doctest::Approx(kPiD / n).epsilon(1e-14));
    CHECK(std::abs(ctx.P) == doctest::Approx(oracle::radius(n)).epsilon(1e-12));
    // Counterclockwise angle from P->A to P->B.
    double turn = std::arg((ctx.B - ctx.P) / (ctx.A - ctx.P));
    if (turn < 0) turn += 2 * kPiD;
    CHECK(turn == doctest::Approx(4 * kPiD / n).epsilon(1e-12));
  }
  const auto c3 = make_context(3);
  CHECK(c3.pi_n == doctest::Approx(3.5332775).epsilon(1e-8));
  CHECK(std::abs(c3.P - 1.7666388 * std::polar(1.0, kPiD / 3)) < 1e-7);
  const auto c4 = make_context(4);
  CHECK(c4.pi_n == doctest::Approx(3.7081493).epsilon(1e-7));
  CHECK(std::abs(c4.P - 0.5 * (c4.A + c4.B)) < 1e-15);
  CHECK(std::abs(c4.P - c4.pi_n / 4 * Complex{1.0, 1.0}) < 1e-15);
}

TEST_CASE("parameter range") {
  CHECK_THROWS_AS(make_context(2), UnsupportedParameter);
  CHECK_THROWS_AS(make_context(65), UnsupportedParameter);
  CHECK_NOTHROW(make_context(64));
}

TEST_CASE("half of pi_n grows towards 2") {
  // The integrand tends to 1 pointwise, but the mass near x = 1 does not vanish.
  double previous = 0.0;
  for (int n : {8, 16, 32, 64}) {
    const double half = make_context(n).pi_n / 2;
    CHECK(half > previous);
    CHECK(half < 2.0);
    CHECK(half == doctest::Approx(oracle::pi_n(n) / 2).epsilon(1e-10));
    previous = half;
  }
  CHECK(std::abs(make_context(32).pi_n / 2 - 2.0) < 0.2);
  CHECK(std::abs(make_context(64).pi_n / 2 - 2.0) < 0.2);
}

TEST_CASE("membership") {
  const auto c4 = make_context(4);
  CHECK(contains_Pi(c4, Complex{0.5, 0.3}));
  CHECK(oracle::in_triangle(Complex{0.5, 0.3}, 0.0, 1.854, Complex{0.0, 1.854}));
  CHECK(contains_Pi(c4, 0.0));
  CHECK(contains_Pi(c4, c4.A));
  CHECK_FALSE(contains_Pi(c4, Complex{2.0, 2.0}));
  CHECK(contains_Omega(c4, c4.A));
  CHECK(contains_Omega(c4, Complex{-0.5, -0.5}));
  CHECK_FALSE(contains_Omega(c4, Complex{10.0, 10.0}));

  CHECK_FALSE(contains_Sigma(c4, 2.0));
  CHECK_FALSE(contains_Sigma(c4, Complex{0.0, 2.0} * c4.omega));
  CHECK(slit_index(c4, -2.0) == 2);
  CHECK(contains_Sigma(c4, 0.0));
  for (int n = 3; n <= 8; ++n) CHECK(contains_Sigma(make_context(n), 0.0));
  CHECK(contains_Sigma(c4, Complex{2.0, 0.1}));
}

TEST_CASE("fold examples") {
  const auto c4 = make_context(4);
  auto f = fold(c4, Complex{0.0, 1.2});
  CHECK(std::abs(f.folded - 1.2) < 1e-15);
  CHECK(f.rotation_k == 1);
  CHECK_FALSE(f.conjugated);

  f = fold(c4, 0.5);
  CHECK(f.folded == Complex{0.5, 0.0});
  CHECK(f.rotation_k == 0);
  CHECK_FALSE(f.conjugated);

  const auto c3 = make_context(3);
  f = fold(c3, 0.3 + 1.5 * c3.pi_n);
  CHECK(std::abs(f.folded - 0.3) < 1e-14);
  CHECK(f.lattice_shift == std::pair<int, int>{1, 0});

  CHECK_THROWS_AS(fold(c4, Complex{10.0, 10.0}), DomainError);
  try {
    fold(c4, Complex{10.0, 10.0});
  } catch (const DomainError& e) {
    CHECK(e.region() == "Omega_n");
  }

  // Bisector points keep conjugated = false.
  f = fold(c4, 0.5 * c4.P * c4.omega);
  CHECK_FALSE(f.conjugated);
  CHECK(f.rotation_k == 1);
  CHECK(fold(c4, c4.P).at_pole);
}

TEST_CASE("fold round trip and idempotence") {
  std::mt19937_64 rng(0x5157);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  for (int n = 3; n <= 8; ++n) {
    const auto ctx = make_context(n);
    const double rad = (n == 3 ? 4.0 : 1.0) * std::max(std::abs(ctx.A), std::abs(ctx.P));
    int count = 0;
    double worst = 0.0;
    bool idempotent = true;
    bool in_triangle = true;
    while (count < 1000) {
      const Complex z(U(rng) * rad, U(rng) * rad);
      if (n > 3 && !contains_Omega(ctx, z)) continue;
      ++count;
      const auto f = fold(ctx, z);
      worst = std::max(worst, std::abs(unfold_point(ctx, f, f.folded) - z));
      if (!f.at_pole && !contains_fundamental(ctx, f.folded)) in_triangle = false;
      const auto g = fold(ctx, f.folded);
      if (g.rotation_k != 0 || g.conjugated || g.lattice_shift != std::pair<int, int>{0, 0} ||
          g.reflected_edge != -1 || std::abs(g.folded - f.folded) > 1e-15) {
        idempotent = false;
      }
    }
    CAPTURE(n);
    CHECK(worst < 1e-12);
    CHECK(idempotent);
    CHECK(in_triangle);
  }
}

TEST_CASE("rotated copies of Pi tile Omega") {
  for (int n = 3; n <= 8; ++n) {
    const auto ctx = make_context(n);
    const double rad = std::max(std::abs(ctx.A), std::abs(ctx.P));
    int bad = 0;
    for (int i = -40; i <= 40; ++i) {
      for (int j = -40; j <= 40; ++j) {
        const Complex z(rad * (i + 0.31) / 40, rad * (j + 0.17) / 40);
        int copies = 0;
        for (int k = 0; k < n; ++k) {
          if (contains_Pi(ctx, z * std::conj(root_of_unity(n, k)))) ++copies;
        }
        if ((copies > 0) != contains_Omega(ctx, z) || copies > 1) ++bad;
      }
    }
    CAPTURE(n);
    CHECK(bad == 0);
  }
}

TEST_CASE("Pi is nonconvex exactly for n > 4") {
  for (int n = 3; n <= 8; ++n) {
    const auto ctx = make_context(n);
    // Turn at P walking O -> A -> P -> B.
    const double turn = cross(ctx.P - ctx.A, ctx.B - ctx.P);
    CAPTURE(n);
    if (n < 4) CHECK(turn > 1e-12);
    if (n == 4) CHECK(std::abs(turn) < 1e-14);
    if (n > 4) CHECK(turn < -1e-12);
  }
}

TEST_CASE("boundary polylines") {
  const auto c4 = make_context(4);
  const auto pi4 = boundary_polyline(c4, {RegionKind::Pi, 1.0}, 2);
  REQUIRE(pi4.size() == 5);
  CHECK(pi4[0] == Complex{});
  CHECK(pi4[1] == c4.A);
  CHECK(pi4[2] == c4.P);
  CHECK(pi4[3] == c4.B);
  CHECK(pi4[4] == Complex{});

  const auto c3 = make_context(3);
  const auto hex = boundary_polyline(c3, {RegionKind::Omega, 1.0}, 2);
  REQUIRE(hex.size() == 7);
  const std::vector<Complex> expected{c3.A, c3.P, c3.omega * c3.A, c3.omega * c3.P,
                                      c3.omega * c3.omega * c3.A, c3.omega * c3.omega * c3.P};
  for (int k = 0; k < 6; ++k) CHECK(std::abs(hex[k] - expected[k]) < 1e-14);
  CHECK(hex[6] == hex[0]);
  for (int k = 0; k < 6; ++k) {
    CHECK(std::abs(hex[k + 1] - hex[k]) == doctest::Approx(std::abs(hex[1] - hex[0])).epsilon(1e-12));
  }

  const auto c5 = make_context(5);
  const auto arc = boundary_polyline(c5, {RegionKind::Arc, 10.0}, 9);
  REQUIRE(arc.size() == 9);
  for (Complex z : arc) CHECK(std::abs(z) == doctest::Approx(10.0));
  CHECK(std::arg(arc.front()) == doctest::Approx(0.0));
  CHECK(std::arg(arc.back()) == doctest::Approx(2 * kPiD / 5));

  CHECK(parse_region("sector") == RegionKind::Sector);
  CHECK(parse_region("OMEGA") == RegionKind::Omega);
  CHECK_THROWS_AS(parse_region("disk"), Error);
}
