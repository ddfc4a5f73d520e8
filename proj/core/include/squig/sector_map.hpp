#ifndef SQUIG_SECTOR_MAP_HPP
#define SQUIG_SECTOR_MAP_HPP

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "squig/branch.hpp"
#include "squig/types.hpp"

namespace squig::numerics {

/// F_n(z) = integral_0^z (1 - t^n)^{-(n-1)/n} dt on the closed sector
/// 0 <= arg z <= 2 pi / n. Immutable after construction.
class SectorPrimitive {
 public:
  explicit SectorPrimitive(int n);

  int n() const noexcept { return n_; }
  /// F_n(1) and F_n(omega_n).
  Complex A() const noexcept { return a_; }
  Complex B() const noexcept { return b_; }
  double pi_n() const noexcept { return 2.0 * a_.real(); }

  /// Defined on the whole closed sector, roots included; near a root the
  /// value is formed as A or B plus offset_from_root. Throws DomainError
  /// outside the sector.
  Complex operator()(Complex z) const;

  /// F_n(r + delta) - F_n(r) for the root r = omega_n^k (k = 0 or 1), with
  /// r + delta in the closed sector. Accurate in relative terms as delta -> 0.
  Complex offset_from_root(int k, Complex delta) const;

  /// F_n'(z) on the closed sector.
  Complex derivative(Complex z) const;

  /// F_n'(r + delta) for the root r = omega_n^k, from the offset alone.
  Complex derivative_near_root(int k, Complex delta) const;

  /// Table of (F_n(z), z) pairs spread over the half-sector 0 <= arg z <= pi/n.
  const std::vector<std::pair<Complex, Complex>>& seeds() const noexcept { return seeds_; }

  /// Seed z whose tabulated image is nearest to w.
  Complex seed_for(Complex w) const;

 private:
  int n_;
  Complex a_;
  Complex b_;
  double near_radius_;
  double route_radius_;
  std::vector<std::pair<Complex, Complex>> seeds_;
};

/// Closed sector test with a small angular tolerance.
bool in_closed_sector(int n, Complex z, double tol = 1e-12);

struct NewtonOptions {
  double tol = 1e-12;
  int max_iter = 50;
};

struct NewtonResult {
  Complex z;
  /// |F_n(z) - w|.
  double residual = 0.0;
  int iterations = 0;
  /// z - 1 when the solution was computed relative to the corner at 1; it
  /// carries more digits than z itself there.
  std::optional<Complex> offset_from_one;
};

/// Solves F_n(z) = w for w in the closed triangle O A_n P_n, z in the
/// half-sector 0 <= arg z <= pi/n. Damped Newton first; if it stalls, path
/// continuation from the nearest seed. Throws ConvergenceFailure with the
/// last residual.
NewtonResult newton_invert(const SectorPrimitive& F, Complex w, Complex z0,
                           const NewtonOptions& opt = {});

Complex newton_invert(int n, Complex w, Complex z0, double tol = 1e-12);

/// Number of turns of the closed loop around w. A loop whose last sample
/// differs from the first is closed implicitly.
int winding_number(const std::vector<Complex>& loop_values, Complex w);

}  // namespace squig::numerics

#endif  // SQUIG_SECTOR_MAP_HPP
