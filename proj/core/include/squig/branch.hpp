#ifndef SQUIG_BRANCH_HPP
#define SQUIG_BRANCH_HPP

#include <limits>
#include <vector>

#include "squig/types.hpp"

namespace squig::numerics {

/// Minimum distance kept between path nodes (or evaluation points) and the
/// n-th roots of unity, unless the node is the root itself.
inline constexpr double kRootGuard = 1e-8;

/// Index k of the n-th root of unity nearest to z.
int nearest_root(int n, Complex z);

double distance_to_roots(int n, Complex z);

/// 1 - z^n, evaluated through z - omega^k near a root so that it keeps full
/// relative accuracy there.
Complex one_minus_power(int n, Complex z);

/// 1 - (r + delta)^n for r = omega_n^k, from the offset delta alone.
Complex one_minus_power_near_root(int n, int k, Complex delta);

/// (1 - z^n)^{-(n-1)/n} with arg(1 - z^n) = arg_u.
Complex kernel_from(Complex u, double arg_u, int n);

/// arg(1 - z^n) on the closed sector 0 <= arg z <= 2 pi / n, continuous from
/// the principal value at z = 0: the principal argument, with the cut values
/// taken as -pi on the ray beyond 1 and +pi on the ray beyond omega_n.
double sector_arg(int n, Complex z, Complex u);

/// K_n(z) = (1 - z^n)^{-(n-1)/n} on the closed sector, K_n(0) = 1.
Complex sector_kernel(int n, Complex z);

/// Continuously tracked argument of 1 - z^n along a path starting at 0.
/// Caller-owned; each update must move the argument by less than pi/2.
class BranchTracker {
 public:
  explicit BranchTracker(int n);

  int n() const noexcept { return n_; }
  double current_arg() const noexcept { return arg_; }
  Complex last_z() const noexcept { return z_; }
  Complex last_u() const noexcept { return u_; }

  /// Moves the tracker to z and returns (1 - z^n)^{-(n-1)/n} on the
  /// continued branch.
  Complex advance(Complex z);

  /// Kernel value at z continued from the current state without moving the
  /// tracker. u may be passed when the caller has it more accurately.
  Complex peek(Complex z) const;
  Complex peek_u(Complex u) const;

  /// Carries the tracker around the root omega^k, from its current position
  /// to the point at the same distance from the root in the direction of
  /// target, sweeping through the side given by `side` (+1: counterclockwise
  /// of the outward ray through the root, -1: clockwise). Returns the new
  /// position.
  Complex round_root(int k, Complex target, int side);

  /// Moves straight towards (or away from) the root omega^k until the distance
  /// to it equals radius.
  void set_distance_to_root(int k, double radius);

 private:
  double delta_arg(Complex u) const;

  int n_;
  double arg_ = 0.0;
  Complex z_{0.0, 0.0};
  Complex u_{1.0, 0.0};
};

/// (1 - z^n)^{-(n-1)/n} on the branch continued along the tracker's history;
/// updates the tracker.
Complex branch_power(BranchTracker& tracker, Complex z);

/// Polyline from 0 to the integration target. Nodes may coincide exactly
/// with a root of unity (a designated singular endpoint or corner); any other
/// node must stay outside kRootGuard. max_step caps the length of the pieces
/// the integrator uses; the default (infinity) applies only the local rule
/// 0.05 * distance to the nearest root.
struct PathSpec {
  std::vector<Complex> nodes;
  double max_step = std::numeric_limits<double>::infinity();
};

struct PathIntegral {
  Complex value;
  double err_estimate = 0.0;
  int evaluations = 0;
};

/// Integral of K_n along the path with the branch threaded by a tracker.
PathIntegral integrate_path_detailed(int n, const PathSpec& path);

Complex integrate_path(int n, const PathSpec& path);

}  // namespace squig::numerics

#endif  // SQUIG_BRANCH_HPP
