#include "squig/branch.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "squig/errors.hpp"
#include "squig/quadrature.hpp"

namespace squig::numerics {

namespace {

double exponent(int n) { return static_cast<double>(n - 1) / n; }

/// Radius of the disc around a root inside which path legs switch to the
/// endpoint-singular rule.
double singular_radius(int n) { return 0.5 * std::sin(kPi / n); }

int root_index_if_exact(int n, Complex z) {
  const int k = nearest_root(n, z);
  return std::abs(z - root_of_unity(n, k)) <= 1e-15 ? k : -1;
}

/// Angle of (z - r) / r mapped into the half-turn selected by side.
double local_angle(Complex z, Complex r, int side) {
  double phi = std::arg((z - r) / r);
  if (side > 0 && phi < -0.5 * kPi) phi += 2.0 * kPi;
  if (side < 0 && phi > 0.5 * kPi) phi -= 2.0 * kPi;
  return phi;
}

bool in_half(double phi, int side) {
  constexpr double eps = 1e-12;
  return side > 0 ? (phi >= -eps && phi <= kPi + eps) : (phi <= eps && phi >= -kPi - eps);
}

}  // namespace

int nearest_root(int n, Complex z) {
  const double step = 2.0 * kPi / n;
  int k = static_cast<int>(std::lround(arg_positive(z) / step));
  return k % n;
}

double distance_to_roots(int n, Complex z) {
  return std::abs(z - root_of_unity(n, nearest_root(n, z)));
}

Complex one_minus_power_near_root(int n, int k, Complex delta) {
  const Complex x = delta / root_of_unity(n, k);
  if (std::abs(x) * n < 0.5) {
    // (1 + x)^n - 1 = sum_{j>=1} C(n, j) x^j, Horner from the top.
    Complex p = 1.0;
    double c = 1.0;  // C(n, j), walking j down from n
    for (int j = n - 1; j >= 1; --j) {
      c = c * (j + 1) / (n - j);
      p = p * x + c;
    }
    return -(p * x);
  }
  return 1.0 - pow_int(1.0 + x, n);
}

Complex one_minus_power(int n, Complex z) {
  const int k = nearest_root(n, z);
  const Complex delta = z - root_of_unity(n, k);
  if (std::abs(delta) * n < 0.5) return one_minus_power_near_root(n, k, delta);
  return 1.0 - pow_int(z, n);
}

Complex kernel_from(Complex u, double arg_u, int n) {
  const double alpha = exponent(n);
  return std::polar(std::pow(std::abs(u), -alpha), -alpha * arg_u);
}

double sector_arg(int n, Complex z, Complex u) {
  double a = std::arg(u);
  const bool lower_half = std::arg(z) <= kPi / n;
  // Lower half of the sector: 1 - z^n lies in the closed lower half-plane.
  if (lower_half && a > 0.5 * kPi) a -= 2.0 * kPi;
  if (!lower_half && a < -0.5 * kPi) a += 2.0 * kPi;
  return a;
}

Complex sector_kernel(int n, Complex z) {
  const Complex u = one_minus_power(n, z);
  if (u == Complex{}) throw SingularityError("K_n evaluated at a root of unity");
  return kernel_from(u, sector_arg(n, z, u), n);
}

BranchTracker::BranchTracker(int n) : n_(n) {}

double BranchTracker::delta_arg(Complex u) const {
  if (u == Complex{}) throw SingularityError("branch_power at an n-th root of unity");
  return std::arg(u / u_);
}

Complex BranchTracker::advance(Complex z) {
  const Complex u = one_minus_power(n_, z);
  const double d = delta_arg(u);
  if (std::abs(d) >= 0.5 * kPi) {
    throw BranchAmbiguityError("arg(1 - z^n) jumped by " + std::to_string(d) +
                               " rad; refine the path");
  }
  arg_ += d;
  z_ = z;
  u_ = u;
  return kernel_from(u, arg_, n_);
}

Complex BranchTracker::peek_u(Complex u) const {
  const double d = delta_arg(u);
  if (std::abs(d) >= 0.5 * kPi) {
    throw BranchAmbiguityError("quadrature node too far from the tracked point");
  }
  return kernel_from(u, arg_ + d, n_);
}

Complex BranchTracker::peek(Complex z) const { return peek_u(one_minus_power(n_, z)); }

void BranchTracker::set_distance_to_root(int k, double radius) {
  const Complex r = root_of_unity(n_, k);
  Complex delta = z_ - r;
  double dist = std::abs(delta);
  while (dist > 2.0 * radius) {
    delta *= 0.5;
    dist *= 0.5;
    advance(r + delta);
  }
  while (dist < 0.5 * radius) {
    delta *= 2.0;
    dist *= 2.0;
    advance(r + delta);
  }
  advance(r + delta * (radius / dist));
}

Complex BranchTracker::round_root(int k, Complex target, int side) {
  const Complex r = root_of_unity(n_, k);
  const double rho = std::abs(z_ - r);
  const double from = local_angle(z_, r, side);
  const double to = local_angle(target, r, side);
  const double sweep = to - from;
  const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(sweep) / (kPi / 8))));
  Complex p = z_;
  for (int i = 1; i <= steps; ++i) {
    p = r + r * std::polar(rho, from + sweep * i / steps);
    advance(p);
  }
  return p;
}

Complex branch_power(BranchTracker& tracker, Complex z) { return tracker.advance(z); }

PathIntegral integrate_path_detailed(int n, const PathSpec& path) {
  if (path.nodes.empty()) return {};
  if (path.nodes.front() != Complex{}) throw Error("integration path must start at 0");

  std::vector<Complex> nodes = path.nodes;
  std::vector<int> root_of(nodes.size(), -1);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    root_of[i] = root_index_if_exact(n, nodes[i]);
    if (root_of[i] >= 0) {
      nodes[i] = root_of_unity(n, root_of[i]);
    } else if (distance_to_roots(n, nodes[i]) < kRootGuard) {
      throw SingularityError("path node inside the guard band of a root of unity");
    }
  }

  const double alpha = exponent(n);
  const double rho_max = singular_radius(n);
  BranchTracker tracker(n);
  PathIntegral total;

  auto add = [&](const ComplexQuadrature& q) {
    total.value += q.value;
    total.err_estimate += q.err_estimate;
    total.evaluations += q.evaluations;
  };

  // Regular piece: short steps, each integrated against the tracker state at
  // its start, then the tracker moves to the step's end.
  auto regular = [&](Complex from, Complex to) {
    Complex p = from;
    while (p != to) {
      const double dist = distance_to_roots(n, p);
      if (dist < kRootGuard) throw SingularityError("path passes through a root of unity");
      const double remaining = std::abs(to - p);
      double step = std::min({path.max_step, 0.05 * dist, remaining});
      for (;;) {
        const Complex q = step >= remaining ? to : p + (to - p) * (step / remaining);
        try {
          auto f = [&](Complex z) { return tracker.peek(z); };
          const ComplexQuadrature piece = integrate_adaptive(f, p, q);
          tracker.advance(q);
          add(piece);
          p = q;
          break;
        } catch (const BranchAmbiguityError&) {
          step *= 0.5;
          if (step < 1e-3 * kRootGuard) throw;
        }
      }
    }
  };

  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    Complex a = nodes[i];
    Complex b = nodes[i + 1];
    if (a == b) continue;
    const int ka = root_of[i];
    const int kb = root_of[i + 1];

    if (ka >= 0) {
      const Complex r = root_of_unity(n, ka);
      const double rho = std::min({std::abs(tracker.last_z() - r), 0.5 * std::abs(b - r), rho_max});
      tracker.set_distance_to_root(ka, rho);
      const Complex probe = tracker.last_z();
      int side = 0;
      const bool plus = in_half(local_angle(probe, r, 1), 1) && in_half(local_angle(b, r, 1), 1);
      const bool minus = in_half(local_angle(probe, r, -1), -1) && in_half(local_angle(b, r, -1), -1);
      if (plus && !minus) {
        side = 1;
      } else if (minus && !plus) {
        side = -1;
      } else if (plus && minus) {
        side = ka == 1 ? -1 : 1;
      } else {
        const double sp = std::abs(local_angle(b, r, 1) - local_angle(probe, r, 1));
        const double sm = std::abs(local_angle(b, r, -1) - local_angle(probe, r, -1));
        side = sp <= sm ? 1 : -1;
      }
      const Complex m = tracker.round_root(ka, b, side);
      auto f = [&](Complex, Complex from_root, Complex) {
        return tracker.peek_u(one_minus_power_near_root(n, ka, from_root));
      };
      add(integrate_segment(f, r, m, alpha, 0.0));
      a = m;
    }

    if (kb >= 0) {
      const Complex r = root_of_unity(n, kb);
      const double d = std::abs(a - r);
      const double rho = std::min(0.5 * d, rho_max);
      const Complex m = r + (a - r) * (rho / d);
      regular(a, m);
      auto f = [&](Complex, Complex, Complex to_root) {
        return tracker.peek_u(one_minus_power_near_root(n, kb, -to_root));
      };
      add(integrate_segment(f, m, r, 0.0, alpha));
    } else {
      regular(a, b);
    }
  }
  return total;
}

Complex integrate_path(int n, const PathSpec& path) { return integrate_path_detailed(n, path).value; }

}  // namespace squig::numerics
