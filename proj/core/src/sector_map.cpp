#include "squig/sector_map.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include <boost/numeric/odeint.hpp>

#include "squig/errors.hpp"
#include "squig/quadrature.hpp"

namespace squig::numerics {

namespace {

double kernel_exponent(int n) { return static_cast<double>(n - 1) / n; }

double segment_distance(Complex a, Complex b, Complex p) {
  const Complex d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(p - a);
  const double t = std::clamp(((p - a) * std::conj(d)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * d));
}

/// Projection onto the half-sector 0 <= arg z <= pi/n.
Complex clamp_half(int n, Complex z) {
  if (z == Complex{}) return z;
  const double a = std::arg(z);
  if (a >= 0.0 && a <= kPi / n) return z;
  const double r = std::abs(z);
  if (a < 0.0) return {r, 0.0};
  return std::polar(r, kPi / n);
}

/// Keeps 1 + delta in the half-sector without rounding delta through 1 + delta.
Complex clamp_offset(int n, Complex delta) {
  if (delta.imag() < 0.0) {
    const Complex z = 1.0 + delta;
    const double m = std::abs(z);
    return {(2.0 * delta.real() + std::norm(delta)) / (m + 1.0), 0.0};
  }
  const Complex z = 1.0 + delta;
  if (std::arg(z) > kPi / n) return clamp_half(n, z) - 1.0;
  return delta;
}

double corner_radius(int n) { return 0.5 * std::sin(kPi / n); }

struct Candidate {
  Complex z;
  Complex value;
  double residual;
};

/// Damped Newton loop shared by both solvers. `eval` maps an iterate to the
/// quantity compared against the target, `step` gives the Newton correction,
/// `project` keeps iterates admissible. Returns false on stall.
template <class Eval, class Step, class Project>
bool damped_newton(Candidate& c, Complex target, const NewtonOptions& opt, int& iterations,
                   Eval&& eval, Step&& step, Project&& project) {
  int polish = 0;
  while (iterations < opt.max_iter) {
    const bool converged = c.residual < opt.tol;
    if (converged && (polish >= 3 || c.residual == 0.0)) return true;
    Complex dz;
    try {
      dz = step(c);
    } catch (const NumericError&) {
      return converged;
    }
    if (!std::isfinite(std::abs(dz))) return converged;
    if (std::abs(dz) <= 1e-17 * std::abs(c.z)) return converged;
    ++iterations;
    double lambda = 1.0;
    bool accepted = false;
    // Once converged only full steps are tried: damping would just re-add
    // rounding noise.
    const int max_halvings = converged ? 1 : 40;
    for (int h = 0; h < max_halvings; ++h) {
      const Complex zn = project(c.z - lambda * dz);
      try {
        const Complex v = eval(zn);
        const double r = std::abs(v - target);
        if (r < c.residual) {
          c = {zn, v, r};
          accepted = true;
          break;
        }
      } catch (const NumericError&) {
      }
      lambda *= 0.5;
    }
    if (converged) {
      if (!accepted) return true;
      ++polish;
    } else if (!accepted) {
      return false;
    }
  }
  return c.residual < opt.tol;
}

std::optional<NewtonResult> solve_general(const SectorPrimitive& F, Complex w, Complex z0,
                                          const NewtonOptions& opt) {
  const int n = F.n();
  Candidate c;
  c.z = clamp_half(n, z0);
  try {
    c.value = F(c.z);
  } catch (const NumericError&) {
    c.z = F.seed_for(w);
    c.value = F(c.z);
  }
  c.residual = std::abs(c.value - w);
  int iterations = 0;
  const bool ok = damped_newton(
      c, w, opt, iterations, [&](Complex z) { return F(z); },
      [&](const Candidate& s) { return (s.value - w) / F.derivative(s.z); },
      [&](Complex z) { return clamp_half(n, z); });
  if (!ok) return std::nullopt;
  return NewtonResult{c.z, c.residual, iterations, std::nullopt};
}

/// Offset 1 + delta predicted by linearising D^n (see below).
Complex corner_guess(const SectorPrimitive& F, Complex w) {
  const int n = F.n();
  const Complex probe{0.0, 1e-3};
  const Complex slope = pow_int(F.offset_from_root(0, probe), n) / probe;
  return pow_int(w - F.A(), n) / slope;
}

/// Near the corner A the inverse behaves like a power; with
/// D(delta) = F(1 + delta) - A, the map delta -> D^n is conformal at 0, so
/// Newton on D^n = (w - A)^n converges quadratically.
std::optional<NewtonResult> solve_near_corner(const SectorPrimitive& F, Complex w, Complex z0,
                                              const NewtonOptions& opt) {
  const int n = F.n();
  const Complex target = w - F.A();
  if (target == Complex{}) return NewtonResult{1.0, 0.0, 0, Complex{}};
  const Complex target_pow = pow_int(target, n);
  Candidate c;
  c.z = clamp_offset(n, corner_guess(F, w));
  c.value = F.offset_from_root(0, c.z);
  c.residual = std::abs(c.value - target);
  // A start near the corner (from continuation) beats the linearisation.
  if (std::abs(z0 - 1.0) < corner_radius(n)) {
    const Complex d = clamp_offset(n, z0 - 1.0);
    if (d != Complex{}) {
      const Complex v = F.offset_from_root(0, d);
      if (std::abs(v - target) < c.residual) c = {d, v, std::abs(v - target)};
    }
  }
  int iterations = 0;
  const bool ok = damped_newton(
      c, target, opt, iterations, [&](Complex d) { return F.offset_from_root(0, d); },
      [&](const Candidate& s) {
        const Complex g = pow_int(s.value, n) - target_pow;
        const Complex dg = static_cast<double>(n) * pow_int(s.value, n - 1) * F.derivative_near_root(0, s.z);
        return g / dg;
      },
      [&](Complex d) { return clamp_offset(n, d); });
  if (!ok) return std::nullopt;
  return NewtonResult{1.0 + c.z, c.residual, iterations, c.z};
}

std::optional<NewtonResult> solve(const SectorPrimitive& F, Complex w, Complex z0,
                                  const NewtonOptions& opt) {
  const double r = corner_radius(F.n());
  if (std::abs(w - F.A()) < 0.3 * std::abs(F.A()) || std::abs(z0 - 1.0) < r ||
      std::abs(corner_guess(F, w)) < r) {
    if (auto r = solve_near_corner(F, w, z0, opt)) return r;
  }
  return solve_general(F, w, z0, opt);
}

/// z(1) for dz/ds = (w1 - w0) (1 - z^n)^{(n-1)/n}, z(0) = z0, with adaptive
/// Dormand-Prince steps.
Complex inverse_ode(int n, Complex w0, Complex z0, Complex w1, double tol) {
  using State = std::array<double, 2>;
  const double alpha = kernel_exponent(n);
  const Complex dw = w1 - w0;
  auto rhs = [&](const State& x, State& dxds, double) {
    const Complex z{x[0], x[1]};
    const Complex u = one_minus_power(n, z);
    const Complex v = u == Complex{} ? Complex{} : dw * std::polar(std::pow(std::abs(u), alpha), alpha * sector_arg(n, z, u));
    dxds = {v.real(), v.imag()};
  };
  State x{z0.real(), z0.imag()};
  namespace odeint = boost::numeric::odeint;
  const std::size_t steps = odeint::integrate_adaptive(
      odeint::make_controlled(tol, tol, odeint::runge_kutta_dopri5<State>()), rhs, x, 0.0, 1.0, 1e-2);
  const Complex z{x[0], x[1]};
  if (!std::isfinite(std::abs(z)) || steps > 100000) throw ConvergenceFailure("inverse ODE diverged", 0.0);
  return clamp_half(n, z);
}

}  // namespace

bool in_closed_sector(int n, Complex z, double tol) {
  if (z == Complex{}) return true;
  const double a = std::arg(z);
  return a >= -tol && a <= 2.0 * kPi / n + tol;
}

SectorPrimitive::SectorPrimitive(int n) : n_(n) {
  if (n < 2) throw UnsupportedParameter("sector primitive needs n >= 2");
  const double alpha = kernel_exponent(n);
  const auto half = integrate_endpoint_singular(
      [n, alpha](double t, double, double to_one) {
        const double u = t <= 0.5 ? 1.0 - std::pow(t, n) : -std::expm1(n * std::log1p(-to_one));
        return std::pow(u, -alpha);
      },
      0.0, 1.0, 0.0, alpha);
  a_ = half.value;
  b_ = root_of_unity(n, 1) * half.value;
  near_radius_ = 0.5 * std::sin(kPi / n);
  route_radius_ = 0.25 * std::sin(kPi / n);

  seeds_.reserve(32);
  for (double rho : {0.3, 0.6, 0.9, 1.2, 1.6, 2.5, 4.0, 8.0}) {
    for (int j = 0; j < 4; ++j) {
      const Complex z = j == 0 ? Complex{rho, 0.0} : std::polar(rho, kPi / n * j / 3.0);
      seeds_.emplace_back((*this)(z), z);
    }
  }
}

Complex SectorPrimitive::operator()(Complex z) const {
  if (!in_closed_sector(n_, z)) throw DomainError("closed sector V_n", "F_n argument");
  if (z == Complex{}) return {};
  for (int k = 0; k < 2; ++k) {
    const Complex r = root_of_unity(n_, k);
    const double d = std::abs(z - r);
    if (d <= 1e-15) return k == 0 ? a_ : b_;
    if (d < near_radius_) return (k == 0 ? a_ : b_) + offset_from_root(k, z - r);
  }
  for (int k = 0; k < 2; ++k) {
    const Complex r = root_of_unity(n_, k);
    if (segment_distance(0.0, z, r) < route_radius_) {
      return integrate_path(n_, PathSpec{{0.0, r, z}});
    }
  }
  return integrate_path(n_, PathSpec{{0.0, z}});
}

Complex SectorPrimitive::offset_from_root(int k, Complex delta) const {
  if (delta == Complex{}) return {};
  const Complex r = root_of_unity(n_, k);
  auto f = [&](Complex zeta, Complex from_root, Complex) {
    const Complex u = one_minus_power_near_root(n_, k, from_root);
    return kernel_from(u, sector_arg(n_, zeta, u), n_);
  };
  return integrate_displacement(f, r, delta, kernel_exponent(n_), 0.0).value;
}

Complex SectorPrimitive::derivative(Complex z) const { return sector_kernel(n_, z); }

Complex SectorPrimitive::derivative_near_root(int k, Complex delta) const {
  const Complex u = one_minus_power_near_root(n_, k, delta);
  if (u == Complex{}) throw SingularityError("F_n' evaluated at a root of unity");
  return kernel_from(u, sector_arg(n_, root_of_unity(n_, k) + delta, u), n_);
}

Complex SectorPrimitive::seed_for(Complex w) const {
  const auto it = std::min_element(seeds_.begin(), seeds_.end(), [&](const auto& a, const auto& b) {
    return std::abs(a.first - w) < std::abs(b.first - w);
  });
  return it->second;
}

NewtonResult newton_invert(const SectorPrimitive& F, Complex w, Complex z0,
                           const NewtonOptions& opt) {
  if (w == Complex{}) return {Complex{}, 0.0, 0, std::nullopt};
  if (auto r = solve(F, w, z0, opt)) return *r;

  // Integrate the inverse dz/dw = 1 / K_n(z) along the straight segment from
  // the nearest tabulated pair, then polish. The triangle is convex, so the
  // segment stays in the image of the half-sector.
  const auto seed = std::min_element(F.seeds().begin(), F.seeds().end(),
                                     [&](const auto& a, const auto& b) {
                                       return std::abs(a.first - w) < std::abs(b.first - w);
                                     });
  double last_residual = std::numeric_limits<double>::infinity();
  for (double ode_tol : {1e-9, 1e-13}) {
    Complex z;
    try {
      z = inverse_ode(F.n(), seed->first, seed->second, w, ode_tol);
    } catch (const NumericError&) {
      continue;
    }
    if (auto r = solve(F, w, z, opt)) return *r;
    try {
      last_residual = std::min(last_residual, std::abs(F(clamp_half(F.n(), z)) - w));
    } catch (const NumericError&) {
    }
  }
  throw ConvergenceFailure("Newton inversion of F_n did not converge", last_residual);
}

Complex newton_invert(int n, Complex w, Complex z0, double tol) {
  const SectorPrimitive F(n);
  NewtonOptions opt;
  opt.tol = tol;
  return newton_invert(F, w, z0, opt).z;
}

int winding_number(const std::vector<Complex>& loop_values, Complex w) {
  if (loop_values.size() < 2) throw DegenerateLoop("loop needs at least two samples");
  double total = 0.0;
  const std::size_t m = loop_values.size();
  const bool closed = loop_values.front() == loop_values.back();
  const std::size_t edges = closed ? m - 1 : m;
  for (std::size_t i = 0; i < edges; ++i) {
    const Complex a = loop_values[i] - w;
    const Complex b = loop_values[(i + 1) % m] - w;
    if (a == Complex{} || b == Complex{}) throw DegenerateLoop("loop sample coincides with target");
    const double d = std::arg(b / a);
    if (std::abs(d) >= kPi * (1.0 - 1e-12)) {
      throw RefinementNeeded("argument increment reached pi; refine the loop");
    }
    total += d;
  }
  return static_cast<int>(std::lround(total / (2.0 * kPi)));
}

}  // namespace squig::numerics
