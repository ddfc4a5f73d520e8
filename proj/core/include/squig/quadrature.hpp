#ifndef SQUIG_QUADRATURE_HPP
#define SQUIG_QUADRATURE_HPP

// Double-exponential (tanh-sinh) quadrature for endpoint-singular integrals,
// a tail rule for [a, inf) built on u = 1/t, and adaptive Gauss-Kronrod for
// smooth complex segments.
//
// Integrands may take either the abscissa alone, f(x), or the abscissa
// together with its distances to the two interval ends, f(x, x - a, b - x).
// The second form lets an integrand with a singularity at an endpoint
// evaluate itself accurately when x rounds to the endpoint.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <type_traits>
#include <utility>

#include "squig/errors.hpp"
#include "squig/types.hpp"

namespace squig::numerics {

template <class T>
struct QuadratureResult {
  T value{};
  double err_estimate = 0.0;
  int evaluations = 0;
};

using RealQuadrature = QuadratureResult<double>;
using ComplexQuadrature = QuadratureResult<Complex>;

/// Maximum tanh-sinh level: 10 unless SQUIG_MAX_QUAD_LEVEL overrides it.
int default_max_level();

struct QuadratureOptions {
  double rel_tol = 1e-14;
  double abs_tol = 0.0;
  int min_level = 3;
  int max_level = default_max_level();
};

namespace detail {

template <class F, class X>
auto call_integrand(F& f, X x, X from_left, X from_right) {
  if constexpr (std::is_invocable_v<F&, X, X, X>) {
    return f(x, from_left, from_right);
  } else {
    return f(x);
  }
}

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(Complex v) { return std::abs(v); }

/// tanh-sinh rule for the integral of g(t, 1 - t) over [0, 1]. The
/// complement is produced directly from the node formula, so it stays
/// accurate when t is within rounding of 1.
template <class T, class G>
QuadratureResult<T> tanh_sinh_unit(G&& g, const QuadratureOptions& opt) {
  constexpr double kTMax = 4.0;
  T sum{};
  double abs_sum = 0.0;
  int evaluations = 0;

  auto add_node = [&](double t) {
    const double at = std::abs(t);
    const double e = std::exp(-kPi * std::sinh(at));
    const double w = kPi * std::cosh(at) * e / ((1.0 + e) * (1.0 + e));
    double s = 1.0 / (1.0 + e);
    double c = e / (1.0 + e);
    if (t < 0) std::swap(s, c);
    if (w == 0.0 || s == 0.0 || c == 0.0) return;
    const T v = g(s, c);
    ++evaluations;
    // Substituted integrands are bounded; a non-finite value this close to an
    // end comes from underflow of the offset and carries no weight.
    if (!std::isfinite(magnitude(v)) && std::min(s, c) < 1e-20) return;
    sum += w * v;
    abs_sum += w * magnitude(v);
  };

  // Level 0: unit spacing.
  for (int j = -static_cast<int>(kTMax); j <= static_cast<int>(kTMax); ++j) add_node(j);
  double h = 1.0;
  T estimate = h * sum;
  T previous = estimate;

  for (int level = 1; level <= opt.max_level; ++level) {
    h *= 0.5;
    for (double t = h; t <= kTMax; t += 2.0 * h) {
      add_node(t);
      add_node(-t);
    }
    previous = estimate;
    estimate = h * sum;
    const double err = magnitude(estimate - previous);
    if (!std::isfinite(err)) break;
    const double floor_tol = 64.0 * std::numeric_limits<double>::epsilon() * h * abs_sum;
    const double tol = std::max({opt.abs_tol, opt.rel_tol * magnitude(estimate), floor_tol});
    if (level >= opt.min_level && err <= tol) {
      return {estimate, err, evaluations};
    }
  }
  throw QuadratureFailure("tanh-sinh quadrature did not converge", magnitude(previous),
                          magnitude(estimate));
}

/// 1 - s^m for s in [0, 1] given the complement c = 1 - s.
inline double one_minus_power(double s, double c, double m) {
  if (s <= 0.5) return 1.0 - std::pow(s, m);
  return -std::expm1(m * std::log1p(-c));
}

/// Offsets from a singular end below this floor are evaluated at the floor.
/// After the substitution below the integrand is m h(t) with h smooth, so it
/// is constant to O(t) there; sampling it at offsets that underflow would
/// drop a share of order floor^{1 - exponent} of the integral.
inline constexpr double kMinOffset = 1e-250;

/// Moves the substitution variable s (complement c) up to where s^m equals
/// kMinOffset.
inline void clamp_to_floor(double& s, double& c, double m) {
  s = std::pow(kMinOffset, 1.0 / m);
  c = 1.0 - s;
}

/// Integral of g(t, 1 - t) over [0, 1] where g may behave like t^{-left_exp}
/// at 0 and (1 - t)^{-right_exp} at 1. Each singular end is removed with the
/// substitution (distance to end) = s^m, m = 1 / (1 - exponent), which turns
/// the integrand bounded; the result then goes through tanh-sinh.
template <class T, class G>
QuadratureResult<T> integrate_unit(G&& g, double left_exp, double right_exp,
                                   const QuadratureOptions& opt) {
  if (!(left_exp < 1.0) || !(right_exp < 1.0)) {
    throw DivergentIntegral("endpoint singularity exponent must be < 1");
  }
  const bool left = left_exp > 0.0;
  const bool right = right_exp > 0.0;
  const double ml = left ? 1.0 / (1.0 - left_exp) : 1.0;
  const double mr = right ? 1.0 / (1.0 - right_exp) : 1.0;

  if (!left && !right) {
    return tanh_sinh_unit<T>(std::forward<G>(g), opt);
  }
  if (left && !right) {
    return tanh_sinh_unit<T>(
        [&](double s, double c) -> T {
          if (std::pow(s, ml) < kMinOffset) clamp_to_floor(s, c, ml);
          const double t = std::pow(s, ml);
          const double jac = ml * std::pow(s, ml - 1.0);
          return jac * g(t, one_minus_power(s, c, ml));
        },
        opt);
  }
  if (!left && right) {
    return tanh_sinh_unit<T>(
        [&](double s, double c) -> T {
          // c measures the distance from the right end.
          if (std::pow(c, mr) < kMinOffset) clamp_to_floor(c, s, mr);
          const double u = std::pow(c, mr);
          const double jac = mr * std::pow(c, mr - 1.0);
          return jac * g(one_minus_power(c, s, mr), u);
        },
        opt);
  }
  // Both ends singular: split at 1/2 and substitute on each half. The two
  // halves share one node set so a single convergence test covers both.
  return tanh_sinh_unit<T>(
      [&](double s, double c) -> T {
        T acc{};
        double sl = s, cl = c;
        if (std::pow(sl, ml) < kMinOffset) clamp_to_floor(sl, cl, ml);
        const double tl = 0.5 * std::pow(sl, ml);
        acc += 0.5 * ml * std::pow(sl, ml - 1.0) * g(tl, 1.0 - tl);
        double sr = s, cr = c;
        if (std::pow(sr, mr) < kMinOffset) clamp_to_floor(sr, cr, mr);
        const double ur = 0.5 * std::pow(sr, mr);
        acc += 0.5 * mr * std::pow(sr, mr - 1.0) * g(1.0 - ur, ur);
        return acc;
      },
      opt);
}

// 15-point Kronrod / 7-point Gauss abscissae and weights on [-1, 1].
inline constexpr std::array<double, 8> kKronrodX = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodW = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussW = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
void gauss_kronrod_step(F& f, Complex a, Complex b, Complex& kronrod, double& err,
                        double& abs_integral) {
  const Complex center = 0.5 * (a + b);
  const Complex half = 0.5 * (b - a);
  const double scale = std::abs(half);
  const Complex fc = f(center);
  Complex k = kKronrodW[7] * fc;
  Complex gsum = kGaussW[3] * fc;
  double abs_k = kKronrodW[7] * std::abs(fc);
  for (int j = 0; j < 7; ++j) {
    const Complex dx = half * kKronrodX[j];
    const Complex f1 = f(center - dx);
    const Complex f2 = f(center + dx);
    k += kKronrodW[j] * (f1 + f2);
    abs_k += kKronrodW[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gsum += kGaussW[j / 2] * (f1 + f2);
  }
  kronrod = k * half;
  abs_integral = abs_k * scale;
  const double raw = std::abs((k - gsum) * half);
  // QUADPACK-style rescaling of |K - G|.
  err = abs_integral > 0 ? abs_integral * std::min(1.0, std::pow(200.0 * raw / abs_integral, 1.5))
                         : raw;
}

template <class F>
void gauss_kronrod_recurse(F& f, Complex a, Complex b, double tol, int depth,
                           ComplexQuadrature& out) {
  Complex value;
  double err = 0.0;
  double abs_integral = 0.0;
  gauss_kronrod_step(f, a, b, value, err, abs_integral);
  out.evaluations += 15;
  const double floor_tol = 50.0 * std::numeric_limits<double>::epsilon() * abs_integral;
  if (err <= std::max(tol, floor_tol) || depth >= 48) {
    if (depth >= 48 && err > std::max(tol, floor_tol)) {
      throw QuadratureFailure("adaptive Gauss-Kronrod hit its depth limit", std::abs(value),
                              err);
    }
    out.value += value;
    out.err_estimate += err;
    return;
  }
  const Complex mid = 0.5 * (a + b);
  gauss_kronrod_recurse(f, a, mid, 0.5 * tol, depth + 1, out);
  gauss_kronrod_recurse(f, mid, b, 0.5 * tol, depth + 1, out);
}

}  // namespace detail

/// Integral of a real f over [a, b] with integrable endpoint singularities of
/// order left_exp at a and right_exp at b (0 for a regular end).
template <class F>
RealQuadrature integrate_endpoint_singular(F&& f, double a, double b, double left_exp,
                                           double right_exp, const QuadratureOptions& opt = {}) {
  if (a == b) return {0.0, 0.0, 1};
  const double len = b - a;
  auto g = [&](double t, double c) -> double {
    return len * detail::call_integrand(f, a + len * t, len * t, len * c);
  };
  return detail::integrate_unit<double>(g, left_exp, right_exp, opt);
}

/// Integral of f over [a, inf) for f(t) = O(t^{-decay_exp}). The range
/// [max(a,1), inf) is mapped by u = 1/t onto a finite interval; a part below
/// 1 is integrated directly. singular_exp gives the order of an integrable
/// singularity at a. Integrands taking three arguments receive
/// (t, t - a, +inf).
template <class F>
RealQuadrature integrate_tail(F&& f, double a, double decay_exp, double singular_exp = 0.0,
                              const QuadratureOptions& opt = {}) {
  if (!(decay_exp > 1.0)) throw DivergentIntegral("tail integral needs decay exponent > 1");
  if (a < 0.0) throw DivergentIntegral("tail integral lower limit must be >= 0");
  constexpr double kInf = std::numeric_limits<double>::infinity();
  RealQuadrature head{0.0, 0.0, 0};
  double start = a;
  double start_exp = singular_exp;
  if (a < 1.0) {
    head = integrate_endpoint_singular(
        [&](double t, double from_a, double) {
          return detail::call_integrand(f, t, from_a, kInf);
        },
        a, 1.0, singular_exp, 0.0, opt);
    start = 1.0;
    start_exp = 0.0;
  }
  // t = start / tau, tau in (0, 1].
  const double origin = a;
  auto g = [&](double tau, double c) -> double {
    const double t = start / tau;
    const double from_origin = (start - origin) + start * c / tau;
    const double v = detail::call_integrand(f, t, from_origin, kInf) * start / (tau * tau);
    if (!std::isfinite(v) && tau < 1e-100) return 0.0;
    return v;
  };
  const double left_exp = std::max(0.0, 2.0 - decay_exp);
  RealQuadrature tail = detail::integrate_unit<double>(g, left_exp, start_exp, opt);
  tail.value += head.value;
  tail.err_estimate += head.err_estimate;
  tail.evaluations += head.evaluations;
  return tail;
}

/// Complex line integral of f along the segment from a to a + d with
/// endpoint singularities of the given orders. Three-argument integrands
/// receive (z, z - a, a + d - z), the offsets formed from d directly so that
/// a short segment far from the origin keeps its digits.
template <class F>
ComplexQuadrature integrate_displacement(F&& f, Complex a, Complex d, double left_exp,
                                         double right_exp, const QuadratureOptions& opt = {}) {
  if (d == Complex{}) return {Complex{}, 0.0, 1};
  auto g = [&](double t, double c) -> Complex {
    return d * detail::call_integrand(f, a + d * t, d * t, d * c);
  };
  return detail::integrate_unit<Complex>(g, left_exp, right_exp, opt);
}

/// Complex line integral of f along the segment [a, b]; see
/// integrate_displacement.
template <class F>
ComplexQuadrature integrate_segment(F&& f, Complex a, Complex b, double left_exp,
                                    double right_exp, const QuadratureOptions& opt = {}) {
  return integrate_displacement(std::forward<F>(f), a, b - a, left_exp, right_exp, opt);
}

/// Adaptive 15-point Gauss-Kronrod along the segment [a, b] for an integrand
/// analytic on a neighbourhood of the segment.
template <class F>
ComplexQuadrature integrate_adaptive(F&& f, Complex a, Complex b, double rel_tol = 1e-14,
                                     double abs_tol = 0.0) {
  ComplexQuadrature out{Complex{}, 0.0, 0};
  if (a == b) {
    out.evaluations = 1;
    return out;
  }
  // First pass sets the absolute target from the size of the integral.
  Complex first;
  double err = 0.0;
  double abs_integral = 0.0;
  detail::gauss_kronrod_step(f, a, b, first, err, abs_integral);
  const double tol = std::max(abs_tol, rel_tol * std::max(std::abs(first), 1e-3 * abs_integral));
  if (err <= tol) return {first, err, 15};
  out.evaluations = 15;
  const Complex mid = 0.5 * (a + b);
  detail::gauss_kronrod_recurse(f, a, mid, 0.5 * tol, 1, out);
  detail::gauss_kronrod_recurse(f, mid, b, 0.5 * tol, 1, out);
  return out;
}

}  // namespace squig::numerics

#endif  // SQUIG_QUADRATURE_HPP
