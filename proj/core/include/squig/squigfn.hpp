#ifndef SQUIG_SQUIGFN_HPP
#define SQUIG_SQUIGFN_HPP

#include <optional>

#include "squig/geometry.hpp"
#include "squig/series.hpp"
#include "squig/types.hpp"

namespace squig::squigfn {

using geometry::SquigContext;

struct EvalResult {
  std::optional<Complex> value;
  /// At (a translate of) a pole of sin_3.
  bool is_pole = false;
  /// Within the guard of a boundary vertex omega^k P_n (n >= 4), where
  /// |sin_n| grows without bound.
  bool diverges = false;
  /// |F_n(sin_n z) - z| after folding.
  double residual = 0.0;
};

struct SinCos {
  EvalResult sin;
  EvalResult cos;
};

/// Default number of nonzero series terms.
inline constexpr int kDefaultSeriesTerms = 40;

double pi_n(const SquigContext& ctx);

/// F_n on the closed sector 0 <= arg z <= 2 pi / n. Throws DomainError
/// outside it and SingularityError within kRootGuard of a root other than the
/// root itself.
Complex arcsin_n_sector(const SquigContext& ctx, Complex z);

/// Inverse of sin_n: the point of Omega_n mapped to w. The tips omega^k of
/// the slits map to the vertices omega^k A_n; other slit points are rejected.
Complex arcsin_n(const SquigContext& ctx, Complex w);

EvalResult sin_n(const SquigContext& ctx, Complex z);
EvalResult cos_n(const SquigContext& ctx, Complex z);
/// Both functions from a single inversion.
SinCos sin_cos_n(const SquigContext& ctx, Complex z);

/// The doubly periodic extension of sin_3 to the whole plane.
EvalResult sin3_global(const SquigContext& ctx, Complex z);

/// First `terms` nonzero Maclaurin coefficients of sin_n (cached).
numerics::RationalSeries maclaurin(const SquigContext& ctx, int terms);
/// Same without a context; n = 2 gives the ordinary sine.
numerics::RationalSeries maclaurin_series(int n, int terms);

/// Radius of convergence from the ratios of consecutive nonzero
/// coefficients. With 8 or more terms the last three ratios are extrapolated
/// quadratically in 1/k; with 2 to 7 terms the last ratio is used as is.
double radius_estimate(const numerics::RationalSeries& series);

/// lim_{y -> -inf} F_n(y) for odd n, which equals -R_n.
double arcsin_n_lower_limit(const SquigContext& ctx);

}  // namespace squig::squigfn

#endif  // SQUIG_SQUIGFN_HPP
