#include "squig/squigfn.hpp"

#include <cmath>
#include <limits>

#include "squig/branch.hpp"
#include "squig/errors.hpp"
#include "squig/quadrature.hpp"

namespace squig::squigfn {

namespace {

/// cos_n on the fundamental triangle from the inverse point s there:
/// arg(1 - s^n) lies in [-pi, 0] on the half-sector.
Complex cos_on_triangle(int n, const numerics::NewtonResult& r) {
  const Complex u = r.offset_from_one ? numerics::one_minus_power_near_root(n, 0, *r.offset_from_one)
                                      : numerics::one_minus_power(n, r.z);
  if (u == Complex{}) return {};
  double a = std::arg(u);
  if (a > 0.5 * kPi) a -= 2.0 * kPi;
  return std::polar(std::pow(std::abs(u), 1.0 / n), a / n);
}

}  // namespace

double pi_n(const SquigContext& ctx) { return ctx.pi_n; }

Complex arcsin_n_sector(const SquigContext& ctx, Complex z) {
  if (!numerics::in_closed_sector(ctx.n, z)) {
    throw DomainError("closed sector V_n", "arcsin_n_sector argument");
  }
  for (int k = 0; k < 2; ++k) {
    const double d = std::abs(z - root_of_unity(ctx.n, k));
    if (d > 1e-15 && d < numerics::kRootGuard) {
      throw SingularityError("arcsin_n_sector argument inside the guard band of a root");
    }
  }
  return (*ctx.primitive)(z);
}

Complex arcsin_n(const SquigContext& ctx, Complex w) {
  const int slit = geometry::slit_index(ctx, w);
  if (slit >= 0) {
    const Complex tip = root_of_unity(ctx.n, slit);
    if (std::abs(w - tip) <= 8.0 * std::numeric_limits<double>::epsilon()) return tip * ctx.A;
    throw DomainError("Sigma_n", "w lies on the slit omega^" + std::to_string(slit) + " [1, inf)");
  }
  if (w == Complex{}) return {};
  const double step = 2.0 * kPi / ctx.n;
  const int k = static_cast<int>(std::floor(arg_positive(w) / step)) % ctx.n;
  const Complex z = w * root_of_unity(ctx.n, -k);
  return root_of_unity(ctx.n, k) * (*ctx.primitive)(z);
}

SinCos sin_cos_n(const SquigContext& ctx, Complex z) {
  const geometry::FoldResult f = geometry::fold(ctx, z);
  SinCos out;
  if (f.at_pole) {
    const bool pole = ctx.n == 3;
    out.sin.is_pole = out.cos.is_pole = pole;
    out.sin.diverges = out.cos.diverges = !pole;
    return out;
  }
  const auto& F = *ctx.primitive;
  const numerics::NewtonResult r = numerics::newton_invert(F, f.folded, F.seed_for(f.folded));
  out.sin.value = geometry::unfold_sine(ctx, f, r.z);
  out.cos.value = geometry::unfold_cosine(ctx, f, cos_on_triangle(ctx.n, r));
  out.sin.residual = out.cos.residual = r.residual;
  return out;
}

EvalResult sin_n(const SquigContext& ctx, Complex z) { return sin_cos_n(ctx, z).sin; }

EvalResult cos_n(const SquigContext& ctx, Complex z) { return sin_cos_n(ctx, z).cos; }

EvalResult sin3_global(const SquigContext& ctx, Complex z) {
  if (ctx.n != 3) throw UnsupportedParameter("sin3_global needs the n = 3 context");
  return sin_n(ctx, z);
}

numerics::RationalSeries maclaurin(const SquigContext& ctx, int terms) {
  if (terms < 1) throw UnsupportedParameter("series needs at least one term");
  return ctx.series_cache->get(terms);
}

numerics::RationalSeries maclaurin_series(int n, int terms) {
  if (n < 2) throw UnsupportedParameter("series needs n >= 2");
  if (terms < 1) throw UnsupportedParameter("series needs at least one term");
  return numerics::sine_series(n, terms);
}

double radius_estimate(const numerics::RationalSeries& series) {
  const std::size_t count = series.size();
  if (count < 2) throw InvalidSeries("radius estimate needs at least two nonzero terms");
  const int m = numerics::degree_spacing(series);
  for (std::size_t i = 1; i < count; ++i) {
    if (series.degrees[i] - series.degrees[i - 1] != m) {
      throw InvalidSeries("radius estimate needs evenly spaced degrees");
    }
  }
  auto ratio = [&](std::size_t i) {
    const numerics::Rational q = series.coeffs[i] / series.coeffs[i - 1];
    return q.convert_to<double>();
  };
  double limit = ratio(count - 1);
  if (count >= 8) {
    // Ratios behave like r (1 + c1/k + c2/k^2 + ...); extrapolate to 1/k = 0.
    double x[3];
    double y[3];
    for (int i = 0; i < 3; ++i) {
      const std::size_t idx = count - 3 + i;
      x[i] = 1.0 / static_cast<double>(idx);
      y[i] = ratio(idx);
    }
    limit = 0.0;
    for (int i = 0; i < 3; ++i) {
      double basis = 1.0;
      for (int l = 0; l < 3; ++l) {
        if (l != i) basis *= (0.0 - x[l]) / (x[i] - x[l]);
      }
      limit += y[i] * basis;
    }
  }
  if (limit == 0.0) return std::numeric_limits<double>::infinity();
  return std::pow(std::abs(1.0 / limit), 1.0 / m);
}

double arcsin_n_lower_limit(const SquigContext& ctx) {
  if (ctx.n % 2 == 0) {
    throw UnsupportedParameter("F_n(-inf) is defined for odd n only");
  }
  const int n = ctx.n;
  const double alpha = static_cast<double>(n - 1) / n;
  // F_n(-y) = -integral_0^y (1 + t^n)^{-(n-1)/n} dt for odd n.
  const auto tail = numerics::integrate_tail(
      [n, alpha](double t) { return std::pow(1.0 + std::pow(t, n), -alpha); }, 0.0, n - 1.0);
  return -tail.value;
}

}  // namespace squig::squigfn
