#include "squig/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "squig/errors.hpp"

namespace squig::geometry {

namespace {

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

/// Signed distance of z from the line a -> b, positive on the left.
double side_distance(Complex a, Complex b, Complex z) {
  const Complex d = b - a;
  return cross(d, z - a) / std::abs(d);
}

bool in_triangle(Complex a, Complex b, Complex c, Complex z, double tol) {
  return side_distance(a, b, z) >= -tol && side_distance(b, c, z) >= -tol &&
         side_distance(c, a, z) >= -tol;
}

/// Rotation and conjugation that bring z into the half-sector
/// 0 <= arg <= pi / n. Near-ties on a bisector go to the smaller k.
void rotate_into_half_sector(int n, Complex z, FoldResult& r) {
  if (z == Complex{}) {
    r.folded = z;
    return;
  }
  const double step = 2.0 * kPi / n;
  const double q = arg_positive(z) / step;
  int k = static_cast<int>(std::ceil(q - 0.5 - 1e-13));
  k %= n;
  Complex f = z * root_of_unity(n, -k);
  if (f.imag() < 0.0) {
    f = std::conj(f);
    r.conjugated = true;
  }
  r.rotation_k = k;
  r.folded = f;
}

bool in_hexagon(const SquigContext& ctx, Complex z, double tol) {
  const auto v = omega_vertices(ctx);
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (side_distance(v[j], v[(j + 1) % v.size()], z) < -tol) return false;
  }
  return true;
}

}  // namespace

numerics::RationalSeries SeriesCache::get(int terms) const {
  std::lock_guard lock(mutex_);
  if (series_.size() < static_cast<std::size_t>(terms)) {
    series_ = numerics::sine_series(n_, terms);
  }
  return series_.prefix(static_cast<std::size_t>(terms));
}

SquigContext make_context(int n) {
  if (n < 3 || n > 64) {
    throw UnsupportedParameter("n must lie in 3..64, got " + std::to_string(n));
  }
  SquigContext ctx;
  ctx.n = n;
  ctx.omega = root_of_unity(n, 1);
  ctx.primitive = std::make_shared<const numerics::SectorPrimitive>(n);
  ctx.series_cache = std::make_shared<const SeriesCache>(n);
  ctx.pi_n = ctx.primitive->pi_n();
  ctx.A = ctx.primitive->A();
  ctx.B = ctx.primitive->B();
  ctx.P = std::polar(ctx.pi_n / 4.0 / std::cos(kPi / n), kPi / n);
  return ctx;
}

bool contains_fundamental(const SquigContext& ctx, Complex z, double tol) {
  return in_triangle(0.0, ctx.A, ctx.P, z, tol);
}

bool contains_Pi(const SquigContext& ctx, Complex z) {
  return in_triangle(0.0, ctx.A, ctx.P, z, kRegionTol) ||
         in_triangle(0.0, ctx.P, ctx.B, z, kRegionTol);
}

bool contains_Omega(const SquigContext& ctx, Complex z) {
  FoldResult r;
  rotate_into_half_sector(ctx.n, z, r);
  return contains_fundamental(ctx, r.folded);
}

int slit_index(const SquigContext& ctx, Complex w) {
  // Width of rounding in the rotation only: values of sin_n near a vertex
  // omega^k A come arbitrarily close to the slit for large n.
  const double guard = 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(w));
  for (int k = 0; k < ctx.n; ++k) {
    const Complex wk = w * root_of_unity(ctx.n, -k);
    if (wk.real() >= 1.0 - guard && std::abs(wk.imag()) <= guard) return k;
  }
  return -1;
}

bool contains_Sigma(const SquigContext& ctx, Complex w) { return slit_index(ctx, w) < 0; }

std::vector<Complex> omega_vertices(const SquigContext& ctx) {
  std::vector<Complex> v;
  v.reserve(2 * ctx.n);
  for (int k = 0; k < ctx.n; ++k) {
    const Complex r = root_of_unity(ctx.n, k);
    v.push_back(r * ctx.A);
    v.push_back(r * ctx.P);
  }
  return v;
}

Complex reflect_across_edge(const SquigContext& ctx, int edge, Complex z) {
  const auto v = omega_vertices(ctx);
  const Complex a = v[edge];
  const Complex b = v[(edge + 1) % v.size()];
  const Complex u = (b - a) / std::abs(b - a);
  return a + u * u * std::conj(z - a);
}

FoldResult fold(const SquigContext& ctx, Complex z) {
  FoldResult r;
  Complex zr = z;
  if (ctx.n == 3) {
    const Complex l1 = ctx.period1();
    const Complex l2 = ctx.period2();
    const double b = z.imag() / l2.imag();
    const double a = (z.real() - b * l2.real()) / l1.real();
    const int p0 = static_cast<int>(std::lround(a));
    const int q0 = static_cast<int>(std::lround(b));
    double best = std::numeric_limits<double>::infinity();
    for (int dp = -1; dp <= 1; ++dp) {
      for (int dq = -1; dq <= 1; ++dq) {
        const int p = p0 + dp;
        const int q = q0 + dq;
        const double d = std::abs(z - (static_cast<double>(p) * l1 + static_cast<double>(q) * l2));
        const double tie = 1e-12 * std::max(1.0, std::abs(z));
        const bool closer_origin =
            std::abs(p) + std::abs(q) < std::abs(r.lattice_shift.first) + std::abs(r.lattice_shift.second);
        if (d < best - tie || (d <= best + tie && closer_origin)) {
          best = d;
          r.lattice_shift = {p, q};
        }
      }
    }
    zr = z - (static_cast<double>(r.lattice_shift.first) * l1 +
              static_cast<double>(r.lattice_shift.second) * l2);
    if (!in_hexagon(ctx, zr, kRegionTol)) {
      const auto v = omega_vertices(ctx);
      double worst = 0.0;
      for (int j = 0; j < static_cast<int>(v.size()); ++j) {
        const double s = side_distance(v[j], v[(j + 1) % v.size()], zr);
        if (s < worst) {
          worst = s;
          r.reflected_edge = j;
        }
      }
      zr = reflect_across_edge(ctx, r.reflected_edge, zr);
    }
  }
  rotate_into_half_sector(ctx.n, zr, r);
  if (ctx.n > 3 && !contains_fundamental(ctx, r.folded)) {
    throw DomainError("Omega_n", "point is not in the closure of Omega_n");
  }
  r.at_pole = std::abs(r.folded - ctx.P) < kPoleGuard * std::abs(ctx.P);
  return r;
}

Complex unfold_point(const SquigContext& ctx, const FoldResult& f, Complex folded) {
  Complex z = f.conjugated ? std::conj(folded) : folded;
  z *= root_of_unity(ctx.n, f.rotation_k);
  if (f.reflected_edge >= 0) z = reflect_across_edge(ctx, f.reflected_edge, z);
  if (ctx.n == 3) {
    z += static_cast<double>(f.lattice_shift.first) * ctx.period1() +
         static_cast<double>(f.lattice_shift.second) * ctx.period2();
  }
  return z;
}

Complex unfold_sine(const SquigContext& ctx, const FoldResult& f, Complex value) {
  Complex v = f.conjugated ? std::conj(value) : value;
  v *= root_of_unity(ctx.n, f.rotation_k);
  if (f.reflected_edge >= 0) {
    // Edge j maps onto the slit at angle theta; values reflect across it.
    const int j = f.reflected_edge;
    const int k = j / 2;
    const int theta_index = j % 2 == 0 ? k : k + 1;
    v = root_of_unity(3, 2 * theta_index) * std::conj(v);
  }
  return v;
}

Complex unfold_cosine(const SquigContext& ctx, const FoldResult& f, Complex value) {
  (void)ctx;
  Complex v = f.conjugated ? std::conj(value) : value;
  if (f.reflected_edge >= 0) {
    v = root_of_unity(3, f.reflected_edge % 2 == 0 ? 2 : 1) * std::conj(v);
  }
  return v;
}

RegionKind parse_region(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "pi") return RegionKind::Pi;
  if (s == "omega") return RegionKind::Omega;
  if (s == "sector") return RegionKind::Sector;
  if (s == "arc") return RegionKind::Arc;
  throw Error("unknown region '" + name + "' (expected Pi, Omega, Sector or Arc)");
}

std::vector<Complex> boundary_polyline(const SquigContext& ctx, const Region& region,
                                       int samples_per_edge) {
  if (samples_per_edge < 2) throw Error("samples_per_edge must be at least 2");
  const int m = samples_per_edge;
  std::vector<Complex> out;
  auto edge = [&](Complex a, Complex b) {
    for (int j = 0; j < m - 1; ++j) out.push_back(a + (b - a) * (static_cast<double>(j) / (m - 1)));
  };
  auto arc = [&](double radius, bool include_end) {
    const double span = 2.0 * kPi / ctx.n;
    const int last = include_end ? m - 1 : m - 2;
    for (int j = 0; j <= last; ++j) {
      if (j == 0) {
        out.emplace_back(radius, 0.0);
      } else if (j == m - 1) {
        out.push_back(radius * ctx.omega);
      } else {
        out.push_back(std::polar(radius, span * j / (m - 1)));
      }
    }
  };
  auto polygon = [&](const std::vector<Complex>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) edge(v[i], v[(i + 1) % v.size()]);
    out.push_back(v.front());
  };

  switch (region.kind) {
    case RegionKind::Pi:
      polygon({Complex{}, ctx.A, ctx.P, ctx.B});
      break;
    case RegionKind::Omega:
      polygon(omega_vertices(ctx));
      break;
    case RegionKind::Sector:
      if (!(region.radius > 0.0)) throw Error("sector radius must be positive");
      edge(Complex{}, region.radius);
      arc(region.radius, false);
      edge(region.radius * ctx.omega, Complex{});
      out.push_back(Complex{});
      break;
    case RegionKind::Arc:
      if (!(region.radius > 0.0)) throw Error("arc radius must be positive");
      arc(region.radius, true);
      break;
  }
  return out;
}

}  // namespace squig::geometry
