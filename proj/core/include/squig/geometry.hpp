#ifndef SQUIG_GEOMETRY_HPP
#define SQUIG_GEOMETRY_HPP

#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "squig/sector_map.hpp"
#include "squig/series.hpp"
#include "squig/types.hpp"

namespace squig::geometry {

/// Tolerance for closed-region membership.
inline constexpr double kRegionTol = 1e-10;
/// Pole guard radius relative to |P_n|.
inline constexpr double kPoleGuard = 1e-6;

/// Exact Maclaurin series of sin_n, computed once per length and shared by
/// copies of a context.
class SeriesCache {
 public:
  explicit SeriesCache(int n) : n_(n) {}
  /// First `terms` nonzero coefficients.
  numerics::RationalSeries get(int terms) const;

 private:
  int n_;
  mutable std::mutex mutex_;
  mutable numerics::RationalSeries series_;
};

/// Everything that depends only on n. Immutable; cheap to copy.
struct SquigContext {
  int n = 0;
  Complex omega;
  double pi_n = 0.0;
  Complex A;
  Complex B;
  Complex P;
  std::shared_ptr<const numerics::SectorPrimitive> primitive;
  std::shared_ptr<const SeriesCache> series_cache;

  /// (pi_n / 4) sec(pi / n) = |P|.
  double R() const { return std::abs(P); }
  /// Period lattice basis of sin_3 (meaningful for n = 3 only).
  Complex period1() const { return 1.5 * pi_n; }
  Complex period2() const { return 1.5 * pi_n * omega; }
};

/// Throws UnsupportedParameter unless 3 <= n <= 64.
SquigContext make_context(int n);

/// Closed quadrilateral O A P B (a triangle for n = 4).
bool contains_Pi(const SquigContext& ctx, Complex z);
/// Closure of the 2n-gon Omega_n.
bool contains_Omega(const SquigContext& ctx, Complex z);
/// Off every slit omega^k [1, inf); the slits are a few ulps wide.
bool contains_Sigma(const SquigContext& ctx, Complex w);
/// Closed triangle O A P.
bool contains_fundamental(const SquigContext& ctx, Complex z, double tol = kRegionTol);

/// Index k when w lies on the slit omega^k [1, inf), otherwise -1.
int slit_index(const SquigContext& ctx, Complex w);

/// Vertices A, P, omega A, omega P, ... of Omega_n, counterclockwise.
std::vector<Complex> omega_vertices(const SquigContext& ctx);

struct FoldResult {
  /// In the closed triangle O A P.
  Complex folded;
  int rotation_k = 0;
  bool conjugated = false;
  /// Multiples of period1() and period2() removed (n = 3 only).
  std::pair<int, int> lattice_shift{0, 0};
  /// Edge of Omega_3 across which the lattice-reduced point was reflected,
  /// or -1. Edge j joins vertex j to vertex j + 1 of omega_vertices().
  int reflected_edge = -1;
  bool at_pole = false;
};

/// Reduces z to the fundamental triangle. Rotations are taken about the
/// nearest ray arg = 2 pi k / n, conjugating when the remainder is negative;
/// points on a bisector [O, omega^k P] keep conjugated = false. For n = 3 the
/// point is first reduced modulo the period lattice (nearest lattice point,
/// ties toward the origin) and, if it then lies in a neighbouring hexagon,
/// reflected across the shared edge. Throws DomainError("Omega_n") for n >= 4
/// and z outside the closure of Omega_n.
FoldResult fold(const SquigContext& ctx, Complex z);

Complex unfold_point(const SquigContext& ctx, const FoldResult& f, Complex folded);
/// sin_n at the original point from sin_n at the folded point.
Complex unfold_sine(const SquigContext& ctx, const FoldResult& f, Complex value);
/// cos_n at the original point from cos_n at the folded point.
Complex unfold_cosine(const SquigContext& ctx, const FoldResult& f, Complex value);

/// Mirror image of z in the line through edge j of Omega_3.
Complex reflect_across_edge(const SquigContext& ctx, int edge, Complex z);

enum class RegionKind { Pi, Omega, Sector, Arc };

struct Region {
  RegionKind kind = RegionKind::Pi;
  /// Radius for Sector and Arc.
  double radius = 1.0;
};

/// "Pi", "Omega", "Sector", "Arc" (case-insensitive). Throws Error otherwise.
RegionKind parse_region(const std::string& name);

/// Counterclockwise boundary with samples_per_edge points per edge counting
/// both ends; closed (last point repeats the first) except for Arc, which is
/// the open arc |z| = radius, 0 <= arg z <= 2 pi / n.
std::vector<Complex> boundary_polyline(const SquigContext& ctx, const Region& region,
                                       int samples_per_edge);

}  // namespace squig::geometry

#endif  // SQUIG_GEOMETRY_HPP
