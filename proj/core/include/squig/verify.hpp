#ifndef SQUIG_VERIFY_HPP
#define SQUIG_VERIFY_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "squig/geometry.hpp"
#include "squig/types.hpp"

namespace squig::verify {

using geometry::SquigContext;

struct VerificationReport {
  std::string name;
  int n = 0;
  Complex lhs;
  Complex rhs;
  double abs_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double runtime_ms = 0.0;
  /// Diagnostics when a check could not run to completion.
  std::string message;
  /// Extra named quantities, in insertion order.
  std::vector<std::pair<std::string, double>> details;
};

/// Default tolerance per tolerance class.
double default_tolerance(const std::string& tolerance_class);
/// Tolerance class of a check family: quadrature, identity, derivative,
/// limit, area or winding.
std::string tolerance_class(const std::string& family);
/// All check families, sorted.
const std::vector<std::string>& families();

/// Tolerance overrides keyed by family name or tolerance class; a family
/// entry wins over its class.
using ToleranceOverrides = std::map<std::string, double>;

double tolerance_for(const std::string& family, const ToleranceOverrides& overrides);

VerificationReport check_integral_slit(const SquigContext& ctx, double tol = 1e-8);
VerificationReport check_integral_ray(const SquigContext& ctx, double tol = 1e-8);

/// Errors max_theta |F_n(R e^{i theta}) - P_n| over 32 angles spanning the
/// closed sector, one per radius.
std::vector<double> limit_errors(const SquigContext& ctx, const std::vector<double>& radii,
                                 int angles = 32);
/// Passes when the error is nonincreasing in R and below tol at the largest
/// radius.
VerificationReport check_limit_at_infinity(const SquigContext& ctx,
                                           const std::vector<double>& radii = {1e2, 1e3, 1e4},
                                           double tol = 1e-3);

/// Images F_n(z) of the boundary of the sector of radius R, refined until
/// consecutive images are short compared with their distance to w.
std::vector<Complex> sector_boundary_image(const SquigContext& ctx, double R, Complex w);
/// Winding number of F_n(boundary of sector R) around w.
int winding_of_image(const SquigContext& ctx, double R, Complex w);
/// Expects winding 1 for w inside Pi_n and 0 outside.
VerificationReport check_winding(const SquigContext& ctx, double R, Complex w);

/// Largest change of sin_3 under either period shift over the samples.
VerificationReport check_periodicity_sin3(const SquigContext& ctx,
                                          const std::vector<Complex>& samples, double tol = 1e-8);

struct TrisectionAreas {
  /// Between the curve x^n + y^n = 1 and its asymptote x + y = 0, x >= 0, y <= 0.
  double fourth_quadrant = 0.0;
  /// Under the curve in the first quadrant.
  double first_quadrant = 0.0;
  /// Whole region between the curve and its asymptote.
  double total = 0.0;
};

/// Areas for odd n >= 3 by direct quadrature.
TrisectionAreas trisection_areas(int n);
VerificationReport check_trisection(const SquigContext& ctx3, double tol = 1e-6);

/// S_n(w) = (1/n) integral_0^w u^{1/n-1} (1-u)^{1/n-1} du along a straight
/// path (through 1 when the path passes close to it), with the branch of
/// (1-u)^{1/n-1} continued from u = 0 through the upper half-plane.
Complex sc_map(int n, Complex w);
VerificationReport check_sc_factorization(const SquigContext& ctx,
                                          const std::vector<Complex>& samples, double tol = 1e-9);

VerificationReport check_riemann_normalization(const SquigContext& ctx, double tol = 1e-6);

/// Points of 0.95 * Omega_n at distance >= exclusion * |P_n| from every pole
/// image, uniformly distributed; deterministic for a given seed.
std::vector<Complex> sample_omega(const SquigContext& ctx, int count, std::uint64_t seed,
                                  double shrink = 0.95, double exclusion = 0.05);
/// Points of the half-sector 0 <= arg z <= pi/n with |z| <= r_max, kept at
/// least 1e-2 away from 1.
std::vector<Complex> sample_half_sector(int n, int count, std::uint64_t seed, double r_max = 2.0);

inline constexpr std::uint64_t kDefaultSeed = 0x5157;

struct VerificationConfig {
  std::vector<int> ns{3, 4, 5, 6, 7, 8};
  /// Families to run; empty means all.
  std::set<std::string> only;
  ToleranceOverrides tolerances;
  std::vector<double> limit_radii{1e2, 1e3, 1e4};
  double winding_radius = 50.0;
  int samples = 64;
  std::uint64_t seed = kDefaultSeed;
  bool parallel = true;
};

/// Every selected check for every configured n, sorted by (name, n). Check
/// failures, including numeric exceptions, are recorded in the reports.
std::vector<VerificationReport> run_all(const VerificationConfig& config = {});

bool all_pass(const std::vector<VerificationReport>& reports);

}  // namespace squig::verify

#endif  // SQUIG_VERIFY_HPP
