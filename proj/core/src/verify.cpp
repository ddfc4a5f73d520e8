#include "squig/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <memory>
#include <random>
#include <stdexcept>
#include <tuple>

#include "squig/errors.hpp"
#include "squig/quadrature.hpp"
#include "squig/sector_map.hpp"
#include "squig/squigfn.hpp"

namespace squig::verify {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

VerificationReport make_report(std::string name, int n, Complex lhs, Complex rhs, double tol) {
  VerificationReport r;
  r.name = std::move(name);
  r.n = n;
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_error = std::abs(lhs - rhs);
  r.tolerance = tol;
  r.pass = r.abs_error <= tol;
  return r;
}

// Fourth-order central difference of sin_n along the real direction.
Complex sine_derivative(const SquigContext& ctx, Complex z, double h) {
  auto s = [&](Complex x) {
    auto r = squigfn::sin_n(ctx, x);
    if (!r.value) throw NumericError("sine undefined near derivative sample");
    return *r.value;
  };
  return (-s(z + 2.0 * h) + 8.0 * s(z + h) - 8.0 * s(z - h) + s(z - 2.0 * h)) / (12.0 * h);
}

}  // namespace

const std::vector<std::string>& families() {
  static const std::vector<std::string> names{
      "integral_ray",     "integral_slit", "limit_at_infinity", "periodicity_sin3",
      "riemann_normalization", "sc_factorization", "trisection", "winding"};
  return names;
}

std::string tolerance_class(const std::string& family) {
  if (family == "integral_slit" || family == "integral_ray" || family == "periodicity_sin3") {
    return "quadrature";
  }
  if (family == "sc_factorization") return "identity";
  if (family == "riemann_normalization") return "derivative";
  if (family == "limit_at_infinity") return "limit";
  if (family == "trisection") return "area";
  if (family == "winding") return "winding";
  throw Error("unknown check family: " + family);
}

double default_tolerance(const std::string& tolerance_class) {
  if (tolerance_class == "quadrature") return 1e-8;
  if (tolerance_class == "identity") return 1e-9;
  if (tolerance_class == "derivative") return 1e-6;
  if (tolerance_class == "limit") return 1e-3;
  if (tolerance_class == "area") return 1e-6;
  if (tolerance_class == "winding") return 0.0;
  throw Error("unknown tolerance class: " + tolerance_class);
}

double tolerance_for(const std::string& family, const ToleranceOverrides& overrides) {
  if (auto it = overrides.find(family); it != overrides.end()) return it->second;
  const std::string cls = tolerance_class(family);
  if (auto it = overrides.find(cls); it != overrides.end()) return it->second;
  return default_tolerance(cls);
}

VerificationReport check_integral_slit(const SquigContext& ctx, double tol) {
  const auto start = Clock::now();
  const int n = ctx.n;
  const double alpha = (n - 1.0) / n;
  // (t^n - 1)^{-alpha} from t - 1 so the singular end keeps its digits.
  auto f = [n, alpha](double t, double from_one, double) {
    const double tn1 = from_one < 0.5 ? std::expm1(n * std::log1p(from_one)) : std::pow(t, n) - 1.0;
    return std::pow(tn1, -alpha);
  };
  const auto q = numerics::integrate_tail(f, 1.0, n - 1.0, alpha);
  auto r = make_report("integral_slit", n, q.value, ctx.R(), tol);
  r.details = {{"quadrature_error_estimate", q.err_estimate},
               {"evaluations", static_cast<double>(q.evaluations)}};
  r.runtime_ms = elapsed_ms(start);
  return r;
}

VerificationReport check_integral_ray(const SquigContext& ctx, double tol) {
  const auto start = Clock::now();
  const int n = ctx.n;
  if (n < 3) throw DomainError("n >= 3", "ray integral diverges");
  const double alpha = (n - 1.0) / n;
  auto f = [n, alpha](double t) { return std::pow(1.0 + std::pow(t, n), -alpha); };
  const auto q = numerics::integrate_tail(f, 0.0, n - 1.0);
  auto r = make_report("integral_ray", n, q.value, ctx.R(), tol);
  r.details = {{"quadrature_error_estimate", q.err_estimate},
               {"evaluations", static_cast<double>(q.evaluations)}};
  r.runtime_ms = elapsed_ms(start);
  return r;
}

std::vector<double> limit_errors(const SquigContext& ctx, const std::vector<double>& radii,
                                 int angles) {
  const auto& F = *ctx.primitive;
  const double span = 2.0 * kPi / ctx.n;
  std::vector<double> out;
  out.reserve(radii.size());
  for (double R : radii) {
    double worst = 0.0;
    for (int j = 0; j < angles; ++j) {
      Complex z;
      if (j == 0) {
        z = R;
      } else if (j == angles - 1) {
        z = R * ctx.omega;
      } else {
        z = std::polar(R, span * j / (angles - 1));
      }
      worst = std::max(worst, std::abs(F(z) - ctx.P));
    }
    out.push_back(worst);
  }
  return out;
}

VerificationReport check_limit_at_infinity(const SquigContext& ctx,
                                           const std::vector<double>& radii, double tol) {
  const auto start = Clock::now();
  if (radii.empty()) throw Error("limit check needs at least one radius");
  const auto errs = limit_errors(ctx, radii);
  bool decreasing = true;
  for (std::size_t i = 1; i < errs.size(); ++i) {
    if (errs[i] > errs[i - 1] * (1.0 + 1e-9) + 1e-13) decreasing = false;
  }
  const double R_max = radii.back();
  VerificationReport r;
  r.name = "limit_at_infinity";
  r.n = ctx.n;
  r.lhs = ctx.primitive->operator()(R_max * std::polar(1.0, kPi / ctx.n));
  r.rhs = ctx.P;
  r.abs_error = errs.back();
  r.tolerance = tol;
  if (!decreasing) {
    r.abs_error = std::numeric_limits<double>::infinity();
    r.message = "error does not decrease with the radius";
  }
  r.pass = r.abs_error <= tol;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    char key[48];
    std::snprintf(key, sizeof key, "max_error_at_R=%g", radii[i]);
    r.details.emplace_back(key, errs[i]);
  }
  r.runtime_ms = elapsed_ms(start);
  return r;
}

std::vector<Complex> sector_boundary_image(const SquigContext& ctx, double R, Complex w) {
  const auto& F = *ctx.primitive;
  const int n = ctx.n;
  auto image = [&](Complex z) {
    for (int k : {0, 1}) {
      const Complex root = root_of_unity(n, k);
      if (std::abs(z - root) < 1e-8) return k == 0 ? F.A() : F.B();
    }
    return F(z);
  };
  const auto nodes =
      geometry::boundary_polyline(ctx, {geometry::RegionKind::Sector, R}, 64);
  std::vector<Complex> out;
  std::function<void(Complex, Complex, Complex, Complex, int)> refine =
      [&](Complex za, Complex fa, Complex zb, Complex fb, int depth) {
        const double near = std::min(std::abs(fa - w), std::abs(fb - w));
        if (depth < 40 && std::abs(fb - fa) > 0.25 * near) {
          const Complex zm = 0.5 * (za + zb);
          const Complex fm = image(zm);
          refine(za, fa, zm, fm, depth + 1);
          refine(zm, fm, zb, fb, depth + 1);
          return;
        }
        out.push_back(fb);
      };
  Complex fz = image(nodes.front());
  out.push_back(fz);
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const Complex fn = image(nodes[i]);
    refine(nodes[i - 1], fz, nodes[i], fn, 0);
    fz = fn;
  }
  // The polyline repeats its first point; the winding count closes the loop.
  out.pop_back();
  return out;
}

int winding_of_image(const SquigContext& ctx, double R, Complex w) {
  return numerics::winding_number(sector_boundary_image(ctx, R, w), w);
}

VerificationReport check_winding(const SquigContext& ctx, double R, Complex w) {
  const auto start = Clock::now();
  const int expected = geometry::contains_Pi(ctx, w) ? 1 : 0;
  const int got = winding_of_image(ctx, R, w);
  auto r = make_report("winding", ctx.n, static_cast<double>(got), static_cast<double>(expected),
                       0.0);
  r.details = {{"target_re", w.real()}, {"target_im", w.imag()}, {"radius", R}};
  r.runtime_ms = elapsed_ms(start);
  return r;
}

VerificationReport check_periodicity_sin3(const SquigContext& ctx,
                                          const std::vector<Complex>& samples, double tol) {
  const auto start = Clock::now();
  if (ctx.n != 3) throw UnsupportedParameter("periodicity check needs n = 3");
  double worst = 0.0;
  Complex worst_lhs, worst_rhs;
  int used = 0;
  for (Complex z : samples) {
    const auto base = squigfn::sin3_global(ctx, z);
    if (!base.value) continue;
    for (Complex period : {ctx.period1(), ctx.period2()}) {
      const auto shifted = squigfn::sin3_global(ctx, z + period);
      if (!shifted.value) throw NumericError("pole hit by a shifted sample");
      const double e = std::abs(*shifted.value - *base.value);
      if (e >= worst) {
        worst = e;
        worst_lhs = *shifted.value;
        worst_rhs = *base.value;
      }
    }
    ++used;
  }
  auto r = make_report("periodicity_sin3", 3, worst_lhs, worst_rhs, tol);
  r.abs_error = worst;
  if (used == 0) {
    r.abs_error = std::numeric_limits<double>::infinity();
    r.message = "no usable samples";
  }
  r.pass = r.abs_error <= tol;
  r.details = {{"samples", static_cast<double>(used)}};
  r.runtime_ms = elapsed_ms(start);
  return r;
}

TrisectionAreas trisection_areas(int n) {
  if (n < 3 || n % 2 == 0) throw UnsupportedParameter("trisection areas need odd n >= 3");
  // For x >= 1 the gap x - (x^n - 1)^{1/n} equals 1 / sum_j x^{n-1-j} c^j.
  auto gap = [n](double x, double from_one, double) {
    const double xn1 = from_one < 0.5 ? std::expm1(n * std::log1p(from_one)) : std::pow(x, n) - 1.0;
    const double c = std::pow(xn1, 1.0 / n);
    double sum = 0.0;
    for (int j = 0; j < n; ++j) sum += std::pow(x, n - 1 - j) * std::pow(c, j);
    return 1.0 / sum;
  };
  auto under = [n](double x, double, double to_one) {
    const double u = x <= 0.5 ? 1.0 - std::pow(x, n) : -std::expm1(n * std::log1p(-to_one));
    return std::pow(u, 1.0 / n);
  };
  TrisectionAreas a;
  a.fourth_quadrant = 0.5 + numerics::integrate_tail(gap, 1.0, n - 1.0).value;
  a.first_quadrant = numerics::integrate_endpoint_singular(under, 0.0, 1.0, 0.0, 0.0).value;
  a.total = a.first_quadrant + 2.0 * a.fourth_quadrant;
  return a;
}

VerificationReport check_trisection(const SquigContext& ctx3, double tol) {
  const auto start = Clock::now();
  if (ctx3.n != 3) throw UnsupportedParameter("trisection check needs n = 3");
  const auto a = trisection_areas(3);
  const double quarter = ctx3.pi_n / 4.0;
  auto r = make_report("trisection", 3, a.fourth_quadrant, std::abs(ctx3.P) / 2.0, tol);
  const double e_first = std::abs(a.first_quadrant - quarter);
  const double e_total = std::abs(a.total - 3.0 * quarter);
  r.abs_error = std::max({r.abs_error, e_first, e_total / 3.0});
  r.pass = r.abs_error <= tol;
  r.details = {{"fourth_quadrant_area", a.fourth_quadrant},
               {"first_quadrant_area", a.first_quadrant},
               {"total_area", a.total},
               {"pi_n_over_4", quarter},
               {"first_quadrant_error", e_first},
               {"total_error", e_total}};
  r.runtime_ms = elapsed_ms(start);
  return r;
}

Complex sc_map(int n, Complex w) {
  if (n < 2) throw UnsupportedParameter("sc_map needs n >= 2");
  if (w == Complex{}) return {};
  const double e = 1.0 / n - 1.0;
  // Kernel from u and v = 1 - u, each supplied by the caller at full accuracy.
  auto kernel = [n, e](Complex u, Complex v) {
    double au = std::arg(u);
    if (au < -kPi / 2) au += 2.0 * kPi;
    double av = std::arg(v);
    if (av > kPi / 2) av -= 2.0 * kPi;
    const Complex lu{std::log(std::abs(u)), au};
    const Complex lv{std::log(std::abs(v)), av};
    return std::exp(e * (lu + lv)) / static_cast<double>(n);
  };
  const double sing = 1.0 - 1.0 / n;
  const numerics::QuadratureOptions opt{1e-14, 0.0, 3, numerics::default_max_level()};

  // Smooth part of a leg: Gauss-Kronrod pieces no longer than half the
  // distance to the nearer singular point.
  auto smooth = [&](Complex a, Complex b) {
    Complex total{};
    Complex pos = a;
    const double len = std::abs(b - a);
    const Complex dir = (b - a) / len;
    double done = 0.0;
    while (done < len) {
      const double room = 0.5 * std::min(std::abs(pos), std::abs(pos - 1.0));
      const double step = std::min(len - done, room);
      const Complex next = done + step >= len ? b : a + dir * (done + step);
      total += numerics::integrate_adaptive([&](Complex u) { return kernel(u, 1.0 - u); }, pos,
                                            next)
                   .value;
      pos = next;
      done += step;
    }
    return total;
  };

  // Leg starting at 0 or 1 (singular there) and ending at a regular point.
  auto leg_from = [&](Complex origin, Complex end) {
    const Complex d = end - origin;
    const double len = std::abs(d);
    const double head_len = std::min(len, 0.25);
    const Complex head_end = head_len == len ? end : origin + d * (head_len / len);
    const bool at_zero = origin == Complex{};
    auto f = [&](Complex u, Complex from_a, Complex) {
      return at_zero ? kernel(from_a, 1.0 - u) : kernel(u, -from_a);
    };
    Complex total =
        numerics::integrate_displacement(f, origin, head_end - origin, sing, 0.0, opt).value;
    if (head_end != end) total += smooth(head_end, end);
    return total;
  };

  // Distance from 1 to the segment [0, w].
  const double t = std::clamp(w.real() / std::norm(w), 0.0, 1.0);
  const double miss = std::abs(t * w - 1.0);
  if (miss >= 0.25 && std::abs(w - 1.0) >= 0.25) return leg_from(0.0, w);

  const Complex to_one =
      numerics::integrate_displacement([&](Complex, Complex from_a, Complex to_b) {
        return kernel(from_a, to_b);
      }, 0.0, 1.0, sing, sing, opt).value;
  if (w == 1.0) return to_one;
  return to_one + leg_from(1.0, w);
}

VerificationReport check_sc_factorization(const SquigContext& ctx,
                                          const std::vector<Complex>& samples, double tol) {
  const auto start = Clock::now();
  const auto& F = *ctx.primitive;
  double worst = 0.0;
  Complex worst_lhs, worst_rhs;
  for (Complex z : samples) {
    const Complex lhs = F(z);
    const Complex rhs = sc_map(ctx.n, pow_int(z, ctx.n));
    const double e = std::abs(lhs - rhs);
    if (e >= worst) {
      worst = e;
      worst_lhs = lhs;
      worst_rhs = rhs;
    }
  }
  auto r = make_report("sc_factorization", ctx.n, worst_lhs, worst_rhs, tol);
  if (samples.empty()) {
    r.abs_error = std::numeric_limits<double>::infinity();
    r.pass = false;
    r.message = "no samples";
  }
  r.details = {{"samples", static_cast<double>(samples.size())}};
  r.runtime_ms = elapsed_ms(start);
  return r;
}

VerificationReport check_riemann_normalization(const SquigContext& ctx, double tol) {
  const auto start = Clock::now();
  const auto at_zero = squigfn::sin_n(ctx, 0.0);
  const Complex d = sine_derivative(ctx, 0.0, 1e-3);
  auto r = make_report("riemann_normalization", ctx.n, d, 1.0, tol);
  const bool fixes_zero = at_zero.value && *at_zero.value == Complex{};
  if (!fixes_zero || !(d.real() > 0.0)) {
    r.abs_error = std::numeric_limits<double>::infinity();
    r.pass = false;
    r.message = fixes_zero ? "derivative at 0 is not positive" : "sin_n(0) is not 0";
  }
  r.details = {{"sin_at_zero_abs", at_zero.value ? std::abs(*at_zero.value) : -1.0}};
  r.runtime_ms = elapsed_ms(start);
  return r;
}

std::vector<Complex> sample_omega(const SquigContext& ctx, int count, std::uint64_t seed,
                                  double shrink, double exclusion) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  const double rad = std::max(std::abs(ctx.A), std::abs(ctx.P));
  const double guard = exclusion * std::abs(ctx.P);
  std::vector<Complex> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    const Complex z(U(rng) * rad, U(rng) * rad);
    if (!geometry::contains_Omega(ctx, z / shrink)) continue;
    bool near_pole = false;
    for (int k = 0; k < ctx.n; ++k) {
      if (std::abs(z - root_of_unity(ctx.n, k) * ctx.P) < guard) near_pole = true;
    }
    if (!near_pole) out.push_back(z);
  }
  return out;
}

std::vector<Complex> sample_half_sector(int n, int count, std::uint64_t seed, double r_max) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  std::vector<Complex> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    const double r = r_max * std::sqrt(U(rng));
    const Complex z = std::polar(r, U(rng) * kPi / n);
    if (std::abs(z - 1.0) >= 1e-2) out.push_back(z);
  }
  return out;
}

namespace {

VerificationReport failed_report(const std::string& name, int n, double tol, const char* what) {
  VerificationReport r;
  r.name = name;
  r.n = n;
  r.tolerance = tol;
  r.abs_error = std::numeric_limits<double>::infinity();
  r.pass = false;
  r.message = what;
  return r;
}

VerificationReport run_winding(const SquigContext& ctx, double R) {
  const auto start = Clock::now();
  const std::vector<Complex> targets{0.4 * ctx.P, (ctx.A + ctx.P) / 3.0, (ctx.P + ctx.B) / 3.0, 1.2 * ctx.A,
                                     -0.3 * ctx.P};
  VerificationReport r = check_winding(ctx, R, targets.front());
  r.details.clear();
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const auto one = check_winding(ctx, R, targets[i]);
    if (!one.pass) {
      r.pass = false;
      r.lhs = one.lhs;
      r.rhs = one.rhs;
      r.abs_error = one.abs_error;
    }
    r.details.emplace_back("winding_target_" + std::to_string(i), one.lhs.real());
  }
  r.details.emplace_back("radius", R);
  r.runtime_ms = elapsed_ms(start);
  return r;
}

}  // namespace

std::vector<VerificationReport> run_all(const VerificationConfig& config) {
  for (const auto& name : config.only) tolerance_class(name);  // rejects unknown names
  auto selected = [&](const std::string& name) {
    return config.only.empty() || config.only.count(name) != 0;
  };
  using Task = std::tuple<std::string, int, std::function<VerificationReport()>>;
  std::vector<Task> tasks;
  std::vector<std::shared_ptr<SquigContext>> contexts;
  for (int n : config.ns) {
    auto ctx = std::make_shared<SquigContext>(geometry::make_context(n));
    contexts.push_back(ctx);
    const auto& tols = config.tolerances;
    const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(n);
    auto add = [&](const std::string& name, std::function<VerificationReport(double)> body) {
      if (!selected(name)) return;
      const double tol = tolerance_for(name, tols);
      tasks.emplace_back(name, n, [name, n, tol, body]() {
        try {
          auto r = body(tol);
          r.tolerance = tol;
          return r;
        } catch (const std::exception& e) {
          return failed_report(name, n, tol, e.what());
        }
      });
    };
    add("integral_slit", [ctx](double tol) { return check_integral_slit(*ctx, tol); });
    add("integral_ray", [ctx](double tol) { return check_integral_ray(*ctx, tol); });
    const auto radii = config.limit_radii;
    add("limit_at_infinity",
        [ctx, radii](double tol) { return check_limit_at_infinity(*ctx, radii, tol); });
    const double wr = config.winding_radius;
    add("winding", [ctx, wr](double tol) {
      auto r = run_winding(*ctx, wr);
      r.pass = r.pass && r.abs_error <= tol;
      return r;
    });
    const int samples = config.samples;
    add("sc_factorization", [ctx, samples, seed](double tol) {
      return check_sc_factorization(*ctx, sample_half_sector(ctx->n, samples, seed), tol);
    });
    add("riemann_normalization",
        [ctx](double tol) { return check_riemann_normalization(*ctx, tol); });
    if (n == 3) {
      add("periodicity_sin3", [ctx, samples, seed](double tol) {
        return check_periodicity_sin3(*ctx, sample_omega(*ctx, samples, seed), tol);
      });
      add("trisection", [ctx](double tol) { return check_trisection(*ctx, tol); });
    }
  }

  std::vector<VerificationReport> reports;
  reports.reserve(tasks.size());
  if (config.parallel) {
    std::vector<std::future<VerificationReport>> futures;
    futures.reserve(tasks.size());
    for (auto& t : tasks) futures.push_back(std::async(std::launch::async, std::get<2>(t)));
    for (auto& f : futures) reports.push_back(f.get());
  } else {
    for (auto& t : tasks) reports.push_back(std::get<2>(t)());
  }
  std::sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
    return std::tie(a.name, a.n) < std::tie(b.name, b.n);
  });
  return reports;
}

bool all_pass(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
}

}  // namespace squig::verify
