#include "squig_cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "squig/errors.hpp"
#include "squig/geometry.hpp"
#include "squig/series.hpp"
#include "squig/squigfn.hpp"
#include "squig/verify.hpp"
#include "squig_cli/complex_literal.hpp"
#include "squig_cli/svg.hpp"

namespace squig::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::vector<int> ns;
  std::string format = "json";
  std::string out_path;
  bool stable = false;
  bool format_given = false;
};

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json complex_json(Complex z) { return Json{{"re", number(z.real())}, {"im", number(z.imag())}}; }

std::string csv_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int single_n(const Globals& g) {
  if (g.ns.empty()) return 3;
  if (g.ns.size() != 1) throw UsageError("this command takes a single --n");
  return g.ns.front();
}

std::vector<int> n_list(const Globals& g) {
  if (g.ns.empty()) return {3, 4, 5, 6, 7, 8};
  return g.ns;
}

void require_tabular(const Globals& g) {
  if (g.format != "json" && g.format != "csv") {
    throw UsageError("format '" + g.format + "' is not available for this command");
  }
}

// Points of the closed region Omega_n are accepted with tolerance 1e-10; a
// decimal literal typed from a printed vertex can miss by far more. Inputs
// within kSnapDistance of the boundary are moved onto it.
constexpr double kSnapDistance = 1e-7;

std::optional<Complex> snap_to_Omega(const geometry::SquigContext& ctx, Complex z) {
  if (ctx.n == 3 || geometry::contains_Omega(ctx, z)) return std::nullopt;
  const auto v = geometry::omega_vertices(ctx);
  double best = std::numeric_limits<double>::infinity();
  Complex nearest;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Complex a = v[i], b = v[(i + 1) % v.size()];
    const double t = std::clamp(std::real((z - a) * std::conj(b - a)) / std::norm(b - a), 0.0, 1.0);
    const Complex p = a + t * (b - a);
    if (std::abs(z - p) < best) {
      best = std::abs(z - p);
      nearest = p;
    }
  }
  if (best > kSnapDistance * std::max(1.0, std::abs(z))) return std::nullopt;
  return nearest;
}

struct EvalOptions {
  std::string fn;
  std::string z;
};

std::string cmd_eval(const Globals& g, const EvalOptions& o) {
  require_tabular(g);
  const Complex z = parse_complex(o.z);
  const auto ctx = geometry::make_context(single_n(g));
  squigfn::EvalResult r;
  std::optional<Complex> snapped;
  if (o.fn == "sin" || o.fn == "cos") snapped = snap_to_Omega(ctx, z);
  const Complex at = snapped.value_or(z);
  if (o.fn == "sin") {
    r = squigfn::sin_n(ctx, at);
  } else if (o.fn == "cos") {
    r = squigfn::cos_n(ctx, at);
  } else if (o.fn == "arcsin") {
    const Complex v = squigfn::arcsin_n(ctx, z);
    r.value = v;
    const auto back = squigfn::sin_n(ctx, v);
    r.residual = back.value ? std::abs(*back.value - z) : 0.0;
  } else {
    r.value = squigfn::arcsin_n_sector(ctx, z);
  }
  if (g.format == "csv") {
    std::string s = "n,fn,input_re,input_im,value_re,value_im,is_pole,diverges,residual\n";
    s += std::to_string(ctx.n) + ',' + o.fn + ',' + csv_number(z.real()) + ',' + csv_number(z.imag()) + ',';
    s += r.value ? csv_number(r.value->real()) + ',' + csv_number(r.value->imag()) : std::string(",");
    s += std::string(",") + (r.is_pole ? "true" : "false") + ',' + (r.diverges ? "true" : "false") + ',' +
         csv_number(r.residual) + '\n';
    return s;
  }
  Json j;
  j["n"] = ctx.n;
  j["fn"] = o.fn;
  j["input"] = complex_json(z);
  if (snapped) j["evaluated_at"] = complex_json(*snapped);
  j["value"] = r.value ? complex_json(*r.value) : Json(nullptr);
  j["is_pole"] = r.is_pole;
  j["diverges"] = r.diverges;
  j["residual"] = number(r.residual);
  return j.dump(2) + "\n";
}

std::string cmd_series(const Globals& g, int terms) {
  require_tabular(g);
  const auto ctx = geometry::make_context(single_n(g));
  const auto series = squigfn::maclaurin(ctx, terms);
  std::optional<double> estimate;
  if (series.size() >= 2) estimate = squigfn::radius_estimate(series);
  auto num = [](const numerics::Rational& q) {
    return boost::multiprecision::numerator(q).str();
  };
  auto den = [](const numerics::Rational& q) {
    return boost::multiprecision::denominator(q).str();
  };
  if (g.format == "csv") {
    std::string s = "degree,numerator,denominator\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
      s += std::to_string(series.degrees[i]) + ',' + num(series.coeffs[i]) + ',' + den(series.coeffs[i]) + '\n';
    }
    if (estimate) s += "# radius_estimate," + csv_number(*estimate) + '\n';
    s += "# R_n," + csv_number(ctx.R()) + '\n';
    return s;
  }
  Json rows = Json::array();
  for (std::size_t i = 0; i < series.size(); ++i) {
    rows.push_back(Json{{"degree", series.degrees[i]},
                        {"numerator", num(series.coeffs[i])},
                        {"denominator", den(series.coeffs[i])}});
  }
  Json j;
  j["n"] = ctx.n;
  j["terms"] = static_cast<int>(series.size());
  j["rows"] = rows;
  j["radius_estimate"] = estimate ? number(*estimate) : Json(nullptr);
  j["R_n"] = number(ctx.R());
  return j.dump(2) + "\n";
}

std::string cmd_constants(const Globals& g) {
  require_tabular(g);
  std::vector<geometry::SquigContext> ctxs;
  for (int n : n_list(g)) ctxs.push_back(geometry::make_context(n));
  if (g.format == "csv") {
    std::string s = "n,pi_n,A_re,A_im,P_re,P_im,R_n\n";
    for (const auto& c : ctxs) {
      s += std::to_string(c.n) + ',' + csv_number(c.pi_n) + ',' + csv_number(c.A.real()) + ',' +
           csv_number(c.A.imag()) + ',' + csv_number(c.P.real()) + ',' + csv_number(c.P.imag()) + ',' +
           csv_number(c.R()) + '\n';
    }
    return s;
  }
  Json arr = Json::array();
  for (const auto& c : ctxs) {
    arr.push_back(Json{{"n", c.n},
                       {"pi_n", number(c.pi_n)},
                       {"A", complex_json(c.A)},
                       {"P", complex_json(c.P)},
                       {"R_n", number(c.R())}});
  }
  return arr.dump(2) + "\n";
}

struct VerifyOptions {
  std::vector<std::string> only;
  std::vector<std::string> tol;
  int samples = 64;
  std::uint64_t seed = verify::kDefaultSeed;
  bool sequential = false;
};

verify::ToleranceOverrides parse_tolerances(const std::vector<std::string>& items) {
  static const std::vector<std::string> classes{"quadrature", "identity", "derivative",
                                                "limit",      "area",     "winding"};
  const auto& fams = verify::families();
  verify::ToleranceOverrides out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--tol expects key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string val = item.substr(eq + 1);
    if (std::find(classes.begin(), classes.end(), key) == classes.end() &&
        std::find(fams.begin(), fams.end(), key) == fams.end()) {
      throw UsageError("unknown tolerance key '" + key + "'");
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
    if (ec != std::errc{} || ptr != val.data() + val.size() || !(v >= 0.0)) {
      throw UsageError("bad tolerance value '" + val + "'");
    }
    out[key] = v;
  }
  return out;
}

std::string cmd_verify(const Globals& g, const VerifyOptions& o, std::ostream& err, bool& all_pass) {
  require_tabular(g);
  verify::VerificationConfig cfg;
  cfg.ns = n_list(g);
  for (int n : cfg.ns) geometry::make_context(n);  // validates the range up front
  const auto& fams = verify::families();
  for (const auto& name : o.only) {
    if (std::find(fams.begin(), fams.end(), name) == fams.end()) {
      throw UsageError("unknown check family '" + name + "'");
    }
    cfg.only.insert(name);
  }
  cfg.tolerances = parse_tolerances(o.tol);
  cfg.samples = o.samples;
  cfg.seed = o.seed;
  cfg.parallel = !o.sequential;
  auto reports = verify::run_all(cfg);
  if (g.stable) {
    for (auto& r : reports) r.runtime_ms = 0.0;
  }
  all_pass = verify::all_pass(reports);
  for (const auto& r : reports) {
    if (r.pass) continue;
    err << "FAIL " << r.name << " n=" << r.n << " abs_error=" << csv_number(r.abs_error)
        << " tolerance=" << csv_number(r.tolerance);
    if (!r.message.empty()) err << " (" << r.message << ")";
    err << '\n';
  }
  if (g.format == "csv") {
    std::string s = "name,n,lhs_re,lhs_im,rhs_re,rhs_im,abs_error,tolerance,pass,runtime_ms,message\n";
    for (const auto& r : reports) {
      s += r.name + ',' + std::to_string(r.n) + ',' + csv_number(r.lhs.real()) + ',' +
           csv_number(r.lhs.imag()) + ',' + csv_number(r.rhs.real()) + ',' + csv_number(r.rhs.imag()) +
           ',' + csv_number(r.abs_error) + ',' + csv_number(r.tolerance) + ',' +
           (r.pass ? "true" : "false") + ',' + csv_number(r.runtime_ms) + ',' + csv_quote(r.message) +
           '\n';
    }
    return s;
  }
  Json arr = Json::array();
  for (const auto& r : reports) {
    Json details = Json::object();
    for (const auto& [k, v] : r.details) details[k] = number(v);
    arr.push_back(Json{{"name", r.name},
                       {"n", r.n},
                       {"lhs", complex_json(r.lhs)},
                       {"rhs", complex_json(r.rhs)},
                       {"abs_error", number(r.abs_error)},
                       {"tolerance", number(r.tolerance)},
                       {"pass", r.pass},
                       {"runtime_ms", number(r.runtime_ms)},
                       {"message", r.message},
                       {"details", details}});
  }
  return arr.dump(2) + "\n";
}

std::string cmd_grid(const Globals& g, const std::string& map, int density) {
  if (g.format_given && g.format != "svg") throw UsageError("grid writes svg only");
  const auto ctx = geometry::make_context(single_n(g));
  return grid_svg(ctx, parse_grid_map(map), density);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized sine and cosine sin_n, cos_n in the complex plane", "squig"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_option("--n", g.ns, "Exponent n (comma-separated list for verify and constants)")
      ->delimiter(',')
      ->check(CLI::Range(1, 1000));
  auto* format_opt = app.add_option("--format", g.format, "Output format")
                         ->check(CLI::IsMember({"json", "csv", "svg"}));
  app.add_option("--out", g.out_path, "Write the payload to this file");
  app.add_flag("--stable", g.stable, "Zero the runtime fields for byte-identical output");

  EvalOptions eo;
  auto* eval = app.add_subcommand("eval", "Evaluate sin, cos, arcsin or F at a point");
  eval->add_option("--fn", eo.fn, "Function")->required()->check(CLI::IsMember({"sin", "cos", "arcsin", "F"}));
  eval->add_option("--z", eo.z, "Complex literal a, bi, a+bi or a-bi")->required();

  int terms = squigfn::kDefaultSeriesTerms;
  auto* series = app.add_subcommand("series", "Exact Maclaurin coefficients of sin_n");
  series->add_option("--terms", terms, "Number of nonzero terms")->check(CLI::Range(1, 500));

  VerifyOptions vo;
  auto* ver = app.add_subcommand("verify", "Run the numerical verification checks");
  ver->add_option("--only", vo.only, "Check families to run")->delimiter(',');
  ver->add_option("--tol", vo.tol, "Tolerance override class=value or family=value");
  ver->add_option("--samples", vo.samples, "Sample points per sampled check")->check(CLI::Range(1, 100000));
  ver->add_option("--seed", vo.seed, "Sampling seed");
  ver->add_flag("--sequential", vo.sequential, "Run the checks one after another");

  std::string map;
  int density = 16;
  auto* grid = app.add_subcommand("grid", "SVG figure of a conformal grid");
  grid->add_option("--map", map, "Map to draw")->required()->check(CLI::IsMember({"F", "sin"}));
  grid->add_option("--density", density, "Grid lines per direction")->check(CLI::Range(2, 256));

  auto* constants = app.add_subcommand("constants", "pi_n, A_n, P_n and R_n");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  g.format_given = format_opt->count() > 0;

  int code = kOk;
  std::string payload;
  try {
    if (eval->parsed()) {
      payload = cmd_eval(g, eo);
    } else if (series->parsed()) {
      payload = cmd_series(g, terms);
    } else if (ver->parsed()) {
      bool pass = true;
      payload = cmd_verify(g, vo, err, pass);
      if (!pass) code = kVerificationFailed;
    } else if (grid->parsed()) {
      payload = cmd_grid(g, map, density);
    } else if (constants->parsed()) {
      payload = cmd_constants(g);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const LiteralError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedParameter& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumeric;
  } catch (const Error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumeric;
  }

  if (!g.out_path.empty()) {
    std::ofstream file(g.out_path, std::ios::binary);
    if (!file) {
      err << "cannot write " << g.out_path << '\n';
      return kUsage;
    }
    file << payload;
  } else {
    out << payload;
  }
  return code;
}

}  // namespace squig::cli
