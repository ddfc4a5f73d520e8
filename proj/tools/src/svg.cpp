#include "squig_cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "squig/errors.hpp"
#include "squig/squigfn.hpp"

namespace squig::cli {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void SvgFigure::extend(Complex z) {
  if (empty_) {
    xmin_ = xmax_ = z.real();
    ymin_ = ymax_ = z.imag();
    empty_ = false;
    return;
  }
  xmin_ = std::min(xmin_, z.real());
  xmax_ = std::max(xmax_, z.real());
  ymin_ = std::min(ymin_, z.imag());
  ymax_ = std::max(ymax_, z.imag());
}

void SvgFigure::polyline(const std::vector<Complex>& points, const std::string& css_class) {
  if (points.size() < 2) return;
  for (Complex z : points) extend(z);
  lines_.push_back({points, css_class});
}

void SvgFigure::marker(Complex at, const std::string& css_class) {
  extend(at);
  marks_.push_back({at, css_class});
}

void SvgFigure::label(Complex at, const std::string& text) {
  extend(at);
  labels_.push_back({at, text});
}

std::string SvgFigure::render() const {
  double x0 = xmin_, x1 = xmax_, y0 = ymin_, y1 = ymax_;
  if (empty_) x0 = y0 = -1.0, x1 = y1 = 1.0;
  double w = x1 - x0, h = y1 - y0;
  if (w <= 0) w = 1.0;
  if (h <= 0) h = 1.0;
  const double px = 0.05 * w, py = 0.05 * h;
  const double vx = x0 - px, vy = -(y1 + py), vw = w + 2 * px, vh = h + 2 * py;
  const double unit = std::max(vw, vh);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(vx) << ' ' << fmt(vy) << ' '
     << fmt(vw) << ' ' << fmt(vh) << "\" width=\"800\" height=\"" << fmt(800.0 * vh / vw) << "\">\n";
  os << "<style>\n"
     << "polyline{fill:none;stroke-linejoin:round}\n"
     << ".outline{stroke:#000;stroke-width:" << fmt(0.004 * unit) << "}\n"
     << ".grid{stroke:#3366aa;stroke-width:" << fmt(0.0015 * unit) << "}\n"
     << ".slit{stroke:#cc3300;stroke-width:" << fmt(0.003 * unit) << "}\n"
     << ".pole{fill:#cc0000}\n.vertex{fill:#000}\n"
     << "text{font-family:sans-serif;font-size:" << fmt(0.035 * unit) << "px}\n"
     << "</style>\n";
  for (const auto& line : lines_) {
    os << "<polyline class=\"" << escape(line.css_class) << "\" points=\"";
    for (std::size_t i = 0; i < line.points.size(); ++i) {
      if (i) os << ' ';
      os << fmt(line.points[i].real()) << ',' << fmt(-line.points[i].imag());
    }
    os << "\"/>\n";
  }
  for (const auto& m : marks_) {
    os << "<circle class=\"" << escape(m.css_class) << "\" cx=\"" << fmt(m.at.real()) << "\" cy=\""
       << fmt(-m.at.imag()) << "\" r=\"" << fmt(0.008 * unit) << "\"/>\n";
  }
  for (const auto& l : labels_) {
    os << "<text x=\"" << fmt(l.at.real() + 0.01 * unit) << "\" y=\"" << fmt(-l.at.imag() - 0.01 * unit)
       << "\">" << escape(l.text) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

GridMap parse_grid_map(const std::string& name) {
  if (name == "F") return GridMap::F;
  if (name == "sin") return GridMap::Sin;
  throw Error("unknown map '" + name + "' (expected F or sin)");
}

namespace {

// Splits a sampled curve into runs of defined, bounded image points.
template <class Map>
void add_image_curve(SvgFigure& fig, const std::vector<Complex>& source, Map&& map, double bound) {
  std::vector<Complex> run;
  auto flush = [&]() {
    fig.polyline(run, "grid");
    run.clear();
  };
  for (Complex z : source) {
    std::optional<Complex> w;
    try {
      w = map(z);
    } catch (const Error&) {
      w.reset();
    }
    if (!w || !std::isfinite(w->real()) || !std::isfinite(w->imag()) || std::abs(*w) > bound) {
      flush();
      continue;
    }
    run.push_back(*w);
  }
  flush();
}

void add_slits(SvgFigure& fig, int n, double reach) {
  for (int k = 0; k < n; ++k) {
    const Complex r = root_of_unity(n, k);
    fig.polyline({r, r * reach}, "slit");
  }
}

void add_outline(SvgFigure& fig, std::vector<Complex> pts) {
  pts.push_back(pts.front());
  fig.polyline(pts, "outline");
}

}  // namespace

std::string grid_svg(const geometry::SquigContext& ctx, GridMap map, int density) {
  if (density < 2 || density > 256) {
    throw UnsupportedParameter("grid density must lie in 2..256");
  }
  const int n = ctx.n;
  constexpr int kSamples = 96;
  SvgFigure fig;

  if (map == GridMap::F) {
    // Image region Pi_n = F_n(closed sector), with the slits of the range.
    add_outline(fig, {Complex{}, ctx.A, ctx.P, ctx.B});
    add_slits(fig, n, 1.5 * std::max(std::abs(ctx.A), 1.0));
    const auto& F = *ctx.primitive;
    const double span = 2.0 * kPi / n;
    const double r_max = 3.0;
    auto image = [&](Complex z) -> std::optional<Complex> {
      if (std::abs(z - 1.0) < 1e-7) return ctx.A;
      if (std::abs(z - ctx.omega) < 1e-7) return ctx.B;
      return F(z);
    };
    for (int j = 0; j <= density; ++j) {
      const double theta = span * j / density;
      const Complex dir = j == density ? ctx.omega : std::polar(1.0, theta);
      std::vector<Complex> ray;
      for (int s = 0; s <= kSamples; ++s) ray.push_back(dir * (r_max * s / kSamples));
      add_image_curve(fig, ray, image, 4.0 * ctx.R() + 4.0);
    }
    for (int i = 1; i <= density; ++i) {
      const double r = r_max * i / density;
      std::vector<Complex> arc;
      for (int s = 0; s <= kSamples; ++s) {
        arc.push_back(s == kSamples ? r * ctx.omega : std::polar(r, span * s / kSamples));
      }
      add_image_curve(fig, arc, image, 4.0 * ctx.R() + 4.0);
    }
  } else {
    // Domain Omega_n, images of a Cartesian grid under sin_n, and the slits.
    const auto verts = geometry::omega_vertices(ctx);
    add_outline(fig, verts);
    double extent = 0.0;
    for (Complex v : verts) extent = std::max(extent, std::abs(v));
    const double bound = 2.5 * std::max(1.0, extent);
    add_slits(fig, n, bound);
    auto value = [&](Complex z) -> std::optional<Complex> {
      if (!geometry::contains_Omega(ctx, z)) return std::nullopt;
      const auto r = squigfn::sin_n(ctx, z);
      return r.value;
    };
    for (int dir = 0; dir < 2; ++dir) {
      for (int j = 0; j <= density; ++j) {
        const double c = -extent + 2.0 * extent * j / density;
        std::vector<Complex> line;
        for (int s = 0; s <= kSamples; ++s) {
          const double t = -extent + 2.0 * extent * s / kSamples;
          line.push_back(dir == 0 ? Complex{c, t} : Complex{t, c});
        }
        add_image_curve(fig, line, value, bound);
      }
    }
    for (int k = 0; k < n; ++k) {
      fig.marker(root_of_unity(n, k) * ctx.P, "pole");
      fig.marker(root_of_unity(n, k) * ctx.A, "vertex");
    }
  }
  if (map == GridMap::F) {
    fig.marker(ctx.A, "vertex");
    fig.marker(ctx.B, "vertex");
    fig.marker(ctx.P, "pole");
  }
  fig.label(Complex{}, "O");
  fig.label(ctx.A, "A");
  fig.label(ctx.B, "B");
  fig.label(ctx.P, "P");
  return fig.render();
}

}  // namespace squig::cli
