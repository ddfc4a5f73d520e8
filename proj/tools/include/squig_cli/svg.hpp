#ifndef SQUIG_CLI_SVG_HPP
#define SQUIG_CLI_SVG_HPP

#include <string>
#include <vector>

#include "squig/geometry.hpp"
#include "squig/types.hpp"

namespace squig::cli {

/// Figure in mathematical coordinates (y up); the viewBox is the bounding box
/// of everything drawn, padded by 5% on each side.
class SvgFigure {
 public:
  void polyline(const std::vector<Complex>& points, const std::string& css_class);
  void marker(Complex at, const std::string& css_class);
  void label(Complex at, const std::string& text);
  std::string render() const;

 private:
  struct Line {
    std::vector<Complex> points;
    std::string css_class;
  };
  struct Mark {
    Complex at;
    std::string css_class;
  };
  struct Label {
    Complex at;
    std::string text;
  };
  void extend(Complex z);

  std::vector<Line> lines_;
  std::vector<Mark> marks_;
  std::vector<Label> labels_;
  bool empty_ = true;
  double xmin_ = 0, xmax_ = 0, ymin_ = 0, ymax_ = 0;
};

enum class GridMap { F, Sin };

GridMap parse_grid_map(const std::string& name);

/// Source region outline with labelled vertices, images of a coordinate grid
/// with `density` lines per direction, the slits of the range and the
/// singular vertices.
std::string grid_svg(const geometry::SquigContext& ctx, GridMap map, int density);

}  // namespace squig::cli

#endif  // SQUIG_CLI_SVG_HPP
