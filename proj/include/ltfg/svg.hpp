#pragma once

#include <string>
#include <vector>

#include "ltfg/copolygon.hpp"
#include "ltfg/rational.hpp"

namespace ltfg {

// Plot window in the (xi1, xi2) plane and its pixel size. A point maps to
//   x = margin + (xi1 - xmin) / (xmax - xmin) * width
//   y = margin + (ymax - xi2) / (ymax - ymin) * height
// printed with three decimals.
struct SvgOptions {
  Rational xmin{0};
  Rational xmax{1};
  Rational ymin{0};
  Rational ymax{1};
  int width = 400;
  int height = 400;
  int margin = 40;
};

// One copolygon: its facet regions, tie loci and labelled vertices.
// Several: their tie loci in distinct dash styles and the labelled pairwise
// intersection points. Throws Errc::empty_bounding_box for a degenerate window.
std::string emit_svg(const std::vector<Copolygon>& copolygons, const SvgOptions& options = {});

}  // namespace ltfg
