#include "ltfg/svg.hpp"

#include <array>
#include <cstdio>
#include <optional>
#include <sstream>

#include "ltfg/error.hpp"

namespace ltfg {

namespace {

using Polygon = std::vector<Point>;

constexpr std::array<const char*, 8> kFill{"#8dd3c7", "#ffffb3", "#bebada", "#fb8072",
                                           "#80b1d3", "#fdb462", "#b3de69", "#fccde5"};
constexpr std::array<const char*, 4> kDash{"none", "6 4", "2 3", "8 3 2 3"};

std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

class Canvas {
 public:
  explicit Canvas(const SvgOptions& o) : o_(o) {
    if (o.xmin >= o.xmax || o.ymin >= o.ymax || o.width <= 0 || o.height <= 0)
      throw Error(Errc::empty_bounding_box, "the plot window has no interior");
  }

  std::string x(const Rational& xi1) const {
    return fixed3(o_.margin + ((xi1 - o_.xmin) / (o_.xmax - o_.xmin)).to_double() * o_.width);
  }
  std::string y(const Rational& xi2) const {
    return fixed3(o_.margin + ((o_.ymax - xi2) / (o_.ymax - o_.ymin)).to_double() * o_.height);
  }
  bool inside(const Point& pt) const {
    return o_.xmin <= pt.first && pt.first <= o_.xmax && o_.ymin <= pt.second && pt.second <= o_.ymax;
  }
  Polygon box() const {
    return {{o_.xmin, o_.ymin}, {o_.xmax, o_.ymin}, {o_.xmax, o_.ymax}, {o_.xmin, o_.ymax}};
  }

  // The part of a tie locus inside the window, as two endpoints.
  std::optional<std::pair<Point, Point>> clip(const TieLocus& l) const {
    std::optional<Rational> lo = l.t_min;
    std::optional<Rational> hi = l.t_max;
    auto bound = [&](const Rational& base, const Rational& dir, const Rational& min_v, const Rational& max_v) {
      if (dir.sign() == 0) return min_v <= base && base <= max_v;
      Rational a = (min_v - base) / dir;
      Rational b = (max_v - base) / dir;
      if (b < a) std::swap(a, b);
      lo = lo ? max(*lo, a) : a;
      hi = hi ? min(*hi, b) : b;
      return true;
    };
    if (!bound(l.base.first, l.direction.first, o_.xmin, o_.xmax)) return std::nullopt;
    if (!bound(l.base.second, l.direction.second, o_.ymin, o_.ymax)) return std::nullopt;
    if (!lo || !hi || *lo >= *hi) return std::nullopt;
    return std::pair(l.at(*lo), l.at(*hi));
  }

  const SvgOptions& options() const { return o_; }

 private:
  SvgOptions o_;
};

// Keeps the part of the polygon where a x + b y + c <= 0.
Polygon clip_half_plane(const Polygon& poly, const Rational& a, const Rational& b, const Rational& c) {
  auto side = [&](const Point& pt) { return a * pt.first + b * pt.second + c; };
  Polygon out;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    const Point& cur = poly[k];
    const Point& next = poly[(k + 1) % poly.size()];
    const Rational sc = side(cur);
    const Rational sn = side(next);
    if (sc.sign() <= 0) out.push_back(cur);
    if ((sc.sign() < 0 && sn.sign() > 0) || (sc.sign() > 0 && sn.sign() < 0)) {
      const Rational t = sc / (sc - sn);
      out.push_back({cur.first + (next.first - cur.first) * t, cur.second + (next.second - cur.second) * t});
    }
  }
  return out;
}

std::string label(const Point& pt) { return "(" + pt.first.to_string() + ", " + pt.second.to_string() + ")"; }

void marker(std::ostringstream& out, const Canvas& cv, const Point& pt) {
  out << "  <circle cx=\"" << cv.x(pt.first) << "\" cy=\"" << cv.y(pt.second) << "\" r=\"4\" fill=\"#000000\"/>\n";
  out << "  <text x=\"" << cv.x(pt.first) << "\" y=\"" << cv.y(pt.second)
      << "\" dx=\"8\" dy=\"-8\" font-family=\"sans-serif\" font-size=\"12\">" << label(pt) << "</text>\n";
}

void tie_lines(std::ostringstream& out, const Canvas& cv, const Copolygon& c, const char* dash) {
  for (const auto& l : tie_locus(c)) {
    const auto seg = cv.clip(l);
    if (!seg) continue;
    out << "  <line x1=\"" << cv.x(seg->first.first) << "\" y1=\"" << cv.y(seg->first.second) << "\" x2=\""
        << cv.x(seg->second.first) << "\" y2=\"" << cv.y(seg->second.second)
        << "\" stroke=\"#222222\" stroke-width=\"1.5\"";
    if (std::string(dash) != "none") out << " stroke-dasharray=\"" << dash << "\"";
    out << "><title>" << to_string(l.first) << " = " << to_string(l.second) << "</title></line>\n";
  }
}

}  // namespace

std::string emit_svg(const std::vector<Copolygon>& copolygons, const SvgOptions& options) {
  const Canvas cv(options);
  const int total_w = options.width + 2 * options.margin;
  const int total_h = options.height + 2 * options.margin;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total_w << "\" height=\"" << total_h
      << "\" viewBox=\"0 0 " << total_w << ' ' << total_h << "\">\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"" << total_w << "\" height=\"" << total_h << "\" fill=\"#ffffff\"/>\n";

  if (copolygons.size() == 1) {
    const auto& fs = copolygons.front().functionals();
    for (std::size_t k = 0; k < fs.size(); ++k) {
      Polygon region = cv.box();
      for (std::size_t other = 0; other < fs.size() && region.size() >= 3; ++other) {
        if (other == k) continue;
        region = clip_half_plane(region, Rational(fs[k].i - fs[other].i), Rational(fs[k].j - fs[other].j),
                                 fs[k].offset - fs[other].offset);
      }
      if (region.size() < 3) continue;
      out << "  <polygon points=\"";
      for (std::size_t v = 0; v < region.size(); ++v)
        out << (v ? " " : "") << cv.x(region[v].first) << ',' << cv.y(region[v].second);
      out << "\" fill=\"" << kFill[k % kFill.size()] << "\" fill-opacity=\"0.6\" stroke=\"none\"><title>"
          << to_string(fs[k]) << "</title></polygon>\n";
    }
    tie_lines(out, cv, copolygons.front(), kDash[0]);
    for (const auto& v : vertices(copolygons.front()))
      if (cv.inside({v.xi1, v.xi2})) marker(out, cv, {v.xi1, v.xi2});
  } else {
    for (std::size_t k = 0; k < copolygons.size(); ++k) tie_lines(out, cv, copolygons[k], kDash[k % kDash.size()]);
    std::set<Point> crossings;
    for (std::size_t a = 0; a < copolygons.size(); ++a)
      for (std::size_t b = a + 1; b < copolygons.size(); ++b)
        for (const auto& pt : intersect_tie_loci(copolygons[a], copolygons[b])) crossings.insert(pt);
    for (const auto& pt : crossings)
      if (cv.inside(pt)) marker(out, cv, pt);
  }

  out << "  <rect x=\"" << options.margin << "\" y=\"" << options.margin << "\" width=\"" << options.width
      << "\" height=\"" << options.height << "\" fill=\"none\" stroke=\"#000000\"/>\n";
  out << "  <text x=\"" << options.margin + options.width / 2 << "\" y=\"" << total_h - 10
      << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">xi1 in [" << options.xmin.to_string()
      << ", " << options.xmax.to_string() << "]</text>\n";
  out << "  <text x=\"14\" y=\"" << options.margin + options.height / 2
      << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
      << options.margin + options.height / 2 << ")\">xi2 in [" << options.ymin.to_string() << ", "
      << options.ymax.to_string() << "]</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace ltfg
