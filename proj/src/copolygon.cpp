#include "ltfg/copolygon.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ltfg/error.hpp"

namespace ltfg {

namespace {

Rational dot(const Point& a, const Point& b) { return a.first * b.first + a.second * b.second; }

// Solves a1 x + b1 y = r1, a2 x + b2 y = r2; nullopt when singular.
std::optional<Point> solve(const Rational& a1, const Rational& b1, const Rational& r1, const Rational& a2,
                           const Rational& b2, const Rational& r2) {
  const Rational det = a1 * b2 - a2 * b1;
  if (det.sign() == 0) return std::nullopt;
  return Point{(r1 * b2 - r2 * b1) / det, (a1 * r2 - a2 * r1) / det};
}

}  // namespace

std::string to_string(const SupportFunctional& f) {
  return "(" + std::to_string(f.i) + "," + std::to_string(f.j) + "," + f.offset.to_string() + ")";
}

Copolygon::Copolygon(std::vector<SupportFunctional> functionals) {
  if (functionals.empty()) throw Error(Errc::invalid_argument, "a copolygon needs at least one functional");
  std::map<std::pair<int, int>, Rational> best;
  for (const auto& f : functionals) {
    if (f.i < 0 || f.j < 0) throw Error(Errc::invalid_argument, "support exponents must be non-negative");
    auto [it, inserted] = best.emplace(std::pair(f.i, f.j), f.offset);
    if (!inserted) it->second = min(it->second, f.offset);
  }
  for (const auto& [ij, offset] : best) functionals_.push_back({ij.first, ij.second, offset});
}

Copolygon Copolygon::from_series(const Series& f) {
  if (f.nvars() != 2) throw Error(Errc::shape_mismatch, "copolygons are defined for series in two variables");
  if (f.is_zero()) throw Error(Errc::invalid_argument, "the zero series has no copolygon");
  std::vector<SupportFunctional> out;
  for (const auto& [m, c] : f.terms()) out.push_back({m.exponent(0), m.exponent(1), Rational(c.valuation())});
  return Copolygon(std::move(out));
}

Rational Copolygon::evaluate(const Rational& xi1, const Rational& xi2) const {
  Rational best = functionals_.front()(xi1, xi2);
  for (const auto& f : functionals_) best = min(best, f(xi1, xi2));
  return best;
}

std::vector<SupportFunctional> Copolygon::active(const Rational& xi1, const Rational& xi2) const {
  const Rational v = evaluate(xi1, xi2);
  std::vector<SupportFunctional> out;
  for (const auto& f : functionals_)
    if (f(xi1, xi2) == v) out.push_back(f);
  return out;
}

std::vector<Vertex> vertices(const Copolygon& c) {
  const auto& fs = c.functionals();
  std::map<Point, Vertex> found;
  for (std::size_t x = 0; x < fs.size(); ++x)
    for (std::size_t y = x + 1; y < fs.size(); ++y)
      for (std::size_t z = y + 1; z < fs.size(); ++z) {
        const auto& f1 = fs[x];
        const auto& f2 = fs[y];
        const auto& f3 = fs[z];
        const auto pt = solve(f1.i - f2.i, f1.j - f2.j, f2.offset - f1.offset, f1.i - f3.i, f1.j - f3.j,
                              f3.offset - f1.offset);
        if (!pt || found.contains(*pt)) continue;
        const Rational eta = c.evaluate(pt->first, pt->second);
        if (f1(pt->first, pt->second) != eta) continue;
        found.emplace(*pt, Vertex{pt->first, pt->second, eta, c.active(pt->first, pt->second)});
      }
  std::vector<Vertex> out;
  for (auto& [pt, v] : found) out.push_back(std::move(v));
  return out;
}

Point TieLocus::at(const Rational& t) const {
  return {base.first + direction.first * t, base.second + direction.second * t};
}

bool TieLocus::contains_parameter(const Rational& t) const {
  return (!t_min || *t_min <= t) && (!t_max || t <= *t_max);
}

std::string TieLocus::kind() const {
  if (t_min && t_max) return "segment";
  if (t_min || t_max) return "ray";
  return "line";
}

std::vector<TieLocus> tie_locus(const Copolygon& c) {
  const auto& fs = c.functionals();
  std::vector<TieLocus> out;
  for (std::size_t x = 0; x < fs.size(); ++x)
    for (std::size_t y = x + 1; y < fs.size(); ++y) {
      const auto& f1 = fs[x];
      const auto& f2 = fs[y];
      TieLocus locus{f1, f2, Rational(f1.i - f2.i), Rational(f1.j - f2.j), f2.offset - f1.offset, {}, {}, {}, {}};
      if (locus.b.sign() != 0)
        locus.base = {Rational(0), locus.rhs / locus.b};
      else
        locus.base = {locus.rhs / locus.a, Rational(0)};
      locus.direction = {locus.b, -locus.a};
      if (locus.direction.first.sign() < 0 || (locus.direction.first.sign() == 0 && locus.direction.second.sign() < 0))
        locus.direction = {-locus.direction.first, -locus.direction.second};

      // f1 <= g along the line is c0 + c1 t <= 0 for every other functional g.
      bool empty = false;
      for (std::size_t z = 0; z < fs.size() && !empty; ++z) {
        if (z == x || z == y) continue;
        const auto& g = fs[z];
        const Rational c0 = f1(locus.base.first, locus.base.second) - g(locus.base.first, locus.base.second);
        const Rational c1 = locus.direction.first * (f1.i - g.i) + locus.direction.second * (f1.j - g.j);
        if (c1.sign() == 0) {
          empty = c0.sign() > 0;
        } else {
          const Rational bound = -c0 / c1;
          if (c1.sign() > 0)
            locus.t_max = locus.t_max ? min(*locus.t_max, bound) : bound;
          else
            locus.t_min = locus.t_min ? max(*locus.t_min, bound) : bound;
        }
      }
      if (empty) continue;
      if (locus.t_min && locus.t_max && *locus.t_min >= *locus.t_max) continue;
      out.push_back(std::move(locus));
    }
  return out;
}

std::set<Point> intersect_tie_loci(const Copolygon& a, const Copolygon& b) {
  const auto la = tie_locus(a);
  const auto lb = tie_locus(b);
  std::set<Point> out;
  for (const auto& s : la)
    for (const auto& t : lb) {
      const auto pt = solve(s.a, s.b, s.rhs, t.a, t.b, t.rhs);
      if (!pt) continue;
      auto param = [&](const TieLocus& l) {
        const Point rel{pt->first - l.base.first, pt->second - l.base.second};
        return dot(rel, l.direction) / dot(l.direction, l.direction);
      };
      if (s.contains_parameter(param(s)) && t.contains_parameter(param(t))) out.insert(*pt);
    }
  return out;
}

LowerBoundResult lower_bound_check(const Series& f, const PadicScalar& alpha1, const PadicScalar& alpha2) {
  if (f.nvars() != 2) throw Error(Errc::shape_mismatch, "lower_bound_check needs a series in two variables");
  for (const PadicScalar* a : {&alpha1, &alpha2}) {
    if (a->prime() != f.prime()) throw Error(Errc::prime_mismatch, "evaluation point prime differs from the series");
    if (a->is_zero() || a->valuation() < 1)
      throw Error(Errc::invalid_argument, "evaluation point must have nonzero coordinates of valuation >= 1");
  }
  const Copolygon c = Copolygon::from_series(f);
  LowerBoundResult out;
  out.bound = c.evaluate(Rational(alpha1.valuation()), Rational(alpha2.valuation()));

  PadicScalar sum = PadicScalar::zero(f.prime(), f.precision());
  for (const auto& [m, coeff] : f.terms())
    sum += coeff * alpha1.pow(m.exponent(0)) * alpha2.pow(m.exponent(1));
  if (sum.is_zero()) {
    out.holds = true;
    return out;
  }
  if (Rational(sum.absolute_precision()) < out.bound)
    throw Error(Errc::precision_exhausted, "evaluation is only known below the copolygon bound; raise the precision");
  out.value_valuation = sum.valuation();
  out.holds = Rational(sum.valuation()) >= out.bound;
  return out;
}

SupportFile parse_support(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<std::pair<int, int>> header;
  std::vector<SupportFunctional> fs;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    auto fail = [&](const std::string& why) {
      return Error(Errc::parse_error, "support file line " + std::to_string(line_no) + ": " + why);
    };
    if (!header) {
      int p = 0, d = 0;
      std::string rest;
      if (!(fields >> p >> d) || (fields >> rest)) throw fail("expected header \"p D\"");
      if (!is_prime(p)) throw fail("p must be prime");
      if (d < 1) throw fail("D must be positive");
      header = {p, d};
      continue;
    }
    int i = -1, j = -1;
    std::string v, rest;
    if (!(fields >> i >> j >> v) || (fields >> rest)) throw fail("expected \"i j valuation\"");
    if (i < 0 || j < 0) throw fail("exponents must be non-negative");
    if (i + j > header->second) throw fail("term degree exceeds D");
    fs.push_back({i, j, Rational::parse(v)});
  }
  if (!header) throw Error(Errc::parse_error, "support file is missing its \"p D\" header");
  if (fs.empty()) throw Error(Errc::parse_error, "support file lists no terms");
  return {header->first, header->second, Copolygon(std::move(fs))};
}

std::string write_support(const SupportFile& file) {
  std::ostringstream out;
  out << file.prime << ' ' << file.degree << '\n';
  for (const auto& f : file.copolygon.functionals()) out << f.i << ' ' << f.j << ' ' << f.offset.to_string() << '\n';
  return out.str();
}

}  // namespace ltfg
