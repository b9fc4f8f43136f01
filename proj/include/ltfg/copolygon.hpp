#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ltfg/padic.hpp"
#include "ltfg/rational.hpp"
#include "ltfg/series.hpp"

namespace ltfg {

// The affine functional (xi1, xi2) -> i xi1 + j xi2 + offset.
struct SupportFunctional {
  int i = 0;
  int j = 0;
  Rational offset;

  Rational operator()(const Rational& xi1, const Rational& xi2) const { return xi1 * i + xi2 * j + offset; }
  friend bool operator==(const SupportFunctional&, const SupportFunctional&) = default;
};

std::string to_string(const SupportFunctional& f);

using Point = std::pair<Rational, Rational>;

// Minimum of finitely many support functionals, one per exponent pair.
class Copolygon {
 public:
  // Duplicated exponent pairs keep the smallest offset. Throws on an empty list.
  explicit Copolygon(std::vector<SupportFunctional> functionals);

  // One functional per term of a 2-variable series, offset = coefficient valuation.
  static Copolygon from_series(const Series& f);

  // Sorted by (i, j).
  const std::vector<SupportFunctional>& functionals() const { return functionals_; }

  Rational evaluate(const Rational& xi1, const Rational& xi2) const;
  // Functionals attaining the minimum at the point.
  std::vector<SupportFunctional> active(const Rational& xi1, const Rational& xi2) const;

 private:
  std::vector<SupportFunctional> functionals_;
};

struct Vertex {
  Rational xi1;
  Rational xi2;
  Rational eta;
  std::vector<SupportFunctional> supporting;
};

// Points where at least three functionals attain the minimum, sorted by (xi1, xi2).
std::vector<Vertex> vertices(const Copolygon& c);

// A piece of the line a xi1 + b xi2 = rhs on which the two supporting
// functionals tie and attain the minimum. The piece is parametrised as
// base + t direction for t in [t_min, t_max], either bound possibly infinite.
struct TieLocus {
  SupportFunctional first;
  SupportFunctional second;
  Rational a;
  Rational b;
  Rational rhs;
  Point base;
  Point direction;
  std::optional<Rational> t_min;
  std::optional<Rational> t_max;

  Point at(const Rational& t) const;
  bool contains_parameter(const Rational& t) const;
  // "segment", "ray" or "line".
  std::string kind() const;
};

std::vector<TieLocus> tie_locus(const Copolygon& c);

// Intersections of the tie loci of a with those of b. Parallel and
// coincident pairs of lines contribute nothing.
std::set<Point> intersect_tie_loci(const Copolygon& a, const Copolygon& b);

struct LowerBoundResult {
  bool holds = false;
  std::optional<int> value_valuation;  // nullopt when f(alpha) vanishes to precision
  Rational bound;
};

// Evaluates f at alpha and compares v(f(alpha)) with V_f(v(alpha1), v(alpha2)).
// Both coordinates need valuation >= 1.
LowerBoundResult lower_bound_check(const Series& f, const PadicScalar& alpha1, const PadicScalar& alpha2);

// Support file: a header line "p D", then one "i j valuation" line per term,
// the valuation written as an integer or "num/den".
struct SupportFile {
  int prime = 2;
  int degree = 1;
  Copolygon copolygon;
};

SupportFile parse_support(const std::string& text);
std::string write_support(const SupportFile& file);

}  // namespace ltfg
