#include "ltfg/fixtures.hpp"

#include "ltfg/error.hpp"
#include "ltfg/torsion.hpp"

namespace ltfg::fixtures {

Series ex1(int precision) {
  Series f(2, 2, 5, precision);
  f.add_term(Monomial{1, 1}, PadicScalar::from_integer(2, 2, precision));
  f.add_term(Monomial{4, 0}, PadicScalar::one(2, precision));
  f.add_term(Monomial{0, 5}, PadicScalar::one(2, precision));
  return f;
}

SeriesPair dyn23(int precision) { return dynamical_system(2, {2, 3}, 8, precision); }

SeriesPair appendix_b45(int p, int precision) {
  if (p != 2 && p != 3) throw Error(Errc::invalid_argument, "the (4, 5) fixture is available for p = 2 and p = 3");
  const int p2 = p * p, p3 = p2 * p, p4 = p3 * p, p5 = p4 * p;
  struct Entry {
    int l, k;
    int c1, c2;  // diagonal entries as powers of p, -1 for a zero entry
  };
  const Entry entries[] = {
      {1, 0, 1, 1},          {p2, 0, 2, 3},  {p2 + p, p, 4, 3}, {p3 + p, p3, -1, 1},
      {p4, 0, -1, 0},        {p4 + p, p4, 1, -1}, {p5, 0, 0, -1},
  };
  Series s1(p, 2, p5, precision);
  Series s2(p, 2, p5, precision);
  for (const Entry& e : entries) {
    if (e.c1 >= 0) s1.add_term(Monomial{e.l - e.k, e.k}, PadicScalar::power_of_p(p, e.c1, precision));
    if (e.c2 >= 0) s2.add_term(Monomial{e.k, e.l - e.k}, PadicScalar::power_of_p(p, e.c2, precision));
  }
  return {std::move(s1), std::move(s2)};
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> all{"ex1", "dyn23", "appendixB45"};
  return all;
}

std::vector<Copolygon> copolygon_fixture(const std::string& name) {
  if (name == "ex1") return {Copolygon::from_series(ex1())};
  SeriesPair pair = name == "dyn23" ? dyn23()
                    : name == "appendixB45"
                        ? appendix_b45(2)
                        : throw Error(Errc::invalid_argument, "unknown fixture \"" + name + "\"");
  return {Copolygon::from_series(pair.first()), Copolygon::from_series(pair.second())};
}

}  // namespace ltfg::fixtures
