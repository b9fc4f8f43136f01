#include <doctest.h>

#include <random>

#include "ltfg/error.hpp"
#include "ltfg/series.hpp"
#include "oracle.hpp"

using namespace ltfg;

TEST_CASE("monomial order is graded lexicographic") {
  CHECK(Monomial{1, 0} < Monomial{0, 2});
  CHECK(Monomial{0, 2} < Monomial{1, 1});
  CHECK(Monomial{1, 1} < Monomial{2, 0});
  CHECK(Monomial{0, 0, 0, 1} < Monomial{1, 0, 0, 0});
  const Monomial m{3, 0, 2, 1};
  CHECK(m.degree() == 6);
  CHECK(m.exponent(2) == 2);
  CHECK((m * Monomial{1, 1}).exponent(1) == 1);
  CHECK((m * Monomial{1, 1}).degree() == 8);
  CHECK(Monomial::variable(4, 7).exponent(4) == 7);
  CHECK_THROWS_AS(Monomial({kMaxExponent + 1, 0}), Error);
}

TEST_CASE("products match the rational oracle") {
  std::mt19937_64 rng(7);
  for (int p : {2, 3, 5}) {
    for (int trial = 0; trial < 25; ++trial) {
      const int nvars = 2 + trial % 3;
      const auto a = oracle::random_poly(rng, p, nvars, 7, 0, 6, 2);
      const auto b = oracle::random_poly(rng, p, nvars, 7, 0, 6, 2);
      const Series sa = oracle::to_series(a, p, 30);
      const Series sb = oracle::to_series(b, p, 30);
      CHECK(oracle::same(sa * sb, oracle::mul(a, b)));
      CHECK(oracle::same(sa + sb, oracle::add(a, b)));
      CHECK(oracle::same(sa - sb, oracle::add(a, b, -1)));
    }
  }
}

TEST_CASE("composition matches the rational oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int p = trial % 2 ? 3 : 2;
    const auto outer = oracle::random_poly(rng, p, 2, 6, 1, 5, 1);
    std::vector<oracle::Poly> inner;
    std::vector<Series> sinner;
    for (int i = 0; i < 2; ++i) {
      inner.push_back(oracle::random_poly(rng, p, 4, 6, 1, 4, 1));
      sinner.push_back(oracle::to_series(inner.back(), p, 30));
    }
    const Series got = compose(oracle::to_series(outer, p, 30), sinner);
    CHECK(oracle::same(got, oracle::compose(outer, inner)));
  }
}

TEST_CASE("composition rejects a nonzero constant term") {
  const Series x = Series::variable(2, 2, 4, 0);
  const std::vector<Series> inner{x + Series::constant(PadicScalar::one(2), 2, 4), x};
  try {
    (void)compose(x, inner);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::nonzero_constant_term);
  }
}

TEST_CASE("inversion matches a fixed-point oracle") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const int p = 2 + trial % 2;
    const int cap = 6;
    std::vector<oracle::Poly> f;
    for (int i = 0; i < 2; ++i)
      f.push_back(oracle::add(oracle::Poly::variable(2, cap, i), oracle::random_poly(rng, p, 2, cap, 2, 4, 1)));
    // g = X - (f - X)(g), iterated until stable.
    std::vector<oracle::Poly> g{oracle::Poly::variable(2, cap, 0), oracle::Poly::variable(2, cap, 1)};
    for (int it = 0; it < cap; ++it) {
      std::vector<oracle::Poly> next;
      for (int i = 0; i < 2; ++i) {
        const auto tail = oracle::add(f[i], oracle::Poly::variable(2, cap, i), -1);
        next.push_back(oracle::add(oracle::Poly::variable(2, cap, i), oracle::compose(tail, g), -1));
      }
      g = next;
    }
    const SeriesPair sf(oracle::to_series(f[0], p, 40), oracle::to_series(f[1], p, 40));
    const SeriesPair inv = invert_pair(sf);
    CHECK(oracle::same(inv.first(), g[0]));
    CHECK(oracle::same(inv.second(), g[1]));
  }
}

TEST_CASE("inversion needs identity Jacobian") {
  const Series x = Series::variable(3, 2, 5, 0);
  const Series y = Series::variable(3, 2, 5, 1);
  try {
    (void)invert_pair(SeriesPair(PadicScalar::from_integer(3, 2) * x, y));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::jacobian_not_identity);
  }
}

TEST_CASE("substitutions") {
  const Series x = Series::variable(2, 2, 9, 0);
  const Series y = Series::variable(2, 2, 9, 1);
  const Series f = x * y + x * x * x;
  const Series frob = f.frobenius_substitution(2);
  CHECK(frob.size() == 2);
  CHECK(frob.coefficient(Monomial{2, 2}) == PadicScalar::one(2));
  CHECK(frob.coefficient(Monomial{6, 0}) == PadicScalar::one(2));
  CHECK(f.frobenius_substitution(4).size() == 1);  // x^12 falls past the cap

  const std::array<int, 2> map{3, 1};
  const Series moved = f.remap(4, map);
  CHECK(moved.nvars() == 4);
  CHECK(moved.coefficient(Monomial{0, 1, 0, 1}) == PadicScalar::one(2));

  const std::array<int, 1> zero_y{1};
  CHECK(f.set_variables_to_zero(zero_y).size() == 1);
  CHECK(f.homogeneous_part(2).size() == 1);
  CHECK(f.truncated(2).degree_cap() == 2);
  CHECK(f.min_degree() == 2);
  CHECK(Series(2, 2, 3).min_degree() == -1);
}

TEST_CASE("small worked cases") {
  const Series x1 = Series::variable(3, 2, 4, 0);
  const Series x2 = Series::variable(3, 2, 4, 1);
  CHECK((x1 + x2).size() == 2);
  const Series sq = (x1 + x2) * (x1 - x2);
  CHECK(sq.size() == 2);
  CHECK(sq.coefficient(Monomial{2, 0}) == PadicScalar::one(3));
  CHECK(sq.coefficient(Monomial{0, 2}) == -PadicScalar::one(3));
  CHECK((x1 * x1 * x1 * x1 * x1).is_zero());

  const SeriesPair id = SeriesPair::identity(3, 4);
  const SeriesPair g(x1 + x2 * x2, x2 + x1 * x2);
  CHECK(equal_up_to_cap(compose(id, g), g));
  const SeriesPair binom = compose(SeriesPair(x1 * x1, x2), SeriesPair(x1 + x2, x2));
  CHECK(binom.first().coefficient(Monomial{1, 1}) == PadicScalar::from_integer(3, 2));
  CHECK(binom.first().size() == 3);

  const SeriesPair inv = invert_pair(SeriesPair(x1 + x2 * x2, x2));
  CHECK(equal_up_to_cap(inv, SeriesPair(x1 - x2 * x2, x2)));
  CHECK(equal_up_to_cap(invert_pair(id), id));
}

TEST_CASE("shape mismatches are rejected") {
  const Series a = Series::variable(2, 2, 4, 0);
  const Series b = Series::variable(3, 2, 4, 0);
  const Series c = Series::variable(2, 3, 4, 0);
  CHECK_THROWS_AS(a + b, Error);
  CHECK_THROWS_AS(a * c, Error);
}
