#include <doctest.h>

#include "ltfg/error.hpp"
#include "ltfg/lubin_tate.hpp"
#include "oracle.hpp"

using namespace ltfg;

namespace {

PadicScalar q(int p, long num, long den = 1) { return PadicScalar::from_rational(p, Rational(num, den)); }

// (p x1 + x1^(p^h1), p x2 + x2^(p^h2)): Frobenius on the diagonal.
SeriesPair diagonal_candidate(int p, HeightPair h, int degree) {
  Series a(p, 2, degree), b(p, 2, degree);
  a.add_term(Monomial{1, 0}, q(p, p));
  a.add_term(Monomial::variable(0, static_cast<int>(ipow(p, h.h1).get_si())), q(p, 1));
  b.add_term(Monomial{0, 1}, q(p, p));
  b.add_term(Monomial::variable(1, static_cast<int>(ipow(p, h.h2).get_si())), q(p, 1));
  return {a, b};
}

}  // namespace

TEST_CASE("heights must be positive and coprime") {
  CHECK(make_heights(2, 3).total() == 5);
  CHECK_THROWS_AS(make_heights(2, 4), Error);
  CHECK_THROWS_AS(make_heights(0, 1), Error);
}

TEST_CASE("logarithm terms for (2, (2, 3)) up to degree 40") {
  const SeriesPair L = build_logarithm(2, {2, 3}, 40);
  CHECK(L.first().size() == 3);
  CHECK(L.first().coefficient(Monomial{1, 0}) == q(2, 1));
  CHECK(L.first().coefficient(Monomial{0, 4}) == q(2, 1, 2));
  CHECK(L.first().coefficient(Monomial{32, 0}) == q(2, 1, 4));
  CHECK(L.second().size() == 3);
  CHECK(L.second().coefficient(Monomial{8, 0}) == q(2, 1, 2));
  CHECK(L.second().coefficient(Monomial{0, 32}) == q(2, 1, 4));
  CHECK(verify_logarithm_recursion(L, 2, {2, 3}).empty());
  CHECK(verify_logarithm_recursion(build_logarithm(3, {1, 2}, 40), 3, {1, 2}).empty());
}

TEST_CASE("recursion check catches a perturbed coefficient") {
  SeriesPair L = build_logarithm(2, {2, 3}, 40);
  Series bad = L.first();
  bad.add_term(Monomial{0, 4}, q(2, 1));
  const auto v = verify_logarithm_recursion(SeriesPair(bad, L.second()), 2, {2, 3});
  // The same term feeds the second identity through x2 -> x2^8.
  REQUIRE(v.size() == 2);
  CHECK(v[0].component == 0);
  CHECK(v[0].monomial == Monomial{0, 4});
  CHECK(v[1].component == 1);
  CHECK(v[1].monomial == Monomial{0, 32});
}

TEST_CASE("group law agrees with the hand expansion below degree 8") {
  // L = (x1 + x2^4 / 2, x2) below degree 8, so
  // F1 = x1 + y1 + (x2^4 + y2^4 - (x2 + y2)^4) / 2, F2 = x2 + y2.
  const LubinTateGroup g = build_group(2, {2, 3}, 7);
  const int cap = 7;
  auto v = [&](int i) { return oracle::Poly::variable(4, cap, i); };
  const auto s = oracle::add(v(1), v(3));
  const auto s4 = oracle::mul(oracle::mul(s, s), oracle::mul(s, s));
  auto x4 = [&](int i) { return oracle::mul(oracle::mul(v(i), v(i)), oracle::mul(v(i), v(i))); };
  const auto f1 = oracle::add(oracle::add(v(0), v(2)),
                              oracle::scale(oracle::add(oracle::add(x4(1), x4(3)), s4, -1), mpq_class(1, 2)));
  CHECK(oracle::same(g.group_law.first(), f1));
  CHECK(oracle::same(g.group_law.second(), s));
}

TEST_CASE("multiplication by 2 below degree 8") {
  // u = (2 x1 + x2^4, 2 x2); exp(u) = (u1 - u2^4 / 2, u2) = (2 x1 - 7 x2^4, 2 x2).
  const LubinTateGroup g = build_group(2, {2, 3}, 7);
  const SeriesPair m = multiplication(2, g);
  CHECK(m.first().size() == 2);
  CHECK(m.first().coefficient(Monomial{1, 0}) == q(2, 2));
  CHECK(m.first().coefficient(Monomial{0, 4}) == q(2, -7));
  CHECK(m.second().size() == 1);
  CHECK(m.second().coefficient(Monomial{0, 1}) == q(2, 2));
  CHECK(multiplication(0, g).is_zero());
  CHECK_THROWS_AS(multiplication(q(2, 1, 2), g), Error);
}

TEST_CASE("axioms hold for both fixtures at degree 8") {
  for (auto [p, h] : {std::pair{2, HeightPair{2, 3}}, std::pair{3, HeightPair{1, 2}}}) {
    const LubinTateGroup g = build_group(p, h, 8);
    CHECK_FALSE(check_identity(g).has_value());
    CHECK_FALSE(check_commutativity(g).has_value());
    CHECK_FALSE(check_associativity(g, 8).has_value());
    CHECK_FALSE(check_additivity(g).has_value());
    CHECK_FALSE(check_integrality(g.group_law, "F").has_value());
  }
}

TEST_CASE("multiplication maps compose") {
  const LubinTateGroup g = build_group(3, {1, 2}, 9);
  for (auto [a, b] : {std::pair{2L, 3L}, std::pair{3L, 3L}, std::pair{-1L, 5L}}) {
    const SeriesPair lhs = compose(multiplication(a, g), multiplication(b, g));
    CHECK_FALSE(first_difference(lhs, multiplication(a * b, g), "composition").has_value());
  }
  CHECK(is_endomorphism(multiplication(7, g), g, 9).holds);
}

TEST_CASE("congruences for [p] and fault injection") {
  const LubinTateGroup g = build_group(2, {2, 3}, 9);
  CHECK(verify_p_congruences(g).ok());
  const SeriesPair mp = multiplication(2, g);

  Series extra = mp.first();
  extra.add_term(Monomial{2, 0}, q(2, 1));
  const auto bad_mod_p = verify_p_congruences(g, SeriesPair(extra, mp.second()));
  REQUIRE_FALSE(bad_mod_p.ok());
  CHECK(bad_mod_p.violations.front().check == "mod_p");

  Series linear = mp.second();
  linear.add_term(Monomial{0, 1}, q(2, 2));
  const auto bad_linear = check_p_congruences(SeriesPair(mp.first(), linear), 2, {2, 3});
  REQUIRE(bad_linear.size() == 1);
  CHECK(bad_linear.front().check == "linear_part");

  // One flipped unit gives exactly one violation, at that coefficient.
  for (long replacement : {-5L, -6L}) {
    Series flipped = mp.first();
    flipped.set_term(Monomial{0, 4}, q(2, replacement));
    const auto r = verify_p_congruences(g, SeriesPair(flipped, mp.second()));
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations.front().monomial == Monomial{0, 4});
    CHECK(r.violations.front().check == (replacement == -5 ? "log_linearity" : "mod_p_frobenius"));
  }

  // Swapping the Frobenius monomials breaks the mod-p shape.
  CHECK_FALSE(check_p_congruences(SeriesPair(mp.second(), mp.first()), 2, {2, 3}).empty());
}

TEST_CASE("diagonal Frobenius candidate is not an endomorphism") {
  const LubinTateGroup g = build_group(2, {2, 3}, 9);
  const EndomorphismCheck r = is_endomorphism(diagonal_candidate(2, {2, 3}, 9), g, 9);
  CHECK_FALSE(r.holds);
  REQUIRE(r.first_violation.has_value());
  CHECK(r.first_violation->monomial.degree() == 4);
  CHECK(is_endomorphism(multiplication(2, g), g, 9).holds);
}

TEST_CASE("trivial endomorphisms") {
  const LubinTateGroup g = build_group(2, {2, 3}, 9);
  CHECK_FALSE(first_difference(multiplication(1, g), SeriesPair::identity(2, 9), "one").has_value());
  CHECK(is_endomorphism(SeriesPair::identity(2, 9), g, 9).holds);
  const auto ring = UnramifiedRing::create(2, 5, 16);
  const GammaEndomorphism r = gamma_endomorphism(ring->one(), build_group(2, {2, 3}, 9, 16));
  CHECK(r.verified);
  CHECK(r.gamma1.is_one());
  CHECK(r.gamma2.is_one());
}

TEST_CASE("height of the group and of degenerate inputs") {
  CHECK(height_of(build_group(2, {2, 3}, 9)).height == 5);
  CHECK(height_of(build_group(3, {1, 2}, 9)).height == 3);
  CHECK_FALSE(height_of(build_group(2, {2, 3}, 7)).height.has_value());
  const SeriesPair id = SeriesPair::identity(2, 9);
  const HeightResult additive = height_of(build_group_from_logarithm(2, {2, 3}, id));
  CHECK_FALSE(additive.height.has_value());
  CHECK(additive.diagnostic.find("vanishes") != std::string::npos);
}

TEST_CASE("Cauchy gaps") {
  const LubinTateGroup g = build_group(2, {2, 3}, 9);
  for (auto [m, n] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{3, 2}}) {
    const auto gap = cauchy_gap(g, m, n);
    CHECK((!gap || *gap >= n + 1));
  }
  CHECK_FALSE(cauchy_gap(g, 2, 2).has_value());
  CHECK_THROWS_AS(cauchy_gap(build_group(2, {2, 3}, 1), 2, 1), Error);
  CHECK_THROWS_AS(cauchy_gap(g, 1, 2), Error);
}

TEST_CASE("gamma endomorphism") {
  const auto ring = UnramifiedRing::create(2, 5, 16);
  const auto gamma = teichmuller(*ring, residue::multiplicative_generator(ring->modulus(), 2));
  const LubinTateGroup g = build_group(2, {2, 3}, 9, 16);
  const GammaEndomorphism r = gamma_endomorphism(gamma, g);
  CHECK(r.verified);
  CHECK(r.checked_terms == 4);
  CHECK(r.gamma2 == gamma.pow(8));
  CHECK_THROWS_AS(gamma_endomorphism(ring->from_integer(3), g), Error);
  CHECK_THROWS_AS(gamma_endomorphism(gamma, build_group(2, {1, 2}, 9, 16)), Error);
}

TEST_CASE("logarithm under scaling and inversion") {
  const SeriesPair L = build_logarithm(2, {2, 3}, 9);
  const PadicScalar two = PadicScalar::from_integer(2, 2);
  const SeriesPair scaled = compose(L, two * SeriesPair::identity(2, 9));
  CHECK(scaled.first().coefficient(Monomial{0, 4}) == PadicScalar::from_integer(2, 8));
  const SeriesPair g = invert_pair(L);
  CHECK(g.first().coefficient(Monomial{0, 4}) == q(2, -1, 2));
  CHECK(equal_up_to_cap(compose(L, g), SeriesPair::identity(2, 9)));
}
