#include <doctest.h>

#include <numeric>

#include "ltfg/error.hpp"
#include "ltfg/torsion.hpp"

using namespace ltfg;

namespace {

Rational R(long a, long b = 1) { return Rational(a, b); }
Rational R(const mpz_class& a) { return Rational(a, mpz_class(1)); }

}  // namespace

TEST_CASE("dynamical system") {
  const SeriesPair d = dynamical_system(2, {2, 3}, 8);
  CHECK(d.first().size() == 2);
  CHECK(d.first().coefficient(Monomial{1, 0}) == PadicScalar::from_integer(2, 2));
  CHECK(d.first().coefficient(Monomial{0, 4}) == PadicScalar::one(2));
  CHECK(d.second().coefficient(Monomial{8, 0}) == PadicScalar::one(2));
  const SeriesPair e = dynamical_system(3, {1, 2}, 9);
  CHECK(e.first().coefficient(Monomial{0, 3}) == PadicScalar::one(3));
  CHECK(e.second().coefficient(Monomial{9, 0}) == PadicScalar::one(3));
  CHECK(check_p_congruences(d, 2, {2, 3}).empty());
  CHECK(check_p_congruences(e, 3, {1, 2}).empty());
  CHECK_THROWS_AS(dynamical_system(2, {2, 3}, 7), Error);
}

TEST_CASE("closed-form valuations") {
  CHECK(torsion_valuations(2, {2, 3}, 1) == ValuationProfile{1, R(5, 31), R(9, 31)});
  CHECK(torsion_valuations(3, {1, 2}, 1) == ValuationProfile{1, R(4, 26), R(10, 26)});
  CHECK(torsion_valuations(2, {2, 3}, 2) == ValuationProfile{2, R(9, 8 * 31), R(5, 4 * 31)});
  CHECK_THROWS_AS(torsion_valuations(2, {2, 3}, 0), Error);
  CHECK(hypothesis_status(2, {2, 3}) == "extrapolated");
  CHECK(hypothesis_status(3, {1, 2}) == "extrapolated");
  CHECK(hypothesis_status(3, {2, 3}) == "in");
}

TEST_CASE("min-plus derivation agrees with the closed form") {
  for (auto [p, h] : {std::pair{3, HeightPair{2, 3}}, std::pair{5, HeightPair{2, 3}}, std::pair{7, HeightPair{3, 4}},
                      std::pair{2, HeightPair{2, 3}}, std::pair{3, HeightPair{1, 2}}})
    for (int n = 1; n <= 6; ++n) CHECK(torsion_valuations_via_minplus(p, h, n) == torsion_valuations(p, h, n));
}

TEST_CASE("min-plus ties are reported") {
  // q1 = q2 = 2 and (a, b) = (2, 2): x = y = 1 makes 1 + x = 2 y.
  try {
    (void)minplus_preimage(2, {1, 1}, {1, R(2), R(2)});
    FAIL("tie not reported");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ambiguous_branch);
  }
}

TEST_CASE("valuation identities") {
  for (auto [p, h] : {std::pair{3, HeightPair{2, 3}}, std::pair{2, HeightPair{2, 3}}, std::pair{5, HeightPair{3, 4}}}) {
    const Rational ph = R(ipow(p, h.total()));
    const auto l1 = torsion_valuations(p, h, 1);
    CHECK(R(ipow(p, h.h2)) * l1.v_xi == R(1) + l1.v_eta);
    CHECK(R(ipow(p, h.h1)) * l1.v_eta == R(1) + l1.v_xi);
    for (int n = 1; n <= 6; ++n) {
      const auto a = torsion_valuations(p, h, n);
      const auto b = torsion_valuations(p, h, n + 1);
      const auto c = torsion_valuations(p, h, n + 2);
      CHECK(b.v_xi < a.v_xi);
      CHECK(b.v_eta < a.v_eta);
      CHECK(ph * c.v_xi == a.v_xi);
      CHECK(ph * c.v_eta == a.v_eta);
      CHECK(a.v_xi.sign() > 0);
      CHECK(a.v_eta < R(1));
    }
  }
}

TEST_CASE("p-torsion family") {
  const PTorsionReport r = p_torsion_points(2, {2, 3});
  CHECK(r.a == R(5, 31));
  CHECK(r.b == R(9, 31));
  CHECK(r.xi_equation_balanced);
  CHECK(r.eta_equation_balanced);
  CHECK(r.minus_one_exponent == R(3, 31));
  CHECK_FALSE(r.minus_one_exponent_balances);
  CHECK(r.family_size == 31 * 8);
  CHECK_FALSE(r.exact_members.has_value());
  CHECK(r.total_count == 32);
  for (const auto& pt : r.enumerate(100)) {
    CHECK(pt.p_power_xi.sign() > 0);  // the zero point is not in the family
    CHECK(pt.valuations_balance);
    CHECK_FALSE(pt.cancels_exactly);
  }

  const PTorsionReport s = p_torsion_points(3, {2, 3});
  CHECK(s.exact_members == mpz_class(242));
  const auto pts = s.enumerate(static_cast<std::size_t>(s.family_size.get_ui()));
  CHECK(pts.size() == 242 * 27);
  long exact = 0;
  for (const auto& pt : pts) exact += pt.cancels_exactly;
  CHECK(exact == 242);
  for (int p : {3, 5, 7})
    for (auto h : {HeightPair{2, 3}, HeightPair{3, 4}, HeightPair{1, 2}}) {
      const auto t = p_torsion_points(p, h);
      CHECK(R(ipow(p, h.h2)) * t.a == R(1) + t.b);
    }
}

TEST_CASE("torsion counts") {
  CHECK(count_p_torsion(2, {2, 3}) == 32);
  CHECK(count_p_torsion(3, {1, 2}) == 27);
  CHECK(count_p_torsion(2, {1, 1}) == 4);
}

TEST_CASE("gcd lemma") {
  CHECK(gcd_lemma_value(3, 3, 2) == 1);  // gcd(13, 5)
  CHECK(gcd_lemma(3, 3, 2));
  CHECK(gcd_lemma(5, 3, 2));  // gcd(62, 13)
  CHECK_THROWS_AS(gcd_lemma(3, 3, 3), Error);
  CHECK_THROWS_AS(gcd_lemma(3, 4, 3), Error);
  CHECK_THROWS_AS(gcd_lemma(2, 3, 2), Error);
  // Outside the hypothesis the raw gcd can exceed one: s = t = 2 gives gcd(4, 5) = 1, s = 2, t = 1 gives gcd(4, 2) = 2.
  CHECK(gcd_lemma_value(3, 2, 1) == 2);
}

TEST_CASE("ramification") {
  const auto a = ramification_report(3, {2, 3});
  CHECK(a.claim);
  CHECK(a.degree == 121);
  CHECK(a.totally_ramified);
  CHECK(a.witness_gcd[0] == 1);
  CHECK(a.witness_gcd[1] == 1);
  CHECK(ramification_report(5, {2, 3}).degree == 1562);
  CHECK(ramification_report(3, {2, 5}).degree == 1093);
  CHECK(ramification_report(3, {2, 5}).totally_ramified);
  CHECK_FALSE(ramification_report(3, {3, 5}).claim);  // h even
  CHECK_FALSE(ramification_report(2, {2, 3}).claim);
  CHECK_FALSE(ramification_report(3, {1, 2}).claim);
  for (int p : {3, 5, 7})
    for (auto h : {HeightPair{2, 3}, HeightPair{2, 5}, HeightPair{3, 4}}) {
      const auto r = ramification_report(p, h);
      const Rational v = torsion_valuations(p, h, 1).v_eta;
      CHECK(mpz_class(2 * r.degree) % v.denominator() == 0);
    }
}
