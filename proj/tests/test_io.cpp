#include <doctest.h>

#include <sstream>

#include "ltfg/error.hpp"
#include "ltfg/fixtures.hpp"
#include "ltfg/report_json.hpp"
#include "ltfg/series_io.hpp"

using namespace ltfg;

TEST_CASE("series text format") {
  const SeriesPair L = build_logarithm(2, {2, 3}, 32);
  const std::string text = to_text(L.first());
  CHECK(text == "1 0 : 0 1\n0 4 : -1 1\n32 0 : -2 1\n");
  const Series back = parse_series(text, 2, 2, 32);
  CHECK(equal_up_to_cap(back, L.first()));

  std::ostringstream pair_text;
  write_pair(pair_text, L);
  CHECK(equal_up_to_cap(parse_pair(pair_text.str(), 2, 2, 32), L));
}

TEST_CASE("negative units survive the round trip") {
  Series s(3, 2, 4, 10);
  s.add_term(Monomial{1, 1}, PadicScalar::from_integer(3, -15, 10));
  CHECK(to_text(s) == "1 1 : 1 -5\n");
  CHECK(equal_up_to_cap(parse_series(to_text(s), 3, 2, 4, 10), s));
}

TEST_CASE("malformed series text") {
  for (const char* bad :
       {"1 0 0 1\n", "1 0 : x 1\n", "1 : 0 1\n", "9 0 : 0 1\n", "1 0 : 0 3\n", "1 x : 0 1\n", "-1 2 : 0 1\n"}) {
    try {
      (void)parse_series(bad, 3, 2, 4);
      FAIL("accepted malformed text: " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::parse_error);
    }
  }
}

TEST_CASE("group files round trip") {
  const LubinTateGroup g = build_group(3, {1, 2}, 9, 20);
  std::ostringstream out;
  write_group(out, g);
  const std::string text = out.str();
  CHECK(text.rfind("{\"p\":3,\"h1\":1,\"h2\":2,\"D\":9,\"N\":20}\n", 0) == 0);
  const LubinTateGroup back = read_group(text);
  CHECK(back.degree == 9);
  CHECK(equal_up_to_cap(back.group_law, g.group_law));
  CHECK(equal_up_to_cap(back.exponential, g.exponential));
  CHECK_THROWS_AS(read_group("{\"p\":3}\n"), Error);
  CHECK_THROWS_AS(read_group("not json\n"), Error);
}

TEST_CASE("torsion JSON schema") {
  const Json j = torsion_json(2, {2, 3}, torsion_valuations(2, {2, 3}, 1), "closed_form");
  CHECK(j.dump() ==
        "{\"p\":2,\"h1\":2,\"h2\":3,\"n\":1,\"v_xi\":\"5/31\",\"v_eta\":\"9/31\",\"method\":\"closed_form\","
        "\"hypothesis_status\":\"extrapolated\"}");
  const Vertex v{Rational(5, 11), Rational(4, 11), Rational(20, 11), {}};
  CHECK(to_json(v).dump() == "{\"xi1\":\"5/11\",\"xi2\":\"4/11\",\"eta\":\"20/11\"}");
  CHECK(to_json(Point{Rational(0), Rational(2)}).dump() == "{\"xi1\":\"0/1\",\"xi2\":\"2/1\"}");
}

TEST_CASE("ramification CSV") {
  const std::string csv = ramification_csv({ramification_report(3, {2, 3}), ramification_report(2, {2, 3})});
  CHECK(csv ==
        "p,h1,h2,claim,degree,totally_ramified,witness1,witness2,diagnostic\n"
        "3,2,3,true,121,true,1,1,\"single-segment Newton polygon\"\n"
        "2,2,3,false,,,,,\"p must be odd\"\n");
}

TEST_CASE("the (4, 5) candidate swaps the Frobenius components") {
  for (int p : {2, 3}) {
    const SeriesPair c = fixtures::appendix_b45(p);
    const int p4 = static_cast<int>(ipow(p, 4).get_si());
    const int p5 = p4 * p;
    CHECK(c.first().coefficient(Monomial{p5, 0}) == PadicScalar::one(p));
    CHECK(c.second().coefficient(Monomial{0, p4}) == PadicScalar::one(p));
    // Modulo p it reduces to (x1^(p^5), x2^(p^4)) instead of (x2^(p^4), x1^(p^5)).
    const auto v = check_p_congruences(c, p, {4, 5});
    REQUIRE(v.size() == 4);
    CHECK((v[0].component == 0 && v[0].monomial == Monomial{p5, 0} && v[0].check == "mod_p"));
    CHECK((v[1].component == 0 && v[1].monomial == Monomial{0, p4} && v[1].check == "mod_p_frobenius"));
    CHECK((v[2].component == 1 && v[2].monomial == Monomial{0, p4} && v[2].check == "mod_p"));
    CHECK((v[3].component == 1 && v[3].monomial == Monomial{p5, 0} && v[3].check == "mod_p_frobenius"));
  }
  CHECK_THROWS_AS(fixtures::appendix_b45(5), Error);
}

TEST_CASE("named fixtures") {
  CHECK(fixtures::copolygon_fixture("ex1").size() == 1);
  CHECK(fixtures::copolygon_fixture("dyn23").size() == 2);
  CHECK(fixtures::copolygon_fixture("appendixB45").size() == 2);
  CHECK_THROWS_AS(fixtures::copolygon_fixture("nope"), Error);
}
