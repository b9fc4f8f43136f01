#include "ltfg/torsion.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ltfg/copolygon.hpp"
#include "ltfg/error.hpp"

namespace ltfg {

namespace {

Rational rat(const mpz_class& n) { return Rational(n, mpz_class(1)); }

void require_prime(int p) {
  if (!is_prime(p)) throw Error(Errc::invalid_argument, "p must be prime, got " + std::to_string(p));
}

struct Candidate {
  Rational x;
  Rational y;
};

// Solves min(1 + x, q1 y) = a, min(1 + y, q2 x) = b over x, y > 0 branch by
// branch and returns the unique solution on which both minima are strict.
Candidate solve_level(const Rational& a, const Rational& b, const Rational& q1, const Rational& q2) {
  const Rational one(1);
  std::vector<Candidate> strict;
  for (int branch = 0; branch < 4; ++branch) {
    const bool first_linear = branch & 1;   // 1 + x = a
    const bool second_linear = branch & 2;  // 1 + y = b
    if (first_linear != second_linear) {
      // Both equations pin the same coordinate and leave the other free.
      const Rational x = first_linear ? a - one : b / q2;
      const Rational y = second_linear ? b - one : a / q1;
      const bool pinned_twice = first_linear ? (x.sign() > 0 && q2 * x == b) : (y.sign() > 0 && q1 * y == a);
      if (pinned_twice)
        throw Error(Errc::ambiguous_branch, "a mixed branch admits a continuum of solutions");
      continue;
    }
    const Rational x = first_linear ? a - one : b / q2;
    const Rational y = first_linear ? b - one : a / q1;
    if (x.sign() <= 0 || y.sign() <= 0) continue;
    const Rational e1 = (one + x) - q1 * y;  // > 0 when the Frobenius term is the minimum
    const Rational e2 = (one + y) - q2 * x;
    const bool ok1 = first_linear ? e1.sign() <= 0 : e1.sign() >= 0;
    const bool ok2 = second_linear ? e2.sign() <= 0 : e2.sign() >= 0;
    if (!ok1 || !ok2) continue;
    if (e1.sign() == 0 || e2.sign() == 0)
      throw Error(Errc::ambiguous_branch, "both arguments of a min agree at (" + x.to_string() + ", " +
                                              y.to_string() + "); the valuation is not determined");
    strict.push_back({x, y});
  }
  if (strict.size() != 1)
    throw Error(Errc::ambiguous_branch, std::to_string(strict.size()) + " branches solve the min-plus system");
  return strict.front();
}

}  // namespace

SeriesPair dynamical_system(int p, HeightPair heights, int degree, int precision) {
  require_prime(p);
  heights = make_heights(heights.h1, heights.h2);
  const mpz_class need = ipow(p, std::max(heights.h1, heights.h2));
  if (need > degree)
    throw Error(Errc::precondition_failed,
                "D = " + std::to_string(degree) + " cannot hold the Frobenius monomials, need D >= " + need.get_str());
  const PadicScalar ps = PadicScalar::from_integer(p, p, precision);
  const PadicScalar one = PadicScalar::one(p, precision);
  Series f1(p, 2, degree, precision);
  Series f2(p, 2, degree, precision);
  f1.add_term(Monomial::variable(0), ps);
  f1.add_term(Monomial::variable(1, static_cast<int>(ipow(p, heights.h1).get_si())), one);
  f2.add_term(Monomial::variable(1), ps);
  f2.add_term(Monomial::variable(0, static_cast<int>(ipow(p, heights.h2).get_si())), one);
  return {std::move(f1), std::move(f2)};
}

std::array<Copolygon, 2> dynamical_copolygons(int p, HeightPair heights) {
  require_prime(p);
  heights = make_heights(heights.h1, heights.h2);
  if (std::max(heights.h1, heights.h2) * std::log2(p) > 30)
    throw Error(Errc::invalid_argument, "Frobenius exponent too large");
  const int e1 = static_cast<int>(ipow(p, heights.h1).get_si());
  const int e2 = static_cast<int>(ipow(p, heights.h2).get_si());
  return {Copolygon({{1, 0, Rational(1)}, {0, e1, Rational(0)}}), Copolygon({{0, 1, Rational(1)}, {e2, 0, Rational(0)}})};
}

std::string hypothesis_status(int p, HeightPair heights) {
  return p % 2 == 1 && heights.h1 >= 2 && heights.h2 >= 2 ? "in" : "extrapolated";
}

ValuationProfile torsion_valuations(int p, HeightPair heights, int n) {
  require_prime(p);
  heights = make_heights(heights.h1, heights.h2);
  if (n < 1) throw Error(Errc::invalid_argument, "torsion level must be at least 1");
  const int h = heights.total();
  const mpz_class ph1 = ipow(p, heights.h1) + 1;
  const mpz_class ph2 = ipow(p, heights.h2) + 1;
  const mpz_class unit_den = ipow(p, h) - 1;
  const int m = n / 2;
  if (n % 2 == 0) {
    return {n, Rational(ph2, ipow(p, h * m - heights.h1) * unit_den),
            Rational(ph1, ipow(p, h * m - heights.h2) * unit_den)};
  }
  const mpz_class den = ipow(p, h * m) * unit_den;
  return {n, Rational(ph1, den), Rational(ph2, den)};
}

ValuationProfile torsion_valuations_via_minplus(int p, HeightPair heights, int n) {
  require_prime(p);
  heights = make_heights(heights.h1, heights.h2);
  if (n < 1) throw Error(Errc::invalid_argument, "torsion level must be at least 1");
  const auto [c1, c2] = dynamical_copolygons(p, heights);
  std::vector<Point> level1;
  for (const auto& pt : intersect_tie_loci(c1, c2))
    if (pt.first.sign() > 0 && pt.second.sign() > 0) level1.push_back(pt);
  if (level1.size() != 1)
    throw Error(Errc::ambiguous_branch,
                std::to_string(level1.size()) + " positive tie-locus intersections at level 1, expected one");

  ValuationProfile out{1, level1.front().first, level1.front().second};
  while (out.level < n) out = minplus_preimage(p, heights, out);
  return out;
}

ValuationProfile minplus_preimage(int p, HeightPair heights, const ValuationProfile& previous) {
  require_prime(p);
  const Candidate next =
      solve_level(previous.v_xi, previous.v_eta, rat(ipow(p, heights.h1)), rat(ipow(p, heights.h2)));
  return {previous.level + 1, next.x, next.y};
}

std::vector<SymbolicPoint> PTorsionReport::enumerate(std::size_t limit) const {
  std::vector<SymbolicPoint> out;
  const long units = ipow(prime, heights.total()).get_si() - 1;
  const long roots = ipow(prime, heights.h2).get_si();
  const bool balanced = xi_equation_balanced && eta_equation_balanced;
  // zeta_h2 = -1 means 2 l + 1 = p^h2, possible only for odd p.
  const long minus_one_index = prime % 2 == 1 ? (roots - 1) / 2 : -1;
  for (long k = 0; k < units && out.size() < limit; ++k)
    for (long l = 0; l < roots && out.size() < limit; ++l)
      out.push_back({k, l, a, b, balanced, balanced && l == minus_one_index});
  return out;
}

PTorsionReport p_torsion_points(int p, HeightPair heights) {
  require_prime(p);
  heights = make_heights(heights.h1, heights.h2);
  const mpz_class units = ipow(p, heights.total()) - 1;
  const Rational q1 = rat(ipow(p, heights.h1));
  const Rational q2 = rat(ipow(p, heights.h2));
  PTorsionReport r;
  r.prime = p;
  r.heights = heights;
  r.a = Rational(ipow(p, heights.h1) + 1, units);
  r.b = Rational(ipow(p, heights.h2) + 1, units);
  r.xi_equation_balanced = Rational(1) + r.a == q1 * r.b;
  r.eta_equation_balanced = q2 * r.a == Rational(1) + r.b;
  r.minus_one_exponent = Rational(ipow(p, heights.h1) - 1, units);
  r.minus_one_exponent_balances = q2 * r.minus_one_exponent == Rational(1) + r.b;
  r.family_size = units * ipow(p, heights.h2);
  r.total_count = count_p_torsion(p, heights);
  r.notes.push_back("xi exponent uses p^h1 + 1; the form with p^h1 - 1 " +
                    std::string(r.minus_one_exponent_balances ? "also balances" : "fails p^h2 a = 1 + b"));
  r.notes.push_back("the family has (p^h - 1) p^h2 = " + r.family_size.get_str() +
                    " symbolic members against " + mpz_class(r.total_count - 1).get_str() + " nonzero torsion points");
  if (p % 2 == 1) {
    r.exact_members = units;
    r.notes.push_back("exact cancellation forces zeta_h2 = -1, leaving p^h - 1 members");
  } else {
    r.notes.push_back("for p = 2 no p^h2-th root of -1 equals -1; exact member count left open");
  }
  return r;
}

mpz_class count_p_torsion(int p, HeightPair heights) {
  require_prime(p);
  heights = make_heights(heights.h1, heights.h2);
  return ipow(p, heights.total());
}

mpz_class gcd_lemma_value(int p, int s, int t) {
  if (!is_prime(p) || p == 2) throw Error(Errc::invalid_argument, "gcd lemma needs an odd prime");
  if (s < 1 || t < 1) throw Error(Errc::invalid_argument, "exponents must be positive");
  return gcd(mpz_class((ipow(p, s) - 1) / 2), mpz_class((ipow(p, t) + 1) / 2));
}

bool gcd_lemma(int p, int s, int t) {
  if (!is_prime(p) || p == 2) throw Error(Errc::precondition_failed, "gcd lemma needs an odd prime p");
  if (s < 2 || t < 2) throw Error(Errc::precondition_failed, "gcd lemma needs s, t >= 2");
  if (s % 2 == 0) throw Error(Errc::precondition_failed, "gcd lemma needs s odd");
  if (std::gcd(s, t) != 1) throw Error(Errc::precondition_failed, "gcd lemma needs gcd(s, t) = 1");
  return gcd_lemma_value(p, s, t) == 1;
}

RamificationReport ramification_report(int p, HeightPair heights) {
  require_prime(p);
  heights = make_heights(heights.h1, heights.h2);
  const int h = heights.total();
  RamificationReport r;
  r.prime = p;
  r.heights = heights;
  if (p == 2) {
    r.diagnostic = "p must be odd";
    return r;
  }
  if (h % 2 == 0) {
    r.diagnostic = "h = h1 + h2 must be odd";
    return r;
  }
  if (heights.h1 < 2 || heights.h2 < 2) {
    r.diagnostic = "h1 and h2 must both be at least 2";
    return r;
  }
  r.claim = true;
  r.degree = (ipow(p, h) - 1) / 2;
  r.witness_gcd[0] = gcd_lemma_value(p, h, heights.h1);
  r.witness_gcd[1] = gcd_lemma_value(p, h, heights.h2);
  r.totally_ramified = r.witness_gcd[0] == 1 && r.witness_gcd[1] == 1;
  r.diagnostic = r.totally_ramified ? "single-segment Newton polygon" : "gcd witness failed";
  return r;
}

}  // namespace ltfg
