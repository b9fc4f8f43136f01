#pragma once

#include <array>
#include <string>
#include <vector>

#include "ltfg/copolygon.hpp"
#include "ltfg/lubin_tate.hpp"
#include "ltfg/rational.hpp"
#include "ltfg/series.hpp"

namespace ltfg {

// (p x1 + x2^(p^h1), p x2 + x1^(p^h2)); throws unless D >= p^max(h1, h2).
SeriesPair dynamical_system(int p, HeightPair heights, int degree, int precision = kDefaultPrecision);

// Copolygons of the two components, built from their supports so that
// exponents beyond the series range are allowed.
std::array<Copolygon, 2> dynamical_copolygons(int p, HeightPair heights);

// Valuations (v(xi), v(eta)) of the level-n torsion points.
struct ValuationProfile {
  int level = 1;
  Rational v_xi;
  Rational v_eta;
  friend bool operator==(const ValuationProfile&, const ValuationProfile&) = default;
};

// "in" for odd p with h1, h2 >= 2, otherwise "extrapolated".
std::string hypothesis_status(int p, HeightPair heights);

// n = 2m:   v(xi) = (p^h2 + 1) / (p^(hm - h1) (p^h - 1)),  v(eta) = (p^h1 + 1) / (p^(hm - h2) (p^h - 1))
// n = 2m+1: v(xi) = (p^h1 + 1) / (p^(hm) (p^h - 1)),       v(eta) = (p^h2 + 1) / (p^(hm) (p^h - 1))
ValuationProfile torsion_valuations(int p, HeightPair heights, int n);

// Level 1 from the tie loci of the two components of the dynamical system,
// then each level from the previous one by solving
//   min(1 + x, p^h1 y) = v(xi'),  min(1 + y, p^h2 x) = v(eta')
// on its unique strict branch. Ties and multiple solutions raise
// Errc::ambiguous_branch.
ValuationProfile torsion_valuations_via_minplus(int p, HeightPair heights, int n);
// One step of that iteration: the level n + 1 profile from the level n one.
ValuationProfile minplus_preimage(int p, HeightPair heights, const ValuationProfile& previous);

// (zeta_h2 zeta_h^(p^h1) p^a, zeta_h p^b), where zeta_h = exp(2 pi i k / (p^h - 1))
// with k = zeta_h_exponent and zeta_h2 = exp(pi i (2 l + 1) / p^h2) with
// l = zeta_h2_index, a p^h2-th root of -1.
struct SymbolicPoint {
  long zeta_h_exponent = 0;
  long zeta_h2_index = 0;
  Rational p_power_xi;
  Rational p_power_eta;
  // p^h2 a = 1 + b and 1 + a = p^h1 b: both torsion equations balance in valuation.
  bool valuations_balance = false;
  // Both torsion equations cancel exactly, which needs zeta_h2 = -1.
  bool cancels_exactly = false;
};

struct PTorsionReport {
  int prime = 2;
  HeightPair heights;
  Rational a;  // (p^h1 + 1) / (p^h - 1)
  Rational b;  // (p^h2 + 1) / (p^h - 1)
  bool xi_equation_balanced = false;   // 1 + a = p^h1 b
  bool eta_equation_balanced = false;  // p^h2 a = 1 + b
  // The alternative exponent (p^h1 - 1) / (p^h - 1) and whether it would balance.
  Rational minus_one_exponent;
  bool minus_one_exponent_balances = false;
  mpz_class family_size;              // (p^h - 1) p^h2 symbolic points
  std::optional<mpz_class> exact_members;  // points cancelling exactly; unknown for p = 2
  mpz_class total_count;              // p^(h1 + h2), including the zero point
  std::vector<std::string> notes;

  // First `limit` members of the family in (zeta_h_exponent, zeta_h2_index) order.
  std::vector<SymbolicPoint> enumerate(std::size_t limit) const;
};

PTorsionReport p_torsion_points(int p, HeightPair heights);

// p^(h1 + h2), the order of the p-torsion including zero.
mpz_class count_p_torsion(int p, HeightPair heights);

// gcd((p^s - 1) / 2, (p^t + 1) / 2) for odd p.
mpz_class gcd_lemma_value(int p, int s, int t);
// Same gcd compared with 1; throws Errc::precondition_failed unless p is an
// odd prime, s, t >= 2, s odd and gcd(s, t) = 1.
bool gcd_lemma(int p, int s, int t);

struct RamificationReport {
  int prime = 2;
  HeightPair heights;
  bool claim = false;  // false when a hypothesis fails; see diagnostic
  mpz_class degree;    // (p^h - 1) / 2
  bool totally_ramified = false;
  std::array<mpz_class, 2> witness_gcd;  // gcd(degree, (p^h_i + 1) / 2)
  std::string diagnostic;
};

RamificationReport ramification_report(int p, HeightPair heights);

}  // namespace ltfg
