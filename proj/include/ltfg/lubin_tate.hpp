#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ltfg/padic.hpp"
#include "ltfg/series.hpp"
#include "ltfg/unramified.hpp"

namespace ltfg {

// Coprime positive heights (h1, h2); the formal group has height h1 + h2.
struct HeightPair {
  int h1 = 1;
  int h2 = 1;
  int total() const { return h1 + h2; }
};

// Throws Errc::invalid_argument unless h1, h2 >= 1 and gcd(h1, h2) = 1.
HeightPair make_heights(int h1, int h2);

// A 2-dimensional formal group over Z_p given through its logarithm.
// Variables of group_law are (x1, x2, y1, y2).
struct LubinTateGroup {
  int prime = 2;
  HeightPair heights;
  int degree = 1;
  int precision = kDefaultPrecision;
  SeriesPair logarithm;
  SeriesPair exponential;
  SeriesPair group_law;
};

// The closed-form logarithm
//   L1 = x1 + sum_{k>=1} p^-2k x1^(p^(k h)) + sum_{k>=0} p^-(2k+1) x2^(p^(h1 + k h))
//   L2 = x2 + sum_{k>=1} p^-2k x2^(p^(k h)) + sum_{k>=0} p^-(2k+1) x1^(p^(h2 + k h))
// with h = h1 + h2, truncated at total degree `degree`.
SeriesPair build_logarithm(int p, HeightPair heights, int degree, int precision = kDefaultPrecision);

// One offending coefficient found by a verifier.
struct TermViolation {
  int component = 0;
  Monomial monomial;
  std::string check;
  PadicScalar value;  // the residual or offending coefficient
};

// Terms of L1 - x1 - p^-1 L2(X^(p^h1)) and L2 - x2 - p^-1 L1(X^(p^h2)).
// Empty when the functional equation holds through the truncation degree.
std::vector<TermViolation> verify_logarithm_recursion(const SeriesPair& logarithm, int p, HeightPair heights);

// F(X, Y) = L^-1(L(X) + L(Y)).
LubinTateGroup build_group(int p, HeightPair heights, int degree, int precision = kDefaultPrecision);
// Same construction from an arbitrary logarithm with identity Jacobian.
LubinTateGroup build_group_from_logarithm(int p, HeightPair heights, const SeriesPair& logarithm);

// [a]_F(X) = L^-1(a L(X)); a must be integral.
SeriesPair multiplication(const PadicScalar& a, const LubinTateGroup& group);
SeriesPair multiplication(long a, const LubinTateGroup& group);

// Checks on a candidate multiplication-by-p: linear part (p x1, p x2) and
// reduction (x2^(p^h1), x1^(p^h2)) modulo p, coefficient by coefficient.
std::vector<TermViolation> check_p_congruences(const SeriesPair& candidate, int p, HeightPair heights);

struct CongruenceReport {
  std::vector<TermViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Runs check_p_congruences on [p]_F and additionally L([p]_F(X)) = p L(X),
// reporting at most one violation per coefficient.
CongruenceReport verify_p_congruences(const LubinTateGroup& group);
// Same checks against a caller-supplied candidate for [p]_F.
CongruenceReport verify_p_congruences(const LubinTateGroup& group, const SeriesPair& candidate);

struct EndomorphismCheck {
  bool holds = true;
  std::optional<TermViolation> first_violation;  // lowest monomial where f(F) != F(f, f)
};

// f(F(X, Y)) == F(f(X), f(Y)) up to total degree `degree`.
EndomorphismCheck is_endomorphism(const SeriesPair& f, const LubinTateGroup& group, int degree);

struct GammaEndomorphism {
  UnramifiedElement gamma1;  // multiplier of x1
  UnramifiedElement gamma2;  // multiplier of x2, gamma^(p^h2)
  bool verified = false;
  int checked_terms = 0;
  std::string mismatch;  // empty when verified
};

// The diagonal map (gamma x1, gamma^(p^h2) x2) for a (p^h - 1)-th root of
// unity gamma, with a coefficientwise check of L({gamma}X) = M_gamma L(X).
GammaEndomorphism gamma_endomorphism(const UnramifiedElement& gamma, const LubinTateGroup& group);

struct HeightResult {
  std::optional<int> height;  // set only for the monomial-Frobenius shape
  std::string diagnostic;
};

// Recognises [p]_F = (x2^(p^h1), x1^(p^h2)) mod p and reports h1 + h2;
// anything else is reported as not monomial-Frobenius.
HeightResult height_of(const LubinTateGroup& group);

// min over monomials of (coefficient valuation + total degree) of
// p^-m [p^m]_F - p^-n [p^n]_F; nullopt when the difference vanishes.
std::optional<int> cauchy_gap(const LubinTateGroup& group, int m, int n);

// Group-law axioms, each returning the first offending term if any.
std::optional<TermViolation> check_identity(const LubinTateGroup& group);
std::optional<TermViolation> check_commutativity(const LubinTateGroup& group);
std::optional<TermViolation> check_associativity(const LubinTateGroup& group, int degree);
std::optional<TermViolation> check_additivity(const LubinTateGroup& group);
std::optional<TermViolation> check_integrality(const SeriesPair& f, const std::string& label);

// Lowest monomial (component 0 before 1 on ties) where a and b differ.
std::optional<TermViolation> first_difference(const SeriesPair& a, const SeriesPair& b, const std::string& label);

}  // namespace ltfg
