#include "ltfg/lubin_tate.hpp"

#include <array>
#include <numeric>
#include <set>

#include "ltfg/error.hpp"

namespace ltfg {

namespace {

constexpr std::array<int, 2> kXSlot{0, 1};
constexpr std::array<int, 2> kYSlot{2, 3};

// p^e as a long, or -1 once it exceeds `limit`.
long bounded_power(long p, long e, long limit) {
  long r = 1;
  for (long i = 0; i < e; ++i) {
    if (r > limit / p) return -1;
    r *= p;
  }
  return r;
}

void check_group_parameters(int p, int degree, int precision) {
  if (!is_prime(p)) throw Error(Errc::invalid_argument, "p must be prime, got " + std::to_string(p));
  if (degree < 1) throw Error(Errc::invalid_argument, "truncation degree must be at least 1");
  if (precision < 1) throw Error(Errc::invalid_argument, "precision must be positive");
}

std::optional<TermViolation> first_nonzero(const Series& diff, int component, const std::string& label) {
  if (diff.is_zero()) return std::nullopt;
  const auto& [m, c] = *diff.terms().begin();
  return TermViolation{component, m, label, c};
}

std::optional<TermViolation> earlier(std::optional<TermViolation> a, std::optional<TermViolation> b) {
  if (!a) return b;
  if (!b) return a;
  return b->monomial < a->monomial ? b : a;
}

}  // namespace

HeightPair make_heights(int h1, int h2) {
  if (h1 < 1 || h2 < 1) throw Error(Errc::invalid_argument, "heights must be positive");
  if (std::gcd(h1, h2) != 1)
    throw Error(Errc::invalid_argument,
                "heights must be coprime, gcd(" + std::to_string(h1) + ", " + std::to_string(h2) + ") != 1");
  return {h1, h2};
}

SeriesPair build_logarithm(int p, HeightPair heights, int degree, int precision) {
  check_group_parameters(p, degree, precision);
  heights = make_heights(heights.h1, heights.h2);
  const int h = heights.total();
  std::array<Series, 2> comps{Series::variable(p, 2, degree, 0, precision),
                              Series::variable(p, 2, degree, 1, precision)};
  for (int c = 0; c < 2; ++c) {
    const int self = c;
    const int other = 1 - c;
    const int offset = c == 0 ? heights.h1 : heights.h2;
    // p^-2k x_self^(p^(k h)), k >= 1
    for (long k = 1;; ++k) {
      const long e = bounded_power(p, k * h, degree);
      if (e < 0) break;
      comps[c].add_term(Monomial::variable(self, static_cast<int>(e)),
                        PadicScalar::power_of_p(p, static_cast<int>(-2 * k), precision));
    }
    // p^-(2k+1) x_other^(p^(offset + k h)), k >= 0
    for (long k = 0;; ++k) {
      const long e = bounded_power(p, offset + k * h, degree);
      if (e < 0) break;
      comps[c].add_term(Monomial::variable(other, static_cast<int>(e)),
                        PadicScalar::power_of_p(p, static_cast<int>(-(2 * k + 1)), precision));
    }
  }
  return {std::move(comps[0]), std::move(comps[1])};
}

std::vector<TermViolation> verify_logarithm_recursion(const SeriesPair& logarithm, int p, HeightPair heights) {
  const int cap = logarithm.degree_cap();
  const int prec = logarithm.precision();
  const PadicScalar inv_p = PadicScalar::power_of_p(p, -1, prec);
  std::vector<TermViolation> out;
  for (int c = 0; c < 2; ++c) {
    const int h = c == 0 ? heights.h1 : heights.h2;
    const long q = bounded_power(p, h, cap);
    Series residual = logarithm[c] - Series::variable(p, 2, cap, c, prec);
    if (q > 0) residual -= inv_p * logarithm[1 - c].frobenius_substitution(static_cast<int>(q));
    for (const auto& [m, v] : residual.terms()) out.push_back({c, m, "functional_equation", v});
  }
  return out;
}

LubinTateGroup build_group_from_logarithm(int p, HeightPair heights, const SeriesPair& logarithm) {
  if (logarithm.nvars() != 2) throw Error(Errc::shape_mismatch, "logarithm must be a pair in two variables");
  const int cap = logarithm.degree_cap();
  SeriesPair exponential = invert_pair(logarithm);
  const SeriesPair sum = logarithm.remap(4, kXSlot) + logarithm.remap(4, kYSlot);
  SeriesPair group_law = compose(exponential, std::span<const Series>(std::array<Series, 2>{sum.first(), sum.second()}));
  return LubinTateGroup{p, heights, cap, logarithm.precision(), logarithm, std::move(exponential), std::move(group_law)};
}

LubinTateGroup build_group(int p, HeightPair heights, int degree, int precision) {
  return build_group_from_logarithm(p, make_heights(heights.h1, heights.h2),
                                    build_logarithm(p, heights, degree, precision));
}

SeriesPair multiplication(const PadicScalar& a, const LubinTateGroup& group) {
  if (!a.is_zero() && a.valuation() < 0)
    throw Error(Errc::invalid_argument, "multiplication needs an integral scalar, got valuation " +
                                            std::to_string(a.valuation()));
  if (a.prime() != group.prime) throw Error(Errc::prime_mismatch, "scalar prime differs from the group prime");
  if (a.is_zero()) {
    const Series z(group.prime, 2, group.degree, group.precision);
    return {z, z};
  }
  return compose(group.exponential, a * group.logarithm);
}

SeriesPair multiplication(long a, const LubinTateGroup& group) {
  return multiplication(PadicScalar::from_integer(group.prime, a, group.precision), group);
}

std::vector<TermViolation> check_p_congruences(const SeriesPair& candidate, int p, HeightPair heights) {
  std::vector<TermViolation> out;
  const int cap = candidate.degree_cap();
  const int prec = candidate.precision();
  const PadicScalar p_scalar = PadicScalar::from_integer(p, p, prec);
  for (int c = 0; c < 2; ++c) {
    const Series& s = candidate[c];
    // Linear part must be exactly p x_c.
    const Series linear = s.homogeneous_part(1) - p_scalar * Series::variable(p, 2, cap, c, prec).homogeneous_part(1);
    for (const auto& [m, v] : linear.terms()) out.push_back({c, m, "linear_part", v});
    if (const auto k = s.coefficient(Monomial{}); !k.is_zero()) out.push_back({c, Monomial{}, "constant_term", k});

    // Modulo p only the Frobenius monomial survives, with coefficient 1.
    const int other = 1 - c;
    const long e = bounded_power(p, c == 0 ? heights.h1 : heights.h2, cap);
    const std::optional<Monomial> frob =
        e > 0 ? std::optional<Monomial>(Monomial::variable(other, static_cast<int>(e))) : std::nullopt;
    for (const auto& [m, v] : s.terms()) {
      if (frob && m == *frob) continue;
      if (v.valuation() < 1) out.push_back({c, m, "mod_p", v});
    }
    if (frob) {
      const PadicScalar v = s.coefficient(*frob);
      const PadicScalar diff = v - PadicScalar::one(p, prec);
      if (!diff.is_zero() && diff.valuation() < 1) out.push_back({c, *frob, "mod_p_frobenius", v});
    }
  }
  return out;
}

CongruenceReport verify_p_congruences(const LubinTateGroup& group, const SeriesPair& candidate) {
  CongruenceReport report{check_p_congruences(candidate, group.prime, group.heights)};
  const PadicScalar p_scalar = PadicScalar::from_integer(group.prime, group.prime, group.precision);
  const SeriesPair lhs = compose(group.logarithm, candidate);
  const SeriesPair rhs = p_scalar * group.logarithm;
  const SeriesPair diff = lhs - rhs;
  // One entry per coefficient: the shape checks take precedence.
  std::set<std::pair<int, Monomial>> flagged;
  for (const auto& v : report.violations) flagged.emplace(v.component, v.monomial);
  for (int c = 0; c < 2; ++c)
    for (const auto& [m, v] : diff[c].terms())
      if (!flagged.contains({c, m})) report.violations.push_back({c, m, "log_linearity", v});
  return report;
}

CongruenceReport verify_p_congruences(const LubinTateGroup& group) {
  return verify_p_congruences(group, multiplication(group.prime, group));
}

std::optional<TermViolation> first_difference(const SeriesPair& a, const SeriesPair& b, const std::string& label) {
  const int d = std::min(a.degree_cap(), b.degree_cap());
  const SeriesPair diff = a.truncated(d) - b.truncated(d);
  return earlier(first_nonzero(diff.first(), 0, label), first_nonzero(diff.second(), 1, label));
}

EndomorphismCheck is_endomorphism(const SeriesPair& f, const LubinTateGroup& group, int degree) {
  if (f.nvars() != 2) throw Error(Errc::shape_mismatch, "endomorphism candidate must be a pair in two variables");
  for (int c = 0; c < 2; ++c)
    if (!f[c].coefficient(Monomial{}).is_zero())
      throw Error(Errc::nonzero_constant_term, "endomorphism candidate has a nonzero constant term");
  const int d = std::min({degree, group.degree, f.degree_cap()});
  const SeriesPair ft = f.truncated(d);
  const SeriesPair law = group.group_law.truncated(d);
  const SeriesPair lhs = compose(ft, std::span<const Series>(std::array<Series, 2>{law.first(), law.second()}));
  const SeriesPair fx = ft.remap(4, kXSlot);
  const SeriesPair fy = ft.remap(4, kYSlot);
  const std::array<Series, 4> inner{fx.first(), fx.second(), fy.first(), fy.second()};
  const SeriesPair rhs = compose(law, std::span<const Series>(inner));
  EndomorphismCheck out;
  out.first_violation = first_difference(lhs, rhs, "homomorphism");
  out.holds = !out.first_violation.has_value();
  return out;
}

GammaEndomorphism gamma_endomorphism(const UnramifiedElement& gamma, const LubinTateGroup& group) {
  const UnramifiedRing& ring = gamma.ring();
  const int p = group.prime;
  const int h = group.heights.total();
  if (ring.prime() != p) throw Error(Errc::prime_mismatch, "unramified ring prime differs from the group prime");
  if (ring.degree() != h)
    throw Error(Errc::precondition_failed, "unramified degree must equal h1 + h2 = " + std::to_string(h));
  if (!gamma.pow(ipow(p, h) - 1).is_one())
    throw Error(Errc::precondition_failed, "gamma is not a (p^h - 1)-th root of unity");

  GammaEndomorphism out{gamma, gamma.pow(ipow(p, group.heights.h2)), true, 0, {}};
  const std::array<const UnramifiedElement*, 2> multiplier{&out.gamma1, &out.gamma2};
  for (int c = 0; c < 2 && out.verified; ++c) {
    for (const auto& [m, coeff] : group.logarithm[c].terms()) {
      // Coefficient of m in L_c({gamma}X) against that of gamma_c L_c(X); both
      // carry the same p-power, so compare the unit parts in the ring.
      const UnramifiedElement unit = ring.from_integer(coeff.unit());
      const UnramifiedElement lhs = unit * out.gamma1.pow(m.exponent(0)) * out.gamma2.pow(m.exponent(1));
      const UnramifiedElement rhs = unit * *multiplier[c];
      ++out.checked_terms;
      if (!(lhs == rhs)) {
        out.verified = false;
        out.mismatch = "component " + std::to_string(c + 1) + " monomial (" + std::to_string(m.exponent(0)) + "," +
                       std::to_string(m.exponent(1)) + ")";
        break;
      }
    }
  }
  return out;
}

HeightResult height_of(const LubinTateGroup& group) {
  const int p = group.prime;
  const SeriesPair mult_p = multiplication(p, group);
  const long e1 = bounded_power(p, group.heights.h1, group.degree);
  const long e2 = bounded_power(p, group.heights.h2, group.degree);

  bool reduction_zero = true;
  for (int c = 0; c < 2; ++c)
    for (const auto& [m, v] : mult_p[c].terms()) {
      if (v.valuation() < 0) return {std::nullopt, "not monomial-Frobenius: [p]_F is not integral"};
      if (v.valuation() == 0) reduction_zero = false;
    }
  if (reduction_zero) return {std::nullopt, "not monomial-Frobenius: [p]_F vanishes modulo p"};
  if (e1 < 0 || e2 < 0)
    return {std::nullopt, "not monomial-Frobenius: truncation degree too small to observe the Frobenius monomials"};
  if (!check_p_congruences(mult_p, p, group.heights).empty())
    return {std::nullopt, "not monomial-Frobenius: reduction modulo p has another shape"};
  return {group.heights.total(), "monomial-Frobenius"};
}

std::optional<int> cauchy_gap(const LubinTateGroup& group, int m, int n) {
  if (n < 1 || m < n) throw Error(Errc::invalid_argument, "cauchy_gap needs m >= n >= 1");
  if (group.degree < 2)
    throw Error(Errc::precondition_failed, "truncation degree too small to contain any nonlinear term");
  if (m == n) return std::nullopt;
  const int p = group.prime;
  auto scaled = [&](int k) {
    const PadicScalar pk = PadicScalar::power_of_p(p, k, group.precision);
    return PadicScalar::power_of_p(p, -k, group.precision) * multiplication(pk, group);
  };
  const SeriesPair diff = scaled(m) - scaled(n);
  std::optional<int> best;
  for (int c = 0; c < 2; ++c)
    for (const auto& [mono, v] : diff[c].terms()) {
      const int size = v.valuation() + mono.degree();
      if (!best || size < *best) best = size;
    }
  return best;
}

std::optional<TermViolation> check_identity(const LubinTateGroup& group) {
  const int cap = group.group_law.degree_cap();
  const SeriesPair id_x = SeriesPair::identity(group.prime, cap, group.precision).remap(4, kXSlot);
  const SeriesPair id_y = SeriesPair::identity(group.prime, cap, group.precision).remap(4, kYSlot);
  const auto& law = group.group_law;
  const SeriesPair at_y0(law.first().set_variables_to_zero(kYSlot), law.second().set_variables_to_zero(kYSlot));
  const SeriesPair at_x0(law.first().set_variables_to_zero(kXSlot), law.second().set_variables_to_zero(kXSlot));
  return earlier(first_difference(at_y0, id_x, "identity"), first_difference(at_x0, id_y, "identity"));
}

std::optional<TermViolation> check_commutativity(const LubinTateGroup& group) {
  constexpr std::array<int, 4> swap{2, 3, 0, 1};
  return first_difference(group.group_law, group.group_law.remap(4, swap), "commutativity");
}

std::optional<TermViolation> check_associativity(const LubinTateGroup& group, int degree) {
  const SeriesPair law = group.group_law.truncated(degree);
  const int cap = law.degree_cap();
  constexpr std::array<int, 4> xy{0, 1, 2, 3};
  constexpr std::array<int, 4> yz{2, 3, 4, 5};
  const SeriesPair f_xy = law.remap(6, xy);
  const SeriesPair f_yz = law.remap(6, yz);
  auto var = [&](int i) { return Series::variable(group.prime, 6, cap, i, group.precision); };
  const std::array<Series, 4> left_inner{f_xy.first(), f_xy.second(), var(4), var(5)};
  const std::array<Series, 4> right_inner{var(0), var(1), f_yz.first(), f_yz.second()};
  const SeriesPair left = compose(law, std::span<const Series>(left_inner));
  const SeriesPair right = compose(law, std::span<const Series>(right_inner));
  return first_difference(left, right, "associativity");
}

std::optional<TermViolation> check_additivity(const LubinTateGroup& group) {
  const auto& law = group.group_law;
  const SeriesPair lhs = compose(group.logarithm, std::span<const Series>(std::array<Series, 2>{law.first(), law.second()}));
  const SeriesPair rhs = group.logarithm.remap(4, kXSlot) + group.logarithm.remap(4, kYSlot);
  return first_difference(lhs, rhs, "additivity");
}

std::optional<TermViolation> check_integrality(const SeriesPair& f, const std::string& label) {
  std::optional<TermViolation> out;
  for (int c = 0; c < 2; ++c)
    for (const auto& [m, v] : f[c].terms())
      if (v.valuation() < 0) {
        out = earlier(out, TermViolation{c, m, label, v});
        break;
      }
  return out;
}

}  // namespace ltfg
