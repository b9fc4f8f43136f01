#pragma once

// Dense exact-rational polynomial maps, used as an independent reference
// for the truncated p-adic series code.

#include <array>
#include <map>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "ltfg/padic.hpp"
#include "ltfg/series.hpp"

namespace oracle {

using Exps = std::array<int, 6>;

struct Poly {
  int nvars = 2;
  int cap = 1;
  std::map<Exps, mpq_class> terms;

  static Poly variable(int nvars, int cap, int i) {
    Poly out{nvars, cap, {}};
    Exps e{};
    e[i] = 1;
    out.terms[e] = 1;
    return out;
  }
};

inline int degree(const Exps& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

inline void clean(Poly& a) {
  for (auto it = a.terms.begin(); it != a.terms.end();)
    it = (it->second == 0 || degree(it->first) > a.cap) ? a.terms.erase(it) : std::next(it);
}

inline Poly add(const Poly& a, const Poly& b, int sign = 1) {
  Poly out = a;
  for (const auto& [e, c] : b.terms) out.terms[e] += sign * c;
  clean(out);
  return out;
}

inline Poly scale(const Poly& a, const mpq_class& s) {
  Poly out = a;
  for (auto& [e, c] : out.terms) c *= s;
  clean(out);
  return out;
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out{a.nvars, a.cap, {}};
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      Exps e{};
      for (int i = 0; i < 6; ++i) e[i] = ea[i] + eb[i];
      if (degree(e) <= a.cap) out.terms[e] += ca * cb;
    }
  clean(out);
  return out;
}

inline Poly constant(int nvars, int cap, const mpq_class& c) {
  Poly out{nvars, cap, {}};
  out.terms[Exps{}] = c;
  clean(out);
  return out;
}

// outer(inner_0, ..., inner_{k-1}) by expanding every monomial.
inline Poly compose(const Poly& outer, const std::vector<Poly>& inner) {
  const int n = inner.front().nvars;
  const int cap = std::min(outer.cap, inner.front().cap);
  Poly out{n, cap, {}};
  for (const auto& [e, c] : outer.terms) {
    Poly term = constant(n, cap, c);
    for (int i = 0; i < outer.nvars; ++i)
      for (int k = 0; k < e[i]; ++k) term = mul(term, inner[i]);
    out = add(out, term);
  }
  return out;
}

inline ltfg::Series to_series(const Poly& a, int p, int precision) {
  ltfg::Series s(p, a.nvars, a.cap, precision);
  for (const auto& [e, c] : a.terms) {
    ltfg::Monomial m(std::span<const int>(e.data(), a.nvars));
    s.add_term(m, ltfg::PadicScalar::from_rational(p, ltfg::Rational(c), precision));
  }
  return s;
}

// Series and polynomial agree term by term (p-adic coefficients compared
// with the exact rationals at the series' precision).
inline bool same(const ltfg::Series& s, const Poly& a) {
  const ltfg::Series ref = to_series(a, s.prime(), s.precision());
  if (ref.size() != s.size()) return false;
  for (const auto& [m, c] : ref.terms())
    if (!(s.coefficient(m) == c)) return false;
  return true;
}

// Random polynomial with coefficients num / p^k, |num| <= 9, degree in [min_deg, cap].
inline Poly random_poly(std::mt19937_64& rng, int p, int nvars, int cap, int min_deg, int nterms, int max_neg_val) {
  Poly out{nvars, cap, {}};
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> var(0, nvars - 1);
  std::uniform_int_distribution<int> deg(min_deg, cap);
  std::uniform_int_distribution<int> neg(0, max_neg_val);
  for (int t = 0; t < nterms; ++t) {
    Exps e{};
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) ++e[var(rng)];
    mpq_class c(num(rng));
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), p, neg(rng));
    c /= den;
    c.canonicalize();
    out.terms[e] += c;
  }
  clean(out);
  return out;
}

}  // namespace oracle
