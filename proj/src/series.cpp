#include "ltfg/series.hpp"

#include <algorithm>

#include "ltfg/error.hpp"

namespace ltfg {

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVariables))
    throw Error(Errc::shape_mismatch, "too many variables in monomial");
  std::uint64_t degree = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const int e = exponents[i];
    if (e < 0 || e > kMaxExponent) throw Error(Errc::invalid_argument, "monomial exponent out of range");
    key_ |= static_cast<std::uint64_t>(e) << field_shift(static_cast<int>(i));
    degree += static_cast<std::uint64_t>(e);
  }
  key_ |= degree << kDegreeShift;
}

Monomial Monomial::variable(int index, int power) {
  std::array<int, kMaxVariables> e{};
  e.at(index) = power;
  return Monomial(std::span<const int>(e));
}

std::array<int, kMaxVariables> Monomial::exponents() const {
  std::array<int, kMaxVariables> e{};
  for (int i = 0; i < kMaxVariables; ++i) e[i] = exponent(i);
  return e;
}

Series::Series(int prime, int nvars, int degree_cap, int precision)
    : prime_(prime), nvars_(nvars), degree_cap_(degree_cap), precision_(precision) {
  if (nvars < 1 || nvars > kMaxVariables) throw Error(Errc::shape_mismatch, "series variable count out of range");
  if (degree_cap < 0 || degree_cap > kMaxExponent)
    throw Error(Errc::invalid_argument, "truncation degree out of range");
  if (!is_prime(prime)) throw Error(Errc::invalid_argument, "p must be prime");
}

Series Series::variable(int prime, int nvars, int degree_cap, int index, int precision) {
  Series s(prime, nvars, degree_cap, precision);
  if (index < 0 || index >= nvars) throw Error(Errc::shape_mismatch, "variable index out of range");
  s.add_term(Monomial::variable(index), PadicScalar::one(prime, precision));
  return s;
}

Series Series::constant(const PadicScalar& c, int nvars, int degree_cap) {
  Series s(c.prime(), nvars, degree_cap, c.precision());
  s.add_term(Monomial{}, c);
  return s;
}

PadicScalar Series::coefficient(Monomial m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? PadicScalar::zero(prime_, precision_) : it->second;
}

void Series::add_term(Monomial m, const PadicScalar& c) {
  if (c.is_zero() || m.degree() > degree_cap_) return;
  if (c.prime() != prime_) throw Error(Errc::prime_mismatch, "coefficient prime differs from series prime");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void Series::set_term(Monomial m, const PadicScalar& c) {
  if (m.degree() > degree_cap_) return;
  if (c.is_zero())
    terms_.erase(m);
  else
    terms_.insert_or_assign(m, c);
}

namespace {

void require_same_shape(const Series& a, const Series& b) {
  if (a.prime() != b.prime()) throw Error(Errc::prime_mismatch, "series over different primes");
  if (a.nvars() != b.nvars() || a.degree_cap() != b.degree_cap())
    throw Error(Errc::shape_mismatch, "series shapes differ (variables or truncation degree)");
}

}  // namespace

Series Series::operator-() const {
  Series out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Series& Series::operator+=(const Series& b) {
  require_same_shape(*this, b);
  for (const auto& [m, c] : b.terms_) add_term(m, c);
  return *this;
}

Series& Series::operator-=(const Series& b) {
  require_same_shape(*this, b);
  for (const auto& [m, c] : b.terms_) add_term(m, -c);
  return *this;
}

Series operator+(const Series& a, const Series& b) {
  Series out = a;
  out += b;
  return out;
}

Series operator-(const Series& a, const Series& b) {
  Series out = a;
  out -= b;
  return out;
}

Series operator*(const Series& a, const Series& b) {
  require_same_shape(a, b);
  Series out(a.prime_, a.nvars_, a.degree_cap_, std::min(a.precision_, b.precision_));
  const int cap = a.degree_cap_;
  for (const auto& [ma, ca] : a.terms_) {
    const int room = cap - ma.degree();
    for (const auto& [mb, cb] : b.terms_) {
      // Terms are ordered by total degree first, so nothing later fits either.
      if (mb.degree() > room) break;
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

Series operator*(const PadicScalar& c, const Series& a) {
  Series out(a.prime_, a.nvars_, a.degree_cap_, a.precision_);
  if (c.is_zero()) return out;
  for (const auto& [m, x] : a.terms_) out.set_term(m, c * x);
  return out;
}

Series Series::truncated(int d) const {
  Series out(prime_, nvars_, std::min(d, degree_cap_), precision_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() > out.degree_cap_) break;
    out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

Series Series::with_cap(int d) const {
  Series out = truncated(d);
  out.degree_cap_ = d;
  return out;
}

Series Series::homogeneous_part(int d) const {
  Series out(prime_, nvars_, degree_cap_, precision_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

int Series::min_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

Series Series::remap(int target_nvars, std::span<const int> var_map) const {
  if (static_cast<int>(var_map.size()) != nvars_) throw Error(Errc::shape_mismatch, "variable map has wrong length");
  Series out(prime_, target_nvars, degree_cap_, precision_);
  for (const auto& [m, c] : terms_) {
    std::array<int, kMaxVariables> e{};
    for (int i = 0; i < nvars_; ++i) {
      const int target = var_map[i];
      if (target < 0 || target >= target_nvars) throw Error(Errc::shape_mismatch, "variable map target out of range");
      e[target] += m.exponent(i);
    }
    out.add_term(Monomial(std::span<const int>(e.data(), target_nvars)), c);
  }
  return out;
}

Series Series::frobenius_substitution(int q) const {
  if (q < 1) throw Error(Errc::invalid_argument, "substitution power must be positive");
  Series out(prime_, nvars_, degree_cap_, precision_);
  for (const auto& [m, c] : terms_) {
    if (static_cast<long>(m.degree()) * q > degree_cap_) continue;
    std::array<int, kMaxVariables> e = m.exponents();
    for (auto& x : e) x *= q;
    out.add_term(Monomial(std::span<const int>(e.data(), nvars_)), c);
  }
  return out;
}

Series Series::set_variables_to_zero(std::span<const int> vars) const {
  Series out(prime_, nvars_, degree_cap_, precision_);
  for (const auto& [m, c] : terms_) {
    const bool vanishes = std::any_of(vars.begin(), vars.end(), [&](int v) { return m.exponent(v) > 0; });
    if (!vanishes) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

bool Series::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.valuation() >= 0; });
}

bool equal_up_to_cap(const Series& a, const Series& b) {
  const int d = std::min(a.degree_cap(), b.degree_cap());
  return (a.truncated(d) - b.truncated(d)).is_zero();
}

SeriesPair::SeriesPair(Series first, Series second) : first_(std::move(first)), second_(std::move(second)) {
  if (first_.nvars() != second_.nvars() || first_.degree_cap() != second_.degree_cap() ||
      first_.prime() != second_.prime())
    throw Error(Errc::shape_mismatch, "pair components must share prime, variables and truncation degree");
}

SeriesPair SeriesPair::identity(int prime, int degree_cap, int precision) {
  return {Series::variable(prime, 2, degree_cap, 0, precision), Series::variable(prime, 2, degree_cap, 1, precision)};
}

SeriesPair operator+(const SeriesPair& a, const SeriesPair& b) { return {a.first_ + b.first_, a.second_ + b.second_}; }
SeriesPair operator-(const SeriesPair& a, const SeriesPair& b) { return {a.first_ - b.first_, a.second_ - b.second_}; }
SeriesPair operator*(const PadicScalar& c, const SeriesPair& a) { return {c * a.first_, c * a.second_}; }

bool equal_up_to_cap(const SeriesPair& a, const SeriesPair& b) {
  return equal_up_to_cap(a.first(), b.first()) && equal_up_to_cap(a.second(), b.second());
}

namespace {

// Lazily built powers inner[j]^e and products of them, keyed by the outer
// monomial prefix they evaluate.
class MonomialEvaluator {
 public:
  MonomialEvaluator(std::span<const Series> inner, int cap) : inner_(inner), cap_(cap), powers_(inner.size()) {}

  const Series& evaluate(Monomial m) {
    const auto e = m.exponents();
    std::array<int, kMaxVariables> prefix{};
    const Series* current = nullptr;
    for (std::size_t j = 0; j < inner_.size(); ++j) {
      if (e[j] == 0) continue;
      prefix[j] = e[j];
      const Monomial key(std::span<const int>(prefix.data(), inner_.size()));
      auto it = cache_.find(key);
      if (it == cache_.end()) {
        const Series& pw = power(j, e[j]);
        Series value = current == nullptr ? pw : *current * pw;
        it = cache_.emplace(key, std::move(value)).first;
      }
      current = &it->second;
    }
    return *current;
  }

 private:
  const Series& power(std::size_t j, int e) {
    auto& table = powers_[j];
    if (table.empty()) table.push_back(inner_[j].with_cap(cap_));
    while (static_cast<int>(table.size()) < e) table.push_back(table.back() * table.front());
    return table[e - 1];
  }

  std::span<const Series> inner_;
  int cap_;
  std::vector<std::vector<Series>> powers_;
  std::map<Monomial, Series> cache_;
};

}  // namespace

std::vector<Series> compose(std::span<const Series> outer, std::span<const Series> inner) {
  if (inner.empty()) throw Error(Errc::shape_mismatch, "composition needs at least one inner series");
  const Series& ref = inner.front();
  int cap = ref.degree_cap();
  for (const auto& s : inner) {
    if (s.nvars() != ref.nvars() || s.prime() != ref.prime())
      throw Error(Errc::shape_mismatch, "inner series must share prime and variable count");
    if (!s.coefficient(Monomial{}).is_zero())
      throw Error(Errc::nonzero_constant_term, "inner series has a nonzero constant term");
    cap = std::min(cap, s.degree_cap());
  }
  for (const auto& s : outer) {
    if (s.nvars() != static_cast<int>(inner.size()))
      throw Error(Errc::shape_mismatch, "outer variable count must equal the number of inner series");
    if (s.prime() != ref.prime()) throw Error(Errc::prime_mismatch, "outer and inner primes differ");
    cap = std::min(cap, s.degree_cap());
  }

  MonomialEvaluator eval(inner, cap);
  std::vector<Series> results;
  results.reserve(outer.size());
  for (const auto& s : outer) {
    Series out(ref.prime(), ref.nvars(), cap, std::min(s.precision(), ref.precision()));
    for (const auto& [m, c] : s.terms()) {
      if (m.degree() > cap) break;
      if (m.degree() == 0) {
        out.add_term(Monomial{}, c);
        continue;
      }
      for (const auto& [mi, ci] : eval.evaluate(m).terms()) out.add_term(mi, c * ci);
    }
    results.push_back(std::move(out));
  }
  return results;
}

Series compose(const Series& outer, std::span<const Series> inner) {
  return std::move(compose(std::span<const Series>(&outer, 1), inner).front());
}

SeriesPair compose(const SeriesPair& outer, std::span<const Series> inner) {
  const std::array<Series, 2> outs{outer.first(), outer.second()};
  auto r = compose(std::span<const Series>(outs), inner);
  return {std::move(r[0]), std::move(r[1])};
}

SeriesPair compose(const SeriesPair& outer, const SeriesPair& inner) {
  const std::array<Series, 2> ins{inner.first(), inner.second()};
  return compose(outer, std::span<const Series>(ins));
}

SeriesPair invert_pair(const SeriesPair& f) {
  if (f.nvars() != 2) throw Error(Errc::shape_mismatch, "invert_pair expects a pair in two variables");
  const int p = f.prime();
  const int cap = f.degree_cap();
  const int prec = f.precision();
  const SeriesPair id = SeriesPair::identity(p, cap, prec);
  for (int i = 0; i < 2; ++i) {
    if (!f[i].coefficient(Monomial{}).is_zero())
      throw Error(Errc::nonzero_constant_term, "series to invert has a nonzero constant term");
    if (cap >= 1 && !(f[i].homogeneous_part(1) - id[i].homogeneous_part(1)).is_zero())
      throw Error(Errc::jacobian_not_identity, "linear part of the series to invert is not the identity");
  }

  SeriesPair g = id;
  for (int k = 1; k < cap; ++k) {
    // g is exact through degree k, so the residual starts at degree k + 1.
    const SeriesPair r = compose(f.truncated(k + 1), g.truncated(k + 1)) - id.truncated(k + 1);
    for (int i = 0; i < 2; ++i)
      if (r[i].min_degree() != -1 && r[i].min_degree() <= k)
        throw Error(Errc::precision_exhausted, "inversion residual below the expected degree");
    g = g - SeriesPair(r.first().homogeneous_part(k + 1).with_cap(cap),
                       r.second().homogeneous_part(k + 1).with_cap(cap));
  }
  return g;
}

}  // namespace ltfg
