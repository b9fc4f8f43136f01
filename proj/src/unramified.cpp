#include "ltfg/unramified.hpp"

#include <algorithm>

#include "ltfg/error.hpp"
#include "ltfg/padic.hpp"
#include "ltfg/rational.hpp"

namespace ltfg {

namespace residue {

namespace {

long mod(long a, long p) {
  a %= p;
  return a < 0 ? a + p : a;
}

long inverse(long a, long p) {
  mpz_class r;
  mpz_class aa(a), pp(p);
  if (mpz_invert(r.get_mpz_t(), aa.get_mpz_t(), pp.get_mpz_t()) == 0)
    throw Error(Errc::division_by_zero, "residue not invertible");
  return r.get_si();
}

// Remainder of a modulo b (b nonzero, not necessarily monic).
ResiduePoly rem(ResiduePoly a, const ResiduePoly& b, long p) {
  a = normalize(std::move(a));
  const std::size_t db = b.size() - 1;
  const long lead_inv = inverse(b.back(), p);
  while (!a.empty() && a.size() - 1 >= db) {
    const long factor = mod(a.back() * lead_inv, p);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = mod(a[shift + i] - factor * b[i], p);
    a = normalize(std::move(a));
  }
  return a;
}

ResiduePoly sub(ResiduePoly a, const ResiduePoly& b, long p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] - b[i], p);
  return normalize(std::move(a));
}

ResiduePoly from_index(long index, long p, int h) {
  ResiduePoly c(h, 0);
  for (int i = 0; i < h; ++i) {
    c[i] = index % p;
    index /= p;
  }
  return c;
}

std::vector<long> prime_factors(mpz_class n) {
  std::vector<long> out;
  for (long d = 2; mpz_class(d) * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n.get_si());
  return out;
}

}  // namespace

ResiduePoly normalize(ResiduePoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

ResiduePoly mul_mod(const ResiduePoly& a, const ResiduePoly& b, const ResiduePoly& modulus, long p) {
  if (a.empty() || b.empty()) return {};
  ResiduePoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = mod(c[i + j] + a[i] * b[j], p);
  return rem(std::move(c), modulus, p);
}

ResiduePoly pow_mod(const ResiduePoly& a, const mpz_class& exponent, const ResiduePoly& modulus, long p) {
  ResiduePoly result = rem({1}, modulus, p);
  ResiduePoly base = rem(a, modulus, p);
  const auto bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mul_mod(result, result, modulus, p);
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = mul_mod(result, base, modulus, p);
  }
  return result;
}

ResiduePoly gcd(ResiduePoly a, ResiduePoly b, long p) {
  a = normalize(std::move(a));
  b = normalize(std::move(b));
  while (!b.empty()) {
    ResiduePoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const long inv = inverse(a.back(), p);
    for (auto& c : a) c = mod(c * inv, p);
  }
  return a;
}

bool is_irreducible(const ResiduePoly& monic, long p) {
  const ResiduePoly f = normalize(monic);
  if (f.size() < 2) return false;
  const int h = static_cast<int>(f.size()) - 1;
  // Ben-Or: no factor of degree d <= h/2 iff gcd(x^(p^d) - x, f) = 1.
  ResiduePoly xpow = rem({0, 1}, f, p);
  for (int d = 1; 2 * d <= h; ++d) {
    xpow = pow_mod(xpow, mpz_class(p), f, p);
    const ResiduePoly g = gcd(f, sub(xpow, {0, 1}, p), p);
    if (g.size() > 1) return false;
  }
  return true;
}

ResiduePoly smallest_irreducible(long p, int h) {
  if (h < 1) throw Error(Errc::invalid_argument, "extension degree must be positive");
  const mpz_class count = ipow(p, h);
  for (long index = 0; index < count; ++index) {
    ResiduePoly f = from_index(index, p, h);
    f.push_back(1);
    if (is_irreducible(f, p)) return f;
  }
  throw Error(Errc::invalid_argument, "no irreducible polynomial found");
}

ResiduePoly multiplicative_generator(const ResiduePoly& modulus, long p) {
  const int h = static_cast<int>(modulus.size()) - 1;
  const mpz_class order = ipow(p, h) - 1;
  const auto factors = prime_factors(order);
  const mpz_class count = ipow(p, h);
  for (long index = 1; index < count; ++index) {
    const ResiduePoly g = from_index(index, p, h);
    bool generator = true;
    for (long r : factors) {
      const ResiduePoly t = pow_mod(g, mpz_class(order / r), modulus, p);
      if (t == ResiduePoly{1}) {
        generator = false;
        break;
      }
    }
    if (generator) return normalize(g);
  }
  throw Error(Errc::invalid_argument, "no multiplicative generator found");
}

}  // namespace residue

UnramifiedRing::UnramifiedRing(int p, ResiduePoly modulus, int precision)
    : p_(p), h_(static_cast<int>(modulus.size()) - 1), precision_(precision), modulus_(std::move(modulus)),
      pN_(ipow(p, precision)) {}

std::shared_ptr<const UnramifiedRing> UnramifiedRing::create(int p, int h, int precision) {
  if (!is_prime(p)) throw Error(Errc::invalid_argument, "p must be prime");
  return create(p, residue::smallest_irreducible(p, h), precision);
}

std::shared_ptr<const UnramifiedRing> UnramifiedRing::create(int p, const ResiduePoly& modulus, int precision) {
  if (!is_prime(p)) throw Error(Errc::invalid_argument, "p must be prime");
  if (precision < 1) throw Error(Errc::invalid_argument, "precision must be positive");
  if (modulus.size() < 2 || modulus.back() != 1)
    throw Error(Errc::invalid_argument, "unramified modulus must be monic of positive degree");
  for (long c : modulus)
    if (c < 0 || c >= p) throw Error(Errc::invalid_argument, "modulus coefficients must lie in [0, p)");
  if (!residue::is_irreducible(modulus, p))
    throw Error(Errc::invalid_argument, "unramified modulus is reducible modulo p");
  return std::shared_ptr<const UnramifiedRing>(new UnramifiedRing(p, modulus, precision));
}

UnramifiedElement UnramifiedRing::zero() const { return element({}); }
UnramifiedElement UnramifiedRing::one() const { return element({mpz_class(1)}); }
UnramifiedElement UnramifiedRing::from_integer(const mpz_class& n) const { return element({n}); }

UnramifiedElement UnramifiedRing::element(std::vector<mpz_class> coeffs) const {
  if (static_cast<int>(coeffs.size()) > h_) throw Error(Errc::shape_mismatch, "too many coefficients for the ring");
  coeffs.resize(h_, mpz_class(0));
  for (auto& c : coeffs) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), pN_.get_mpz_t());
  return UnramifiedElement(shared_from_this(), std::move(coeffs));
}

UnramifiedElement UnramifiedRing::lift(const ResiduePoly& residue) const {
  std::vector<mpz_class> coeffs;
  for (long c : residue) coeffs.emplace_back(c);
  while (static_cast<int>(coeffs.size()) > h_ && coeffs.back() == 0) coeffs.pop_back();
  return element(std::move(coeffs));
}

namespace {

void require_same_ring(const UnramifiedElement& a, const UnramifiedElement& b) {
  if (&a.ring() != &b.ring() &&
      (a.ring().prime() != b.ring().prime() || a.ring().modulus() != b.ring().modulus() ||
       a.ring().precision() != b.ring().precision()))
    throw Error(Errc::shape_mismatch, "elements of different unramified rings");
}

}  // namespace

UnramifiedElement operator+(const UnramifiedElement& a, const UnramifiedElement& b) {
  require_same_ring(a, b);
  std::vector<mpz_class> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
  return a.ring_->element(std::move(c));
}

UnramifiedElement operator-(const UnramifiedElement& a, const UnramifiedElement& b) {
  require_same_ring(a, b);
  std::vector<mpz_class> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] - b.coeffs_[i];
  return a.ring_->element(std::move(c));
}

UnramifiedElement UnramifiedElement::operator-() const { return ring_->zero() - *this; }

UnramifiedElement operator*(const UnramifiedElement& a, const UnramifiedElement& b) {
  require_same_ring(a, b);
  const UnramifiedRing& ring = *a.ring_;
  const int h = ring.degree();
  std::vector<mpz_class> prod(2 * h - 1, mpz_class(0));
  for (int i = 0; i < h; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; j < h; ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  // Reduce by the monic modulus from the top degree down.
  const ResiduePoly& m = ring.modulus();
  for (int d = 2 * h - 2; d >= h; --d) {
    if (prod[d] == 0) continue;
    const mpz_class top = prod[d];
    for (int i = 0; i < h; ++i)
      if (m[i] != 0) prod[d - h + i] -= top * m[i];
    prod[d] = 0;
  }
  prod.resize(h);
  return ring.element(std::move(prod));
}

UnramifiedElement UnramifiedElement::pow(const mpz_class& exponent) const {
  if (exponent < 0) throw Error(Errc::invalid_argument, "negative exponent");
  UnramifiedElement result = ring_->one();
  const auto bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = result * result;
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = result * *this;
  }
  return result;
}

bool operator==(const UnramifiedElement& a, const UnramifiedElement& b) {
  require_same_ring(a, b);
  return a.coeffs_ == b.coeffs_;
}

bool UnramifiedElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c == 0; });
}

bool UnramifiedElement::is_one() const { return *this == ring_->one(); }

ResiduePoly UnramifiedElement::reduce_mod_p() const {
  ResiduePoly r;
  for (const auto& c : coeffs_) {
    mpz_class t;
    mpz_fdiv_r_ui(t.get_mpz_t(), c.get_mpz_t(), ring_->prime());
    r.push_back(t.get_si());
  }
  return residue::normalize(std::move(r));
}

std::string UnramifiedElement::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ", ";
    s += coeffs_[i].get_str();
  }
  return s + "]";
}

std::optional<int> valuation_of(const UnramifiedElement& x) {
  std::optional<int> best;
  for (const auto& c : x.coeffs()) {
    if (c == 0) continue;
    const int v = integer_valuation(c, x.ring().prime());
    if (!best || v < *best) best = v;
  }
  return best;
}

UnramifiedElement teichmuller(const UnramifiedRing& ring, const ResiduePoly& residue) {
  ResiduePoly r = residue::normalize(residue);
  for (auto& c : r) c = ((c % ring.prime()) + ring.prime()) % ring.prime();
  r = residue::normalize(std::move(r));
  if (r.empty()) throw Error(Errc::invalid_argument, "Teichmuller lift of the zero residue");
  const mpz_class q = ipow(ring.prime(), ring.degree());
  UnramifiedElement w = ring.lift(r);
  // Each step gains at least one p-adic digit, so N + 1 steps suffice.
  for (int i = 0; i <= ring.precision() + 1; ++i) {
    UnramifiedElement next = w.pow(q);
    if (next == w) return w;
    w = std::move(next);
  }
  throw Error(Errc::precision_exhausted, "Teichmuller iteration did not stabilise");
}

}  // namespace ltfg
