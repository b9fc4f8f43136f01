#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ltfg {

// Polynomial over F_p; entry i is the coefficient of x^i, each in [0, p).
using ResiduePoly = std::vector<long>;

namespace residue {

ResiduePoly normalize(ResiduePoly a);
ResiduePoly mul_mod(const ResiduePoly& a, const ResiduePoly& b, const ResiduePoly& modulus, long p);
ResiduePoly pow_mod(const ResiduePoly& a, const mpz_class& exponent, const ResiduePoly& modulus, long p);
ResiduePoly gcd(ResiduePoly a, ResiduePoly b, long p);
bool is_irreducible(const ResiduePoly& monic, long p);
// Monic irreducible of degree h whose non-leading coefficients, read as the
// base-p integer sum c_i p^i, are smallest.
ResiduePoly smallest_irreducible(long p, int h);
// Smallest (same ordering) generator of the multiplicative group of
// F_p[x]/(modulus).
ResiduePoly multiplicative_generator(const ResiduePoly& modulus, long p);

}  // namespace residue

class UnramifiedElement;

// Z_p[x]/(m(x)) modulo p^N, where m is the lift (coefficients in [0, p)) of
// a monic irreducible over F_p. This models the integer ring of the degree-h
// unramified extension of Q_p at absolute precision N.
class UnramifiedRing : public std::enable_shared_from_this<UnramifiedRing> {
 public:
  // Picks residue::smallest_irreducible(p, h) as the modulus.
  static std::shared_ptr<const UnramifiedRing> create(int p, int h, int precision);
  // Uses the given monic modulus; throws unless it is irreducible mod p.
  static std::shared_ptr<const UnramifiedRing> create(int p, const ResiduePoly& modulus, int precision);

  int prime() const { return p_; }
  int degree() const { return h_; }
  int precision() const { return precision_; }
  const ResiduePoly& modulus() const { return modulus_; }
  const mpz_class& modulus_power() const { return pN_; }

  UnramifiedElement zero() const;
  UnramifiedElement one() const;
  UnramifiedElement from_integer(const mpz_class& n) const;
  // Coefficients are reduced modulo p^N; fewer than h entries are zero-padded.
  UnramifiedElement element(std::vector<mpz_class> coeffs) const;
  UnramifiedElement lift(const ResiduePoly& residue) const;

 private:
  UnramifiedRing(int p, ResiduePoly modulus, int precision);

  int p_;
  int h_;
  int precision_;
  ResiduePoly modulus_;
  mpz_class pN_;
};

class UnramifiedElement {
 public:
  const UnramifiedRing& ring() const { return *ring_; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  friend UnramifiedElement operator+(const UnramifiedElement& a, const UnramifiedElement& b);
  friend UnramifiedElement operator-(const UnramifiedElement& a, const UnramifiedElement& b);
  friend UnramifiedElement operator*(const UnramifiedElement& a, const UnramifiedElement& b);
  UnramifiedElement operator-() const;
  UnramifiedElement pow(const mpz_class& exponent) const;

  friend bool operator==(const UnramifiedElement& a, const UnramifiedElement& b);

  bool is_zero() const;
  bool is_one() const;
  ResiduePoly reduce_mod_p() const;
  std::string to_string() const;

 private:
  friend class UnramifiedRing;
  UnramifiedElement(std::shared_ptr<const UnramifiedRing> ring, std::vector<mpz_class> coeffs)
      : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {}

  std::shared_ptr<const UnramifiedRing> ring_;
  std::vector<mpz_class> coeffs_;
};

// Minimum valuation over the coefficients; nullopt when the element is zero
// to the ring's precision.
std::optional<int> valuation_of(const UnramifiedElement& x);

// The unique root of unity reducing to the given nonzero residue: iterate
// w -> w^(p^h) from the naive lift until it stops moving.
UnramifiedElement teichmuller(const UnramifiedRing& ring, const ResiduePoly& residue);

}  // namespace ltfg
